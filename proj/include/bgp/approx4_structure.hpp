#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bgp/certificate.hpp"
#include "bgp/local_ops.hpp"

namespace bgp {

// Part indices in a sorted tetrapartition.
inline constexpr int kV1 = 0;
inline constexpr int kV2 = 1;
inline constexpr int kV3 = 2;
inline constexpr int kV4 = 3;

inline void require_tetrapartition(const Partition& p) {
  if (p.k() != 4) throw Error(Errc::MismatchedShape, "tetrapartition expected, got k=" + std::to_string(p.k()));
}

/// Merge(Vi, Vj) for i, j among the three smaller parts: adjacent and
/// |Vi| + |Vj| < |V4|; V4 is bisected.
inline std::optional<Partition> try_merge4(const Graph& g, const Partition& p) {
  require_tetrapartition(p);
  static constexpr std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (const auto& [i, j] : pairs) {
    if (p.card(i) + p.card(j) >= p.card(kV4)) continue;
    if (!parts_adjacent(g, p.part(i), p.part(j))) continue;
    auto [a, b] = most_balanced_tree_cut(g, p.part(kV4));
    return Partition({p.part(i).unite(p.part(j)), p.part(3 - i - j), std::move(a), std::move(b)});
  }
  return std::nullopt;
}

/// Pull(U subset Vj, Vi) over (i, j) = (1,3), (1,4), (2,3), (2,4), (3,4).
inline std::optional<Partition> try_pull4(const Graph& g, const Partition& p) {
  require_tetrapartition(p);
  static constexpr std::array<std::pair<int, int>, 5> pairs{{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  for (const auto& [i, j] : pairs) {
    const std::array<int, 1> receiver{i};
    if (auto next = detail::find_pull(g, p, j, receiver)) return next;
  }
  return std::nullopt;
}

/// Stall configuration of the tetrapartition search.
struct StallStructure4 {
  int stall_case = 0;           // 1, 2 or 3; 0 when the early certificate applied
  std::optional<Vertex> u;      // hub in V4
  std::optional<Vertex> v;      // hub in V3
  std::vector<VertexSet> comps4;  // components of G[V4 - u]
  std::vector<VertexSet> comps3;  // components of G[V3 - v]
  std::array<bool, 2> touches3{};  // V1, V2 adjacent to V3
  std::array<bool, 2> touches4{};  // V1, V2 adjacent to V4
  int near3 = -1;  // Case 3: the small part hanging on v
  int near4 = -1;  // Case 3: the small part hanging on u
};

struct Classification {
  StallStructure4 structure;
  std::optional<Certificate> early;
};

namespace detail {

[[noreturn]] inline void violation(const std::string& what) {
  throw Error(Errc::StructureViolation, "tetrapartition stall: " + what);
}

/// Vertices of part `into` adjacent to any of the parts in `from`.
inline std::vector<Vertex> landing_points(const Graph& g, const Partition& p, const std::vector<int>& owner, int into,
                                          std::initializer_list<int> from) {
  std::vector<Vertex> out;
  for (int f : from) {
    auto pts = attachment_points(g, p, owner, into, f);
    out.insert(out.end(), pts.begin(), pts.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Single hub of `small` inside `big` with small components around it.
inline std::pair<Vertex, std::vector<VertexSet>> hub_star(const Graph& g, const Partition& p,
                                                          const std::vector<int>& owner, int big, int small,
                                                          const std::string& label) {
  const auto hubs = attachment_points(g, p, owner, big, small);
  if (hubs.size() != 1)
    violation(label + ": V" + std::to_string(small + 1) + " lands on " + std::to_string(hubs.size()) + " vertices of V" +
              std::to_string(big + 1));
  auto comps = components_of_subset(g, p.part(big).minus(hubs.front()));
  if (comps.size() < 2) violation(label + ": hub does not disconnect V" + std::to_string(big + 1));
  for (const auto& c : comps) {
    if (c.size() > p.part(small).size()) violation(label + ": component " + c.str() + " exceeds |V" + std::to_string(small + 1) + "|");
    if (touches(g, c, owner, small)) violation(label + ": component " + c.str() + " touches V" + std::to_string(small + 1));
  }
  return {hubs.front(), std::move(comps)};
}

}  // namespace detail

/// Checks the stall predicates of the tetrapartition and dispatches the case.
///
/// Preconditions: |V4| > 2n/5 and neither Merge nor Pull applies. Any failed
/// predicate raises StructureViolation.
inline Classification classify_case(const Graph& g, const Partition& p, Fraction claimed = Fraction(24, 13)) {
  require_tetrapartition(p);
  const long long n = g.order();
  const long long c1 = p.card(kV1), c2 = p.card(kV2), c3 = p.card(kV3), c4 = p.card(kV4);
  if (5 * c4 <= 2 * n) detail::violation("|V4| <= 2n/5");
  const auto owner = p.owners(g.order());

  // Size bounds on the small parts.
  if (!(5 * c1 < n)) detail::violation("|V1| >= n/5");
  if (!(10 * c2 < 3 * n)) detail::violation("|V2| >= 3n/10");
  if (!(5 * (c1 + c2) < 2 * n)) detail::violation("|V1| + |V2| >= 2n/5");
  if (parts_adjacent(g, p.part(kV1), p.part(kV2))) detail::violation("V1 and V2 adjacent");

  Classification out;
  auto& s = out.structure;
  for (int i : {kV1, kV2}) {
    s.touches3[static_cast<std::size_t>(i)] = parts_adjacent(g, p.part(i), p.part(kV3));
    s.touches4[static_cast<std::size_t>(i)] = parts_adjacent(g, p.part(i), p.part(kV4));
  }

  // A small part next to V3 cannot be too small to pull from it.
  for (int i : {kV1, kV2})
    if (s.touches3[static_cast<std::size_t>(i)] && p.card(i) + c3 < c4)
      detail::violation("V" + std::to_string(i + 1) + " adjacent to V3 with |Vi| + |V3| < |V4|");

  // Small parts next to V4 hang on a single hub of V4.
  std::array<std::optional<Vertex>, 2> hub4{};
  for (int i : {kV1, kV2}) {
    if (!s.touches4[static_cast<std::size_t>(i)]) continue;
    auto [hub, comps] = detail::hub_star(g, p, owner, kV4, i, "V4 hub");
    for (const auto& c : comps)
      if (touches(g, c, owner, kV3) && static_cast<long long>(c.size()) + c3 < c4)
        detail::violation("V4 hub component " + c.str() + " adjacent to V3 with |X| + |V3| < |V4|");
    hub4[static_cast<std::size_t>(i)] = hub;
  }

  // Small parts next to V3 hang on a single hub of V3 when much smaller than V4.
  std::array<std::optional<Vertex>, 2> hub3{};
  for (int i : {kV1, kV2}) {
    if (!s.touches3[static_cast<std::size_t>(i)] || !(3 * p.card(i) < c4)) continue;
    hub3[static_cast<std::size_t>(i)] = detail::hub_star(g, p, owner, kV3, i, "V3 hub").first;
  }

  if (6 * c2 >= c4) {
    out.early = Certificate::stall_ratio(claimed);
    return out;
  }

  // Size relations once |V2| < |V4|/6.
  if (c2 + c3 < c4) detail::violation("|V2| + |V3| < |V4|");
  if (!(2 * c4 < n)) detail::violation("|V4| >= n/2");
  if (!(3 * c3 > n)) detail::violation("|V3| <= n/3");

  // Both small parts land on the same vertex of each large part they touch.
  for (int j : {kV3, kV4}) {
    const auto& t = j == kV3 ? s.touches3 : s.touches4;
    if (t[0] && t[1] && detail::landing_points(g, p, owner, j, {kV1, kV2}).size() != 1)
      detail::violation("V1 and V2 land on several vertices of V" + std::to_string(j + 1));
  }

  if (!s.touches3[0] && !s.touches3[1]) {
    s.stall_case = 1;
    if (!hub4[0] || !hub4[1]) detail::violation("case 1 with a small part detached from V4");
    s.u = hub4[0];
    s.comps4 = components_of_subset(g, p.part(kV4).minus(*s.u));
  } else if (!s.touches4[0] && !s.touches4[1]) {
    s.stall_case = 2;
    if (!hub3[0] || !hub3[1]) detail::violation("case 2 with a small part detached from V3");
    s.v = hub3[0];
    s.comps3 = components_of_subset(g, p.part(kV3).minus(*s.v));
  } else {
    s.stall_case = 3;
    if (s.touches3[0] && s.touches4[1]) {
      s.near3 = kV1;
      s.near4 = kV2;
    } else if (s.touches3[1] && s.touches4[0]) {
      s.near3 = kV2;
      s.near4 = kV1;
    } else {
      detail::violation("case 3 without a split attachment");
    }
    s.v = hub3[static_cast<std::size_t>(s.near3)];
    s.u = hub4[static_cast<std::size_t>(s.near4)];
    if (!s.u || !s.v) detail::violation("case 3 hubs missing");
    s.comps3 = components_of_subset(g, p.part(kV3).minus(*s.v));
    s.comps4 = components_of_subset(g, p.part(kV4).minus(*s.u));
  }
  return out;
}

namespace detail {

inline long long total_touching(const Graph& g, const std::vector<VertexSet>& comps, const std::vector<int>& owner,
                                int part) {
  long long sum = 0;
  for (const auto& c : comps)
    if (touches(g, c, owner, part)) sum += static_cast<long long>(c.size());
  return sum;
}

}  // namespace detail

/// Case 1: total size of components of G[V4 - u] adjacent to V3 is at most
/// |V1| + |V2| + 11/24 |V4|.
inline bool case1_ratio_holds(const Graph& g, const Partition& p, const StallStructure4& s) {
  const auto owner = p.owners(g.order());
  const long long reach = detail::total_touching(g, s.comps4, owner, kV3);
  return 24 * reach <= 24 * (p.card(kV1) + p.card(kV2)) + 11LL * p.card(kV4);
}

/// Case 2: total size of components of G[V3 - v] adjacent to V4 is at most
/// |V2| + 11/24 |V4|.
inline bool case2_ratio_holds(const Graph& g, const Partition& p, const StallStructure4& s) {
  const auto owner = p.owners(g.order());
  const long long reach = detail::total_touching(g, s.comps3, owner, kV4);
  return 24 * reach <= 24LL * p.card(kV2) + 11LL * p.card(kV4);
}

/// Case 3, V3 side: components of G[(V3 + Vi) - v] adjacent to V4 total at
/// most |Vi| + 7/24 |V4|.
inline bool case3_ratio_holds_v3(const Graph& g, const Partition& p, const StallStructure4& s) {
  const auto owner = p.owners(g.order());
  long long reach = detail::total_touching(g, s.comps3, owner, kV4);
  if (touches(g, p.part(s.near3), owner, kV4)) reach += p.card(s.near3);
  return 24 * reach <= 24LL * p.card(s.near3) + 7LL * p.card(kV4);
}

/// Case 3, V4 side: components of G[(V4 + Vj) - u] adjacent to V3 total at
/// most |Vj| + 11/24 |V4|.
inline bool case3_ratio_holds_v4(const Graph& g, const Partition& p, const StallStructure4& s) {
  const auto owner = p.owners(g.order());
  long long reach = detail::total_touching(g, s.comps4, owner, kV3);
  if (touches(g, p.part(s.near4), owner, kV3)) reach += p.card(s.near4);
  return 24 * reach <= 24LL * p.card(s.near4) + 11LL * p.card(kV4);
}

}  // namespace bgp
