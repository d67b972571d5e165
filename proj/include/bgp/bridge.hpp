#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bgp/approx4_structure.hpp"

namespace bgp {

/// Outcome of bipartition_or_star: a balanced split with the larger side at
/// most 2|s|/3, or a center whose removal leaves only pieces below |s|/3.
struct BipartitionOrStar {
  bool balanced = false;
  VertexSet smaller;
  VertexSet larger;
  Vertex center = -1;
  std::vector<VertexSet> components;  // of G[s - center] when !balanced
};

/// Two-part pull loop inside G[s] starting from the most balanced tree cut.
inline BipartitionOrStar bipartition_or_star(const Graph& g, const VertexSet& s, int budget) {
  if (s.size() < 3) throw Error(Errc::DegenerateSubset, "bipartition_or_star needs |s| >= 3");
  if (!is_connected_subset(g, s)) throw Error(Errc::DisconnectedSubset, "bipartition_or_star on " + s.str());
  const long long total = static_cast<long long>(s.size());
  auto [a, b] = most_balanced_tree_cut(g, s);
  for (int moves = 0;; ++moves) {
    if (3 * static_cast<long long>(b.size()) <= 2 * total) {
      BipartitionOrStar out;
      out.balanced = true;
      out.smaller = std::move(a);
      out.larger = std::move(b);
      return out;
    }
    if (moves >= budget) throw Error(Errc::StructureViolation, "bipartition_or_star exceeded its move budget");
    const Partition two({a, b});
    static constexpr std::array<int, 1> receiver{0};
    auto next = detail::find_pull(g, two, 1, receiver);
    if (!next) break;
    a = next->part(0);
    b = next->part(1);
  }
  const Partition two({a, b});
  const auto owner = two.owners(g.order());
  const auto hubs = attachment_points(g, two, owner, 1, 0);
  if (hubs.size() != 1)
    throw Error(Errc::StructureViolation, "bipartition stall with " + std::to_string(hubs.size()) + " attachment vertices");
  BipartitionOrStar out;
  out.center = hubs.front();
  out.components = components_of_subset(g, s.minus(out.center));
  for (const auto& c : out.components)
    if (3 * static_cast<long long>(c.size()) >= total)
      throw Error(Errc::StructureViolation, "star piece " + c.str() + " not below a third of " + s.str());
  return out;
}

/// Growth of a bridge between the hub components of V3 and V4.
struct BridgeState {
  std::vector<char> in3;  // taken components of G[V3 - v]
  std::vector<char> in4;  // taken components of G[V4 - u]
  long long size3 = 0;
  long long size4 = 0;
  int crossed = 0;  // kV3 or kV4 once a cap is exceeded, else 0
};

namespace detail {

using Links = std::vector<std::vector<char>>;

/// links[a][b] when component a of V3 is adjacent to component b of V4.
inline Links component_links(const Graph& g, const std::vector<VertexSet>& comps3, const std::vector<VertexSet>& comps4) {
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t b = 0; b < comps4.size(); ++b)
    for (Vertex x : comps4[b]) label[static_cast<std::size_t>(x)] = static_cast<int>(b);
  Links links(comps3.size(), std::vector<char>(comps4.size(), 0));
  for (std::size_t a = 0; a < comps3.size(); ++a)
    for (Vertex x : comps3[a])
      for (Vertex y : g.neighbors(x))
        if (const int b = label[static_cast<std::size_t>(y)]; b >= 0) links[a][static_cast<std::size_t>(b)] = 1;
  return links;
}

inline std::vector<long long> sizes_of(const std::vector<VertexSet>& comps) {
  std::vector<long long> out;
  for (const auto& c : comps) out.push_back(static_cast<long long>(c.size()));
  return out;
}

/// Greedy absorption: all of `cands` when they fit under `cap`, otherwise the
/// shortest prefix crossing it. Returns true when the cap was crossed.
inline bool absorb(const std::vector<int>& cands, const std::vector<long long>& sizes, std::vector<char>& taken,
                   long long& size, long long cap) {
  long long sum = 0;
  for (int c : cands) sum += sizes[static_cast<std::size_t>(c)];
  if (size + sum <= cap) {
    for (int c : cands) taken[static_cast<std::size_t>(c)] = 1;
    size += sum;
    return false;
  }
  for (int c : cands) {
    taken[static_cast<std::size_t>(c)] = 1;
    size += sizes[static_cast<std::size_t>(c)];
    if (size > cap) break;
  }
  return true;
}

/// Components on one side not yet taken and linked to a taken one on the other.
inline std::vector<int> frontier(const Links& links, bool side3, const std::vector<char>& own,
                                 const std::vector<char>& other) {
  std::vector<int> out;
  for (std::size_t c = 0; c < own.size(); ++c) {
    if (own[c]) continue;
    for (std::size_t d = 0; d < other.size(); ++d)
      if (other[d] && (side3 ? links[c][d] : links[d][c])) {
        out.push_back(static_cast<int>(c));
        break;
      }
  }
  return out;
}

inline VertexSet collect(const std::vector<VertexSet>& comps, const std::vector<char>& taken) {
  std::vector<VertexSet> chosen;
  for (std::size_t c = 0; c < comps.size(); ++c)
    if (taken[c]) chosen.push_back(comps[c]);
  return unite_all(chosen);
}

inline VertexSet collect(const std::vector<VertexSet>& comps, const std::vector<int>& ids) {
  std::vector<VertexSet> chosen;
  for (int c : ids) chosen.push_back(comps[static_cast<std::size_t>(c)]);
  return unite_all(chosen);
}

/// Shortest prefix of `cands` whose sizes sum above `need`, if any.
inline std::optional<std::vector<int>> crossing_prefix(const std::vector<int>& cands,
                                                       const std::vector<long long>& sizes, long long need) {
  std::vector<int> out;
  long long sum = 0;
  for (int c : cands) {
    out.push_back(c);
    sum += sizes[static_cast<std::size_t>(c)];
    if (sum > need) return out;
  }
  return std::nullopt;
}

inline long long sum_of(const std::vector<int>& ids, const std::vector<long long>& sizes) {
  long long s = 0;
  for (int c : ids) s += sizes[static_cast<std::size_t>(c)];
  return s;
}

inline void bridge_bound(bool ok, const char* what) {
  if (!ok) throw Error(Errc::StructureViolation, std::string("bridge bound violated: ") + what);
}

inline Partition accept_update(const Graph& g, const Partition& before, Partition after, const char* op) {
  if (auto f = check_feasible(g, after); !f)
    throw Error(Errc::StructureViolation, std::string(op) + " built an infeasible partition: " + f.reason);
  if (!better_than(rank(after), rank(before)))
    throw Error(Errc::StructureViolation, std::string(op) + " did not improve " + rank(before).str());
  return after;
}

}  // namespace detail

/// Runs the alternating growth from a seed: C3 (components of V3 - v next to
/// V'4) is absorbed first, then C4 (components of V4 - u next to V'3).
inline BridgeState grow_bridge(const detail::Links& links, const std::vector<long long>& sizes3,
                               const std::vector<long long>& sizes4, int seed3, std::optional<int> seed4,
                               long long cap3, long long cap4) {
  BridgeState st;
  st.in3.assign(sizes3.size(), 0);
  st.in4.assign(sizes4.size(), 0);
  st.in3[static_cast<std::size_t>(seed3)] = 1;
  st.size3 = sizes3[static_cast<std::size_t>(seed3)];
  if (seed4) {
    st.in4[static_cast<std::size_t>(*seed4)] = 1;
    st.size4 = sizes4[static_cast<std::size_t>(*seed4)];
  }
  if (st.size3 > cap3) {
    st.crossed = kV3;
    return st;
  }
  if (st.size4 > cap4) {
    st.crossed = kV4;
    return st;
  }
  while (true) {
    const auto c3 = detail::frontier(links, true, st.in3, st.in4);
    if (!c3.empty() && detail::absorb(c3, sizes3, st.in3, st.size3, cap3)) {
      st.crossed = kV3;
      return st;
    }
    const auto c4 = detail::frontier(links, false, st.in4, st.in3);
    if (!c4.empty() && detail::absorb(c4, sizes4, st.in4, st.size4, cap4)) {
      st.crossed = kV4;
      return st;
    }
    if (c3.empty() && c4.empty()) return st;
  }
}

namespace detail {

/// Shared update for the first two bridges. `wide` is the side grown against
/// 2|V1| (V3 for the first, V4 for the second); the other side, `narrow`,
/// absorbs V1 and is grown against |V1|.
inline std::optional<Partition> bridge_update(const Graph& g, const Partition& p, const StallStructure4& s,
                                              const BridgeState& st, int wide, const char* op) {
  const int narrow = wide == kV3 ? kV4 : kV3;
  const auto& comps_w = wide == kV3 ? s.comps3 : s.comps4;
  const auto& comps_n = wide == kV3 ? s.comps4 : s.comps3;
  const auto& in_w = wide == kV3 ? st.in3 : st.in4;
  const auto& in_n = wide == kV3 ? st.in4 : st.in3;
  const long long size_w = wide == kV3 ? st.size3 : st.size4;
  const long long size_n = wide == kV3 ? st.size4 : st.size3;
  const long long c1 = p.card(kV1);
  const auto sizes_n = sizes_of(comps_n);
  const VertexSet vw = collect(comps_w, in_w);
  const VertexSet vn = collect(comps_n, in_n);
  const VertexSet merged = p.part(narrow).unite(p.part(kV1));

  if (st.crossed == narrow) {
    bridge_bound(size_n <= 2 * c1 && size_w <= 2 * c1, "narrow side crossing");
    return accept_update(g, p,
                         Partition({merged.minus(vn), vn.unite(vw), p.part(wide).minus(vw), p.part(kV2)}), op);
  }

  bridge_bound(3 * size_w < 6 * c1 + p.card(wide), "wide side crossing");
  const auto owner = p.owners(g.order());
  std::vector<int> next_to, elsewhere;
  for (std::size_t c = 0; c < comps_n.size(); ++c) {
    if (in_n[c]) continue;
    if (parts_adjacent(g, comps_n[c], vw))
      next_to.push_back(static_cast<int>(c));
    else if (touches(g, comps_n[c], owner, wide))
      elsewhere.push_back(static_cast<int>(c));
  }
  if (size_n + sum_of(next_to, sizes_n) > c1) {
    const auto extra_ids = *crossing_prefix(next_to, sizes_n, c1 - size_n);
    const VertexSet extra = collect(comps_n, extra_ids);
    bridge_bound(size_n + sum_of(extra_ids, sizes_n) <= 2 * c1, "second narrow piece");
    const VertexSet moved = vn.unite(extra);
    return accept_update(g, p,
                         Partition({merged.minus(moved), moved.unite(vw), p.part(wide).minus(vw), p.part(kV2)}), op);
  }
  const auto extra_ids = crossing_prefix(elsewhere, sizes_n, c1 - size_n);
  if (!extra_ids) return std::nullopt;
  const VertexSet extra = collect(comps_n, *extra_ids);
  bridge_bound(size_n + sum_of(*extra_ids, sizes_n) <= 2 * c1, "second narrow piece");
  return accept_update(
      g, p,
      Partition({merged.minus(vn.unite(extra)), vn.unite(vw), p.part(wide).minus(vw).unite(extra), p.part(kV2)}), op);
}

inline void require_hubs(const StallStructure4& s, int stall_case) {
  if (s.stall_case != stall_case) throw Error(Errc::MismatchedShape, "bridge applied to the wrong stall case");
  if (!s.u || !s.v) throw Error(Errc::StructureViolation, "bridge needs both hub vertices");
}

}  // namespace detail

/// Bridge between the two star-shaped parts in Case 1 (V1 and V2 hang on u).
/// Every seed pair of linked components is tried in order.
inline std::optional<Partition> try_bridge1(const Graph& g, const Partition& p, const StallStructure4& s) {
  detail::require_hubs(s, 1);
  if (case1_ratio_holds(g, p, s)) return std::nullopt;
  const auto links = detail::component_links(g, s.comps3, s.comps4);
  const auto sizes3 = detail::sizes_of(s.comps3);
  const auto sizes4 = detail::sizes_of(s.comps4);
  const long long c1 = p.card(kV1);
  for (std::size_t b = 0; b < s.comps4.size(); ++b)
    for (std::size_t a = 0; a < s.comps3.size(); ++a) {
      if (!links[a][b]) continue;
      const auto st = grow_bridge(links, sizes3, sizes4, static_cast<int>(a), static_cast<int>(b), 2 * c1, c1);
      if (st.crossed == 0) continue;
      if (auto next = detail::bridge_update(g, p, s, st, kV3, "Bridge1")) return next;
    }
  return std::nullopt;
}

/// Mirror of try_bridge1 for Case 2 (V1 and V2 hang on v); growth starts from
/// a component of V3 - v alone.
inline std::optional<Partition> try_bridge2(const Graph& g, const Partition& p, const StallStructure4& s) {
  detail::require_hubs(s, 2);
  if (case2_ratio_holds(g, p, s)) return std::nullopt;
  const auto links = detail::component_links(g, s.comps3, s.comps4);
  const auto sizes3 = detail::sizes_of(s.comps3);
  const auto sizes4 = detail::sizes_of(s.comps4);
  const long long c1 = p.card(kV1);
  for (std::size_t a = 0; a < s.comps3.size(); ++a) {
    if (std::find(links[a].begin(), links[a].end(), 1) == links[a].end()) continue;
    const auto st = grow_bridge(links, sizes3, sizes4, static_cast<int>(a), std::nullopt, c1, 2 * c1);
    if (st.crossed == 0) continue;
    if (auto next = detail::bridge_update(g, p, s, st, kV4, "Bridge2")) return next;
  }
  return std::nullopt;
}

/// Case 3 bridge: Vi hangs on v, Vj on u; caps are |Vi| and |Vj|.
inline std::optional<Partition> try_bridge3(const Graph& g, const Partition& p, const StallStructure4& s) {
  detail::require_hubs(s, 3);
  if (case3_ratio_holds_v3(g, p, s) || case3_ratio_holds_v4(g, p, s)) return std::nullopt;
  const auto links = detail::component_links(g, s.comps3, s.comps4);
  const auto sizes3 = detail::sizes_of(s.comps3);
  const auto sizes4 = detail::sizes_of(s.comps4);
  const long long ci = p.card(s.near3);
  const long long cj = p.card(s.near4);
  for (std::size_t a = 0; a < s.comps3.size(); ++a) {
    if (std::find(links[a].begin(), links[a].end(), 1) == links[a].end()) continue;
    const auto st = grow_bridge(links, sizes3, sizes4, static_cast<int>(a), std::nullopt, ci, cj);
    if (st.crossed == 0) continue;
    detail::bridge_bound(st.size3 <= 2 * ci && st.size4 <= 2 * cj, "third bridge pieces");
    const VertexSet v3 = detail::collect(s.comps3, st.in3);
    const VertexSet v4 = detail::collect(s.comps4, st.in4);
    const VertexSet joined = v3.unite(v4);
    if (st.crossed == kV3)
      return detail::accept_update(g, p,
                                   Partition({joined, p.part(kV4).minus(v4), p.part(kV3).minus(v3).unite(p.part(s.near3)),
                                              p.part(s.near4)}),
                                   "Bridge3");
    return detail::accept_update(g, p,
                                 Partition({joined, p.part(kV4).minus(v4).unite(p.part(s.near4)), p.part(kV3).minus(v3),
                                            p.part(s.near3)}),
                                 "Bridge3");
  }
  return std::nullopt;
}

/// Update after a balanced bisection of `split_part` (V3 in Case 1, V4 in
/// Case 2): hub components of the other large part next to one half, taken
/// greedily past |V1|, join that half; V1 joins the other large part.
inline std::optional<Partition> try_rebalance(const Graph& g, const Partition& p, const StallStructure4& s,
                                              int split_part, const VertexSet& smaller, const VertexSet& larger) {
  const int other = split_part == kV3 ? kV4 : kV3;
  const auto& comps = split_part == kV3 ? s.comps4 : s.comps3;
  const auto sizes = detail::sizes_of(comps);
  const long long c1 = p.card(kV1);
  for (const VertexSet* half : {&smaller, &larger}) {
    std::vector<int> near;
    for (std::size_t c = 0; c < comps.size(); ++c)
      if (parts_adjacent(g, comps[c], *half)) near.push_back(static_cast<int>(c));
    const auto ids = detail::crossing_prefix(near, sizes, c1);
    if (!ids) continue;
    const VertexSet moved = detail::collect(comps, *ids);
    const VertexSet& rest = half == &smaller ? larger : smaller;
    return detail::accept_update(
        g, p, Partition({p.part(other).unite(p.part(kV1)).minus(moved), moved.unite(*half), rest, p.part(kV2)}),
        "Rebalance");
  }
  return std::nullopt;
}

}  // namespace bgp
