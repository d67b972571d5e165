#pragma once

#include <array>
#include <optional>
#include <vector>

#include "bgp/certificate.hpp"
#include "bgp/local_ops.hpp"
#include "bgp/star.hpp"

namespace bgp {

/// Stall configuration of the tripartition search: every edge leaving the two
/// small parts lands on the hub, and G[V3 - hub] splits into small components.
struct StallStructure3 {
  Vertex center = -1;
  std::vector<VertexSet> hub_components;
};

/// Merge: V1 and V2 adjacent, largest part bisected.
inline std::optional<Partition> try_merge3(const Graph& g, const Partition& p) {
  if (p.k() != 3) throw Error(Errc::MismatchedShape, "tripartition expected");
  if (!parts_adjacent(g, p.part(0), p.part(1))) return std::nullopt;
  auto [a, b] = most_balanced_tree_cut(g, p.part(2));
  return Partition({p.part(0).unite(p.part(1)), std::move(a), std::move(b)});
}

/// Pull: move a connected chunk of V3 into V1 or V2.
inline std::optional<Partition> try_pull3(const Graph& g, const Partition& p) {
  if (p.k() != 3) throw Error(Errc::MismatchedShape, "tripartition expected");
  static constexpr std::array<int, 2> receivers{0, 1};
  return detail::find_pull(g, p, 2, receivers);
}

/// Extracts and checks the stall structure; throws StructureViolation when a
/// predicate fails (callers only invoke it when neither Merge nor Pull applies
/// and 2|V3| > n).
inline StallStructure3 extract_stall3(const Graph& g, const Partition& p) {
  auto fail = [](const std::string& what) { throw Error(Errc::StructureViolation, "tripartition stall: " + what); };
  const auto& v1 = p.part(0);
  const auto& v2 = p.part(1);
  const auto& v3 = p.part(2);
  if (parts_adjacent(g, v1, v2)) fail("V1 and V2 adjacent");
  const auto owner = p.owners(g.order());
  std::vector<Vertex> hubs = attachment_points(g, p, owner, 2, 0);
  const auto to_v2 = attachment_points(g, p, owner, 2, 1);
  hubs.insert(hubs.end(), to_v2.begin(), to_v2.end());
  std::sort(hubs.begin(), hubs.end());
  hubs.erase(std::unique(hubs.begin(), hubs.end()), hubs.end());
  if (hubs.size() != 1) fail("edges from V1 and V2 land on " + std::to_string(hubs.size()) + " vertices of V3");

  StallStructure3 s;
  s.center = hubs.front();
  s.hub_components = components_of_subset(g, v3.minus(s.center));
  if (s.hub_components.size() < 2) fail("G[V3 - u] is connected");
  for (const auto& c : s.hub_components) {
    if (c.size() > v1.size()) fail("component " + c.str() + " larger than V1");
    if (touches(g, c, owner, 0) || touches(g, c, owner, 1)) fail("component " + c.str() + " adjacent to V1 or V2");
  }
  return s;
}

/// Local-improvement 3/2-approximation for 3 parts.
inline Result approx3(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw Error(Errc::NTooSmall, "need n >= 3, got " + std::to_string(n));
  const Fraction claimed(3, 2);
  Result out;
  Partition p = initial_partition(g, 3);
  while (true) {
    if (2 * p.size() <= n) {
      out.certificate = Certificate::bound_met(Fraction(1, 2), 3, claimed);
      break;
    }
    if (auto next = try_merge3(g, p)) {
      record_step(g, OpKind::Merge, p, *next, out.trace);
      p = std::move(*next);
      continue;
    }
    if (auto next = try_pull3(g, p)) {
      record_step(g, OpKind::Pull, p, *next, out.trace);
      p = std::move(*next);
      continue;
    }
    const auto stall = extract_stall3(g, p);
    if (auto ok = check_star_center(g, p, stall.center); !ok)
      throw Error(Errc::StructureViolation, "star witness rejected: " + ok.reason);
    out.certificate = Certificate::star_optimal(stall.center, claimed);
    break;
  }
  out.partition = std::move(p);
  return out;
}

}  // namespace bgp
