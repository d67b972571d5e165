#pragma once

#include <optional>
#include <string>

#include "bgp/local_ops.hpp"

namespace bgp {

/// Checks the star optimality witness for center c.
///
/// Holds when c lies in a largest part P, every other part is a whole
/// component of G - c, and every component of G - c inside P is no larger than
/// the smallest other part. Any k-partition then has a part through c of at
/// least n - (sum of the k-1 largest components of G - c) = |P| vertices.
inline Feasibility check_star_center(const Graph& g, const Partition& p, Vertex c) {
  if (c < 0 || c >= g.order()) return {false, "center out of range"};
  const auto owner = p.owners(g.order());
  const int home = owner[static_cast<std::size_t>(c)];
  if (home < 0) return {false, "center not covered"};
  if (p.card(home) != p.size()) return {false, "center is not in a largest part"};
  const auto comps = components_of_subset(g, g.vertices().minus(c));
  int smallest_other = g.order();
  for (int i = 0; i < p.k(); ++i)
    if (i != home) smallest_other = std::min(smallest_other, p.card(i));
  int matched = 0;
  for (const auto& comp : comps) {
    const int o = owner[static_cast<std::size_t>(comp.front())];
    if (o == home) {
      for (Vertex x : comp)
        if (owner[static_cast<std::size_t>(x)] != home) return {false, "component " + comp.str() + " straddles parts"};
      if (static_cast<int>(comp.size()) > smallest_other)
        return {false, "component " + comp.str() + " inside the center part is larger than another part"};
    } else {
      if (!(comp == p.part(o))) return {false, "part " + p.part(o).str() + " is not a component of G - c"};
      ++matched;
    }
  }
  if (matched != p.k() - 1) return {false, "some part is not a component of G - c"};
  return {};
}

/// A vertex witnessing check_star_center, searched over largest parts.
inline std::optional<Vertex> find_star_center(const Graph& g, const Partition& p) {
  if (p.k() < 2) return std::nullopt;
  const auto owner = p.owners(g.order());
  for (int i = 0; i < p.k(); ++i) {
    if (p.card(i) != p.size()) continue;
    for (Vertex c : p.part(i)) {
      bool boundary = false;
      for (Vertex y : g.neighbors(c))
        if (owner[static_cast<std::size_t>(y)] != i) {
          boundary = true;
          break;
        }
      if (boundary && check_star_center(g, p, c)) return c;
    }
  }
  return std::nullopt;
}

}  // namespace bgp
