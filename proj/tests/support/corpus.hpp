#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "bgp/generators.hpp"

namespace corpus {

struct Named {
  std::string label;
  bgp::Graph graph;
};

using Mask = std::uint32_t;

inline int pair_index(int a, int b, int n) {
  // Row-major index of the pair (a, b), a < b, in the upper triangle.
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

inline bgp::Graph from_mask(int n, Mask mask) {
  std::vector<bgp::Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mask >> pair_index(a, b, n) & 1U) edges.push_back({a, b});
  return bgp::build_graph(n, edges);
}

inline bool mask_connected(int n, Mask mask) {
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y = 0; y < n; ++y) {
      if (y == x || seen[static_cast<std::size_t>(y)]) continue;
      const int a = std::min(x, y), b = std::max(x, y);
      if (mask >> pair_index(a, b, n) & 1U) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

/// Every connected graph on vertices 0..n-1 (labeled, so isomorphic copies
/// repeat).
inline std::vector<Mask> labeled_connected(int n) {
  std::vector<Mask> out;
  const int pairs = n * (n - 1) / 2;
  for (Mask m = 0; m < (Mask{1} << pairs); ++m)
    if (mask_connected(n, m)) out.push_back(m);
  return out;
}

inline Mask relabel(int n, Mask mask, const std::vector<int>& perm) {
  Mask out = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mask >> pair_index(a, b, n) & 1U) {
        const int x = std::min(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
        const int y = std::max(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
        out |= Mask{1} << pair_index(x, y, n);
      }
  return out;
}

/// Smallest relabeled mask over orderings that sort vertices by degree.
inline Mask canonical(int n, Mask mask) {
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mask >> pair_index(a, b, n) & 1U) {
        ++degree[static_cast<std::size_t>(a)];
        ++degree[static_cast<std::size_t>(b)];
      }
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::pair(degree[static_cast<std::size_t>(x)], x) < std::pair(degree[static_cast<std::size_t>(y)], y);
  });
  // Permute within runs of equal degree only.
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && degree[static_cast<std::size_t>(order[j])] == degree[static_cast<std::size_t>(order[i])]) ++j;
    runs.emplace_back(i, j);
    i = j;
  }
  Mask best = ~Mask{0};
  auto visit = [&](auto&& self, std::size_t run) -> void {
    if (run == runs.size()) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int pos = 0; pos < n; ++pos) perm[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;
      best = std::min(best, relabel(n, mask, perm));
      return;
    }
    const auto [lo, hi] = runs[run];
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(lo), order.begin() + static_cast<std::ptrdiff_t>(hi));
    do {
      self(self, run + 1);
    } while (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                   order.begin() + static_cast<std::ptrdiff_t>(hi)));
  };
  visit(visit, 0);
  return best;
}

/// One representative per isomorphism class of connected graphs on n
/// vertices, grown by adding a vertex to each smaller class.
inline std::vector<Mask> unlabeled_connected(int n) {
  std::vector<Mask> current{0};  // n = 1
  for (int m = 2; m <= n; ++m) {
    std::set<Mask> next;
    for (Mask base : current) {
      // Re-encode the (m-1)-vertex graph on m vertices, new vertex m-1.
      Mask lifted = 0;
      for (int a = 0; a < m - 1; ++a)
        for (int b = a + 1; b < m - 1; ++b)
          if (base >> pair_index(a, b, m - 1) & 1U) lifted |= Mask{1} << pair_index(a, b, m);
      for (Mask nb = 1; nb < (Mask{1} << (m - 1)); ++nb) {
        Mask grown = lifted;
        for (int a = 0; a < m - 1; ++a)
          if (nb >> a & 1U) grown |= Mask{1} << pair_index(a, m - 1, m);
        next.insert(canonical(m, grown));
      }
    }
    current.assign(next.begin(), next.end());
  }
  return current;
}

/// The small-graph corpus: all labeled connected graphs for n <= 6 and one
/// graph per isomorphism class for n = 7.
inline std::vector<Named> small_graphs() {
  std::vector<Named> out;
  for (int n = 1; n <= 6; ++n)
    for (Mask m : labeled_connected(n)) out.push_back({"n" + std::to_string(n) + "/m" + std::to_string(m), from_mask(n, m)});
  for (Mask m : unlabeled_connected(7)) out.push_back({"n7/c" + std::to_string(m), from_mask(7, m)});
  return out;
}

/// 500 seeded random connected graphs with 8 <= n <= 12 and varying density.
inline std::vector<Named> random_graphs(int count = 500) {
  static constexpr double densities[] = {0.05, 0.1, 0.15, 0.25, 0.4};
  std::vector<Named> out;
  for (int i = 0; i < count; ++i) {
    bgp::GeneratorSpec spec;
    spec.family = bgp::Family::RandomConnected;
    spec.n = 8 + i % 5;
    spec.seed = static_cast<std::uint64_t>(i);
    spec.edge_probability = densities[(i / 5) % 5];
    out.push_back({spec.label() + "/p" + std::to_string(spec.edge_probability), bgp::generate(spec)});
  }
  return out;
}

/// Planted stall instances of the three case families.
inline std::vector<bgp::GeneratorSpec> case_specs(bgp::Family family, int count) {
  std::vector<bgp::GeneratorSpec> out;
  for (int i = 0; i < count; ++i) {
    bgp::GeneratorSpec s;
    s.family = family;
    s.n = 15 + (i * 7) % 60;
    s.seed = static_cast<std::uint64_t>(i);
    s.free_side_star = i % 2 == 1;
    s.paired_cross = i % 5 == 4;
    s.cross_to_hub_only = family == bgp::Family::DoubleStarCase2 && i % 7 == 3;
    out.push_back(s);
  }
  return out;
}

}  // namespace corpus
