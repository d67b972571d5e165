#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bgp/graph.hpp"

namespace bgp {

/// Descending sequence of part cardinalities; compared lexicographically.
struct PartitionRank {
  std::vector<int> sizes;

  int largest() const { return sizes.empty() ? 0 : sizes.front(); }

  friend bool operator==(const PartitionRank&, const PartitionRank&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(sizes[i]);
    }
    return s + ")";
  }
};

/// k vertex sets kept sorted by ascending cardinality, ties by smallest vertex.
/// Construction does not validate; use check_feasible.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<VertexSet> parts) : parts_(std::move(parts)) { sort_parts(); }

  int k() const { return static_cast<int>(parts_.size()); }
  const std::vector<VertexSet>& parts() const { return parts_; }
  /// 0-based: part(0) is the smallest, part(k-1) the largest.
  const VertexSet& part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
  const VertexSet& largest() const { return parts_.back(); }
  int size() const { return parts_.empty() ? 0 : static_cast<int>(parts_.back().size()); }
  int card(int i) const { return static_cast<int>(part(i).size()); }

  /// owner[v] = index of the part containing v, or -1.
  std::vector<int> owners(int n) const {
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < parts_.size(); ++i)
      for (Vertex v : parts_[i])
        if (v >= 0 && v < n) owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
    return owner;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += " ";
      s += parts_[i].str();
    }
    return s + "]";
  }

 private:
  void sort_parts() {
    std::sort(parts_.begin(), parts_.end(), [](const VertexSet& a, const VertexSet& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      if (a.empty() || b.empty()) return a.empty() && !b.empty();
      return a.front() < b.front();
    });
  }

  std::vector<VertexSet> parts_;
};

inline PartitionRank rank(const Partition& p) {
  PartitionRank r;
  for (const auto& part : p.parts()) r.sizes.push_back(static_cast<int>(part.size()));
  std::sort(r.sizes.begin(), r.sizes.end(), std::greater<>());
  return r;
}

/// Strict lexicographic order on descending size sequences: a is better than b.
inline bool better_than(const PartitionRank& a, const PartitionRank& b) {
  auto total = [](const PartitionRank& r) {
    long long s = 0;
    for (int x : r.sizes) s += x;
    return s;
  };
  if (a.sizes.size() != b.sizes.size() || total(a) != total(b))
    throw Error(Errc::MismatchedShape, a.str() + " vs " + b.str());
  return std::lexicographical_compare(a.sizes.begin(), a.sizes.end(), b.sizes.begin(), b.sizes.end());
}

/// ceil(n / k): no k-partition can have a smaller largest part.
inline int lower_bound(const Graph& g, int k) {
  if (k < 1 || k > g.order()) throw Error(Errc::KTooLarge, "k=" + std::to_string(k));
  return (g.order() + k - 1) / k;
}

struct Feasibility {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
};

inline Feasibility check_feasible(const Graph& g, const Partition& p) {
  const int n = g.order();
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  std::size_t covered = 0;
  for (int i = 0; i < p.k(); ++i) {
    const auto& part = p.part(i);
    if (part.empty()) return {false, "part " + std::to_string(i) + " is empty"};
    for (Vertex v : part) {
      if (v < 0 || v >= n) return {false, "vertex " + std::to_string(v) + " out of range"};
      if (seen[static_cast<std::size_t>(v)]++) return {false, "vertex " + std::to_string(v) + " in two parts"};
      ++covered;
    }
  }
  if (covered != static_cast<std::size_t>(n)) return {false, "parts do not cover V"};
  for (int i = 0; i < p.k(); ++i)
    if (!is_connected_subset(g, p.part(i))) return {false, "part " + p.part(i).str() + " is disconnected"};
  for (int i = 1; i < p.k(); ++i)
    if (p.card(i - 1) > p.card(i)) return {false, "parts not sorted by size"};
  return {};
}

namespace detail {

/// Index of the largest part, ties broken by the smallest contained vertex.
inline int largest_index(const std::vector<VertexSet>& parts) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(parts.size()); ++i) {
    const auto& a = parts[static_cast<std::size_t>(i)];
    const auto& b = parts[static_cast<std::size_t>(best)];
    if (a.size() > b.size() || (a.size() == b.size() && a.front() < b.front())) best = i;
  }
  return best;
}

/// Tree cut of G[s] whose piece is closest to |s|/pieces; the piece becomes a
/// final part and the other side is split further. Returns (piece, rest).
inline std::pair<VertexSet, VertexSet> peel_piece(const Graph& g, const VertexSet& s, int pieces) {
  const auto t = bfs_tree(g, s);
  const auto sub = subtree_sizes(t, g.order());
  const long long total = static_cast<long long>(s.size());
  Vertex best_child = -1;
  bool best_below = true;
  long long best_gap = -1;
  Edge best_edge{};
  for (Vertex v : t.order) {
    if (t.parent[static_cast<std::size_t>(v)] < 0) continue;
    const long long below = sub[static_cast<std::size_t>(v)];
    const Edge e = tree_edge(t, v);
    for (bool take_below : {true, false}) {
      const long long piece = take_below ? below : total - below;
      if (total - piece < pieces - 1) continue;
      const long long gap = std::abs(piece * pieces - total);
      if (best_gap < 0 || gap < best_gap || (gap == best_gap && e < best_edge)) {
        best_gap = gap;
        best_edge = e;
        best_child = v;
        best_below = take_below;
      }
    }
  }
  VertexSet below = subtree_of(t, best_child, g.order());
  VertexSet rest = s.minus(below);
  if (best_below) return {std::move(below), std::move(rest)};
  return {std::move(rest), std::move(below)};
}

}  // namespace detail

/// Feasible k-partition obtained by removing k-1 spanning-tree edges, peeling
/// pieces of size close to n/k one at a time.
inline Partition initial_partition(const Graph& g, int k) {
  if (k < 1) throw Error(Errc::KTooSmall, "k must be positive");
  if (k > g.order()) throw Error(Errc::KTooLarge, "k=" + std::to_string(k) + " > n=" + std::to_string(g.order()));
  std::vector<VertexSet> parts;
  VertexSet rest = g.vertices();
  for (int pieces = k; pieces > 1; --pieces) {
    auto [piece, remainder] = detail::peel_piece(g, rest, pieces);
    parts.push_back(std::move(piece));
    rest = std::move(remainder);
  }
  parts.push_back(std::move(rest));
  return Partition(std::move(parts));
}

/// Repeatedly bisects the largest part with most_balanced_tree_cut until the
/// partition has k parts. Each split replaces one part by two smaller ones.
inline Partition split_largest_until(const Graph& g, std::vector<VertexSet> parts, int k,
                                     const std::function<void(const Partition&, const Partition&)>& on_split = {}) {
  while (static_cast<int>(parts.size()) < k) {
    const int idx = detail::largest_index(parts);
    const Partition before(parts);
    auto target = parts[static_cast<std::size_t>(idx)];
    if (target.size() < 2) throw Error(Errc::KTooLarge, "no part left to split");
    auto [a, b] = most_balanced_tree_cut(g, target);
    parts[static_cast<std::size_t>(idx)] = std::move(a);
    parts.push_back(std::move(b));
    if (on_split) on_split(before, Partition(parts));
  }
  return Partition(std::move(parts));
}

}  // namespace bgp
