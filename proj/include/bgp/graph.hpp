#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bgp/error.hpp"

namespace bgp {

using Vertex = std::int32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// A set of vertices kept as a sorted, duplicate-free sequence.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : items_(vs) { normalize(); }
  explicit VertexSet(std::vector<Vertex> vs) : items_(std::move(vs)) { normalize(); }

  static VertexSet range(Vertex first, Vertex last_inclusive) {
    std::vector<Vertex> out;
    for (Vertex v = first; v <= last_inclusive; ++v) out.push_back(v);
    return VertexSet(std::move(out));
  }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  Vertex front() const { return items_.front(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<Vertex>& items() const { return items_; }

  bool contains(Vertex v) const { return std::binary_search(items_.begin(), items_.end(), v); }

  VertexSet unite(const VertexSet& other) const {
    std::vector<Vertex> out;
    out.reserve(items_.size() + other.items_.size());
    std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                   std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  VertexSet minus(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                        std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  VertexSet minus(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(items_.size());
    for (Vertex x : items_)
      if (x != v) out.push_back(x);
    return from_sorted(std::move(out));
  }

  bool intersects(const VertexSet& other) const {
    auto a = items_.begin();
    auto b = other.items_.begin();
    while (a != items_.end() && b != other.items_.end()) {
      if (*a == *b) return true;
      if (*a < *b)
        ++a;
      else
        ++b;
    }
    return false;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.items_ <=> b.items_; }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(items_[i]);
    }
    return s + "}";
  }

 private:
  static VertexSet from_sorted(std::vector<Vertex> sorted) {
    VertexSet s;
    s.items_ = std::move(sorted);
    return s;
  }

  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  std::vector<Vertex> items_;
};

/// Unite a collection of vertex sets.
inline VertexSet unite_all(std::span<const VertexSet> sets) {
  std::vector<Vertex> out;
  for (const auto& s : sets) out.insert(out.end(), s.begin(), s.end());
  return VertexSet(std::move(out));
}

/// Immutable simple undirected connected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }

  bool has_edge(Vertex a, Vertex b) const {
    const auto& adj = adjacency_[static_cast<std::size_t>(a)];
    return std::binary_search(adj.begin(), adj.end(), b);
  }

  VertexSet vertices() const { return VertexSet::range(0, order() - 1); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.order() == b.order(); }

 private:
  friend Graph build_graph(int n, std::span<const Edge> edge_list);

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

namespace detail {

/// Membership mask over 0..n-1.
class Mask {
 public:
  Mask(int n) : bits_(static_cast<std::size_t>(n), 0) {}
  Mask(int n, const VertexSet& s) : Mask(n) { add(s); }

  void add(const VertexSet& s) {
    for (Vertex v : s) bits_[static_cast<std::size_t>(v)] = 1;
  }
  void set(Vertex v, bool on = true) { bits_[static_cast<std::size_t>(v)] = on ? 1 : 0; }
  bool operator[](Vertex v) const { return bits_[static_cast<std::size_t>(v)] != 0; }

 private:
  std::vector<std::uint8_t> bits_;
};

inline void check_range(const Graph& g, const VertexSet& s) {
  if (!s.empty() && (s.front() < 0 || s.items().back() >= g.order()))
    throw Error(Errc::MalformedEdge, "vertex set out of range " + s.str());
}

/// Breadth-first sweep of G[mask] from start; appends reached vertices in visit order.
inline std::vector<Vertex> sweep(const Graph& g, const Mask& mask, Vertex start, std::vector<std::uint8_t>& seen) {
  std::vector<Vertex> order{start};
  seen[static_cast<std::size_t>(start)] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex w : g.neighbors(order[head])) {
      if (mask[w] && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        order.push_back(w);
      }
    }
  }
  return order;
}

}  // namespace detail

/// Validates the edge list and builds the graph; rejects self-loops, duplicates,
/// out-of-range endpoints and disconnected input.
inline Graph build_graph(int n, std::span<const Edge> edge_list) {
  if (n < 1) throw Error(Errc::MalformedEdge, "vertex count must be at least 1");
  Graph g;
  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const Edge& e : edge_list) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw Error(Errc::MalformedEdge, "endpoint out of range (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    if (e.u == e.v) throw Error(Errc::MalformedEdge, "self-loop at " + std::to_string(e.u));
    g.edges_.push_back(Edge{std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end())
    throw Error(Errc::MalformedEdge, "duplicate edge");
  for (const Edge& e : g.edges_) {
    g.adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());

  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
  detail::Mask all(n);
  for (Vertex v = 0; v < n; ++v) all.set(v);
  if (static_cast<int>(detail::sweep(g, all, 0, seen).size()) != n)
    throw Error(Errc::DisconnectedInput, "graph is not connected");
  return g;
}

inline Graph build_graph(int n, std::initializer_list<Edge> edge_list) {
  return build_graph(n, std::span<const Edge>(edge_list.begin(), edge_list.size()));
}

/// True iff G[s] is connected.
inline bool is_connected_subset(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw Error(Errc::EmptySubset, "connectivity of an empty set");
  detail::check_range(g, s);
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.order()), 0);
  return detail::sweep(g, detail::Mask(g.order(), s), s.front(), seen).size() == s.size();
}

/// Maximal connected pieces of G[s], ordered by smallest contained vertex.
inline std::vector<VertexSet> components_of_subset(const Graph& g, const VertexSet& s) {
  detail::check_range(g, s);
  std::vector<VertexSet> out;
  const detail::Mask mask(g.order(), s);
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : s) {
    if (!seen[static_cast<std::size_t>(v)]) out.emplace_back(detail::sweep(g, mask, v, seen));
  }
  return out;
}

/// All edges (x, y) with x in from and y in toward, ascending by x then y.
inline std::vector<Edge> boundary_vertices(const Graph& g, const VertexSet& from, const VertexSet& toward) {
  if (from.intersects(toward)) throw Error(Errc::OverlappingSets, from.str() + " and " + toward.str());
  const detail::Mask target(g.order(), toward);
  std::vector<Edge> out;
  for (Vertex x : from)
    for (Vertex y : g.neighbors(x))
      if (target[y]) out.push_back(Edge{x, y});
  return out;
}

inline bool parts_adjacent(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.intersects(b)) throw Error(Errc::OverlappingSets, a.str() + " and " + b.str());
  const detail::Mask target(g.order(), b);
  for (Vertex x : a)
    for (Vertex y : g.neighbors(x))
      if (target[y]) return true;
  return false;
}

namespace detail {

/// BFS tree of G[s] rooted at the smallest vertex of s, neighbors ascending.
/// parent[v] == -1 for the root and for vertices outside s.
struct RootedTree {
  std::vector<Vertex> order;   // BFS order
  std::vector<Vertex> parent;  // indexed by vertex id
};

inline RootedTree bfs_tree(const Graph& g, const VertexSet& s) {
  RootedTree t;
  t.parent.assign(static_cast<std::size_t>(g.order()), -1);
  const Mask mask(g.order(), s);
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.order()), 0);
  t.order.push_back(s.front());
  seen[static_cast<std::size_t>(s.front())] = 1;
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    const Vertex x = t.order[head];
    for (Vertex y : g.neighbors(x)) {
      if (mask[y] && !seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        t.parent[static_cast<std::size_t>(y)] = x;
        t.order.push_back(y);
      }
    }
  }
  return t;
}

/// Subtree sizes (indexed by vertex) of a rooted tree.
inline std::vector<int> subtree_sizes(const RootedTree& t, int n) {
  std::vector<int> size(static_cast<std::size_t>(n), 0);
  for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
    const auto v = static_cast<std::size_t>(*it);
    size[v] += 1;
    if (t.parent[v] >= 0) size[static_cast<std::size_t>(t.parent[v])] += size[v];
  }
  return size;
}

/// Vertices of the subtree hanging below child (child side of the tree edge).
inline VertexSet subtree_of(const RootedTree& t, Vertex child, int n) {
  std::vector<std::uint8_t> in(static_cast<std::size_t>(n), 0);
  in[static_cast<std::size_t>(child)] = 1;
  std::vector<Vertex> out{child};
  // BFS order lists parents before children.
  for (Vertex v : t.order) {
    const Vertex p = t.parent[static_cast<std::size_t>(v)];
    if (p >= 0 && in[static_cast<std::size_t>(p)] && !in[static_cast<std::size_t>(v)]) {
      in[static_cast<std::size_t>(v)] = 1;
      out.push_back(v);
    }
  }
  return VertexSet(std::move(out));
}

inline Edge tree_edge(const RootedTree& t, Vertex child) {
  const Vertex p = t.parent[static_cast<std::size_t>(child)];
  return Edge{std::min(p, child), std::max(p, child)};
}

/// Orders a bipartition: smaller side first, ties by smallest contained vertex.
inline std::pair<VertexSet, VertexSet> ordered_pair(VertexSet a, VertexSet b) {
  if (b.size() < a.size() || (b.size() == a.size() && b.front() < a.front())) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

}  // namespace detail

/// Edges of the BFS spanning tree from vertex 0 (neighbors in ascending order).
inline std::vector<Edge> spanning_tree(const Graph& g) {
  const auto t = detail::bfs_tree(g, g.vertices());
  std::vector<Edge> out;
  for (Vertex v : t.order)
    if (t.parent[static_cast<std::size_t>(v)] >= 0) out.push_back(detail::tree_edge(t, v));
  std::sort(out.begin(), out.end());
  return out;
}

/// Best single-edge cut of the BFS spanning tree of G[s]: minimizes the larger
/// side, ties broken by the smallest tree edge. Smaller side is returned first.
inline std::pair<VertexSet, VertexSet> most_balanced_tree_cut(const Graph& g, const VertexSet& s) {
  if (s.size() < 2) throw Error(Errc::SubsetTooSmall, "cannot bipartition " + s.str());
  if (!is_connected_subset(g, s)) throw Error(Errc::DisconnectedSubset, s.str());
  const auto t = detail::bfs_tree(g, s);
  const auto sub = detail::subtree_sizes(t, g.order());
  const int total = static_cast<int>(s.size());
  Vertex best_child = -1;
  int best_max = total + 1;
  Edge best_edge{};
  for (Vertex v : t.order) {
    if (t.parent[static_cast<std::size_t>(v)] < 0) continue;
    const int below = sub[static_cast<std::size_t>(v)];
    const int larger = std::max(below, total - below);
    const Edge e = detail::tree_edge(t, v);
    if (larger < best_max || (larger == best_max && e < best_edge)) {
      best_max = larger;
      best_edge = e;
      best_child = v;
    }
  }
  VertexSet below = detail::subtree_of(t, best_child, g.order());
  VertexSet rest = s.minus(below);
  return detail::ordered_pair(std::move(below), std::move(rest));
}

}  // namespace bgp
