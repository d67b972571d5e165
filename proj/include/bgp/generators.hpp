#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "bgp/approx4_structure.hpp"

namespace bgp {

enum class Family {
  Path,
  Cycle,
  Star,
  Caterpillar,
  Grid,
  RandomConnected,
  DoubleStarCase1,
  DoubleStarCase2,
  BiStarCase3,
};

constexpr std::string_view to_string(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Star: return "star";
    case Family::Caterpillar: return "caterpillar";
    case Family::Grid: return "grid";
    case Family::RandomConnected: return "random_connected";
    case Family::DoubleStarCase1: return "double_star_case1";
    case Family::DoubleStarCase2: return "double_star_case2";
    case Family::BiStarCase3: return "bi_star_case3";
  }
  return "unknown";
}

inline Family parse_family(const std::string& name) {
  static constexpr Family all[] = {Family::Path,        Family::Cycle,           Family::Star,
                                   Family::Caterpillar, Family::Grid,            Family::RandomConnected,
                                   Family::DoubleStarCase1, Family::DoubleStarCase2, Family::BiStarCase3};
  if (name == "random") return Family::RandomConnected;
  for (Family f : all)
    if (to_string(f) == name) return f;
  throw Error(Errc::InvalidSpec, "unknown family '" + name + "'");
}

struct GeneratorSpec {
  GeneratorSpec() = default;
  GeneratorSpec(Family f, int size, std::uint64_t s = 0) : family(f), n(size), seed(s) {}

  Family family = Family::Path;
  int n = 0;
  std::uint64_t seed = 0;
  double edge_probability = 0.15;  // random_connected: extra non-tree edges
  std::optional<int> cross_edges;  // case families: edges between the two large parts
  bool free_side_star = false;     // case families: shape the unconstrained large part as a star
  bool cross_to_hub_only = false;  // double_star_case2: cross edges all land on the V4 hub
  bool paired_cross = false;       // case families: both large parts are stars, piece i of V3 tied to piece i of V4

  std::string label() const { return std::string(to_string(family)) + ":" + std::to_string(n) + ":" + std::to_string(seed); }
};

/// Parses FAMILY:N:SEED (SEED optional, default 0).
inline GeneratorSpec parse_generator_spec(const std::string& text) {
  GeneratorSpec spec;
  const auto first = text.find(':');
  if (first == std::string::npos) throw Error(Errc::InvalidSpec, "expected FAMILY:N:SEED, got '" + text + "'");
  spec.family = parse_family(text.substr(0, first));
  const auto second = text.find(':', first + 1);
  const std::string n_text = text.substr(first + 1, second == std::string::npos ? std::string::npos : second - first - 1);
  try {
    std::size_t used = 0;
    spec.n = std::stoi(n_text, &used);
    if (used != n_text.size()) throw std::invalid_argument(n_text);
    if (second != std::string::npos) {
      const std::string seed_text = text.substr(second + 1);
      spec.seed = std::stoull(seed_text, &used);
      if (used != seed_text.size()) throw std::invalid_argument(seed_text);
    }
  } catch (const std::logic_error&) {
    throw Error(Errc::InvalidSpec, "bad number in generator spec '" + text + "'");
  }
  return spec;
}

/// Seeded source with portable bounded draws (std distributions differ
/// between standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return lo + static_cast<std::int64_t>(x % span);
  }

  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

class EdgeBag {
 public:
  void add(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    edges_.push_back({a, b});
  }
  Graph build(int n) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    return build_graph(n, edges_);
  }

 private:
  std::vector<Edge> edges_;
};

/// Uniform random labeled tree on `vertices` via a Prufer sequence.
inline void random_tree(Rng& rng, const std::vector<Vertex>& vertices, EdgeBag& bag) {
  const int m = static_cast<int>(vertices.size());
  if (m < 2) return;
  if (m == 2) {
    bag.add(vertices[0], vertices[1]);
    return;
  }
  std::vector<int> code(static_cast<std::size_t>(m - 2));
  for (auto& c : code) c = static_cast<int>(rng.between(0, m - 1));
  std::vector<int> degree(static_cast<std::size_t>(m), 1);
  for (int c : code) ++degree[static_cast<std::size_t>(c)];
  for (int c : code) {
    int leaf = 0;
    while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    bag.add(vertices[static_cast<std::size_t>(leaf)], vertices[static_cast<std::size_t>(c)]);
    --degree[static_cast<std::size_t>(leaf)];
    --degree[static_cast<std::size_t>(c)];
  }
  int a = -1;
  for (int i = 0; i < m; ++i)
    if (degree[static_cast<std::size_t>(i)] == 1) {
      if (a < 0) {
        a = i;
      } else {
        bag.add(vertices[static_cast<std::size_t>(a)], vertices[static_cast<std::size_t>(i)]);
        break;
      }
    }
}

inline std::vector<Vertex> block(Vertex first, int size) {
  std::vector<Vertex> out(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) out[static_cast<std::size_t>(i)] = first + i;
  return out;
}

inline Vertex pick(Rng& rng, const std::vector<Vertex>& from) {
  return from[static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(from.size()) - 1))];
}

/// Hub at block[0]; the rest is cut into random trees of size in [1, cap],
/// each tied to the hub by one edge. Returns the pieces.
inline std::vector<std::vector<Vertex>> star_block(Rng& rng, const std::vector<Vertex>& blk, int cap, EdgeBag& bag) {
  std::vector<std::vector<Vertex>> pieces;
  std::size_t at = 1;
  while (at < blk.size()) {
    const int left = static_cast<int>(blk.size() - at);
    const int size = static_cast<int>(rng.between(1, std::min(cap, left)));
    std::vector<Vertex> piece(blk.begin() + static_cast<std::ptrdiff_t>(at),
                              blk.begin() + static_cast<std::ptrdiff_t>(at) + size);
    random_tree(rng, piece, bag);
    bag.add(blk[0], pick(rng, piece));
    pieces.push_back(std::move(piece));
    at += static_cast<std::size_t>(size);
  }
  return pieces;
}

/// A small part hanging off `hub` by a single edge.
inline void hang(Rng& rng, const std::vector<Vertex>& part, Vertex hub, EdgeBag& bag) {
  random_tree(rng, part, bag);
  bag.add(hub, pick(rng, part));
}

/// Unconstrained large part: a random tree, or a star with pieces below a third.
inline void free_block(Rng& rng, const std::vector<Vertex>& blk, bool as_star, EdgeBag& bag) {
  const int size = static_cast<int>(blk.size());
  if (as_star && size >= 4)
    star_block(rng, blk, std::max(1, (size - 1) / 3), bag);
  else
    random_tree(rng, blk, bag);
}

inline std::vector<Vertex> without_hub(const std::vector<Vertex>& blk) { return {blk.begin() + 1, blk.end()}; }

struct PlantedSizes {
  int small = 0;  // |V1| = |V2|
  int third = 0;  // |V3|
  int fourth = 0; // |V4|
};

/// Sizes with |V1| = |V2| = a, 14a < n, and |V3| in {|V4| - 1, |V4|}.
inline PlantedSizes planted_sizes(Rng& rng, int n) {
  const int a_max = (n - 1) / 14;
  if (a_max < 1) throw Error(Errc::InvalidSpec, "planted stall families need n >= 15, got " + std::to_string(n));
  PlantedSizes s;
  s.small = static_cast<int>(rng.between(std::max(1, a_max / 2), a_max));
  const int rest = n - 2 * s.small;
  s.fourth = (rest + 1) / 2;
  s.third = rest - s.fourth;
  return s;
}

}  // namespace detail

/// A generated graph with the tetrapartition it was planted around (case
/// families only).
struct Instance {
  Graph graph;
  std::optional<Partition> planted;
};

namespace detail {

inline Instance planted_instance(const GeneratorSpec& spec, std::uint64_t seed) {
  Rng rng(seed);
  const auto sz = planted_sizes(rng, spec.n);
  const auto v1 = block(0, sz.small);
  const auto v2 = block(sz.small, sz.small);
  const auto v3 = block(2 * sz.small, sz.third);
  const auto v4 = block(2 * sz.small + sz.third, sz.fourth);
  const int default_cross = std::max(1, spec.n / 3);
  const int cross = std::max(1, spec.cross_edges.value_or(default_cross));
  EdgeBag bag;

  if (spec.paired_cross) {
    const auto pieces3 = star_block(rng, v3, sz.small, bag);
    const auto pieces4 = star_block(rng, v4, sz.small, bag);
    const bool first_on_v3 = rng.chance(0.5);
    const Vertex hub1 = spec.family == Family::DoubleStarCase1 ? v4[0] : v3[0];
    const Vertex hub2 = spec.family == Family::DoubleStarCase2 ? v3[0] : v4[0];
    if (spec.family == Family::BiStarCase3) {
      hang(rng, first_on_v3 ? v1 : v2, v3[0], bag);
      hang(rng, first_on_v3 ? v2 : v1, v4[0], bag);
    } else {
      hang(rng, v1, hub1, bag);
      hang(rng, v2, hub2, bag);
    }
    for (std::size_t i = 0; i < std::min(pieces3.size(), pieces4.size()); ++i)
      bag.add(pick(rng, pieces3[i]), pick(rng, pieces4[i]));
    Instance out{bag.build(spec.n), std::nullopt};
    out.planted = Partition({VertexSet(v1), VertexSet(v2), VertexSet(v3), VertexSet(v4)});
    return out;
  }

  switch (spec.family) {
    case Family::DoubleStarCase1: {
      star_block(rng, v4, sz.small, bag);
      free_block(rng, v3, spec.free_side_star, bag);
      hang(rng, v1, v4[0], bag);
      hang(rng, v2, v4[0], bag);
      for (int e = 0; e < cross; ++e) bag.add(pick(rng, v3), pick(rng, without_hub(v4)));
      break;
    }
    case Family::DoubleStarCase2: {
      star_block(rng, v3, sz.small, bag);
      free_block(rng, v4, spec.free_side_star || spec.cross_to_hub_only, bag);
      hang(rng, v1, v3[0], bag);
      hang(rng, v2, v3[0], bag);
      for (int e = 0; e < cross; ++e)
        bag.add(pick(rng, without_hub(v3)), spec.cross_to_hub_only ? v4[0] : pick(rng, v4));
      break;
    }
    case Family::BiStarCase3: {
      const bool first_on_v3 = rng.chance(0.5);
      const auto& on3 = first_on_v3 ? v1 : v2;
      const auto& on4 = first_on_v3 ? v2 : v1;
      star_block(rng, v3, sz.small, bag);
      star_block(rng, v4, sz.small, bag);
      hang(rng, on3, v3[0], bag);
      hang(rng, on4, v4[0], bag);
      for (int e = 0; e < cross; ++e) bag.add(pick(rng, without_hub(v3)), pick(rng, without_hub(v4)));
      break;
    }
    default: throw Error(Errc::InvalidSpec, "not a planted family");
  }
  Instance out{bag.build(spec.n), std::nullopt};
  out.planted = Partition({VertexSet(v1), VertexSet(v2), VertexSet(v3), VertexSet(v4)});
  return out;
}

inline int intended_case(Family f) {
  switch (f) {
    case Family::DoubleStarCase1: return 1;
    case Family::DoubleStarCase2: return 2;
    case Family::BiStarCase3: return 3;
    default: return 0;
  }
}

}  // namespace detail

/// Deterministic in (family, n, seed and parameters); always connected.
/// Case families retry sub-seeds until the planted partition is a stall of
/// the intended case.
inline Instance generate_instance(const GeneratorSpec& spec) {
  const int n = spec.n;
  if (n < 1) throw Error(Errc::InvalidSpec, "n must be positive");
  if (spec.edge_probability < 0 || spec.edge_probability > 1) throw Error(Errc::InvalidSpec, "edge probability outside [0, 1]");
  detail::EdgeBag bag;
  Rng rng(spec.seed);
  switch (spec.family) {
    case Family::Path:
      for (Vertex v = 1; v < n; ++v) bag.add(v - 1, v);
      break;
    case Family::Cycle:
      if (n < 3) throw Error(Errc::InvalidSpec, "cycle needs n >= 3");
      for (Vertex v = 1; v < n; ++v) bag.add(v - 1, v);
      bag.add(0, n - 1);
      break;
    case Family::Star:
      for (Vertex v = 1; v < n; ++v) bag.add(0, v);
      break;
    case Family::Caterpillar: {
      // Spine 0..s-1, each remaining vertex a leg on a spine vertex.
      const int spine = (n + 1) / 2;
      for (Vertex v = 1; v < spine; ++v) bag.add(v - 1, v);
      for (Vertex v = spine; v < n; ++v) bag.add(v - spine, v);
      break;
    }
    case Family::Grid: {
      int rows = static_cast<int>(std::sqrt(static_cast<double>(n)));
      while (rows > 1 && n % rows != 0) --rows;
      const int cols = n / rows;
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
          const Vertex v = r * cols + c;
          if (c + 1 < cols) bag.add(v, v + 1);
          if (r + 1 < rows) bag.add(v, v + cols);
        }
      break;
    }
    case Family::RandomConnected: {
      detail::random_tree(rng, detail::block(0, n), bag);
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
          if (rng.chance(spec.edge_probability)) bag.add(a, b);
      break;
    }
    case Family::DoubleStarCase1:
    case Family::DoubleStarCase2:
    case Family::BiStarCase3: {
      const int want = detail::intended_case(spec.family);
      for (std::uint64_t attempt = 0; attempt < 200; ++attempt) {
        auto inst = detail::planted_instance(spec, spec.seed * 1000003ULL + attempt);
        const Partition& p = *inst.planted;
        if (try_merge4(inst.graph, p) || try_pull4(inst.graph, p)) continue;
        const auto cls = classify_case(inst.graph, p);
        if (!cls.early && cls.structure.stall_case == want) return inst;
      }
      throw Error(Errc::InvalidSpec, "could not plant a stall for " + spec.label());
    }
  }
  return Instance{bag.build(n), std::nullopt};
}

inline Graph generate(const GeneratorSpec& spec) { return generate_instance(spec).graph; }

}  // namespace bgp
