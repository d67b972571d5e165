#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bgp/certificate.hpp"
#include "bgp/graph.hpp"
#include "bgp/partition.hpp"

namespace bgp {

/// True iff some vertex of s has a neighbor owned by part `target`.
inline bool touches(const Graph& g, const VertexSet& s, const std::vector<int>& owner, int target) {
  for (Vertex x : s)
    for (Vertex y : g.neighbors(x))
      if (owner[static_cast<std::size_t>(y)] == target) return true;
  return false;
}

/// Vertices of part `from` that have a neighbor in part `to`, ascending.
inline std::vector<Vertex> attachment_points(const Graph& g, const Partition& p, const std::vector<int>& owner, int from,
                                             int to) {
  std::vector<Vertex> out;
  for (Vertex x : p.part(from))
    for (Vertex y : g.neighbors(x))
      if (owner[static_cast<std::size_t>(y)] == to) {
        out.push_back(x);
        break;
      }
  return out;
}

namespace detail {

inline std::vector<VertexSet> replace_parts(const Partition& p, std::initializer_list<int> drop,
                                            std::vector<VertexSet> added) {
  std::vector<VertexSet> out;
  for (int i = 0; i < p.k(); ++i)
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) out.push_back(p.part(i));
  for (auto& s : added) out.push_back(std::move(s));
  return out;
}

/// First Pull move out of part `donor` into one of `receivers`.
///
/// Candidate chunks U are generated per hub u (a donor vertex adjacent to some
/// other part, ascending): (a) {u} when G[donor - u] is connected, (b) each
/// component X of G[donor - u], (c) donor - X for each such component. The
/// first candidate adjacent to the receiver with |receiver| + |U| < |donor|
/// is taken; both remaining pieces are connected by construction.
inline std::optional<Partition> find_pull(const Graph& g, const Partition& p, int donor, std::span<const int> receivers) {
  const auto owner = p.owners(g.order());
  const VertexSet& d = p.part(donor);
  const int dsize = static_cast<int>(d.size());
  if (dsize < 2) return std::nullopt;

  auto apply = [&](const VertexSet& chunk, int receiver) {
    std::vector<VertexSet> parts;
    for (int i = 0; i < p.k(); ++i) {
      if (i == donor)
        parts.push_back(d.minus(chunk));
      else if (i == receiver)
        parts.push_back(p.part(i).unite(chunk));
      else
        parts.push_back(p.part(i));
    }
    return Partition(std::move(parts));
  };

  for (Vertex u : d) {
    bool is_hub = false;
    for (Vertex y : g.neighbors(u)) {
      const int o = owner[static_cast<std::size_t>(y)];
      if (o != donor && o >= 0) {
        is_hub = true;
        break;
      }
    }
    if (!is_hub) continue;
    const auto comps = components_of_subset(g, d.minus(u));
    const VertexSet single{u};
    if (comps.size() == 1) {
      for (int r : receivers)
        if (p.card(r) + 1 < dsize && touches(g, single, owner, r)) return apply(single, r);
    }
    for (const auto& x : comps)
      for (int r : receivers)
        if (p.card(r) + static_cast<int>(x.size()) < dsize && touches(g, x, owner, r)) return apply(x, r);
    for (const auto& x : comps) {
      const VertexSet rest = d.minus(x);
      for (int r : receivers)
        if (static_cast<int>(x.size()) > p.card(r) && touches(g, rest, owner, r)) return apply(rest, r);
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Records a step after asserting it is feasible and strictly better (for
/// Split: max part size does not grow).
inline void record_step(const Graph& g, OpKind kind, const Partition& before, const Partition& after,
                        OperationTrace& trace) {
  if (auto f = check_feasible(g, after); !f)
    throw Error(Errc::StructureViolation, std::string(to_string(kind)) + " produced infeasible partition: " + f.reason);
  if (after.k() != before.k() && kind != OpKind::Split)
    throw Error(Errc::StructureViolation, std::string(to_string(kind)) + " changed the part count");
  if (kind == OpKind::Split) {
    if (after.size() > before.size()) throw Error(Errc::StructureViolation, "split increased the size");
  } else if (!better_than(rank(after), rank(before))) {
    throw Error(Errc::StructureViolation, std::string(to_string(kind)) + " did not improve " + rank(before).str() +
                                              " -> " + rank(after).str());
  }
  trace.push_back(make_record(kind, before, after));
}

}  // namespace bgp
