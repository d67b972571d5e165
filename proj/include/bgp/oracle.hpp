#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "bgp/partition.hpp"

namespace bgp {

inline constexpr int kOracleLimit = 14;

/// The oracle guard, lowered (never raised) by BGP_ORACLE_LIMIT.
inline int oracle_limit_from_env() {
  const char* raw = std::getenv("BGP_ORACLE_LIMIT");
  if (raw == nullptr || *raw == '\0') return kOracleLimit;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1) return kOracleLimit;
  return static_cast<int>(std::min<long>(value, kOracleLimit));
}

struct ExactSolution {
  int opt = 0;
  Partition witness;
};

namespace detail {

/// Assigns labels 0..k-1 to vertices in BFS order. Vertex order[0] takes label
/// 0 and labels are opened in ascending order, so each set partition is
/// produced at most once. Branches where some label can no longer become
/// connected through unassigned vertices are cut.
class PartitionSearch {
 public:
  using Visitor = std::function<void(const std::vector<int>& labels)>;

  PartitionSearch(const Graph& g, int k) : g_(g), k_(k), n_(g.order()) {
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n_), 0);
    Mask all(n_);
    for (Vertex v = 0; v < n_; ++v) all.set(v);
    order_ = sweep(g, all, 0, seen);
    label_.assign(static_cast<std::size_t>(n_), -1);
    count_.assign(static_cast<std::size_t>(k_), 0);
  }

  /// Visits every connected k-partition whose parts all have fewer than cap vertices.
  void run(int cap, const Visitor& visit) {
    cap_ = cap;
    visit_ = &visit;
    stop_ = false;
    descend(0, 0);
  }

  /// Lowers the cap during a run (branch and bound).
  void tighten(int cap) { cap_ = std::min(cap_, cap); }
  void stop() { stop_ = true; }

 private:
  void descend(std::size_t depth, int opened) {
    if (stop_) return;
    if (depth == order_.size()) {
      if (opened == k_) (*visit_)(label_);
      return;
    }
    const int remaining = static_cast<int>(order_.size() - depth);
    if (remaining < k_ - opened) return;
    const Vertex v = order_[depth];
    const int limit = std::min(opened + 1, k_);
    for (int lab = 0; lab < limit; ++lab) {
      if (depth == 0 && lab != 0) break;
      if (count_[static_cast<std::size_t>(lab)] + 1 >= cap_) continue;
      label_[static_cast<std::size_t>(v)] = lab;
      ++count_[static_cast<std::size_t>(lab)];
      const int next_opened = lab == opened ? opened + 1 : opened;
      if (completable(next_opened)) descend(depth + 1, next_opened);
      --count_[static_cast<std::size_t>(lab)];
      label_[static_cast<std::size_t>(v)] = -1;
      if (stop_) return;
    }
  }

  bool completable(int opened) {
    for (int lab = 0; lab < opened; ++lab) {
      Vertex start = -1;
      for (Vertex v = 0; v < n_; ++v)
        if (label_[static_cast<std::size_t>(v)] == lab) {
          start = v;
          break;
        }
      stack_.clear();
      seen_.assign(static_cast<std::size_t>(n_), 0);
      stack_.push_back(start);
      seen_[static_cast<std::size_t>(start)] = 1;
      int reached = 0;
      while (!stack_.empty()) {
        const Vertex x = stack_.back();
        stack_.pop_back();
        if (label_[static_cast<std::size_t>(x)] == lab) ++reached;
        for (Vertex y : g_.neighbors(x)) {
          const int ly = label_[static_cast<std::size_t>(y)];
          if ((ly == lab || ly == -1) && !seen_[static_cast<std::size_t>(y)]) {
            seen_[static_cast<std::size_t>(y)] = 1;
            stack_.push_back(y);
          }
        }
      }
      if (reached != count_[static_cast<std::size_t>(lab)]) return false;
    }
    return true;
  }

  const Graph& g_;
  int k_;
  int n_;
  int cap_ = 0;
  bool stop_ = false;
  const Visitor* visit_ = nullptr;
  std::vector<Vertex> order_;
  std::vector<int> label_;
  std::vector<int> count_;
  std::vector<Vertex> stack_;
  std::vector<std::uint8_t> seen_;
};

inline Partition from_labels(const std::vector<int>& labels, int k) {
  std::vector<std::vector<Vertex>> buckets(static_cast<std::size_t>(k));
  for (std::size_t v = 0; v < labels.size(); ++v)
    buckets[static_cast<std::size_t>(labels[v])].push_back(static_cast<Vertex>(v));
  std::vector<VertexSet> parts;
  for (auto& b : buckets) parts.emplace_back(std::move(b));
  return Partition(std::move(parts));
}

}  // namespace detail

/// Calls visit once per connected k-partition of g (as a label vector).
inline void for_each_connected_partition(const Graph& g, int k, const std::function<void(const std::vector<int>&)>& visit) {
  if (k < 1 || k > g.order()) throw Error(Errc::KTooLarge, "k=" + std::to_string(k));
  detail::PartitionSearch search(g, k);
  search.run(g.order() + 1, visit);
}

/// Minimum possible largest-part size over all connected k-partitions, with a witness.
inline ExactSolution exact_opt(const Graph& g, int k, int limit = kOracleLimit) {
  if (g.order() > std::min(limit, kOracleLimit))
    throw Error(Errc::InstanceTooLarge, "oracle refuses n=" + std::to_string(g.order()) + " (limit " +
                                            std::to_string(std::min(limit, kOracleLimit)) + ")");
  if (k < 1) throw Error(Errc::KTooSmall, "k must be positive");
  if (k > g.order()) throw Error(Errc::KTooLarge, "k=" + std::to_string(k) + " > n=" + std::to_string(g.order()));

  const int floor_bound = lower_bound(g, k);
  detail::PartitionSearch search(g, k);
  ExactSolution best;
  best.opt = g.order() + 1;
  search.run(best.opt, [&](const std::vector<int>& labels) {
    auto p = detail::from_labels(labels, k);
    if (p.size() < best.opt) {
      best.opt = p.size();
      best.witness = std::move(p);
      search.tighten(best.opt);
      if (best.opt == floor_bound) search.stop();
    }
  });
  return best;
}

}  // namespace bgp
