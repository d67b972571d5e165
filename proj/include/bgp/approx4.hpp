#pragma once

#include "bgp/bridge.hpp"
#include "bgp/star.hpp"

namespace bgp {

/// True when every edge between V3 and V4 ends at u on the V4 side.
inline bool v3_meets_v4_only_at(const Graph& g, const Partition& p, Vertex u) {
  const auto owner = p.owners(g.order());
  const auto points = attachment_points(g, p, owner, kV4, kV3);
  return points.size() == 1 && points.front() == u;
}

/// The improvement loop from a given feasible tetrapartition.
inline Result approx4_from(const Graph& g, Partition p) {
  const int n = g.order();
  require_tetrapartition(p);
  if (auto f = check_feasible(g, p); !f) throw Error(Errc::StructureViolation, "start partition infeasible: " + f.reason);
  const Fraction claimed(24, 13);
  Result out;
  auto step = [&](OpKind kind, Partition next) {
    record_step(g, kind, p, next, out.trace);
    p = std::move(next);
  };
  const long long n2 = static_cast<long long>(n) * n;

  while (true) {
    if (static_cast<long long>(out.trace.size()) > 4 * n2 + 16)
      throw Error(Errc::StructureViolation, "tetrapartition search did not terminate");
    if (5LL * p.size() <= 2LL * n) {
      out.certificate = Certificate::bound_met(Fraction(2, 5), 4, claimed);
      break;
    }
    if (auto next = try_merge4(g, p)) {
      step(OpKind::Merge, std::move(*next));
      continue;
    }
    if (auto next = try_pull4(g, p)) {
      step(OpKind::Pull, std::move(*next));
      continue;
    }
    if (auto c = find_star_center(g, p)) {
      out.certificate = Certificate::star_optimal(*c, claimed);
      break;
    }
    auto cls = classify_case(g, p, claimed);
    if (cls.early) {
      out.certificate = *cls.early;
      break;
    }
    auto& s = cls.structure;

    if (s.stall_case == 3) {
      if (case3_ratio_holds_v3(g, p, s) || case3_ratio_holds_v4(g, p, s)) {
        out.certificate = Certificate::bi_star(Fraction(24, 13), 3, s.u, s.v, claimed);
        break;
      }
      if (auto next = try_bridge3(g, p, s)) {
        step(OpKind::Bridge3, std::move(*next));
        continue;
      }
      out.certificate = Certificate::bi_star(Fraction(4, 3), 3, s.u, s.v, claimed);
      break;
    }

    const bool first = s.stall_case == 1;
    if (first ? case1_ratio_holds(g, p, s) : case2_ratio_holds(g, p, s)) {
      out.certificate = Certificate::bi_star(Fraction(24, 13), s.stall_case, s.u, s.v, claimed);
      break;
    }
    const int split_part = first ? kV3 : kV4;
    auto split = bipartition_or_star(g, p.part(split_part), p.card(split_part));
    if (split.balanced) {
      auto next = try_rebalance(g, p, s, split_part, split.smaller, split.larger);
      if (!next) throw Error(Errc::StructureViolation, "balanced bisection enabled no update");
      step(OpKind::Rebalance, std::move(*next));
      continue;
    }
    if (first) {
      s.v = split.center;
      s.comps3 = std::move(split.components);
    } else {
      s.u = split.center;
      s.comps4 = std::move(split.components);
      if (v3_meets_v4_only_at(g, p, *s.u)) {
        out.certificate = Certificate::bi_star(Fraction(3, 2), 2, s.u, s.v, claimed);
        break;
      }
    }
    if (auto next = first ? try_bridge1(g, p, s) : try_bridge2(g, p, s)) {
      step(first ? OpKind::Bridge1 : OpKind::Bridge2, std::move(*next));
      continue;
    }
    out.certificate = Certificate::bi_star(Fraction(12, 7), s.stall_case, s.u, s.v, claimed);
    break;
  }
  out.partition = std::move(p);
  return out;
}

/// Local-improvement 24/13-approximation for 4 parts.
inline Result approx4(const Graph& g) {
  const int n = g.order();
  if (n < 4) throw Error(Errc::NTooSmall, "need n >= 4, got " + std::to_string(n));
  return approx4_from(g, initial_partition(g, 4));
}

}  // namespace bgp
