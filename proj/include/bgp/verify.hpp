#pragma once

#include <string>

#include "bgp/approx4.hpp"
#include "bgp/oracle.hpp"
#include "bgp/star.hpp"

namespace bgp {

namespace detail {

/// Largest component of G[V3 + V4 - {u, v}] that meets both V3 and V4.
inline long long largest_mixed_component(const Graph& g, const Partition& p, Vertex u, Vertex v) {
  const auto owner = p.owners(g.order());
  const auto rest = p.part(kV3).unite(p.part(kV4)).minus(u).minus(v);
  long long best = 0;
  for (const auto& c : components_of_subset(g, rest)) {
    bool in3 = false, in4 = false;
    for (Vertex x : c) (owner[static_cast<std::size_t>(x)] == kV3 ? in3 : in4) = true;
    if (in3 && in4) best = std::max(best, static_cast<long long>(c.size()));
  }
  return best;
}

/// Star check for a large part: hub inside it and every piece below a third.
inline std::optional<std::vector<VertexSet>> third_star(const Graph& g, const VertexSet& s, Vertex hub) {
  if (!s.contains(hub)) return std::nullopt;
  auto comps = components_of_subset(g, s.minus(hub));
  for (const auto& c : comps)
    if (3 * c.size() >= s.size()) return std::nullopt;
  return comps;
}

inline Feasibility verify_bi_star(const Graph& g, const Partition& p, const Certificate& c) {
  const long long n = g.order();
  if (p.k() != 4) return {false, "tetrapartition certificate on k=" + std::to_string(p.k())};
  if (5LL * p.card(kV4) <= 2 * n) return {false, "|V4| <= 2n/5, a stall was not reached"};
  if (try_merge4(g, p) || try_pull4(g, p)) return {false, "a Merge or Pull still applies"};
  Classification cls;
  try {
    cls = classify_case(g, p, c.claimed_ratio);
  } catch (const Error& e) {
    return {false, e.what()};
  }
  if (c.tag == CertificateTag::StallRatio) {
    if (!cls.early) return {false, "|V2| < |V4|/6, the early ratio does not apply"};
    if (!(c.ratio == Fraction(24, 13))) return {false, "early stall ratio must be 24/13"};
    return {};
  }
  if (cls.early) return {false, "early stall regime but a case certificate was emitted"};
  auto s = cls.structure;
  if (s.stall_case != c.stall_case)
    return {false, "stall is case " + std::to_string(s.stall_case) + ", certificate says " + std::to_string(c.stall_case)};

  const int sc = s.stall_case;
  if ((sc == 1 || sc == 3) && s.u != c.center) return {false, "hub in V4 does not match"};
  if ((sc == 2 || sc == 3) && s.v != c.center2) return {false, "hub in V3 does not match"};

  if (c.ratio == Fraction(24, 13)) {
    if (sc == 1) {
      if (!case1_ratio_holds(g, p, s)) return {false, "case 1 threshold not met"};
    } else if (sc == 2) {
      if (!case2_ratio_holds(g, p, s)) return {false, "case 2 threshold not met"};
    } else if (!case3_ratio_holds_v3(g, p, s) && !case3_ratio_holds_v4(g, p, s)) {
      return {false, "case 3 thresholds not met"};
    }
    return {};
  }

  if (sc == 3) {
    if (!(c.ratio == Fraction(4, 3))) return {false, "case 3 ratio must be 24/13 or 4/3"};
    if (case3_ratio_holds_v3(g, p, s) || case3_ratio_holds_v4(g, p, s)) return {false, "a case 3 threshold holds"};
    if (try_bridge3(g, p, s)) return {false, "Bridge3 still applies"};
    if (largest_mixed_component(g, p, *s.u, *s.v) > p.card(kV1) + p.card(kV2))
      return {false, "a component around the hubs exceeds |V1| + |V2|"};
    return {};
  }

  if (sc == 1 ? case1_ratio_holds(g, p, s) : case2_ratio_holds(g, p, s))
    return {false, "threshold holds, the certificate should be 24/13"};
  const int star_part = sc == 1 ? kV3 : kV4;
  const auto hub = sc == 1 ? c.center2 : c.center;
  if (!hub) return {false, "missing star hub"};
  auto pieces = third_star(g, p.part(star_part), *hub);
  if (!pieces) return {false, "hub does not cut its part into pieces below a third"};
  if (sc == 1) {
    s.v = hub;
    s.comps3 = std::move(*pieces);
  } else {
    s.u = hub;
    s.comps4 = std::move(*pieces);
  }

  if (c.ratio == Fraction(3, 2)) {
    if (sc != 2) return {false, "3/2 only certifies case 2"};
    if (!v3_meets_v4_only_at(g, p, *s.u)) return {false, "V3 meets V4 away from the hub"};
    return {};
  }
  if (!(c.ratio == Fraction(12, 7))) return {false, "unexpected ratio " + c.ratio.str() + " for case " + std::to_string(sc)};
  if (sc == 1 ? bool(try_bridge1(g, p, s)) : bool(try_bridge2(g, p, s))) return {false, "a bridge still applies"};
  const long long c1 = p.card(kV1), c2 = p.card(kV2);
  if (largest_mixed_component(g, p, *s.u, *s.v) > std::max(3 * c1, c2))
    return {false, "a component around the hubs exceeds max(3|V1|, |V2|)"};
  return {};
}

}  // namespace detail

/// Re-derives the witness of a certificate from scratch.
inline Feasibility verify_certificate(const Graph& g, const Partition& p, const Certificate& c) {
  if (auto f = check_feasible(g, p); !f) return {false, "infeasible partition: " + f.reason};
  if (c.claimed_ratio < c.ratio) return {false, "certificate ratio " + c.ratio.str() + " exceeds the claim " + c.claimed_ratio.str()};
  const long long n = g.order();
  switch (c.tag) {
    case CertificateTag::BoundMet:
      if (!(c.ratio == c.bound * Fraction(p.k()))) return {false, "ratio is not k times the bound"};
      if (!at_most(p.size(), c.bound, n))
        return {false, "size " + std::to_string(p.size()) + " exceeds " + c.bound.str() + " of n=" + std::to_string(n)};
      return {};
    case CertificateTag::StarOptimal:
      if (!c.center) return {false, "star certificate without a center"};
      if (!(c.ratio == Fraction(1))) return {false, "star certificate must have ratio 1"};
      return check_star_center(g, p, *c.center);
    case CertificateTag::OracleExact: {
      if (!(c.ratio == Fraction(1))) return {false, "oracle certificate must have ratio 1"};
      try {
        const auto exact = exact_opt(g, p.k(), oracle_limit_from_env());
        if (exact.opt != p.size()) return {false, "oracle optimum " + std::to_string(exact.opt) + " differs"};
      } catch (const Error& e) {
        return {false, e.what()};
      }
      return {};
    }
    case CertificateTag::StallRatio:
    case CertificateTag::BiStarRatio:
      return detail::verify_bi_star(g, p, c);
  }
  return {false, "unknown certificate"};
}

}  // namespace bgp
