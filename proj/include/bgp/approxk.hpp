#pragma once

#include <algorithm>
#include <vector>

#include "bgp/approx3.hpp"

namespace bgp {

/// k/2-approximation for any fixed k >= 3, built on the tripartition search.
///
/// A tripartition of size <= n/2 is refined by bisecting the largest part
/// until k parts exist. A star stall around hub u is rebuilt from the
/// components of G - u: the k-1 largest become parts and u absorbs the rest.
inline Result approx_k(const Graph& g, int k) {
  const int n = g.order();
  if (k < 3) throw Error(Errc::KTooSmall, "approx_k needs k >= 3, got " + std::to_string(k));
  if (k > n) throw Error(Errc::KTooLarge, "k=" + std::to_string(k) + " > n=" + std::to_string(n));
  const Fraction claimed(k, 2);
  const Fraction half(1, 2);

  Result out;
  if (k == n) {
    std::vector<VertexSet> singles;
    for (Vertex v = 0; v < n; ++v) singles.push_back(VertexSet{v});
    out.partition = Partition(std::move(singles));
    out.certificate = Certificate::bound_met(half, k, claimed);
    return out;
  }

  Result three = approx3(g);
  out.trace = std::move(three.trace);
  if (k == 3) {
    out.partition = std::move(three.partition);
    out.certificate = three.certificate;
    out.certificate.claimed_ratio = claimed;
    return out;
  }

  auto log_split = [&](const Partition& before, const Partition& after) {
    record_step(g, OpKind::Split, before, after, out.trace);
  };

  if (2 * three.partition.size() <= n) {
    out.partition = split_largest_until(g, three.partition.parts(), k, log_split);
    out.certificate = Certificate::bound_met(half, k, claimed);
    return out;
  }

  if (three.certificate.tag != CertificateTag::StarOptimal || !three.certificate.center)
    throw Error(Errc::StructureViolation, "tripartition above n/2 without a star witness");
  const Vertex hub = *three.certificate.center;
  auto comps = components_of_subset(g, g.vertices().minus(hub));
  std::stable_sort(comps.begin(), comps.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
  const int count = static_cast<int>(comps.size());
  const int kept = std::min(k, count) - 1;

  std::vector<VertexSet> parts(comps.begin(), comps.begin() + kept);
  std::vector<Vertex> rest{hub};
  for (int i = kept; i < count; ++i)
    rest.insert(rest.end(), comps[static_cast<std::size_t>(i)].begin(), comps[static_cast<std::size_t>(i)].end());
  parts.emplace_back(std::move(rest));

  if (k <= count) {
    out.partition = Partition(std::move(parts));
    if (check_star_center(g, out.partition, hub)) {
      out.certificate = Certificate::star_optimal(hub, claimed);
    } else {
      if (2 * out.partition.size() > n)
        throw Error(Errc::StructureViolation, "star rebuild above n/2 without optimality witness");
      out.certificate = Certificate::bound_met(half, k, claimed);
    }
    return out;
  }

  out.partition = split_largest_until(g, std::move(parts), k, log_split);
  if (2 * out.partition.size() > n) throw Error(Errc::StructureViolation, "split star rebuild above n/2");
  out.certificate = Certificate::bound_met(half, k, claimed);
  return out;
}

}  // namespace bgp
