#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "bgp/approx3.hpp"
#include "bgp/approx4.hpp"
#include "bgp/approxk.hpp"
#include "bgp/generators.hpp"
#include "bgp/oracle.hpp"
#include "bgp/verify.hpp"

namespace bgp {

enum class Algo { Approx3, ApproxK, Approx4, Exact };

constexpr std::string_view to_string(Algo a) {
  switch (a) {
    case Algo::Approx3: return "approx3";
    case Algo::ApproxK: return "approxk";
    case Algo::Approx4: return "approx4";
    case Algo::Exact: return "exact";
  }
  return "unknown";
}

inline Algo parse_algo(const std::string& name) {
  for (Algo a : {Algo::Approx3, Algo::ApproxK, Algo::Approx4, Algo::Exact})
    if (to_string(a) == name) return a;
  throw Error(Errc::InvalidSpec, "unknown algorithm '" + name + "'");
}

/// Guarantee the algorithm claims for k parts.
inline Fraction claimed_ratio(Algo a, int k) {
  switch (a) {
    case Algo::Approx3: return Fraction(3, 2);
    case Algo::ApproxK: return Fraction(k, 2);
    case Algo::Approx4: return Fraction(24, 13);
    case Algo::Exact: return Fraction(1);
  }
  return Fraction(1);
}

/// Rejects algorithm/k combinations the algorithm does not cover.
inline void check_shape(Algo a, int k) {
  if (a == Algo::Approx3 && k != 3) throw Error(Errc::MismatchedShape, "approx3 requires k=3, got k=" + std::to_string(k));
  if (a == Algo::Approx4 && k != 4) throw Error(Errc::MismatchedShape, "approx4 requires k=4, got k=" + std::to_string(k));
  if (a == Algo::ApproxK && k < 3) throw Error(Errc::KTooSmall, "approxk requires k >= 3, got k=" + std::to_string(k));
  if (k < 1) throw Error(Errc::KTooSmall, "k must be positive");
}

inline Result run_algorithm(const Graph& g, int k, Algo a) {
  check_shape(a, k);
  switch (a) {
    case Algo::Approx3: return approx3(g);
    case Algo::ApproxK: return approx_k(g, k);
    case Algo::Approx4: return approx4(g);
    case Algo::Exact: {
      Result out;
      out.partition = exact_opt(g, k, oracle_limit_from_env()).witness;
      out.certificate = Certificate::oracle_exact(Fraction(1));
      return out;
    }
  }
  throw Error(Errc::InvalidSpec, "unknown algorithm");
}

struct ReportRow {
  std::string family;
  int n = 0;
  std::uint64_t seed = 0;
  int k = 0;
  Algo algo = Algo::Approx3;
  int size = 0;
  int opt = 0;
  Fraction ratio{1};
  CertificateTag certificate = CertificateTag::BoundMet;
  std::size_t ops = 0;
  double millis = 0;
  bool verified = false;  // certificate re-derived successfully
};

struct RatioReport {
  std::vector<ReportRow> rows;
  Fraction max_ratio{1};
  double mean_ratio = 0;
  Fraction claimed{1};
  std::size_t violations = 0;            // rows with ratio above the claim
  std::size_t certificate_failures = 0;  // rows whose certificate did not verify
};

/// Runs `algo` and the oracle on every instance. Rows keep the order of
/// `specs`.
inline RatioReport ratio_report(const std::vector<GeneratorSpec>& specs, int k, Algo algo) {
  check_shape(algo, k);
  RatioReport report;
  report.claimed = claimed_ratio(algo, k);
  const int limit = oracle_limit_from_env();
  double sum = 0;
  for (const auto& spec : specs) {
    const Graph g = generate(spec);
    if (g.order() > limit)
      throw Error(Errc::InstanceTooLarge, spec.label() + " is beyond the oracle guard n <= " + std::to_string(limit));
    const auto start = std::chrono::steady_clock::now();
    const Result r = run_algorithm(g, k, algo);
    const auto stop = std::chrono::steady_clock::now();
    const int opt = exact_opt(g, k, limit).opt;
    ReportRow row;
    row.family = std::string(to_string(spec.family));
    row.n = spec.n;
    row.seed = spec.seed;
    row.k = k;
    row.algo = algo;
    row.size = r.partition.size();
    row.opt = opt;
    row.ratio = Fraction(row.size, opt);
    row.certificate = r.certificate.tag;
    row.ops = improvement_count(r.trace);
    row.millis = std::chrono::duration<double, std::milli>(stop - start).count();
    row.verified = static_cast<bool>(verify_certificate(g, r.partition, r.certificate));
    if (!row.verified) ++report.certificate_failures;
    if (report.max_ratio < row.ratio) report.max_ratio = row.ratio;
    if (report.claimed < row.ratio) ++report.violations;
    sum += row.ratio.to_double();
    report.rows.push_back(std::move(row));
  }
  if (!report.rows.empty()) report.mean_ratio = sum / static_cast<double>(report.rows.size());
  return report;
}

}  // namespace bgp
