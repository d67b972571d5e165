#pragma once

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bgp/edge_list.hpp"
#include "bgp/output.hpp"
#include "bgp/verify.hpp"

namespace bgp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitVerify = 3;

namespace detail {

struct SizeRange {
  int lo = 0;
  int hi = 0;
};

/// "A..B" or a single "A".
inline SizeRange parse_size_range(const std::string& text) {
  SizeRange r;
  try {
    const auto dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
      r.lo = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(a);
      r.hi = std::stoi(b, &used);
      if (used != b.size()) throw std::invalid_argument(b);
    }
  } catch (const std::logic_error&) {
    throw Error(Errc::InvalidSpec, "bad size range '" + text + "', expected A..B");
  }
  if (r.lo < 1 || r.hi < r.lo) throw Error(Errc::InvalidSpec, "empty size range '" + text + "'");
  return r;
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  if (out.empty()) throw Error(Errc::InvalidSpec, "empty family list");
  return out;
}

struct PartitionArgs {
  std::string input;
  std::string gen;
  int k = 0;
  std::string algo;
  std::string format = "json";
  bool trace = false;
  bool verify = false;
};

inline int run_partition(const PartitionArgs& a, std::ostream& out, std::ostream& err) {
  if (a.input.empty() == a.gen.empty()) {
    err << "error: exactly one of --input and --gen is required\n";
    return kExitConfig;
  }
  const Algo algo = parse_algo(a.algo);
  GeneratorSpec spec;
  Graph g;
  if (!a.gen.empty()) {
    spec = parse_generator_spec(a.gen);
    g = generate(spec);
  } else {
    g = read_edge_list_file(a.input);
  }
  const Result r = run_algorithm(g, a.k, algo);

  int code = kExitOk;
  std::optional<int> opt;
  nlohmann::json verification;
  if (a.verify) {
    const auto cert = verify_certificate(g, r.partition, r.certificate);
    verification["certificate_ok"] = static_cast<bool>(cert);
    if (!cert) {
      verification["reason"] = cert.reason;
      code = kExitVerify;
    }
    if (g.order() <= oracle_limit_from_env()) {
      opt = exact_opt(g, a.k, oracle_limit_from_env()).opt;
      const Fraction ratio(r.partition.size(), *opt);
      verification["opt"] = *opt;
      verification["ratio"] = ratio.str();
      if (claimed_ratio(algo, a.k) < ratio) code = kExitVerify;
    }
  }

  if (a.format == "json") {
    auto record = result_json(g, r, a.trace);
    if (a.verify) record["verification"] = verification;
    out << record.dump(2) << '\n';
  } else if (a.format == "dot") {
    out << emit_dot(g, r.partition, certificate_hubs(r.certificate));
  } else {
    ReportRow row;
    row.family = a.gen.empty() ? a.input : std::string(to_string(spec.family));
    row.n = g.order();
    row.seed = spec.seed;
    row.k = a.k;
    row.algo = algo;
    row.size = r.partition.size();
    if (opt) {
      row.opt = *opt;
      row.ratio = Fraction(row.size, *opt);
    }
    row.certificate = r.certificate.tag;
    row.ops = improvement_count(r.trace);
    out << kTsvHeader << '\n' << tsv_row(row) << '\n';
  }
  if (a.verify && a.format != "json") err << "verification: " << verification.dump() << '\n';
  if (code == kExitVerify) err << "error: verification failed\n";
  return code;
}

struct BenchArgs {
  std::string families;
  std::string sizes;
  int count = 10;
  int k = 0;
  std::string algo;
  std::uint64_t seed = 0;
};

inline int run_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  const Algo algo = parse_algo(a.algo);
  check_shape(algo, a.k);
  const auto range = parse_size_range(a.sizes);
  if (a.count < 1) throw Error(Errc::InvalidSpec, "--count must be positive");
  std::vector<GeneratorSpec> specs;
  for (const auto& name : split_list(a.families)) {
    const Family f = parse_family(name);
    for (int n = range.lo; n <= range.hi; ++n)
      for (int i = 0; i < a.count; ++i) {
        GeneratorSpec s;
        s.family = f;
        s.n = n;
        s.seed = a.seed + static_cast<std::uint64_t>(i);
        specs.push_back(s);
      }
  }
  const auto report = ratio_report(specs, a.k, algo);
  out << kTsvHeader << '\n';
  for (const auto& row : report.rows) out << tsv_row(row) << '\n';
  char mean[32];
  std::snprintf(mean, sizeof mean, "%.4f", report.mean_ratio);
  out << "# instances=" << report.rows.size() << " max_ratio=" << report.max_ratio.str() << " mean_ratio=" << mean
      << " claimed=" << report.claimed.str() << " violations=" << report.violations
      << " certificate_failures=" << report.certificate_failures << '\n';
  if (report.violations > 0 || report.certificate_failures > 0) {
    err << "error: " << report.violations << " ratio violations, " << report.certificate_failures
        << " certificate failures\n";
    return kExitVerify;
  }
  return kExitOk;
}

}  // namespace detail

/// Entry point shared by the bgp tool and the tests. `args` excludes the
/// program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balanced connected graph partitioning"};
  app.require_subcommand(1);

  detail::PartitionArgs pa;
  auto* part = app.add_subcommand("partition", "Partition one graph");
  auto* source = part->add_option_group("source");
  source->add_option("--input", pa.input, "Edge-list file");
  source->add_option("--gen", pa.gen, "Generator spec FAMILY:N:SEED");
  source->require_option(1);
  part->add_option("--k", pa.k, "Number of parts")->required();
  part->add_option("--algo", pa.algo, "approx3, approxk, approx4 or exact")->required();
  part->add_option("--format", pa.format, "json, dot or tsv")->check(CLI::IsMember({"json", "dot", "tsv"}));
  part->add_flag("--trace", pa.trace, "Include the operation trace");
  part->add_flag("--verify", pa.verify, "Re-check the certificate and the realized ratio");

  detail::BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Ratio sweep against the exact oracle");
  bench->add_option("--families", ba.families, "Comma-separated families")->required();
  bench->add_option("--sizes", ba.sizes, "Size range A..B")->required();
  bench->add_option("--count", ba.count, "Instances per family and size");
  bench->add_option("--k", ba.k, "Number of parts")->required();
  bench->add_option("--algo", ba.algo, "Algorithm")->required();
  bench->add_option("--seed", ba.seed, "First seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }
  try {
    if (part->parsed()) return detail::run_partition(pa, out, err);
    return detail::run_bench(ba, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace bgp
