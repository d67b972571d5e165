#pragma once

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include "bgp/report.hpp"
#include "json.hpp"

namespace bgp {

inline nlohmann::json certificate_json(const Certificate& c) {
  nlohmann::json witness = nlohmann::json::object();
  switch (c.tag) {
    case CertificateTag::BoundMet: witness["bound"] = c.bound.str(); break;
    case CertificateTag::StarOptimal: witness["center"] = *c.center; break;
    case CertificateTag::BiStarRatio:
      witness["case"] = c.stall_case;
      if (c.center) witness["u"] = *c.center;
      if (c.center2) witness["v"] = *c.center2;
      break;
    case CertificateTag::StallRatio:
    case CertificateTag::OracleExact: break;
  }
  return {{"tag", std::string(to_string(c.tag))},
          {"ratio", c.ratio.str()},
          {"claimed_ratio", c.claimed_ratio.str()},
          {"witness", witness}};
}

inline nlohmann::json vertex_list(const VertexSet& s) { return nlohmann::json(s.items()); }

inline nlohmann::json trace_json(const OperationTrace& trace) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : trace) {
    nlohmann::json created = nlohmann::json::array();
    for (const auto& part : r.created) created.push_back(vertex_list(part));
    out.push_back({{"op", std::string(to_string(r.kind))},
                   {"created", created},
                   {"rank_before", r.rank_before.sizes},
                   {"rank_after", r.rank_after.sizes}});
  }
  return out;
}

/// The partition output record: n, k, descending sizes, parts, certificate
/// and (optionally) the trace.
inline nlohmann::json result_json(const Graph& g, const Result& r, bool with_trace) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& part : r.partition.parts()) parts.push_back(vertex_list(part));
  nlohmann::json out{{"n", g.order()},
                     {"k", r.partition.k()},
                     {"sizes", rank(r.partition).sizes},
                     {"parts", parts},
                     {"certificate", certificate_json(r.certificate)}};
  if (with_trace) out["trace"] = trace_json(r.trace);
  return out;
}

/// Rebuilds a Partition from the "parts" field of a record.
inline Partition partition_from_json(const nlohmann::json& record) {
  std::vector<VertexSet> parts;
  for (const auto& list : record.at("parts")) parts.emplace_back(list.get<std::vector<Vertex>>());
  return Partition(std::move(parts));
}

/// Graphviz text: one fill color per part, hub vertices double-circled.
inline std::string emit_dot(const Graph& g, const Partition& p, const std::vector<Vertex>& hubs = {}) {
  static constexpr std::array<const char*, 10> palette{"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
                                                       "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd"};
  const auto owner = p.owners(g.order());
  std::ostringstream out;
  out << "graph partition {\n  node [style=filled];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    const int o = owner[static_cast<std::size_t>(v)];
    out << "  " << v << " [fillcolor=\"" << (o >= 0 ? palette[static_cast<std::size_t>(o) % palette.size()] : "white")
        << "\"";
    if (std::find(hubs.begin(), hubs.end(), v) != hubs.end()) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (const auto& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

inline std::vector<Vertex> certificate_hubs(const Certificate& c) {
  std::vector<Vertex> hubs;
  if (c.center) hubs.push_back(*c.center);
  if (c.center2) hubs.push_back(*c.center2);
  return hubs;
}

inline constexpr const char* kTsvHeader = "family\tn\tseed\tk\talgo\tsize\topt\tratio\tcertificate\tops\tmillis";

inline std::string tsv_row(const ReportRow& r) {
  char millis[32];
  std::snprintf(millis, sizeof millis, "%.3f", r.millis);
  std::ostringstream out;
  const bool known = r.opt > 0;
  out << r.family << '\t' << r.n << '\t' << r.seed << '\t' << r.k << '\t' << to_string(r.algo) << '\t' << r.size << '\t'
      << (known ? std::to_string(r.opt) : "-") << '\t' << (known ? r.ratio.str() : "-") << '\t'
      << to_string(r.certificate) << '\t' << r.ops << '\t' << millis;
  return out.str();
}

}  // namespace bgp
