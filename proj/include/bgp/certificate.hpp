#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bgp/fraction.hpp"
#include "bgp/partition.hpp"

namespace bgp {

enum class CertificateTag {
  BoundMet,     // size <= bound * n
  StarOptimal,  // a cut vertex forces every solution's part through it to be this large
  BiStarRatio,  // two-hub stall of the tetrapartition search, ratio depends on the case
  StallRatio,   // tetrapartition stall with |V2| >= |V4|/6
  OracleExact,  // exhaustive search
};

constexpr std::string_view to_string(CertificateTag tag) {
  switch (tag) {
    case CertificateTag::BoundMet: return "BoundMet";
    case CertificateTag::StarOptimal: return "StarOptimal";
    case CertificateTag::BiStarRatio: return "BiStarRatio";
    case CertificateTag::StallRatio: return "StallRatio";
    case CertificateTag::OracleExact: return "OracleExact";
  }
  return "Unknown";
}

/// Why the returned partition is within some factor of the optimum.
struct Certificate {
  CertificateTag tag = CertificateTag::OracleExact;
  /// Guarantee implied by this certificate alone (k * bound for BoundMet, 1 for
  /// optimality tags, the case ratio for BiStarRatio).
  Fraction ratio{1};
  /// The algorithm-level guarantee (3/2, k/2, 24/13, or 1 for the oracle).
  Fraction claimed_ratio{1};

  Fraction bound{1};              // BoundMet
  std::optional<Vertex> center;   // StarOptimal; hub u in V4 for BiStarRatio
  std::optional<Vertex> center2;  // hub v in V3 for BiStarRatio
  int stall_case = 0;             // BiStarRatio: 1, 2 or 3

  static Certificate bound_met(Fraction bound, int k, Fraction claimed) {
    Certificate c;
    c.tag = CertificateTag::BoundMet;
    c.bound = bound;
    c.ratio = bound * Fraction(k);
    c.claimed_ratio = claimed;
    return c;
  }

  static Certificate star_optimal(Vertex center, Fraction claimed) {
    Certificate c;
    c.tag = CertificateTag::StarOptimal;
    c.center = center;
    c.claimed_ratio = claimed;
    return c;
  }

  static Certificate bi_star(Fraction ratio, int stall_case, std::optional<Vertex> u, std::optional<Vertex> v,
                             Fraction claimed) {
    Certificate c;
    c.tag = CertificateTag::BiStarRatio;
    c.ratio = ratio;
    c.stall_case = stall_case;
    c.center = u;
    c.center2 = v;
    c.claimed_ratio = claimed;
    return c;
  }

  static Certificate stall_ratio(Fraction claimed) {
    Certificate c;
    c.tag = CertificateTag::StallRatio;
    c.ratio = Fraction(24, 13);
    c.claimed_ratio = claimed;
    return c;
  }

  static Certificate oracle_exact(Fraction claimed) {
    Certificate c;
    c.tag = CertificateTag::OracleExact;
    c.claimed_ratio = claimed;
    return c;
  }
};

enum class OpKind { Merge, Pull, Bridge1, Bridge2, Bridge3, Rebalance, Split };

constexpr std::string_view to_string(OpKind kind) {
  switch (kind) {
    case OpKind::Merge: return "Merge";
    case OpKind::Pull: return "Pull";
    case OpKind::Bridge1: return "Bridge1";
    case OpKind::Bridge2: return "Bridge2";
    case OpKind::Bridge3: return "Bridge3";
    case OpKind::Rebalance: return "Rebalance";
    case OpKind::Split: return "Split";
  }
  return "Unknown";
}

struct TraceRecord {
  OpKind kind = OpKind::Merge;
  /// Parts of the new partition that did not exist before the step.
  std::vector<VertexSet> created;
  PartitionRank rank_before;
  PartitionRank rank_after;
  Partition after;
};

using OperationTrace = std::vector<TraceRecord>;

inline TraceRecord make_record(OpKind kind, const Partition& before, const Partition& after) {
  TraceRecord r;
  r.kind = kind;
  for (const auto& part : after.parts())
    if (std::find(before.parts().begin(), before.parts().end(), part) == before.parts().end())
      r.created.push_back(part);
  r.rank_before = rank(before);
  r.rank_after = rank(after);
  r.after = after;
  return r;
}

/// Count of local-improvement steps (splits excluded).
inline std::size_t improvement_count(const OperationTrace& trace) {
  std::size_t count = 0;
  for (const auto& r : trace)
    if (r.kind != OpKind::Split) ++count;
  return count;
}

struct Result {
  Partition partition;
  Certificate certificate;
  OperationTrace trace;
};

}  // namespace bgp
