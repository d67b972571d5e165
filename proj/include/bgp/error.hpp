#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bgp {

enum class Errc {
  DisconnectedInput,
  MalformedEdge,
  EmptySubset,
  OverlappingSets,
  SubsetTooSmall,
  DisconnectedSubset,
  DegenerateSubset,
  KTooLarge,
  KTooSmall,
  NTooSmall,
  MismatchedShape,
  StructureViolation,
  InstanceTooLarge,
  InvalidSpec,
  ParseError,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DisconnectedInput: return "DisconnectedInput";
    case Errc::MalformedEdge: return "MalformedEdge";
    case Errc::EmptySubset: return "EmptySubset";
    case Errc::OverlappingSets: return "OverlappingSets";
    case Errc::SubsetTooSmall: return "SubsetTooSmall";
    case Errc::DisconnectedSubset: return "DisconnectedSubset";
    case Errc::DegenerateSubset: return "DegenerateSubset";
    case Errc::KTooLarge: return "KTooLarge";
    case Errc::KTooSmall: return "KTooSmall";
    case Errc::NTooSmall: return "NTooSmall";
    case Errc::MismatchedShape: return "MismatchedShape";
    case Errc::StructureViolation: return "StructureViolation";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bgp
