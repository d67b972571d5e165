#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "bgp/error.hpp"

namespace bgp {

/// Exact non-negative rational used for ratios and size thresholds.
/// All threshold tests compare integers by cross-multiplication.
class Fraction {
 public:
  constexpr Fraction() = default;
  constexpr Fraction(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw Error(Errc::InvalidSpec, "zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const auto g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend constexpr bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }
  friend constexpr Fraction operator*(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.num_, a.den_ * b.den_);
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// value <= f * base, evaluated exactly.
constexpr bool at_most(std::int64_t value, const Fraction& f, std::int64_t base) {
  return value * f.den() <= f.num() * base;
}

/// value < f * base, evaluated exactly.
constexpr bool less_than(std::int64_t value, const Fraction& f, std::int64_t base) {
  return value * f.den() < f.num() * base;
}

}  // namespace bgp
