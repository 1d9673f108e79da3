#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "scindex/rational.hpp"

namespace scindex {

/// Exact index result: radicand^(1/degree) with a non-negative rational
/// radicand. Kept canonical (minimal degree), so structural equality is value
/// equality and ties are decided without floating point. Value 0 (empty
/// record) is radicand 0, degree 1.
class IndexValue {
 public:
  IndexValue() : radicand_(0), degree_(1), approx_(0.0) {}

  static IndexValue zero() { return IndexValue(); }
  static IndexValue integer(std::int64_t v) { return IndexValue(Rational(v), 1); }
  static IndexValue rational(Rational r) { return IndexValue(std::move(r), 1); }
  /// radicand^(1/degree); canonicalized. Requires radicand >= 0, degree >= 1.
  static IndexValue root(Rational radicand, unsigned degree) {
    return IndexValue(std::move(radicand), degree);
  }
  static IndexValue sqrt_of(Rational radicand) { return root(std::move(radicand), 2); }

  const Rational& radicand() const noexcept { return radicand_; }
  unsigned degree() const noexcept { return degree_; }
  double to_double() const noexcept { return approx_; }
  bool is_zero() const noexcept { return radicand_ == 0; }

  /// Exact value comparison via cross-powering; a cached double approximation
  /// short-circuits when the gap is far beyond rounding error.
  std::strong_ordering compare(const IndexValue& other) const;

  bool operator==(const IndexValue& other) const {
    return degree_ == other.degree_ && radicand_ == other.radicand_;
  }
  bool operator<(const IndexValue& o) const { return compare(o) == std::strong_ordering::less; }
  bool operator<=(const IndexValue& o) const { return compare(o) != std::strong_ordering::greater; }
  bool operator>(const IndexValue& o) const { return compare(o) == std::strong_ordering::greater; }
  bool operator>=(const IndexValue& o) const { return compare(o) != std::strong_ordering::less; }

  /// Exact product (used by the multiplicative scale-invariance checks).
  IndexValue times(const IndexValue& other) const;

  /// Exact k-th power.
  IndexValue pow(unsigned k) const;

  /// "6", "242/3^(1/2)", "174724/105^(1/4)".
  std::string exact_string() const;

 private:
  IndexValue(Rational radicand, unsigned degree);
  void canonicalize();

  Rational radicand_;
  unsigned degree_;
  double approx_;
};

}  // namespace scindex
