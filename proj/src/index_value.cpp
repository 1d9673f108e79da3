#include "scindex/index_value.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace scindex {

namespace {

Rational pow_rat(const Rational& r, unsigned k) {
  Rational out(boost::multiprecision::pow(numerator(r), static_cast<int>(k)),
               boost::multiprecision::pow(denominator(r), static_cast<int>(k)));
  return out;
}

}  // namespace

IndexValue::IndexValue(Rational radicand, unsigned degree)
    : radicand_(std::move(radicand)), degree_(degree), approx_(0.0) {
  if (degree_ < 1) throw std::invalid_argument("IndexValue degree must be >= 1");
  if (radicand_ < 0) throw std::invalid_argument("IndexValue radicand must be >= 0");
  canonicalize();
  approx_ = std::pow(radicand_.convert_to<double>(), 1.0 / degree_);
}

void IndexValue::canonicalize() {
  if (radicand_ == 0 || radicand_ == 1) {
    degree_ = 1;
    return;
  }
  // Strip prime factors of the degree while the radicand is a perfect power.
  for (unsigned p = 2; p <= degree_;) {
    if (degree_ % p != 0) {
      ++p;
      continue;
    }
    BigInt rn, rd;
    if (nth_root_exact(numerator(radicand_), p, rn) &&
        nth_root_exact(denominator(radicand_), p, rd)) {
      radicand_ = Rational(rn, rd);
      degree_ /= p;
    } else {
      ++p;
    }
  }
}

std::strong_ordering IndexValue::compare(const IndexValue& other) const {
  if (degree_ == other.degree_) {
    if (radicand_ < other.radicand_) return std::strong_ordering::less;
    if (radicand_ > other.radicand_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  // Fast path: the doubles are good to ~1e-15 relative error, so a gap well
  // beyond that decides the order.
  double gap = approx_ - other.approx_;
  double margin = 1e-9 * (1.0 + std::fabs(approx_) + std::fabs(other.approx_));
  if (gap > margin) return std::strong_ordering::greater;
  if (gap < -margin) return std::strong_ordering::less;
  unsigned l = std::lcm(degree_, other.degree_);
  Rational lhs = pow_rat(radicand_, l / degree_);
  Rational rhs = pow_rat(other.radicand_, l / other.degree_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

IndexValue IndexValue::times(const IndexValue& other) const {
  if (is_zero() || other.is_zero()) return zero();
  unsigned l = std::lcm(degree_, other.degree_);
  Rational r = pow_rat(radicand_, l / degree_) * pow_rat(other.radicand_, l / other.degree_);
  return IndexValue(std::move(r), l);
}

IndexValue IndexValue::pow(unsigned k) const {
  if (k == 0) return integer(1);
  unsigned g = std::gcd(k, degree_);
  return IndexValue(pow_rat(radicand_, k / g), degree_ / g);
}

std::string IndexValue::exact_string() const {
  std::string s = rational_string(radicand_);
  if (degree_ > 1) s += "^(1/" + std::to_string(degree_) + ")";
  return s;
}

}  // namespace scindex
