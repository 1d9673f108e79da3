#include "scindex/rational.hpp"

#include <cctype>

namespace scindex {

BigInt floor_rat(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

BigInt ceil_rat(const Rational& r) { return -floor_rat(-r); }

Rational parse_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty numeric literal");

  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Rational num = parse_decimal(text.substr(0, slash));
    Rational den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return num / den;
  }

  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  BigInt mantissa = 0;
  BigInt scale = 1;
  bool seen_digit = false, seen_dot = false;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '.') {
      if (seen_dot) throw std::invalid_argument("malformed number: " + text);
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      mantissa = mantissa * 10 + (ch - '0');
      if (seen_dot) scale *= 10;
      seen_digit = true;
    } else {
      throw std::invalid_argument("malformed number: " + text);
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed number: " + text);
  Rational value(mantissa, scale);
  return negative ? -value : value;
}

bool nth_root_exact(const BigInt& v, unsigned n, BigInt& root) {
  if (n == 0) throw std::invalid_argument("root degree must be >= 1");
  if (v < 0) return false;
  if (n == 1 || v == 0 || v == 1) {
    root = v;
    return true;
  }
  // Binary search on the integer n-th root.
  BigInt lo = 1, hi = 1;
  while (boost::multiprecision::pow(hi, n) < v) hi <<= 1;
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, n) < v)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (boost::multiprecision::pow(lo, n) == v) {
    root = lo;
    return true;
  }
  return false;
}

std::string rational_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace scindex
