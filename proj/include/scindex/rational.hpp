#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace scindex {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Largest integer <= r.
BigInt floor_rat(const Rational& r);

/// Smallest integer >= r.
BigInt ceil_rat(const Rational& r);

/// Parses a decimal literal ("0.125", "3", "-2.5", "1/8") into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rational parse_decimal(const std::string& text);

/// If v == root^n for some integer root >= 0, stores it and returns true.
/// Requires v >= 0 and n >= 1.
bool nth_root_exact(const BigInt& v, unsigned n, BigInt& root);

/// Rational rendered as "p" or "p/q".
std::string rational_string(const Rational& r);

inline std::int64_t to_int64(const BigInt& v) { return v.convert_to<std::int64_t>(); }

}  // namespace scindex
