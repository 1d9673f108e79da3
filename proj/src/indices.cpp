#include "scindex/indices.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace scindex {

namespace {

std::int64_t isqrt64(std::int64_t v) {
  if (v < 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// ---------------------------------------------------------------------------
// Shared optimizer for w' and c'.
//
// Both indices maximize E^2 / t where E(t) = min_k (y_k + u_k t) over t > 0:
//   w': stations (u, y) = (k, x_{k+1});  t is the hypotenuse slope, E = d.
//   c': stations (u, y) = (k^2, x_{k+1}^2);  t = d^2/c^2, E = d^2.
// E(t) is the concave lower envelope of lines with increasing slopes u and
// decreasing intercepts y, and E^2/t is convex on each linear piece, so the
// maximum sits at an envelope breakpoint, where two stations bind. Those are
// exactly the two-integer-contact optima of the geometric formulations; the
// brute-force pair enumeration in the tests checks this reduction.
// ---------------------------------------------------------------------------

struct EnvelopeStation {
  std::int64_t u, y, k;
};

struct EnvelopeBest {
  Rational product;   // max E^2 / t
  Rational envelope;  // E at the best breakpoint
  Rational t;         // breakpoint position
  std::int64_t k_lo = 0, k_hi = 0;
};

struct Candidate {
  std::int64_t n, qd, qy;  // F = n^2 / (qd * qy)
  std::int64_t k_lo, k_hi;
};

std::optional<EnvelopeBest> maximize_envelope_product(const std::vector<EnvelopeStation>& raw) {
  // Keep only stations with strictly decreasing y (a later station with equal
  // y is never the unique minimizer for t > 0).
  std::vector<EnvelopeStation> pts;
  pts.reserve(raw.size());
  for (const auto& p : raw) {
    if (!pts.empty() && p.y >= pts.back().y) continue;
    pts.push_back(p);
  }
  if (pts.size() < 2) return std::nullopt;

  // Monotone-chain lower hull over (u, y).
  std::vector<EnvelopeStation> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      __int128 cross = static_cast<__int128>(b.u - a.u) * (p.y - a.y) -
                       static_cast<__int128>(b.y - a.y) * (p.u - a.u);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }

  std::int64_t max_u = hull.back().u;
  std::int64_t max_y = hull.front().y;
  bool narrow = max_u <= (std::int64_t{1} << 20) && max_y <= (std::int64_t{1} << 20);

  auto make_candidate = [](const EnvelopeStation& a, const EnvelopeStation& b) {
    return Candidate{a.y * b.u - b.y * a.u, b.u - a.u, a.y - b.y, a.k, b.k};
  };
  auto greater = [&](const Candidate& lhs, const Candidate& rhs) {
    if (narrow) {
      __int128 l = static_cast<__int128>(lhs.n) * lhs.n * (static_cast<__int128>(rhs.qd) * rhs.qy);
      __int128 r = static_cast<__int128>(rhs.n) * rhs.n * (static_cast<__int128>(lhs.qd) * lhs.qy);
      return l > r;
    }
    Rational l = Rational(BigInt(lhs.n) * lhs.n, BigInt(lhs.qd) * lhs.qy);
    Rational r = Rational(BigInt(rhs.n) * rhs.n, BigInt(rhs.qd) * rhs.qy);
    return l > r;
  };

  std::optional<Candidate> best;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    Candidate cand = make_candidate(hull[i], hull[i + 1]);
    if (!best || greater(cand, *best)) best = cand;
  }
  if (!best) return std::nullopt;

  EnvelopeBest out;
  out.product = Rational(BigInt(best->n) * best->n, BigInt(best->qd) * best->qy);
  out.envelope = Rational(best->n, best->qd);
  out.t = Rational(best->qy, best->qd);
  out.k_lo = best->k_lo;
  out.k_hi = best->k_hi;
  return out;
}

void check_magnitudes(const CitationRecord& x, std::int64_t cap, const char* what) {
  if (x.empty()) return;
  if (x[0] > cap || static_cast<std::int64_t>(x.length()) > cap)
    throw std::overflow_error(std::string(what) + ": record too large for exact optimization");
}

std::vector<EnvelopeStation> linear_stations(const CitationRecord& x) {
  auto l = static_cast<std::int64_t>(x.length());
  std::vector<EnvelopeStation> pts;
  pts.reserve(static_cast<std::size_t>(l) + 1);
  for (std::int64_t k = 0; k <= l; ++k) {
    std::int64_t y = k < l ? x[static_cast<std::size_t>(k)] : 0;
    pts.push_back({k, y, k});
  }
  return pts;
}

std::vector<EnvelopeStation> quadratic_stations(const CitationRecord& x) {
  auto l = static_cast<std::int64_t>(x.length());
  std::vector<EnvelopeStation> pts;
  pts.reserve(static_cast<std::size_t>(l) + 1);
  for (std::int64_t k = 0; k <= l; ++k) {
    std::int64_t y = k < l ? x[static_cast<std::size_t>(k)] : 0;
    pts.push_back({k * k, y * y, k});
  }
  return pts;
}

}  // namespace

std::int64_t hirsch_int(const CitationRecord& x) {
  std::int64_t h = 0;
  for (std::size_t i = 0; i < x.length(); ++i) {
    auto k = static_cast<std::int64_t>(i) + 1;
    if (x[i] >= k)
      h = k;
    else
      break;
  }
  return h;
}

IndexValue hirsch(const CitationRecord& x) { return IndexValue::integer(hirsch_int(x)); }

std::int64_t woeginger_int(const CitationRecord& x) {
  std::int64_t w = 0;
  std::int64_t prefix_min = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 0; i < x.length(); ++i) {
    auto k = static_cast<std::int64_t>(i) + 1;
    prefix_min = std::min(prefix_min, x[i] + k);
    if (prefix_min >= k + 1)
      w = k;
    else
      break;
  }
  return w;
}

IndexValue woeginger(const CitationRecord& x) { return IndexValue::integer(woeginger_int(x)); }

IndexValue circle(const CitationRecord& x) {
  if (x.empty()) return IndexValue::zero();
  auto l = static_cast<std::int64_t>(x.length());
  std::int64_t best = l * l;  // corner (l, 0)
  for (std::int64_t i = 0; i < l; ++i) {
    std::int64_t xi = x[static_cast<std::size_t>(i)];
    best = std::min(best, i * i + xi * xi);
  }
  return IndexValue::sqrt_of(Rational(best));
}

std::int64_t egghe_int(const CitationRecord& x) {
  if (x.empty()) return 0;
  std::int64_t best = 0, prefix = 0;
  for (std::size_t i = 0; i < x.length(); ++i) {
    auto k = static_cast<std::int64_t>(i) + 1;
    prefix += x[i];
    if (prefix >= k * k) best = k;
  }
  // k may exceed l while the full total still covers k^2.
  std::int64_t tail = isqrt64(x.total_citations());
  if (tail > static_cast<std::int64_t>(x.length())) best = std::max(best, tail);
  return best;
}

IndexValue egghe(const CitationRecord& x) { return IndexValue::integer(egghe_int(x)); }

IndexValue egghe_real(const CitationRecord& x) {
  if (x.empty()) return IndexValue::zero();
  auto l = static_cast<std::int64_t>(x.length());
  std::int64_t best_sq = 0, prefix = 0;
  for (std::int64_t j = 1; j <= l; ++j) {
    prefix += x[static_cast<std::size_t>(j - 1)];
    if (prefix < j * j) continue;  // the piece floor(k) = j admits no k
    std::int64_t cand = j < l ? std::min(prefix, (j + 1) * (j + 1)) : prefix;
    best_sq = std::max(best_sq, cand);
  }
  return IndexValue::sqrt_of(Rational(best_sq));
}

IndexValue eprime(const CitationRecord& x) {
  if (x.empty()) return IndexValue::zero();
  return IndexValue::sqrt_of(Rational(x.total_citations()));
}

IndexValue sum_index(const CitationRecord& x) { return IndexValue::integer(x.total_citations()); }

IndexValue count_index(const CitationRecord& x) {
  return IndexValue::integer(static_cast<std::int64_t>(x.length()));
}

std::int64_t max_rectangle_area(const CitationRecord& x) {
  std::int64_t best = 0;
  for (std::size_t i = 0; i < x.length(); ++i) {
    best = std::max(best, (static_cast<std::int64_t>(i) + 1) * x[i]);
  }
  return best;
}

std::vector<RectangleWitness> rectangle_witnesses(const CitationRecord& x) {
  std::vector<RectangleWitness> out;
  std::int64_t best = max_rectangle_area(x);
  if (best == 0) return out;
  for (std::size_t i = 0; i < x.length(); ++i) {
    auto k = static_cast<std::int64_t>(i) + 1;
    if (k * x[i] == best) out.push_back({k, x[i]});
  }
  return out;
}

IndexValue hirsch_power(const CitationRecord& x, const Rational& a) {
  if (a <= 0) throw std::invalid_argument("hirsch_power exponent must be positive");
  if (x.empty()) return IndexValue::zero();
  BigInt area(max_rectangle_area(x));
  auto p = static_cast<unsigned>(numerator(a).convert_to<std::uint64_t>());
  auto q = static_cast<unsigned>(denominator(a).convert_to<std::uint64_t>());
  return IndexValue::root(Rational(boost::multiprecision::pow(area, p)), q);
}

IndexValue hprime(const CitationRecord& x) {
  if (x.empty()) return IndexValue::zero();
  return IndexValue::sqrt_of(Rational(max_rectangle_area(x)));
}

IndexValue hprime_bounded(const CitationRecord& x,
                          const std::optional<Rational>& min_ratio,
                          const std::optional<Rational>& max_ratio) {
  if (x.empty()) return IndexValue::zero();
  std::int64_t best = 0;
  for (std::size_t i = 0; i < x.length(); ++i) {
    auto k = static_cast<std::int64_t>(i) + 1;
    Rational ratio(x[i], k);  // height : width
    if (min_ratio && ratio < *min_ratio) continue;
    if (max_ratio && ratio > *max_ratio) continue;
    best = std::max(best, k * x[i]);
  }
  return best == 0 ? IndexValue::zero() : IndexValue::sqrt_of(Rational(best));
}

std::optional<TriangleSolution> wprime_solution(const CitationRecord& x) {
  if (x.empty()) return std::nullopt;
  check_magnitudes(x, (std::int64_t{1} << 31) - 1, "wprime");
  auto best = maximize_envelope_product(linear_stations(x));
  if (!best) return std::nullopt;
  TriangleSolution sol;
  sol.height = best->envelope;            // d
  sol.base = best->envelope / best->t;    // c = d / slope
  sol.product = best->product;            // c*d
  sol.contact_lo = best->k_lo;
  sol.contact_hi = best->k_hi;
  return sol;
}

IndexValue wprime(const CitationRecord& x) {
  auto sol = wprime_solution(x);
  if (!sol) return IndexValue::zero();
  return IndexValue::sqrt_of(sol->product);
}

std::optional<EllipseSolution> cprime_solution(const CitationRecord& x) {
  if (x.empty()) return std::nullopt;
  check_magnitudes(x, (std::int64_t{1} << 31) - 1, "cprime");
  auto best = maximize_envelope_product(quadratic_stations(x));
  if (!best) return std::nullopt;
  EllipseSolution sol;
  sol.height_sq = best->envelope;          // d^2
  sol.base_sq = best->envelope / best->t;  // c^2 = D / (D A)
  sol.product_sq = best->product;          // c^2 d^2
  sol.contact_lo = best->k_lo;
  sol.contact_hi = best->k_hi;
  return sol;
}

IndexValue cprime(const CitationRecord& x) {
  auto sol = cprime_solution(x);
  if (!sol) return IndexValue::zero();
  return IndexValue::root(sol->product_sq, 4);
}

FiniteToOneBounds finite_to_one_bounds(std::int64_t v) {
  if (v < 1) throw std::invalid_argument("finite_to_one_bounds requires v >= 1");
  FiniteToOneBounds out;
  std::int64_t sq = v * v;
  out.lower = sq;
  out.upper_exact = 0;
  for (std::int64_t i = 1; i <= sq; ++i) out.upper_exact += sq / i;
  out.upper_approx = static_cast<double>(sq) * (1.0 + 2.0 * std::log(static_cast<double>(v)));
  return out;
}

// ---------------------------------------------------------------------------
// Descriptors
// ---------------------------------------------------------------------------

namespace {

// Multiplicative map swapping every factor of 3 for a factor of 5.
BigInt three_to_five_swap(BigInt v) {
  BigInt swapped = 1;
  while (v % 3 == 0) {
    v /= 3;
    swapped *= 5;
  }
  return swapped * v;
}

}  // namespace

IndexDescriptor t_half_index() {
  return {"t_half", IndexDescriptor::Kind::counterexample, [](const CitationRecord& x) {
            if (x.empty()) return IndexValue::zero();
            // Seeded on single papers by swapping 3-exponents for 5-exponents
            // under the square root; the closure under Sym, the multiplicative
            // scale rule, and max-boundedness applies the swap to the maximal
            // rectangle area.
            BigInt area(max_rectangle_area(x));
            return IndexValue::sqrt_of(Rational(three_to_five_swap(area)));
          }};
}

IndexDescriptor d_counterexample_index(const Rational& b) {
  if (b <= 0 || b == Rational(1, 2))
    throw std::invalid_argument("d_index exponent must be positive and != 1/2");
  auto p = static_cast<unsigned>(numerator(b).convert_to<std::uint64_t>());
  auto q = static_cast<unsigned>(denominator(b).convert_to<std::uint64_t>());
  return {"d_index", IndexDescriptor::Kind::counterexample, [p, q](const CitationRecord& x) {
            // max_i sqrt(x_i) * i^b, with b = p/q: root of x_i^q * i^(2p), degree 2q.
            IndexValue best = IndexValue::zero();
            for (std::size_t i = 0; i < x.length(); ++i) {
              BigInt col(static_cast<std::int64_t>(i) + 1);
              Rational radicand(boost::multiprecision::pow(BigInt(x[i]), q) *
                                boost::multiprecision::pow(col, 2 * p));
              IndexValue cand = IndexValue::root(std::move(radicand), 2 * q);
              if (best < cand) best = cand;
            }
            return best;
          }};
}

IndexDescriptor f_constant_index() {
  return {"f_index", IndexDescriptor::Kind::counterexample, [](const CitationRecord& x) {
            if (x.empty()) return IndexValue::zero();
            if (x.length() == 1 && x[0] == 1) return IndexValue::integer(1);
            return IndexValue::sqrt_of(Rational(2));
          }};
}

IndexDescriptor const_one_index() {
  return {"const_one", IndexDescriptor::Kind::counterexample, [](const CitationRecord& x) {
            return x.empty() ? IndexValue::zero() : IndexValue::integer(1);
          }};
}

IndexDescriptor hirsch_power_index(const Rational& a) {
  std::string name = "h_a=" + rational_string(a);
  return {name, IndexDescriptor::Kind::composed,
          [a](const CitationRecord& x) { return hirsch_power(x, a); }};
}

const std::vector<IndexDescriptor>& builtin_indices() {
  static const std::vector<IndexDescriptor> table = {
      {"h", IndexDescriptor::Kind::builtin, [](const CitationRecord& x) { return hirsch(x); }},
      {"w", IndexDescriptor::Kind::builtin, [](const CitationRecord& x) { return woeginger(x); }},
      {"c", IndexDescriptor::Kind::builtin, [](const CitationRecord& x) { return circle(x); }},
      {"e", IndexDescriptor::Kind::builtin, [](const CitationRecord& x) { return egghe(x); }},
      {"ebar", IndexDescriptor::Kind::builtin,
       [](const CitationRecord& x) { return egghe_real(x); }},
      {"eprime", IndexDescriptor::Kind::builtin,
       [](const CitationRecord& x) { return eprime(x); }},
      {"hprime", IndexDescriptor::Kind::builtin,
       [](const CitationRecord& x) { return hprime(x); }},
      {"wprime", IndexDescriptor::Kind::builtin,
       [](const CitationRecord& x) { return wprime(x); }},
      {"cprime", IndexDescriptor::Kind::builtin,
       [](const CitationRecord& x) { return cprime(x); }},
      {"sum", IndexDescriptor::Kind::builtin,
       [](const CitationRecord& x) { return sum_index(x); }},
      {"count", IndexDescriptor::Kind::builtin,
       [](const CitationRecord& x) { return count_index(x); }},
  };
  return table;
}

std::optional<IndexDescriptor> find_index(const std::string& name) {
  for (const auto& d : builtin_indices()) {
    if (d.name == name) return d;
  }
  if (name == "t_half") return t_half_index();
  if (name == "d_index") return d_counterexample_index(Rational(1));
  if (name == "f_index") return f_constant_index();
  if (name == "const_one") return const_one_index();
  if (name.rfind("h_a=", 0) == 0) {
    Rational a = parse_decimal(name.substr(4));
    return hirsch_power_index(a);
  }
  return std::nullopt;
}

std::vector<std::string> known_index_names() {
  std::vector<std::string> names;
  for (const auto& d : builtin_indices()) names.push_back(d.name);
  names.insert(names.end(), {"t_half", "d_index", "f_index", "const_one", "h_a=<a>"});
  return names;
}

}  // namespace scindex
