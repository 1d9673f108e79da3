#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scindex/index_value.hpp"
#include "scindex/record.hpp"

namespace scindex {

/// Origin-anchored rectangle inscribed in B(x): width k, height x_k.
struct RectangleWitness {
  std::int64_t width = 0;
  std::int64_t height = 0;
  std::int64_t area() const { return width * height; }
  bool operator==(const RectangleWitness&) const = default;
};

/// Largest k with x_k >= k (side of the Hirsch square); 0 on the empty record.
std::int64_t hirsch_int(const CitationRecord& x);
IndexValue hirsch(const CitationRecord& x);

/// Largest k such that x_m >= k - m + 1 for all m <= k (leg of the inscribed
/// isosceles right triangle).
std::int64_t woeginger_int(const CitationRecord& x);
IndexValue woeginger(const CitationRecord& x);

/// Radius of the largest origin-centered quarter circle inside B(x):
/// the minimum distance from the origin to the staircase corners (i-1, x_i),
/// i = 1..l+1 with x_{l+1} = 0. Always the square root of an integer.
IndexValue circle(const CitationRecord& x);

/// Largest integer k whose top-min(k,l) citation sum is >= k^2. May exceed
/// the number of papers.
std::int64_t egghe_int(const CitationRecord& x);
IndexValue egghe(const CitationRecord& x);

/// Real-valued relaxation: sup of k in [1,oo) with prefix-sum(min(floor(k),l)) >= k^2.
/// Always >= egghe(x); the square of the result is an integer.
IndexValue egghe_real(const CitationRecord& x);

/// The scale-invariant Egghe variant, which collapses to sqrt(total citations).
IndexValue eprime(const CitationRecord& x);

IndexValue sum_index(const CitationRecord& x);
IndexValue count_index(const CitationRecord& x);

/// max_k k * x_k: the area of the largest origin-anchored inscribed rectangle.
std::int64_t max_rectangle_area(const CitationRecord& x);

/// Every k attaining max_k k * x_k, as witness rectangles.
std::vector<RectangleWitness> rectangle_witnesses(const CitationRecord& x);

/// Hirsch power h_a = (max_k k * x_k)^a for rational a > 0.
IndexValue hirsch_power(const CitationRecord& x, const Rational& a);

/// h' = h_{1/2}: square root of the maximal inscribed rectangle area.
IndexValue hprime(const CitationRecord& x);

/// h' restricted to rectangles whose height:width ratio lies in [min_ratio,
/// max_ratio] (either bound may be disabled). Returns 0 when no rectangle is
/// admissible. Default bounds reproduce hprime.
IndexValue hprime_bounded(const CitationRecord& x,
                          const std::optional<Rational>& min_ratio,
                          const std::optional<Rational>& max_ratio);

/// Maximal-product origin-anchored right triangle under the staircase:
/// legs c (horizontal) and d (vertical), maximizing c*d subject to
/// d - (d/c)k <= x_{k+1} for k = 0..l (x_{l+1} = 0).
struct TriangleSolution {
  Rational base;        // c
  Rational height;      // d
  Rational product;     // c*d = w'^2
  std::int64_t contact_lo = 0, contact_hi = 0;  // stations where the hypotenuse touches
};
std::optional<TriangleSolution> wprime_solution(const CitationRecord& x);
IndexValue wprime(const CitationRecord& x);

/// Maximal-product origin-centered quarter ellipse under the staircase, with
/// semi-axes c (horizontal) and d (vertical): maximize c*d subject to
/// (d/c) sqrt(c^2 - k^2) <= x_{k+1} for k = 0..l.
struct EllipseSolution {
  Rational base_sq;     // c^2
  Rational height_sq;   // d^2
  Rational product_sq;  // c^2 d^2 = c'^4
  std::int64_t contact_lo = 0, contact_hi = 0;
};
std::optional<EllipseSolution> cprime_solution(const CitationRecord& x);
IndexValue cprime(const CitationRecord& x);

/// Total-citation bounds compatible with h' = v: lower v^2, exact upper
/// sum_{i=1..v^2} floor(v^2/i), and the v^2(1 + 2 ln v) approximation.
struct FiniteToOneBounds {
  std::int64_t lower = 0;
  std::int64_t upper_exact = 0;
  double upper_approx = 0.0;
};
FiniteToOneBounds finite_to_one_bounds(std::int64_t v);

/// A named evaluatable citation index: the unit the axiom suite quantifies over.
struct IndexDescriptor {
  enum class Kind { builtin, counterexample, composed };
  std::string name;
  Kind kind = Kind::builtin;
  std::function<IndexValue(const CitationRecord&)> evaluate;
};

/// The built-in indices: h, w, c, e, ebar, eprime, hprime, wprime, cprime, sum, count.
const std::vector<IndexDescriptor>& builtin_indices();

/// Characterization counterexamples: the 3->5 exponent-swap index (breaks
/// monotonicity), the asymmetric column index with exponent b != 1/2 (breaks
/// symmetry), the constant-sqrt(2)-above-(1) index (breaks strong scale
/// invariance), and the all-ones index (breaks weak responsiveness).
IndexDescriptor t_half_index();
IndexDescriptor d_counterexample_index(const Rational& b);
IndexDescriptor f_constant_index();
IndexDescriptor const_one_index();
/// Hirsch power as a named descriptor ("h_a=<a>").
IndexDescriptor hirsch_power_index(const Rational& a);

/// Looks up a built-in or counterexample index by name; also accepts "h_a=N/D"
/// for Hirsch powers. Returns nullopt for unknown names.
std::optional<IndexDescriptor> find_index(const std::string& name);

/// All valid index names, for error messages.
std::vector<std::string> known_index_names();

}  // namespace scindex
