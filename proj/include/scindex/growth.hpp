#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scindex/indices.hpp"
#include "scindex/rational.hpp"
#include "scindex/record.hpp"

namespace scindex {

enum class Period { year, month };

/// The simple deterministic career model: p papers per period, each paper
/// attracting c citations per period. With yearly periods a paper is cited in
/// its publication year; with monthly periods citations start the following
/// month. Fractional parameters accrue by flooring: floor(p*t) papers exist at
/// time t, paper j appears at ceil(j/p).
struct DeterministicParams {
  Rational p{1};
  Rational c{1};
  Period period = Period::year;
};

/// Record after n years under the annual rule (paper j published in year t_j
/// has floor(c * (n - t_j + 1)) citations).
CitationRecord deterministic_record(const DeterministicParams& params, std::int64_t n);

/// Record after t months under the monthly rule (paper j has
/// floor(c * (t - t_j)) citations, none in its publication month).
CitationRecord monthly_deterministic_record(const DeterministicParams& params, std::int64_t t);

/// Time-indexed career: snapshots are cumulative (x(n-1) is dominated by x(n))
/// and per-index value series run parallel to times.
struct CareerTrajectory {
  std::vector<std::int64_t> times;
  std::vector<CitationRecord> snapshots;
  std::vector<std::string> index_names;
  std::vector<std::vector<IndexValue>> series;  // [index][step]
};

CareerTrajectory deterministic_trajectory(const DeterministicParams& params, std::int64_t horizon,
                                          const std::vector<IndexDescriptor>& indices);

/// Exact verification of the linear-growth strip s*n <= g(x(n)) <= s*n + d for
/// g in {h, hprime, w, wprime} with integer parameters:
///   h:  s = d = pc/(p+c)          hprime: s = d = sqrt(pc)/2
///   w:  s = min(p,c), d = 0       wprime: s = sqrt(pc), d = 0
/// Comparisons involving sqrt(pc) are done on squares.
struct StripCheckReport {
  std::string index;
  std::int64_t p = 1, c = 1;
  int horizon = 40;
  bool holds = true;
  bool exact_line = false;  // d == 0 and every point sits on the line
  std::optional<int> first_violation;
};
StripCheckReport strip_check(const std::string& index_name, std::int64_t p, std::int64_t c,
                             int horizon);

/// Chord-slope fit plus a line-free lower bound on the width of any strip
/// containing the first `horizon` points (from the midpoint convexity gap
/// (g(1)+g(2m-1))/2 - g(m), which no choice of parallel lines can shrink).
/// `unbounded` is set when the bound keeps growing with the horizon.
struct StripFitReport {
  double chord_slope = 0;
  double width_lower_bound = 0;   // at the full horizon
  double width_half_horizon = 0;  // same bound at horizon/2
  bool unbounded = false;
};
StripFitReport empirical_strip_fit(const IndexDescriptor& g, std::int64_t p, std::int64_t c,
                                   int horizon);

}  // namespace scindex
