#include "scindex/growth.hpp"

#include <algorithm>
#include <stdexcept>

namespace scindex {

namespace {

void validate(const DeterministicParams& params) {
  if (params.p <= 0 || params.c <= 0)
    throw std::invalid_argument("deterministic model requires p > 0 and c > 0");
}

// Paper j exists from t_j = ceil(j/p); citations at time t are
// floor(c * (t - t_j + same_period)) where same_period is 1 for the annual
// rule and 0 for the monthly rule.
CitationRecord model_record(const DeterministicParams& params, std::int64_t t, int same_period) {
  validate(params);
  if (t < 1) throw std::invalid_argument("time index must be >= 1");
  std::int64_t papers = to_int64(floor_rat(params.p * t));
  std::vector<std::int64_t> counts;
  counts.reserve(static_cast<std::size_t>(papers));
  for (std::int64_t j = 1; j <= papers; ++j) {
    std::int64_t born = to_int64(ceil_rat(Rational(j) / params.p));
    std::int64_t span = t - born + same_period;
    if (span <= 0) continue;
    std::int64_t cites = to_int64(floor_rat(params.c * span));
    if (cites >= 1) counts.push_back(cites);
  }
  // Publication order already yields non-increasing counts.
  return CitationRecord::from_nonincreasing(std::move(counts));
}

}  // namespace

CitationRecord deterministic_record(const DeterministicParams& params, std::int64_t n) {
  return model_record(params, n, 1);
}

CitationRecord monthly_deterministic_record(const DeterministicParams& params, std::int64_t t) {
  return model_record(params, t, 0);
}

CareerTrajectory deterministic_trajectory(const DeterministicParams& params, std::int64_t horizon,
                                          const std::vector<IndexDescriptor>& indices) {
  CareerTrajectory traj;
  traj.series.resize(indices.size());
  for (const auto& d : indices) traj.index_names.push_back(d.name);
  for (std::int64_t t = 1; t <= horizon; ++t) {
    CitationRecord x = params.period == Period::year ? deterministic_record(params, t)
                                                     : monthly_deterministic_record(params, t);
    traj.times.push_back(t);
    for (std::size_t i = 0; i < indices.size(); ++i)
      traj.series[i].push_back(indices[i].evaluate(x));
    traj.snapshots.push_back(std::move(x));
  }
  return traj;
}

StripCheckReport strip_check(const std::string& index_name, std::int64_t p, std::int64_t c,
                             int horizon) {
  if (p < 1 || c < 1) throw std::invalid_argument("strip_check requires integer p, c >= 1");
  StripCheckReport report;
  report.index = index_name;
  report.p = p;
  report.c = c;
  report.horizon = horizon;
  report.exact_line = index_name == "w" || index_name == "wprime";

  DeterministicParams params{Rational(p), Rational(c), Period::year};
  for (int n = 1; n <= horizon; ++n) {
    CitationRecord x = deterministic_record(params, n);
    bool ok = true;
    if (index_name == "h") {
      // pc/(p+c) * n <= h <= pc/(p+c) * (n+1)
      std::int64_t h = hirsch_int(x);
      ok = p * c * n <= (p + c) * h && (p + c) * h <= p * c * (n + 1);
    } else if (index_name == "hprime") {
      // (pc/4) n^2 <= A <= (pc/4)(n+1)^2 with A the max rectangle area.
      std::int64_t a = max_rectangle_area(x);
      ok = p * c * n * n <= 4 * a && 4 * a <= p * c * (n + 1) * (n + 1);
    } else if (index_name == "w") {
      ok = woeginger_int(x) == std::min(p, c) * n;
    } else if (index_name == "wprime") {
      auto sol = wprime_solution(x);
      ok = sol && sol->product == Rational(p * c * n * n);
    } else {
      throw std::invalid_argument("strip_check knows h, hprime, w, wprime; got " + index_name);
    }
    if (!ok) {
      report.holds = false;
      report.first_violation = n;
      return report;
    }
  }
  return report;
}

StripFitReport empirical_strip_fit(const IndexDescriptor& g, std::int64_t p, std::int64_t c,
                                   int horizon) {
  if (horizon < 8) throw std::invalid_argument("empirical_strip_fit needs horizon >= 8");
  DeterministicParams params{Rational(p), Rational(c), Period::year};
  std::vector<double> v(static_cast<std::size_t>(horizon) + 1, 0.0);
  for (int n = 1; n <= horizon; ++n)
    v[static_cast<std::size_t>(n)] = g.evaluate(deterministic_record(params, n)).to_double();

  auto midpoint_gap = [&](int h) {
    int m = (h + 1) / 2;
    return (v[1] + v[static_cast<std::size_t>(2 * m - 1)]) / 2.0 - v[static_cast<std::size_t>(m)];
  };
  StripFitReport fit;
  fit.chord_slope = (v[static_cast<std::size_t>(horizon)] - v[1]) / (horizon - 1);
  fit.width_lower_bound = midpoint_gap(horizon);
  fit.width_half_horizon = midpoint_gap(horizon / 2);
  fit.unbounded = fit.width_lower_bound > 2.0 * std::max(1.0, fit.width_half_horizon);
  return fit;
}

}  // namespace scindex
