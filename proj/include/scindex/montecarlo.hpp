#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "scindex/growth.hpp"
#include "scindex/indices.hpp"
#include "scindex/rational.hpp"

namespace scindex {

/// Poisson-noise career campaign configuration. p and c are monthly means,
/// kept as exact rationals so the no-noise mode and the 10% uplift stay exact;
/// the samplers use their double values.
struct SimulationConfig {
  Rational p{1, 5};
  Rational c{1, 5};
  int months = 360;   // thirty-year careers
  int careers = 500;
  std::uint64_t seed = 0;
  Rational pair_uplift{1, 10};
  std::vector<std::string> indices{"h", "hprime", "w", "wprime"};
  bool cite_same_month = false;  // citations normally start the month after publication
  bool paired = false;           // researcher B runs with means uplifted by pair_uplift
  bool no_noise = false;         // deterministic monthly model instead of Poisson draws
  bool common_streams = false;   // B reuses A's random stream
  int threads = 0;               // 0 = hardware concurrency, capped by SCINDEX_THREADS

  void validate() const;  // throws std::invalid_argument
};

struct IndexCampaignStats {
  std::string index;
  double mean_career = 0;        // mean of A's final values
  double career_sd_norm = 0;     // SD of final values rescaled to average 100
  double incr_sd_norm = 0;       // pooled monthly-increment SD, normalized by mean/100
  double frac_nonzero_incr = 0;  // exact-value comparison of consecutive months
  // Paired mode: proportions over career pairs; ties use exact equality and a
  // reversal means A's final strictly exceeds B's.
  double ties = 0, reversals = 0, ties_or_reversals = 0;
  std::vector<double> finals_a, finals_b;
};

struct SimulationReport {
  SimulationConfig config;
  std::vector<IndexCampaignStats> per_index;
  // Calibration of the raw Poisson draws (A careers only).
  std::uint64_t paper_draws = 0;
  double paper_draw_mean = 0;
  std::uint64_t cite_draws = 0;
  double cite_draw_mean = 0;
};

/// One full career, deterministic in (config.seed, stream_id); keeps every
/// monthly snapshot. Campaign streams are stream_id = 2 * career for A and
/// 2 * career + 1 for B.
CareerTrajectory simulate_career(const SimulationConfig& config, std::uint64_t stream_id);

/// Runs the campaign (careers in parallel, reduction in career order, so the
/// report is identical for any thread count).
SimulationReport run_campaign(const SimulationConfig& config);

/// (normalized SD of monthly increments, fraction of non-zero increments) for
/// one stored trajectory; the SD is normalized by final value / 100.
std::pair<double, double> increment_stats(const CareerTrajectory& traj,
                                          const std::string& index_name);

/// Thread budget: `requested` (0 = hardware), capped by SCINDEX_THREADS.
int effective_threads(int requested);

}  // namespace scindex
