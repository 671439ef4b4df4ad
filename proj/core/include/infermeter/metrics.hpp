#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "infermeter/model.hpp"

namespace infermeter {

// Fluidity targets: per-request prefill deadline D_p and the inter-token
// deadline D_d. Both strictly positive and finite.
struct DeadlineSpec {
  double prefill_deadline_s = 0.0;   // D_p
  double decode_deadline_s = 0.0;    // D_d
};

DeadlineSpec make_deadline_spec(double prefill_deadline_s, double decode_deadline_s);

struct FluidityResult {
  double fluidity = 0.0;  // met / (met + missed), in [0, 1]
  std::int64_t met = 0;
  std::int64_t missed = 0;
};

// Per-request scalars and series derived from one finished timeline.
//
// TPOT uses the decode time after the first token divided by the remaining
// tokens: (last_token - first_token) / (N_d - 1). That makes TPOT exactly
// the mean of the TBT series, so averaging-masks-stalls holds as an
// algebraic identity. TPOT is absent (not zero) for single-event timelines.
struct RequestMetrics {
  double ttft_s = 0.0;
  double ttlt_s = 0.0;
  std::optional<double> scheduling_delay_s;  // T_s, simulator only
  std::optional<double> prefill_time_s;      // T_p, needs schedule boundary
  double decode_time_s = 0.0;                // T_d = last_token - first_token
  std::vector<double> tbt_s;                 // per-token gaps, bursts expanded
  std::optional<double> tpot_s;
  double normalized_latency_s_per_token = 0.0;  // ttlt / N_d
  double fluidity_index = 0.0;
  std::int64_t deadlines_met = 0;
  std::int64_t deadlines_missed = 0;
  std::int64_t generated_tokens = 0;
};

struct DistributionSummary {
  std::size_t count = 0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::map<double, double> percentiles;       // requested percentile -> value
  std::optional<std::vector<double>> cdf_points;  // full sorted sample
};

// All §-catalog metrics from one validated, finished timeline.
// Throws UnfinishedTimeline / ZeroTokens.
RequestMetrics compute_request_metrics(const TokenTimeline& t, const RequestSpec& spec,
                                       const DeadlineSpec& d);

// Deadline automaton over per-token arrivals (bursts expanded, repeated
// timestamps allowed; arrivals relative to submit):
//
//   deadline <- D_p
//   for each arrival a:
//     a <= deadline : met, deadline += D_d         (early arrival banks slack)
//     a >  deadline : missed += floor((a - deadline)/D_d) + 1,
//                     deadline <- a + D_d          (reset after the stall)
//
// A stall is charged one miss per deadline interval it spans, not one per
// late token.
FluidityResult fluidity_index(const TokenTimeline& t, const DeadlineSpec& d);

// Same automaton over pre-expanded relative arrival times. Fast path for
// re-evaluating stored timelines at many candidate deadlines.
FluidityResult fluidity_of_arrivals(std::span<const double> arrivals, const DeadlineSpec& d);

// Nearest-rank percentiles on the sorted sample: index = ceil(p/100 * n),
// 1-based, clamped to [1, n]. No interpolation. Throws EmptySample.
DistributionSummary summarize(std::span<const double> values,
                              std::span<const double> percentiles, bool keep_cdf);

double nearest_rank(std::span<const double> sorted_values, double percentile);

}  // namespace infermeter
