#include "infermeter/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "infermeter/errors.hpp"

namespace infermeter {

DeadlineSpec make_deadline_spec(double prefill_deadline_s, double decode_deadline_s) {
  if (!(prefill_deadline_s > 0.0) || !std::isfinite(prefill_deadline_s))
    throw Error("prefill deadline must be strictly positive and finite");
  if (!(decode_deadline_s > 0.0) || !std::isfinite(decode_deadline_s))
    throw Error("decode deadline must be strictly positive and finite");
  return DeadlineSpec{prefill_deadline_s, decode_deadline_s};
}

FluidityResult fluidity_of_arrivals(std::span<const double> arrivals, const DeadlineSpec& d) {
  FluidityResult r;
  double deadline = d.prefill_deadline_s;
  const double dd = d.decode_deadline_s;
  for (double a : arrivals) {
    if (a <= deadline) {
      ++r.met;
      deadline += dd;
    } else {
      // Every deadline interval elapsed during the stall counts as a miss,
      // then subsequent deadlines restart from the late arrival.
      r.missed += static_cast<std::int64_t>(std::floor((a - deadline) / dd)) + 1;
      deadline = a + dd;
    }
  }
  const std::int64_t total = r.met + r.missed;
  r.fluidity = total > 0 ? static_cast<double>(r.met) / static_cast<double>(total) : 0.0;
  return r;
}

FluidityResult fluidity_index(const TokenTimeline& t, const DeadlineSpec& d) {
  validate_timeline(t);
  if (!t.finished) throw UnfinishedTimeline("fluidity requires a finished timeline");
  const auto arrivals = t.per_token_arrivals();
  if (arrivals.empty()) throw ZeroTokens("fluidity requires at least one token");
  return fluidity_of_arrivals(arrivals, d);
}

RequestMetrics compute_request_metrics(const TokenTimeline& t, const RequestSpec& spec,
                                       const DeadlineSpec& d) {
  validate_timeline(t);
  if (!t.finished) throw UnfinishedTimeline("metrics require a finished timeline: " + t.request_id);
  const auto arrivals = t.per_token_arrivals();
  if (arrivals.empty()) throw ZeroTokens("metrics require at least one token: " + t.request_id);
  (void)spec;

  RequestMetrics m;
  m.generated_tokens = static_cast<std::int64_t>(arrivals.size());
  m.ttft_s = t.token_times_s.front() - t.submit_s;
  m.ttlt_s = t.token_times_s.back() - t.submit_s;
  if (t.schedule_s) {
    m.scheduling_delay_s = *t.schedule_s - t.submit_s;
    m.prefill_time_s = t.token_times_s.front() - *t.schedule_s;
  }
  m.decode_time_s = t.token_times_s.back() - t.token_times_s.front();

  // A single event carries no pacing information: empty TBT, absent TPOT.
  if (t.token_times_s.size() > 1) {
    m.tbt_s.reserve(arrivals.size() - 1);
    for (std::size_t i = 1; i < arrivals.size(); ++i)
      m.tbt_s.push_back(arrivals[i] - arrivals[i - 1]);
    m.tpot_s = m.decode_time_s / static_cast<double>(arrivals.size() - 1);
  }

  m.normalized_latency_s_per_token = m.ttlt_s / static_cast<double>(arrivals.size());

  const FluidityResult f = fluidity_of_arrivals(arrivals, d);
  m.fluidity_index = f.fluidity;
  m.deadlines_met = f.met;
  m.deadlines_missed = f.missed;
  return m;
}

double nearest_rank(std::span<const double> sorted_values, double percentile) {
  const auto n = static_cast<double>(sorted_values.size());
  auto rank = static_cast<std::size_t>(std::ceil(percentile / 100.0 * n));
  rank = std::clamp<std::size_t>(rank, 1, sorted_values.size());
  return sorted_values[rank - 1];
}

DistributionSummary summarize(std::span<const double> values,
                              std::span<const double> percentiles, bool keep_cdf) {
  if (values.empty()) throw EmptySample("summarize requires a non-empty sample");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  DistributionSummary s;
  s.count = sorted.size();
  s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(s.count);
  s.min = sorted.front();
  s.max = sorted.back();
  for (double p : percentiles) s.percentiles[p] = nearest_rank(sorted, p);
  if (keep_cdf) s.cdf_points = std::move(sorted);
  return s;
}

}  // namespace infermeter
