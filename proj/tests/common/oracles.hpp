#pragma once

// Independent brute-force oracles used to freeze expected test values.
// These must stay independent of the library implementation paths they
// check: no calls into infermeter::fluidity_* or infermeter::summarize.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace oracles {

struct FluidityCount {
  std::int64_t met = 0;
  std::int64_t missed = 0;
  double fluidity() const {
    const std::int64_t total = met + missed;
    return total > 0 ? static_cast<double>(met) / static_cast<double>(total) : 0.0;
  }
};

// Naive deadline replay: walks the deadline list one entry at a time.
// A token arriving on time consumes its deadline; a late token consumes
// every deadline that elapsed before (or exactly at) its arrival, then the
// list restarts from the arrival.
inline FluidityCount fluidity_bruteforce(const std::vector<double>& arrivals, double dp,
                                         double dd) {
  FluidityCount c;
  double deadline = dp;
  for (double a : arrivals) {
    if (a <= deadline) {
      ++c.met;
      deadline += dd;
    } else {
      while (deadline <= a) {
        ++c.missed;
        deadline += dd;
      }
      deadline = a + dd;
    }
  }
  return c;
}

// Nearest-rank percentile straight from the order-statistic definition.
inline double percentile_bruteforce(std::vector<double> values, double p) {
  std::sort(values.begin(), values.end());
  double idx = std::ceil(p / 100.0 * static_cast<double>(values.size()));
  if (idx < 1.0) idx = 1.0;
  if (idx > static_cast<double>(values.size())) idx = static_cast<double>(values.size());
  return values[static_cast<std::size_t>(idx) - 1];
}

// Expected accepted-draft count per verify step: sum of p^i for i = 1..k.
inline double geometric_acceptance_sum(int k, double p) {
  double sum = 0.0;
  double term = 1.0;
  for (int i = 1; i <= k; ++i) {
    term *= p;
    sum += term;
  }
  return sum;
}

}  // namespace oracles
