#pragma once

// Hand-rolled generators for property-style tests.

#include <cstdint>
#include <string>
#include <vector>

#include "infermeter/model.hpp"
#include "infermeter/rng.hpp"

namespace generators {

struct TimelineOptions {
  std::size_t min_events = 1;
  std::size_t max_events = 300;
  bool allow_bursts = true;
  double stall_probability = 0.3;  // chance of one injected long stall
};

// Finished timeline with random submit offset, random pacing, optional
// multi-token burst events, and an optional injected stall.
inline infermeter::TokenTimeline random_timeline(infermeter::Rng& rng,
                                                 const TimelineOptions& opt = {}) {
  infermeter::TokenTimeline t;
  t.request_id = "gen";
  t.submit_s = rng.uniform(0.0, 20.0);
  t.finished = true;
  t.finish_reason = infermeter::FinishReason::length;

  const std::size_t events =
      opt.min_events + static_cast<std::size_t>(rng.below(opt.max_events - opt.min_events + 1));
  const double ttft = rng.uniform(0.005, 2.0);
  const double gap_scale = rng.uniform(0.002, 0.2);
  const bool inject_stall = rng.uniform01() < opt.stall_probability && events > 2;
  const std::size_t stall_at = inject_stall ? 1 + rng.below(events - 1) : events;

  double now = t.submit_s + ttft;
  for (std::size_t i = 0; i < events; ++i) {
    if (i > 0) {
      double gap = rng.exponential(1.0 / gap_scale);
      if (i == stall_at) gap += rng.uniform(10.0, 80.0) * gap_scale;
      now += gap;
    }
    t.token_times_s.push_back(now);
    std::int64_t k = 1;
    if (opt.allow_bursts && rng.uniform01() < 0.25) k += static_cast<std::int64_t>(rng.below(4));
    t.tokens_per_event.push_back(k);
  }
  return t;
}

// Evenly paced timeline: first token at submit + ttft, then fixed gaps.
inline infermeter::TokenTimeline paced_timeline(const std::string& id, double submit, double ttft,
                                                double gap, std::size_t tokens) {
  infermeter::TokenTimeline t;
  t.request_id = id;
  t.submit_s = submit;
  t.finished = true;
  t.finish_reason = infermeter::FinishReason::length;
  double now = submit + ttft;
  for (std::size_t i = 0; i < tokens; ++i) {
    if (i > 0) now += gap;
    t.token_times_s.push_back(now);
    t.tokens_per_event.push_back(1);
  }
  return t;
}

}  // namespace generators
