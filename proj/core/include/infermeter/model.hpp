#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace infermeter {

// All timestamps are seconds (double) relative to run start; microsecond
// precision is the documented floor. Types in this header are immutable
// after construction and safe to share between threads.

enum class FinishReason { length, stop, error };

std::string to_string(FinishReason r);
FinishReason finish_reason_from_string(const std::string& s);

// One inference request: when it arrives and how many tokens it carries.
struct RequestSpec {
  std::string id;
  double arrival_s = 0.0;
  std::int64_t prompt_tokens = 0;  // N_p
  std::int64_t decode_tokens = 0;  // N_d, target output length
  std::optional<std::string> prompt_text;  // live mode only
};

// Observed per-request timestamps. schedule_s is present only for
// simulator-produced timelines: a live client cannot observe the scheduler
// boundary, so the scheduling delay is reported as unknown there, never as
// zero. A token event may carry more than one token (speculative bursts,
// SSE chunks with usage deltas).
struct TokenTimeline {
  std::string request_id;
  double submit_s = 0.0;
  std::optional<double> schedule_s;
  std::vector<double> token_times_s;
  std::vector<std::int64_t> tokens_per_event;
  bool finished = false;
  FinishReason finish_reason = FinishReason::error;

  std::int64_t total_tokens() const;
  // Burst expansion: an event carrying k tokens becomes k per-token arrivals
  // at the same timestamp. Times are relative to submit_s.
  std::vector<double> per_token_arrivals() const;
};

// A complete run: workload, observed timelines, and everything needed to
// re-derive every reported number offline.
struct RunRecord {
  std::string config_fingerprint;
  std::uint64_t seed = 0;
  std::vector<RequestSpec> requests;
  std::vector<TokenTimeline> timelines;
  // Aggregation window: requests completing before warmup_cutoff_s or
  // arriving after cooldown_cutoff_s are excluded from aggregates but stay
  // in the record. Defaults keep every request.
  double warmup_cutoff_s = 0.0;
  double cooldown_cutoff_s = std::numeric_limits<double>::max();
};

// Returns t unchanged if all invariants hold, else throws
// NonMonotonicTimestamps / EmptyTimeline / NegativeTime.
const TokenTimeline& validate_timeline(const TokenTimeline& t);

// Checks cross-references (each timeline matches exactly one request) and
// cutoff ordering, then validates every timeline.
void validate_run_record(const RunRecord& run);

// Stable FNV-1a fingerprint of the workload (ids, arrivals, token counts).
std::string workload_fingerprint(const std::vector<RequestSpec>& requests);

// Stable fingerprint of an arbitrary config string (canonical JSON in).
std::string fingerprint_string(const std::string& payload);

// --- persistence (schemas documented in README) ---
std::string to_json_string(const RunRecord& run, int indent = -1);
RunRecord run_record_from_json(const std::string& json_text);
void save_run_record(const RunRecord& run, const std::string& path);
RunRecord load_run_record(const std::string& path);

// CSV rows: request_id,event_index,time_s,tokens
std::string token_events_csv(const RunRecord& run);

}  // namespace infermeter
