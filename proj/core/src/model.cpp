#include "infermeter/model.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "infermeter/errors.hpp"

namespace infermeter {

using nlohmann::json;

std::string to_string(FinishReason r) {
  switch (r) {
    case FinishReason::length: return "length";
    case FinishReason::stop: return "stop";
    case FinishReason::error: return "error";
  }
  return "error";
}

FinishReason finish_reason_from_string(const std::string& s) {
  if (s == "length") return FinishReason::length;
  if (s == "stop") return FinishReason::stop;
  if (s == "error") return FinishReason::error;
  throw Error("unknown finish_reason: " + s);
}

std::int64_t TokenTimeline::total_tokens() const {
  std::int64_t n = 0;
  for (std::int64_t k : tokens_per_event) n += k;
  return n;
}

std::vector<double> TokenTimeline::per_token_arrivals() const {
  std::vector<double> arrivals;
  arrivals.reserve(static_cast<std::size_t>(total_tokens()));
  for (std::size_t i = 0; i < token_times_s.size(); ++i) {
    const std::int64_t k = i < tokens_per_event.size() ? tokens_per_event[i] : 1;
    for (std::int64_t j = 0; j < k; ++j) arrivals.push_back(token_times_s[i] - submit_s);
  }
  return arrivals;
}

const TokenTimeline& validate_timeline(const TokenTimeline& t) {
  if (!std::isfinite(t.submit_s) || t.submit_s < 0.0)
    throw NegativeTime("timeline " + t.request_id + ": submit time must be finite and >= 0");
  if (t.finished && t.token_times_s.empty())
    throw EmptyTimeline("timeline " + t.request_id + ": finished with zero token events");
  if (t.tokens_per_event.size() != t.token_times_s.size())
    throw Error("timeline " + t.request_id + ": tokens_per_event length mismatch");
  double prev = t.submit_s;
  for (std::size_t i = 0; i < t.token_times_s.size(); ++i) {
    const double ts = t.token_times_s[i];
    if (!std::isfinite(ts) || ts < 0.0)
      throw NegativeTime("timeline " + t.request_id + ": token time must be finite and >= 0");
    if (ts < prev)
      throw NonMonotonicTimestamps("timeline " + t.request_id + ": token_times[" +
                                   std::to_string(i) + "] decreases");
    if (t.tokens_per_event[i] < 1)
      throw Error("timeline " + t.request_id + ": tokens_per_event must be >= 1");
    prev = ts;
  }
  if (t.schedule_s) {
    const double s = *t.schedule_s;
    if (!std::isfinite(s) || s < 0.0)
      throw NegativeTime("timeline " + t.request_id + ": schedule time must be finite and >= 0");
    if (s < t.submit_s)
      throw NonMonotonicTimestamps("timeline " + t.request_id + ": schedule before submit");
    if (!t.token_times_s.empty() && t.token_times_s.front() < s)
      throw NonMonotonicTimestamps("timeline " + t.request_id + ": first token before schedule");
  }
  return t;
}

void validate_run_record(const RunRecord& run) {
  if (run.warmup_cutoff_s > run.cooldown_cutoff_s)
    throw Error("run record: warmup cutoff exceeds cooldown cutoff");
  std::unordered_set<std::string> ids;
  for (const auto& r : run.requests) {
    if (r.prompt_tokens < 1 || r.decode_tokens < 1)
      throw Error("request " + r.id + ": token counts must be >= 1");
    if (!std::isfinite(r.arrival_s) || r.arrival_s < 0.0)
      throw NegativeTime("request " + r.id + ": arrival must be finite and >= 0");
    if (!ids.insert(r.id).second) throw Error("duplicate request id: " + r.id);
  }
  std::unordered_set<std::string> seen;
  for (const auto& t : run.timelines) {
    if (!ids.count(t.request_id))
      throw Error("timeline " + t.request_id + " has no matching request");
    if (!seen.insert(t.request_id).second)
      throw Error("timeline " + t.request_id + " appears more than once");
    validate_timeline(t);
  }
}

namespace {

std::uint64_t fnv1a_update(std::uint64_t h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf);
}

}  // namespace

std::string workload_fingerprint(const std::vector<RequestSpec>& requests) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& r : requests) {
    h = fnv1a_update(h, r.id.data(), r.id.size());
    h = fnv1a_update(h, &r.arrival_s, sizeof(r.arrival_s));
    h = fnv1a_update(h, &r.prompt_tokens, sizeof(r.prompt_tokens));
    h = fnv1a_update(h, &r.decode_tokens, sizeof(r.decode_tokens));
  }
  return hex64(h);
}

std::string fingerprint_string(const std::string& payload) {
  return hex64(fnv1a_update(0xcbf29ce484222325ULL, payload.data(), payload.size()));
}

namespace {

json timeline_to_json(const TokenTimeline& t) {
  json j{{"request_id", t.request_id},
         {"submit_s", t.submit_s},
         {"token_times_s", t.token_times_s},
         {"tokens_per_event", t.tokens_per_event},
         {"finished", t.finished},
         {"finish_reason", to_string(t.finish_reason)}};
  if (t.schedule_s) j["schedule_s"] = *t.schedule_s;
  return j;
}

TokenTimeline timeline_from_json(const json& j) {
  TokenTimeline t;
  t.request_id = j.at("request_id").get<std::string>();
  t.submit_s = j.at("submit_s").get<double>();
  if (j.contains("schedule_s")) t.schedule_s = j.at("schedule_s").get<double>();
  t.token_times_s = j.at("token_times_s").get<std::vector<double>>();
  t.tokens_per_event = j.at("tokens_per_event").get<std::vector<std::int64_t>>();
  t.finished = j.at("finished").get<bool>();
  t.finish_reason = finish_reason_from_string(j.at("finish_reason").get<std::string>());
  return t;
}

json request_to_json(const RequestSpec& r) {
  json j{{"id", r.id},
         {"arrival_s", r.arrival_s},
         {"prompt_tokens", r.prompt_tokens},
         {"decode_tokens", r.decode_tokens}};
  if (r.prompt_text) j["prompt_text"] = *r.prompt_text;
  return j;
}

RequestSpec request_from_json(const json& j) {
  RequestSpec r;
  r.id = j.at("id").get<std::string>();
  r.arrival_s = j.at("arrival_s").get<double>();
  r.prompt_tokens = j.at("prompt_tokens").get<std::int64_t>();
  r.decode_tokens = j.at("decode_tokens").get<std::int64_t>();
  if (j.contains("prompt_text")) r.prompt_text = j.at("prompt_text").get<std::string>();
  return r;
}

}  // namespace

std::string to_json_string(const RunRecord& run, int indent) {
  json j;
  j["schema_version"] = 1;
  j["config_fingerprint"] = run.config_fingerprint;
  j["seed"] = run.seed;
  j["warmup_cutoff_s"] = run.warmup_cutoff_s;
  j["cooldown_cutoff_s"] = run.cooldown_cutoff_s;
  j["requests"] = json::array();
  for (const auto& r : run.requests) j["requests"].push_back(request_to_json(r));
  j["timelines"] = json::array();
  for (const auto& t : run.timelines) j["timelines"].push_back(timeline_to_json(t));
  return j.dump(indent);
}

RunRecord run_record_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(std::string("run record parse failure: ") + e.what());
  }
  RunRecord run;
  run.config_fingerprint = j.at("config_fingerprint").get<std::string>();
  run.seed = j.at("seed").get<std::uint64_t>();
  run.warmup_cutoff_s = j.at("warmup_cutoff_s").get<double>();
  run.cooldown_cutoff_s = j.at("cooldown_cutoff_s").get<double>();
  for (const auto& rj : j.at("requests")) run.requests.push_back(request_from_json(rj));
  for (const auto& tj : j.at("timelines")) run.timelines.push_back(timeline_from_json(tj));
  return run;
}

void save_run_record(const RunRecord& run, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for write: " + path);
  out << to_json_string(run, 1) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

RunRecord load_run_record(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return run_record_from_json(buf.str());
}

std::string token_events_csv(const RunRecord& run) {
  std::ostringstream out;
  out << "request_id,event_index,time_s,tokens\n";
  char num[64];
  for (const auto& t : run.timelines) {
    for (std::size_t i = 0; i < t.token_times_s.size(); ++i) {
      std::snprintf(num, sizeof(num), "%.9f", t.token_times_s[i]);
      out << t.request_id << ',' << i << ',' << num << ',' << t.tokens_per_event[i] << '\n';
    }
  }
  return out.str();
}

}  // namespace infermeter
