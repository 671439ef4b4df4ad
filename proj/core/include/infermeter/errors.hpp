#pragma once

#include <stdexcept>
#include <string>

namespace infermeter {

// Base class for every error the library raises on contract violations.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- timeline validation ---
struct NonMonotonicTimestamps final : Error { using Error::Error; };
struct EmptyTimeline final : Error { using Error::Error; };
struct NegativeTime final : Error { using Error::Error; };

// --- metrics ---
struct UnfinishedTimeline final : Error { using Error::Error; };
struct ZeroTokens final : Error { using Error::Error; };
struct EmptySample final : Error { using Error::Error; };

// --- workload ---
struct ParseError final : Error {
  ParseError(std::size_t line_number, const std::string& what_arg)
      : Error("parse error at line " + std::to_string(line_number) + ": " + what_arg),
        line(line_number) {}
  std::size_t line;
};
struct EmptyAfterFilter final : Error { using Error::Error; };
struct InfeasibleProfile final : Error { using Error::Error; };
struct MissingTimestamps final : Error { using Error::Error; };

// --- simulator ---
struct ConfigMismatch final : Error { using Error::Error; };
struct WorkloadEmpty final : Error { using Error::Error; };
struct BindError final : Error { using Error::Error; };

// --- client ---
struct ConnectError final : Error { using Error::Error; };
struct Timeout final : Error {
  Timeout(const std::string& request, const std::string& what_arg)
      : Error("request " + request + " timed out: " + what_arg), request_id(request) {}
  std::string request_id;
};
struct ProtocolError final : Error { using Error::Error; };
struct SaturatedGenerator final : Error { using Error::Error; };

// --- search ---
struct InfeasibleAtFloor final : Error { using Error::Error; };
struct InfeasibleAtCeiling final : Error { using Error::Error; };

// --- deadline model ---
struct InsufficientPoints final : Error { using Error::Error; };
struct NegativeCurvature final : Error { using Error::Error; };

// --- report ---
struct NoFinishedRequests final : Error { using Error::Error; };
struct WorkloadMismatch final : Error { using Error::Error; };
struct IoError final : Error { using Error::Error; };

}  // namespace infermeter
