#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace editgym {

enum class ErrorCode {
  OutOfRange,
  SelfMalformed,
  Incompatible,
  UnsupportedMetric,
  UnsupportedOp,
  MalformedAction,
  NegativePosition,
  AugmentTooLarge,
  SessionFinished,
  Exhausted,
  MetricTaskMismatch,
  AgentFailure,
  SpawnFailed,
  ProtocolViolation,
  Timeout,
  Io,
  DataFormat,
  Usage,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `index()` carries the offending op or
/// line index when one applies.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

  /// True for failures that originate in an agent or its transport.
  bool is_agent_error() const noexcept;

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace editgym
