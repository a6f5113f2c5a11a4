#include "editgym/error.hpp"

namespace editgym {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::SelfMalformed: return "SELF_MALFORMED";
    case ErrorCode::Incompatible: return "INCOMPATIBLE";
    case ErrorCode::UnsupportedMetric: return "UNSUPPORTED_METRIC";
    case ErrorCode::UnsupportedOp: return "UNSUPPORTED_OP";
    case ErrorCode::MalformedAction: return "MALFORMED_ACTION";
    case ErrorCode::NegativePosition: return "NEGATIVE_POSITION";
    case ErrorCode::AugmentTooLarge: return "AUGMENT_TOO_LARGE";
    case ErrorCode::SessionFinished: return "SESSION_FINISHED";
    case ErrorCode::Exhausted: return "EXHAUSTED";
    case ErrorCode::MetricTaskMismatch: return "METRIC_TASK_MISMATCH";
    case ErrorCode::AgentFailure: return "AGENT_FAILURE";
    case ErrorCode::SpawnFailed: return "SPAWN_FAILED";
    case ErrorCode::ProtocolViolation: return "PROTOCOL_VIOLATION";
    case ErrorCode::Timeout: return "TIMEOUT";
    case ErrorCode::Io: return "IO";
    case ErrorCode::DataFormat: return "DATA_FORMAT";
    case ErrorCode::Usage: return "USAGE";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> index)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      index_(index) {}

bool Error::is_agent_error() const noexcept {
  switch (code_) {
    case ErrorCode::AgentFailure:
    case ErrorCode::SpawnFailed:
    case ErrorCode::ProtocolViolation:
    case ErrorCode::Timeout:
      return true;
    default:
      return false;
  }
}

}  // namespace editgym
