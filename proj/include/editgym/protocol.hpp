#pragma once

// Line-delimited agent protocol. One JSON object per LF-terminated line.
// Requests carry "type" in {hello, reset, act, shutdown}; responses are
// {"ok": true} for hello/reset and {"action": [...]} for act. Unknown fields
// are ignored in both directions.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "editgym/core_types.hpp"

namespace editgym::protocol {

struct Hello {
  nlohmann::json manifest;  // task, action_length, pos_vocab_bound, vocabularies
  friend bool operator==(const Hello&, const Hello&) = default;
};
struct Reset {
  std::string task;
  std::size_t episode = 0;
  std::vector<Token> state;  // initial state of the episode
  friend bool operator==(const Reset&, const Reset&) = default;
};
struct Act {
  std::vector<Token> state;
  int step = 0;
  friend bool operator==(const Act&, const Act&) = default;
};
struct Shutdown {
  friend bool operator==(const Shutdown&, const Shutdown&) = default;
};

using Request = std::variant<Hello, Reset, Act, Shutdown>;

struct Response {
  std::optional<bool> ok;
  std::optional<std::vector<std::string>> action;
  std::optional<std::string> error;
  friend bool operator==(const Response&, const Response&) = default;
};

/// Single line, no trailing newline.
std::string serialize(const Request& r);
std::string serialize(const Response& r);

/// Throw Error{ProtocolViolation} with the offending line.
Request parse_request(std::string_view line);
Response parse_response(std::string_view line);

/// Hello payload describing a task to an agent.
nlohmann::json hello_manifest(const TaskSpec& spec,
                              const std::vector<Token>& vocab_states,
                              const std::vector<std::string>& vocab_actions);

}  // namespace editgym::protocol
