#pragma once

#include <chrono>
#include <string>
#include <sys/types.h>

#include <nlohmann/json.hpp>

#include "editgym/agent.hpp"

namespace editgym {

/// Child process speaking the line protocol on its stdin/stdout.
///
/// The command runs under /bin/sh -c. A failed episode (timeout, bad line,
/// child exit) kills the child; the next begin_episode respawns it.
class ExternalAgent final : public Agent {
 public:
  ExternalAgent(std::string command, nlohmann::json hello_manifest,
                std::chrono::milliseconds timeout = std::chrono::seconds(30));
  ~ExternalAgent() override;

  ExternalAgent(const ExternalAgent&) = delete;
  ExternalAgent& operator=(const ExternalAgent&) = delete;

  void begin_episode(const TaskSpec& spec, std::size_t episode,
                     const State& x) override;
  ActionSeq act(const TaskSpec& spec, const State& state, int step) override;

 private:
  void spawn();
  void kill_child();
  void send_line(const std::string& line);
  std::string read_line();
  std::string exchange(const std::string& request);

  std::string command_;
  nlohmann::json hello_;
  std::chrono::milliseconds timeout_;
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
  bool broken_ = false;
};

}  // namespace editgym
