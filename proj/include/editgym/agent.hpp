#pragma once

#include <cstddef>
#include <functional>
#include <memory>

#include "editgym/core_types.hpp"

namespace editgym {

/// A policy playing editing games. One instance serves one episode stream.
class Agent {
 public:
  virtual ~Agent() = default;

  /// Called before every episode.
  virtual void begin_episode(const TaskSpec& /*spec*/, std::size_t /*episode*/,
                             const State& /*x*/) {}

  /// One action for the current state. Throwing Error aborts the episode.
  virtual ActionSeq act(const TaskSpec& spec, const State& state, int step) = 0;
};

using AgentFactory = std::function<std::unique_ptr<Agent>()>;

}  // namespace editgym
