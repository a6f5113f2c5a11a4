#pragma once

#include <vector>

#include "editgym/agent.hpp"
#include "editgym/benchmark_gen.hpp"

namespace editgym {

/// Replays the TG action list of the current episode, then all-DONE.
class ExpertAgent final : public Agent {
 public:
  ExpertAgent() = default;
  /// Script for a single (x, y) pair; begin_episode keeps it.
  ExpertAgent(const State& x, const State& y, const TaskSpec& spec);
  /// Episode i replays the TG script of split[i].
  explicit ExpertAgent(const Split* split);

  void begin_episode(const TaskSpec& spec, std::size_t episode,
                     const State& x) override;
  ActionSeq act(const TaskSpec& spec, const State& state, int step) override;

  const std::vector<ActionSeq>& script() const { return script_; }

 private:
  const Split* split_ = nullptr;
  std::vector<ActionSeq> script_;
};

/// expert_policy(x, y, spec): agent whose episode replays TG(x, y).
ExpertAgent expert_policy(const State& x, const State& y, const TaskSpec& spec);

}  // namespace editgym
