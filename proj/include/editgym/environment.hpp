#pragma once

#include <string>
#include <utility>

#include "editgym/agent.hpp"
#include "editgym/core_types.hpp"

namespace editgym {

enum class SessionStatus { Running, FinishedDone, FinishedLimit };

struct GameSession {
  TaskSpec spec;
  State current;
  int step = 0;
  int refused = 0;
  SessionStatus status = SessionStatus::Running;

  static GameSession start(const TaskSpec& spec, State x);
};

struct StepReport {
  bool refused = false;
  std::string reason;  // empty unless refused
};

/// One environment transition. Invalid or out-of-range actions are refused:
/// the state is kept and the step still counts toward max_steps.
/// Throws Error{SessionFinished} when the session is no longer running.
std::pair<GameSession, StepReport> env_step(const GameSession& session,
                                            const ActionSeq& action);

/// Plays one episode to termination. Agent errors end the episode as
/// FINISHED_LIMIT with the last state and `agent_failed` set.
GameOutcome run_game(const TaskSpec& spec, const State& x, Agent& agent,
                     std::size_t episode = 0);

}  // namespace editgym
