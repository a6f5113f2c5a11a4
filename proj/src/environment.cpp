#include "editgym/environment.hpp"

#include <chrono>

#include "editgym/action_codec.hpp"
#include "editgym/edit_metrics.hpp"
#include "editgym/error.hpp"
#include "editgym/log.hpp"

namespace editgym {

GameSession GameSession::start(const TaskSpec& spec, State x) {
  GameSession s;
  s.spec = spec;
  s.current = std::move(x);
  return s;
}

std::pair<GameSession, StepReport> env_step(const GameSession& session,
                                            const ActionSeq& action) {
  if (session.status != SessionStatus::Running)
    throw Error(ErrorCode::SessionFinished, "env_step after termination");

  GameSession next = session;
  StepReport report;
  ++next.step;

  try {
    auto op = decode_action(action, session.spec);
    if (!op) {
      next.status = SessionStatus::FinishedDone;
      return {std::move(next), report};
    }
    next.current = apply_op(session.current, *op);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::MalformedAction && e.code() != ErrorCode::OutOfRange) throw;
    report.refused = true;
    report.reason = e.what();
    ++next.refused;
  }

  if (next.step >= session.spec.max_steps) next.status = SessionStatus::FinishedLimit;
  return {std::move(next), report};
}

GameOutcome run_game(const TaskSpec& spec, const State& x, Agent& agent,
                     std::size_t episode) {
  using Clock = std::chrono::steady_clock;
  GameOutcome out;
  const auto episode_start = Clock::now();
  GameSession session = GameSession::start(spec, x);

  try {
    agent.begin_episode(spec, episode, x);
    while (session.status == SessionStatus::Running) {
      const auto t0 = Clock::now();
      ActionSeq a = agent.act(spec, session.current, session.step);
      out.per_step_latency.push_back(Clock::now() - t0);
      auto [next, report] = env_step(session, a);
      if (report.refused)
        logger().debug("episode {} step {} refused: {}", episode, session.step, report.reason);
      session = std::move(next);
    }
  } catch (const Error& e) {
    if (!e.is_agent_error()) throw;
    logger().info("episode {} agent failure: {}", episode, e.what());
    out.agent_failed = true;
    session.status = SessionStatus::FinishedLimit;
  }

  out.final_state = session.current;
  out.steps_taken = session.step;
  out.refused_count = session.refused;
  out.terminated_by = session.status == SessionStatus::FinishedDone ? Termination::Done
                                                                    : Termination::StepLimit;
  out.total_latency = Clock::now() - episode_start;
  return out;
}

}  // namespace editgym
