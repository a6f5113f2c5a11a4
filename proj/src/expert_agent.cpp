#include "editgym/expert_agent.hpp"

#include "editgym/error.hpp"
#include "editgym/trajectory.hpp"

namespace editgym {

namespace {

std::vector<ActionSeq> script_for(const State& x, const State& y, const TaskSpec& spec) {
  std::vector<ActionSeq> out;
  for (const Step& st : generate_trajectory(x, y, spec).steps) out.push_back(st.action);
  return out;
}

}  // namespace

ExpertAgent::ExpertAgent(const State& x, const State& y, const TaskSpec& spec)
    : script_(script_for(x, y, spec)) {}

ExpertAgent::ExpertAgent(const Split* split) : split_(split) {}

void ExpertAgent::begin_episode(const TaskSpec& spec, std::size_t episode, const State& x) {
  if (!split_) return;
  if (episode >= split_->size())
    throw Error(ErrorCode::AgentFailure, "expert has no sample for episode " + std::to_string(episode));
  const Sample& s = (*split_)[episode];
  if (s.x != x) throw Error(ErrorCode::AgentFailure, "episode input does not match expert sample");
  script_ = script_for(s.x, s.y, spec);
}

ActionSeq ExpertAgent::act(const TaskSpec& spec, const State& /*state*/, int step) {
  if (step >= 0 && static_cast<std::size_t>(step) < script_.size())
    return script_[static_cast<std::size_t>(step)];
  return ActionSeq::done(static_cast<std::size_t>(spec.action_length));
}

ExpertAgent expert_policy(const State& x, const State& y, const TaskSpec& spec) {
  return ExpertAgent(x, y, spec);
}

}  // namespace editgym
