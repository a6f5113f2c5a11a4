#include "editgym/trajectory.hpp"

#include <algorithm>

#include "editgym/action_codec.hpp"
#include "editgym/edit_metrics.hpp"
#include "editgym/error.hpp"

namespace editgym {

namespace {

State execute(const State& s, const ActionSeq& a, const TaskSpec& spec) {
  auto op = decode_action(a, spec, /*enforce_vocab=*/false);
  return op ? apply_op(s, *op) : s;
}

// First index of s_{t+1} past the region the op edited.
std::size_t edit_end(const EditOp& op) {
  return std::visit(
      [](const auto& o) -> std::size_t {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Delete>)
          return o.pos;
        else if constexpr (std::is_same_v<T, SpanReplace>)
          return o.left + 1;
        else
          return o.pos + 1;
      },
      op);
}

struct AugmentSearch {
  const TaskSpec& spec;
  const std::set<State>& expert_states;
  std::set<State>& shifted;

  void run(const State& s, const std::vector<ActionSeq>& actions) {
    if (actions.size() > 1) {
      const ActionSeq& head = actions.front();
      std::vector<ActionSeq> rest(actions.begin() + 1, actions.end());
      const State next = execute(s, head, spec);
      run(next, rest);
      run(s, rebase_actions(rest, head, s, next, spec));
    } else if (!expert_states.contains(s)) {
      shifted.insert(s);
    }
  }
};

}  // namespace

Trajectory generate_trajectory(const State& x, const State& y, const TaskSpec& spec) {
  Trajectory traj{x, y, {}, Provenance::Expert};
  State s = x;
  for (const EditOp& op : dp_ops(x, y, spec.metric)) {
    ActionSeq a = encode_action(op, spec);
    State next = execute(s, a, spec);
    traj.steps.push_back({std::move(s), std::move(a)});
    s = std::move(next);
  }
  if (s != y)
    throw Error(ErrorCode::Incompatible, "script replay ended at '" + render_state(s) +
                                             "' instead of '" + render_state(y) + "'");
  traj.steps.push_back({std::move(s), ActionSeq::done(spec.action_length)});
  return traj;
}

std::vector<ActionSeq> rebase_actions(const std::vector<ActionSeq>& remaining,
                                      const ActionSeq& skipped, const State& s_t,
                                      const State& s_t1, const TaskSpec& spec) {
  auto op = decode_action(skipped, spec, /*enforce_vocab=*/false);
  if (!op) return remaining;
  const long delta = static_cast<long>(s_t.size()) - static_cast<long>(s_t1.size());
  const auto threshold = static_cast<long>(edit_end(*op));

  std::vector<ActionSeq> out = remaining;
  for (ActionSeq& a : out) {
    if (a.is_done()) continue;
    for (ActionToken& tok : a.tokens) {
      auto* p = std::get_if<PosToken>(&tok);
      if (!p || p->index < threshold) continue;
      const long k = p->index + delta;
      if (k < 0)
        throw Error(ErrorCode::NegativePosition,
                    render_action(a) + " rebased below zero after skipping " +
                        render_action(skipped));
      p->index = static_cast<int>(k);
    }
  }
  return out;
}

std::set<State> augment(const Trajectory& traj, const TaskSpec& spec) {
  if (traj.steps.size() > kMaxAugmentEdits + 1)
    throw Error(ErrorCode::AugmentTooLarge,
                std::to_string(traj.steps.size() - 1) + " edit actions exceed limit of " +
                    std::to_string(kMaxAugmentEdits));
  std::set<State> expert_states;
  std::vector<ActionSeq> actions;
  for (const Step& st : traj.steps) {
    expert_states.insert(st.state);
    actions.push_back(st.action);
  }
  std::set<State> shifted;
  if (traj.steps.empty()) return shifted;
  AugmentSearch{spec, expert_states, shifted}.run(traj.steps.front().state, actions);
  return shifted;
}

std::size_t DemoSet::count(Provenance p) const {
  return static_cast<std::size_t>(std::count_if(
      trajectories.begin(), trajectories.end(),
      [p](const Trajectory& t) { return t.provenance == p; }));
}

std::size_t DemoSet::max_length() const {
  std::size_t best = 0;
  for (const auto& t : trajectories) best = std::max(best, t.length());
  return best;
}

DemoSet make_demoset(const std::vector<std::pair<State, State>>& pairs, const TaskSpec& spec) {
  DemoSet demos;
  demos.trajectories.reserve(pairs.size());
  for (const auto& [x, y] : pairs) demos.trajectories.push_back(generate_trajectory(x, y, spec));
  return demos;
}

DemoSet augment_demoset(const DemoSet& demos, const TaskSpec& spec) {
  DemoSet out = demos;
  for (const Trajectory& t : demos.trajectories) {
    if (t.provenance != Provenance::Expert) continue;
    // std::set iterates in lexicographic order.
    for (const State& s : augment(t, spec)) {
      Trajectory aug = generate_trajectory(s, t.y, spec);
      aug.provenance = Provenance::Augmented;
      out.trajectories.push_back(std::move(aug));
    }
  }
  return out;
}

}  // namespace editgym
