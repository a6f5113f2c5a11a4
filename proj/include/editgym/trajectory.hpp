#pragma once

#include <set>
#include <vector>

#include "editgym/core_types.hpp"

namespace editgym {

/// Trajectory Generation: DP script replayed through the environment,
/// followed by the (goal, all-DONE) pair.
Trajectory generate_trajectory(const State& x, const State& y,
                               const TaskSpec& spec);

/// Re-expresses `remaining` after `skipped` was not executed. s_t is the state
/// the skipped action applied to and s_t1 the state it would have produced.
/// Positions at or after the end of the skipped edit shift by
/// |s_t| - |s_t1|. Throws Error{NegativePosition}.
std::vector<ActionSeq> rebase_actions(const std::vector<ActionSeq>& remaining,
                                      const ActionSeq& skipped, const State& s_t,
                                      const State& s_t1, const TaskSpec& spec);

/// Largest number of edit actions augment() accepts (2^T leaves).
inline constexpr std::size_t kMaxAugmentEdits = 20;

/// Trajectory Augmentation: every execute/skip combination of the expert
/// actions, keeping resulting states that are not on the expert path.
/// Throws Error{AugmentTooLarge} above kMaxAugmentEdits edit actions.
std::set<State> augment(const Trajectory& traj, const TaskSpec& spec);

struct DemoSet {
  std::vector<Trajectory> trajectories;

  std::size_t count(Provenance p) const;
  std::size_t max_length() const;
};

DemoSet make_demoset(const std::vector<std::pair<State, State>>& pairs,
                     const TaskSpec& spec);

/// Appends one AUGMENTED trajectory per shifted state of each expert
/// trajectory, in source order, shifted states sorted.
DemoSet augment_demoset(const DemoSet& demos, const TaskSpec& spec);

}  // namespace editgym
