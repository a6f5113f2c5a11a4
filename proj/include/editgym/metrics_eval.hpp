#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "editgym/agent.hpp"
#include "editgym/benchmark_gen.hpp"
#include "editgym/core_types.hpp"

namespace editgym {

/// Positional matches over max(|pred|, |gold|); two empty states score 1.
double token_accuracy(const State& pred, const State& gold);

struct EvalReport {
  double token_acc = 0.0;
  double seq_acc = 0.0;
  double eq_acc = 0.0;
  std::size_t n_samples = 0;
  double mean_step_latency_ms = 0.0;
  double median_step_latency_ms = 0.0;
  double mean_episode_latency_ms = 0.0;
  double refusal_rate = 0.0;  // refused steps / all steps
  std::size_t agent_failures = 0;
  std::map<std::string, std::size_t> terminations;  // "done", "step_limit"
};

/// Pure reduction of stored outcomes against gold targets.
EvalReport summarize(const std::vector<GameOutcome>& outcomes,
                     const std::vector<State>& gold);

/// Plays every sample. Each of `jobs` workers owns one agent from `factory`;
/// outcomes are reduced in sample order.
EvalReport evaluate_split(const TaskSpec& spec, const Split& split,
                          const AgentFactory& factory, int jobs = 1,
                          std::vector<GameOutcome>* outcomes = nullptr);

void print_report(std::ostream& os, const EvalReport& r);

}  // namespace editgym
