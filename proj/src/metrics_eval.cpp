#include "editgym/metrics_eval.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <thread>

#include "editgym/environment.hpp"
#include "editgym/equation.hpp"
#include "editgym/error.hpp"

namespace editgym {

double token_accuracy(const State& pred, const State& gold) {
  const std::size_t denom = std::max(pred.size(), gold.size());
  if (denom == 0) return 1.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < std::min(pred.size(), gold.size()); ++i)
    if (pred[i] == gold[i]) ++hits;
  return static_cast<double>(hits) / static_cast<double>(denom);
}

EvalReport summarize(const std::vector<GameOutcome>& outcomes, const std::vector<State>& gold) {
  if (outcomes.size() != gold.size())
    throw Error(ErrorCode::Usage, "outcome/gold count mismatch");
  EvalReport r;
  r.n_samples = outcomes.size();
  r.terminations = {{"done", 0}, {"step_limit", 0}};
  if (outcomes.empty()) return r;

  // Summation in sample order keeps printed digits reproducible.
  double tok = 0.0, episode_ms = 0.0;
  std::size_t seq = 0, eq = 0, steps = 0, refused = 0;
  std::vector<double> step_ms;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const GameOutcome& o = outcomes[i];
    tok += token_accuracy(o.final_state, gold[i]);
    if (o.final_state == gold[i]) ++seq;
    if (check_equation(o.final_state) == EquationVerdict::Valid) ++eq;
    steps += static_cast<std::size_t>(o.steps_taken);
    refused += static_cast<std::size_t>(o.refused_count);
    if (o.agent_failed) ++r.agent_failures;
    ++r.terminations[o.terminated_by == Termination::Done ? "done" : "step_limit"];
    episode_ms += o.total_latency.count();
    for (const auto& d : o.per_step_latency) step_ms.push_back(d.count());
  }
  const auto n = static_cast<double>(outcomes.size());
  r.token_acc = tok / n;
  r.seq_acc = static_cast<double>(seq) / n;
  r.eq_acc = static_cast<double>(eq) / n;
  r.mean_episode_latency_ms = episode_ms / n;
  r.refusal_rate = steps ? static_cast<double>(refused) / static_cast<double>(steps) : 0.0;
  if (!step_ms.empty()) {
    double sum = 0.0;
    for (double v : step_ms) sum += v;
    r.mean_step_latency_ms = sum / static_cast<double>(step_ms.size());
    std::vector<double> sorted = step_ms;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    r.median_step_latency_ms =
        sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  }
  return r;
}

EvalReport evaluate_split(const TaskSpec& spec, const Split& split, const AgentFactory& factory,
                          int jobs, std::vector<GameOutcome>* outcomes_out) {
  std::vector<GameOutcome> outcomes(split.size());
  const std::size_t workers =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1,
                              std::max<std::size_t>(split.size(), 1));

  // Worker w plays samples w, w + workers, ... with its own agent.
  auto play = [&](std::size_t w) {
    auto agent = factory();
    for (std::size_t i = w; i < split.size(); i += workers)
      outcomes[i] = run_game(spec, split[i].x, *agent, i);
  };

  if (workers == 1) {
    play(0);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          play(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::vector<State> gold;
  gold.reserve(split.size());
  for (const Sample& s : split) gold.push_back(s.y);
  EvalReport r = summarize(outcomes, gold);
  if (outcomes_out) *outcomes_out = std::move(outcomes);
  return r;
}

void print_report(std::ostream& os, const EvalReport& r) {
  const auto old_flags = os.flags();
  const auto old_precision = os.precision();
  auto row = [&](const char* name, auto value) {
    os << "  " << std::left << std::setw(24) << name << std::right << std::setw(12) << value << '\n';
  };
  os << std::fixed << std::setprecision(4);
  row("samples", r.n_samples);
  row("token accuracy", r.token_acc);
  row("sequence accuracy", r.seq_acc);
  row("equation accuracy", r.eq_acc);
  row("refusal rate", r.refusal_rate);
  row("agent failures", r.agent_failures);
  row("mean step latency ms", r.mean_step_latency_ms);
  row("median step latency ms", r.median_step_latency_ms);
  row("mean episode ms", r.mean_episode_latency_ms);
  for (const auto& [k, v] : r.terminations) row(("terminated " + k).c_str(), v);
  os.flags(old_flags);
  os.precision(old_precision);
}

}  // namespace editgym
