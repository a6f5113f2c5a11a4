#include "editgym/benchmark_gen.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <unordered_set>

#include <boost/rational.hpp>

#include "editgym/action_codec.hpp"
#include "editgym/edit_metrics.hpp"
#include "editgym/equation.hpp"
#include "editgym/error.hpp"
#include "equation_eval.hpp"

namespace editgym {

namespace {

// std distributions are implementation-defined; draws go through below() so a
// seed yields the same dataset on every standard library.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t attempt, Task task) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(attempt),
                      static_cast<std::uint32_t>(attempt >> 32),
                      static_cast<std::uint32_t>(task)};
    engine_.seed(seq);
  }

  // Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % n;
    }
  }

  int in_range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 engine_;
};

const std::vector<Token> kAllOperators = {"+", "-", "*", "/"};
const std::vector<Token> kAdditive = {"+", "-"};

bool fast_valid(const std::vector<Token>& toks) {
  using Q = boost::rational<std::int64_t>;
  auto parse_int = [](const Token& t) { return Q(std::stoll(t)); };
  return detail::evaluate_equation<Q>(std::span<const Token>(toks), parse_int) ==
         detail::Verdict::Valid;
}

// A flat equation and the token index of each operand.
struct FlatEquation {
  State tokens;
  std::vector<std::size_t> operand_at;
};

FlatEquation build_flat(const std::vector<int>& operands, bool leading_minus,
                        std::size_t eq_slot, const std::vector<Token>& ops) {
  FlatEquation f;
  if (leading_minus) f.tokens.tokens.push_back("-");
  std::size_t op_index = 0;
  for (std::size_t i = 0; i < operands.size(); ++i) {
    if (i > 0) f.tokens.tokens.push_back(i - 1 == eq_slot ? Token("=") : ops[op_index++]);
    f.operand_at.push_back(f.tokens.size());
    f.tokens.tokens.push_back(std::to_string(operands[i]));
  }
  return f;
}

// Every (sign, operator, "="-slot) assignment over `alphabet`, in a fixed
// order, filtered to exact equalities.
std::vector<FlatEquation> valid_completions(const std::vector<int>& operands,
                                            const std::vector<Token>& alphabet) {
  const std::size_t slots = operands.size() - 1;
  const std::size_t free_ops = slots - 1;
  std::size_t combos = 1;
  for (std::size_t i = 0; i < free_ops; ++i) combos *= alphabet.size();

  std::vector<FlatEquation> out;
  std::vector<Token> ops(free_ops);
  for (int sign = 0; sign < 2; ++sign) {
    for (std::size_t eq = 0; eq < slots; ++eq) {
      for (std::size_t c = 0; c < combos; ++c) {
        std::size_t code = c;
        for (std::size_t k = 0; k < free_ops; ++k) {
          ops[k] = alphabet[code % alphabet.size()];
          code /= alphabet.size();
        }
        FlatEquation f = build_flat(operands, sign == 1, eq, ops);
        if (fast_valid(f.tokens.tokens)) out.push_back(std::move(f));
      }
    }
  }
  return out;
}

std::optional<FlatEquation> draw_equation(Stream& rng, const TaskSpec& spec,
                                          const std::vector<Token>& alphabet) {
  std::vector<int> operands(static_cast<std::size_t>(spec.l));
  for (int& v : operands) v = rng.in_range(1, spec.n);
  auto completions = valid_completions(operands, alphabet);
  if (completions.empty()) return std::nullopt;
  return rng.pick(completions);
}

// "( a + b )", "( a - b )" or "( - a + b )" equal to v, operands in [1, n].
std::vector<Token> expand_operand(Stream& rng, int v, int n) {
  enum Form { Plus, Minus, NegPlus };
  std::vector<Form> forms;
  if (v >= 2) forms.push_back(Plus);
  if (v <= n - 1) {
    forms.push_back(Minus);
    forms.push_back(NegPlus);
  }
  if (forms.empty()) throw Error(ErrorCode::Exhausted, "no group form for operand " + std::to_string(v));
  switch (rng.pick(forms)) {
    case Plus: {
      const int a = rng.in_range(1, v - 1);
      return {"(", std::to_string(a), "+", std::to_string(v - a), ")"};
    }
    case Minus: {
      const int a = rng.in_range(v + 1, n);
      return {"(", std::to_string(a), "-", std::to_string(a - v), ")"};
    }
    case NegPlus: {
      const int a = rng.in_range(1, n - v);
      return {"(", "-", std::to_string(a), "+", std::to_string(a + v), ")"};
    }
  }
  return {};
}

std::vector<Token> perturbation_vocab(int n) {
  std::vector<Token> v;
  for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  for (const char* op : {"+", "-", "*", "/", "="}) v.emplace_back(op);
  return v;
}

using SampleDraw = std::function<std::optional<Sample>(Stream&)>;

void validate_spec(const TaskSpec& spec, Task expected) {
  if (spec.task != expected) throw Error(ErrorCode::Usage, "generator/task mismatch");
  if (spec.n < 1) throw Error(ErrorCode::Usage, "N must be >= 1");
  if (spec.l < 2) throw Error(ErrorCode::Usage, "L must be >= 2");
  if (spec.d < 1) throw Error(ErrorCode::Usage, "D must be >= 1");
}

std::vector<Sample> draw_unique(const TaskSpec& spec, std::uint64_t seed, const SampleDraw& draw) {
  const auto target = static_cast<std::size_t>(spec.d);
  const std::uint64_t budget = 1000 + 100 * static_cast<std::uint64_t>(spec.d);
  std::vector<Sample> samples;
  samples.reserve(target);
  std::unordered_set<std::string> seen;
  for (std::uint64_t attempt = 0; samples.size() < target; ++attempt) {
    if (attempt >= budget)
      throw Error(ErrorCode::Exhausted, "found " + std::to_string(samples.size()) + " of " +
                                            std::to_string(target) + " unique samples");
    Stream rng(seed, attempt, spec.task);
    auto s = draw(rng);
    if (!s) continue;
    if (!seen.insert(render_state(s->x)).second) continue;
    samples.push_back(std::move(*s));
  }
  return samples;
}

DatasetBundle assemble(const TaskSpec& spec, std::uint64_t seed, std::vector<Sample> samples) {
  DatasetBundle b;
  const SplitSizes sizes = split_sizes(samples.size());
  auto first = samples.begin();
  b.train.assign(first, first + static_cast<std::ptrdiff_t>(sizes.train));
  first += static_cast<std::ptrdiff_t>(sizes.train);
  b.valid.assign(first, first + static_cast<std::ptrdiff_t>(sizes.valid));
  first += static_cast<std::ptrdiff_t>(sizes.valid);
  b.test.assign(first, samples.end());

  std::set<Token> vocab;
  std::size_t longest = 0;
  for (const Split* split : {&b.train, &b.valid, &b.test}) {
    for (const Sample& s : *split) {
      vocab.insert(s.x.tokens.begin(), s.x.tokens.end());
      vocab.insert(s.y.tokens.begin(), s.y.tokens.end());
      longest = std::max({longest, s.x.size(), s.y.size()});
    }
  }

  Manifest& m = b.manifest;
  m.seed = seed;
  m.spec = spec;
  m.spec.metric = default_metric(spec.task);
  m.spec.design = 1;
  m.spec.action_length = action_length_for(spec.task);
  m.spec.pos_vocab_bound = static_cast<int>(longest) + 1;
  m.t_max = max_trajectory_length({&b.train, &b.valid, &b.test}, m.spec);
  m.spec.max_steps = 2 * m.t_max;
  m.vocab_states.assign(vocab.begin(), vocab.end());
  m.vocab_actions = action_vocabulary(m.spec, m.vocab_states);

  if (spec.task == Task::AEC) {
    auto flags = [](const Split& split) {
      std::vector<bool> out;
      out.reserve(split.size());
      for (const Sample& s : split) {
        const auto ops = dp_ops(s.x, s.y, Metric::Levenshtein);
        out.push_back(std::any_of(ops.begin(), ops.end(), [](const EditOp& op) {
          return std::holds_alternative<Replace>(op);
        }));
      }
      return out;
    };
    m.replace_flags_train = flags(b.train);
    m.replace_flags_valid = flags(b.valid);
    m.replace_flags_test = flags(b.test);
  }
  return b;
}

}  // namespace

const Split& DatasetBundle::split(std::string_view name) const {
  if (name == "train") return train;
  if (name == "valid") return valid;
  if (name == "test") return test;
  throw Error(ErrorCode::Usage, "unknown split '" + std::string(name) + "'");
}

SplitSizes split_sizes(std::size_t d) {
  const std::size_t train = d * 7 / 10;
  const std::size_t valid = d * 15 / 100;
  return {train, valid, d - train - valid};
}

DatasetBundle gen_aor(const TaskSpec& spec, std::uint64_t seed) {
  validate_spec(spec, Task::AOR);
  auto samples = draw_unique(spec, seed, [&](Stream& rng) -> std::optional<Sample> {
    auto eq = draw_equation(rng, spec, kAllOperators);
    if (!eq) return std::nullopt;
    Sample s{{}, eq->tokens};
    for (std::size_t idx : eq->operand_at) s.x.tokens.push_back(eq->tokens[idx]);
    return s;
  });
  return assemble(spec, seed, std::move(samples));
}

DatasetBundle gen_aes(const TaskSpec& spec, std::uint64_t seed) {
  validate_spec(spec, Task::AES);
  auto samples = draw_unique(spec, seed, [&](Stream& rng) -> std::optional<Sample> {
    auto eq = draw_equation(rng, spec, kAdditive);
    if (!eq) return std::nullopt;

    // k distinct operands, k uniform in [1, L].
    const auto l = static_cast<std::size_t>(spec.l);
    const auto k = static_cast<std::size_t>(rng.in_range(1, spec.l));
    std::vector<std::size_t> order(l);
    for (std::size_t i = 0; i < l; ++i) order[i] = i;
    for (std::size_t i = 0; i < k; ++i) std::swap(order[i], order[i + rng.below(l - i)]);
    std::vector<bool> expand(eq->tokens.size(), false);
    for (std::size_t i = 0; i < k; ++i) expand[eq->operand_at[order[i]]] = true;

    Sample s{{}, eq->tokens};
    for (std::size_t i = 0; i < eq->tokens.size(); ++i) {
      if (!expand[i]) {
        s.x.tokens.push_back(eq->tokens[i]);
        continue;
      }
      for (auto& t : expand_operand(rng, std::stoi(eq->tokens[i]), spec.n))
        s.x.tokens.push_back(std::move(t));
    }
    return s;
  });
  return assemble(spec, seed, std::move(samples));
}

DatasetBundle gen_aec(const TaskSpec& spec, std::uint64_t seed) {
  validate_spec(spec, Task::AEC);
  const std::vector<Token> vocab = perturbation_vocab(spec.n);
  auto samples = draw_unique(spec, seed, [&](Stream& rng) -> std::optional<Sample> {
    auto eq = draw_equation(rng, spec, kAllOperators);
    if (!eq) return std::nullopt;
    Sample s{eq->tokens, eq->tokens};
    auto& t = s.x.tokens;
    const int k = rng.in_range(1, 3);
    for (int e = 0; e < k; ++e) {
      switch (rng.below(3)) {
        case 0:
          t.insert(t.begin() + static_cast<std::ptrdiff_t>(rng.below(t.size() + 1)), rng.pick(vocab));
          break;
        case 1:
          if (!t.empty()) t.erase(t.begin() + static_cast<std::ptrdiff_t>(rng.below(t.size())));
          break;
        default: {
          if (t.empty()) break;
          const std::size_t at = rng.below(t.size());
          std::vector<Token> others;
          for (const Token& v : vocab)
            if (v != t[at]) others.push_back(v);
          t[at] = rng.pick(others);
        }
      }
    }
    if (s.x == s.y) return std::nullopt;
    return s;
  });
  return assemble(spec, seed, std::move(samples));
}

DatasetBundle generate(const TaskSpec& spec, std::uint64_t seed) {
  switch (spec.task) {
    case Task::AOR: return gen_aor(spec, seed);
    case Task::AES: return gen_aes(spec, seed);
    case Task::AEC: return gen_aec(spec, seed);
  }
  throw Error(ErrorCode::Usage, "unknown task");
}

std::vector<std::string> action_vocabulary(const TaskSpec& spec,
                                           const std::vector<Token>& vocab_states) {
  std::vector<std::string> v;
  for (int k = 0; k <= spec.pos_vocab_bound; ++k) v.push_back(to_string(ActionToken{PosToken{k}}));
  if (schema_for(spec) == ActionSchema::Verb)
    for (Verb verb : {Verb::Insert, Verb::Delete, Verb::Replace})
      v.push_back(to_string(ActionToken{VerbToken{verb}}));
  for (const Token& t : vocab_states) v.push_back(t);
  v.push_back(to_string(ActionToken{DoneToken{}}));
  return v;
}

int max_trajectory_length(const std::vector<const Split*>& splits, const TaskSpec& spec) {
  std::size_t best = 0;
  for (const Split* split : splits)
    for (const Sample& s : *split) best = std::max(best, dp_ops(s.x, s.y, spec.metric).size() + 1);
  return static_cast<int>(best);
}

}  // namespace editgym
