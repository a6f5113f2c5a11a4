#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "editgym/core_types.hpp"

namespace editgym {

struct Sample {
  State x;
  State y;
  friend bool operator==(const Sample&, const Sample&) = default;
};

using Split = std::vector<Sample>;

struct Manifest {
  TaskSpec spec;
  std::uint64_t seed = 0;
  int t_max = 0;
  std::vector<Token> vocab_states;
  std::vector<std::string> vocab_actions;
  /// AEC only: per sample, whether the Levenshtein expert uses REPLACE.
  std::vector<bool> replace_flags_train, replace_flags_valid, replace_flags_test;

  friend bool operator==(const Manifest&, const Manifest&) = default;
};

struct DatasetBundle {
  Split train, valid, test;
  Manifest manifest;

  const Split& split(std::string_view name) const;
};

/// train = floor(0.7 D), valid = floor(0.15 D), test = remainder.
struct SplitSizes {
  std::size_t train, valid, test;
};
SplitSizes split_sizes(std::size_t d);

DatasetBundle gen_aor(const TaskSpec& spec, std::uint64_t seed);
DatasetBundle gen_aes(const TaskSpec& spec, std::uint64_t seed);
DatasetBundle gen_aec(const TaskSpec& spec, std::uint64_t seed);
/// Dispatches on spec.task.
DatasetBundle generate(const TaskSpec& spec, std::uint64_t seed);

/// POS_0..POS_bound, verbs when the schema uses them, content tokens, DONE.
std::vector<std::string> action_vocabulary(const TaskSpec& spec,
                                           const std::vector<Token>& vocab_states);

/// Max trajectory length (ops + 1) over samples under spec.metric.
int max_trajectory_length(const std::vector<const Split*>& splits,
                          const TaskSpec& spec);

}  // namespace editgym
