#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "editgym/benchmark_gen.hpp"
#include "editgym/error.hpp"
#include "editgym/metrics_eval.hpp"
#include "editgym/trajectory.hpp"

namespace editgym::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2, kAgentError = 3 };

int exit_code_for(const Error& e);

struct GenOptions {
  Task task = Task::AOR;
  std::optional<int> n, l;
  int d = 10000;
  std::uint64_t seed = 0;
  std::filesystem::path out;
};

/// Writes the bundle plus config.json; prints split sizes and T_max.
DatasetBundle cmd_gen(const GenOptions& opt, std::ostream& out);

struct TrajOptions {
  std::filesystem::path data;
  std::string split = "train";  // train|valid|test|all
  std::optional<Metric> metric;
  int design = 1;
  bool augment = false;
  std::filesystem::path out;
};

struct TrajStats {
  std::size_t expert = 0;
  std::size_t augmented = 0;
  std::size_t max_length = 0;
};

/// Throws Error{MetricTaskMismatch} for SELF outside AES.
TrajStats cmd_traj(const TrajOptions& opt, std::ostream& out);

struct EvalOptions {
  std::filesystem::path data;
  std::string split = "test";
  std::string agent = "expert";  // "expert" or "cmd:<shell command>"
  std::optional<Metric> metric;
  int design = 1;
  std::optional<int> max_steps;
  std::optional<std::filesystem::path> report;
  int jobs = 1;
  std::chrono::milliseconds agent_timeout{30000};
};

EvalReport cmd_eval(const EvalOptions& opt, std::ostream& out);

/// Task spec of a dataset resolved for the given metric and design:
/// action length from the task, max_steps = 2 * T_max under that metric.
TaskSpec resolve_spec(const DatasetBundle& b, std::optional<Metric> metric,
                      int design);

/// Entry point used by the editgym binary.
int run(int argc, char** argv);

}  // namespace editgym::cli
