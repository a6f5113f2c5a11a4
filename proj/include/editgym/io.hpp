#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "editgym/benchmark_gen.hpp"
#include "editgym/core_types.hpp"
#include "editgym/metrics_eval.hpp"

namespace editgym::io {

nlohmann::json to_json(const State& s);
State state_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TaskSpec& spec);
TaskSpec task_spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Sample& s);
Sample sample_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Trajectory& t);
Trajectory trajectory_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Manifest& m);
Manifest manifest_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EvalReport& r);

/// One compact JSON object per line, LF-terminated.
void write_jsonl(const std::filesystem::path& path,
                 const std::vector<nlohmann::json>& records);
std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path);

void write_json(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json read_json(const std::filesystem::path& path);

/// train.jsonl, valid.jsonl, test.jsonl, manifest.json under dir.
void write_bundle(const std::filesystem::path& dir, const DatasetBundle& b);
DatasetBundle read_bundle(const std::filesystem::path& dir);

void write_trajectories(const std::filesystem::path& path,
                        const std::vector<Trajectory>& ts);
std::vector<Trajectory> read_trajectories(const std::filesystem::path& path);

}  // namespace editgym::io
