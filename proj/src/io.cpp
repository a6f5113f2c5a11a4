#include "editgym/io.hpp"

#include <fstream>

#include "editgym/error.hpp"

namespace editgym::io {

using nlohmann::json;

namespace {

template <typename T>
T field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::DataFormat, std::string("field '") + key + "': " + e.what());
  }
}

std::string_view provenance_name(Provenance p) {
  return p == Provenance::Expert ? "expert" : "augmented";
}

}  // namespace

json to_json(const State& s) { return s.tokens; }

State state_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::DataFormat, "state must be a token list");
  State s;
  for (const auto& t : j) {
    if (!t.is_string()) throw Error(ErrorCode::DataFormat, "state token must be a string");
    s.tokens.push_back(t.get<std::string>());
  }
  return s;
}

json to_json(const TaskSpec& spec) {
  return {{"task", std::string(to_string(spec.task))},
          {"n", spec.n},
          {"l", spec.l},
          {"d", spec.d},
          {"metric", std::string(to_string(spec.metric))},
          {"design", spec.design},
          {"action_length", spec.action_length},
          {"pos_vocab_bound", spec.pos_vocab_bound},
          {"max_steps", spec.max_steps}};
}

TaskSpec task_spec_from_json(const json& j) {
  TaskSpec s;
  s.task = parse_task(field<std::string>(j, "task"));
  s.n = field<int>(j, "n");
  s.l = field<int>(j, "l");
  s.d = field<int>(j, "d");
  s.metric = parse_metric(field<std::string>(j, "metric"));
  s.design = field<int>(j, "design");
  s.action_length = field<int>(j, "action_length");
  s.pos_vocab_bound = field<int>(j, "pos_vocab_bound");
  s.max_steps = field<int>(j, "max_steps");
  return s;
}

json to_json(const Sample& s) { return {{"x", to_json(s.x)}, {"y", to_json(s.y)}}; }

Sample sample_from_json(const json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("y"))
    throw Error(ErrorCode::DataFormat, "sample needs x and y");
  return {state_from_json(j["x"]), state_from_json(j["y"])};
}

json to_json(const Trajectory& t) {
  json steps = json::array();
  for (const Step& st : t.steps) steps.push_back({{"s", to_json(st.state)}, {"a", to_strings(st.action)}});
  return {{"x", to_json(t.x)},
          {"y", to_json(t.y)},
          {"steps", std::move(steps)},
          {"provenance", std::string(provenance_name(t.provenance))}};
}

Trajectory trajectory_from_json(const json& j) {
  Trajectory t;
  t.x = state_from_json(j.at("x"));
  t.y = state_from_json(j.at("y"));
  for (const auto& st : j.at("steps"))
    t.steps.push_back({state_from_json(st.at("s")), parse_action(field<std::vector<std::string>>(st, "a"))});
  const auto prov = field<std::string>(j, "provenance");
  if (prov == "expert")
    t.provenance = Provenance::Expert;
  else if (prov == "augmented")
    t.provenance = Provenance::Augmented;
  else
    throw Error(ErrorCode::DataFormat, "unknown provenance '" + prov + "'");
  return t;
}

json to_json(const Manifest& m) {
  json j = {{"spec", to_json(m.spec)},
            {"seed", m.seed},
            {"t_max", m.t_max},
            {"pos_vocab_bound", m.spec.pos_vocab_bound},
            {"vocab_states", m.vocab_states},
            {"vocab_actions", m.vocab_actions}};
  if (m.spec.task == Task::AEC) {
    j["replace_flags"] = {{"train", m.replace_flags_train},
                          {"valid", m.replace_flags_valid},
                          {"test", m.replace_flags_test}};
  }
  return j;
}

Manifest manifest_from_json(const json& j) {
  Manifest m;
  m.spec = task_spec_from_json(j.at("spec"));
  m.seed = field<std::uint64_t>(j, "seed");
  m.t_max = field<int>(j, "t_max");
  m.vocab_states = field<std::vector<std::string>>(j, "vocab_states");
  m.vocab_actions = field<std::vector<std::string>>(j, "vocab_actions");
  if (j.contains("replace_flags")) {
    const auto& f = j["replace_flags"];
    m.replace_flags_train = field<std::vector<bool>>(f, "train");
    m.replace_flags_valid = field<std::vector<bool>>(f, "valid");
    m.replace_flags_test = field<std::vector<bool>>(f, "test");
  }
  return m;
}

json to_json(const EvalReport& r) {
  return {{"token_acc", r.token_acc},
          {"seq_acc", r.seq_acc},
          {"eq_acc", r.eq_acc},
          {"n_samples", r.n_samples},
          {"mean_step_latency_ms", r.mean_step_latency_ms},
          {"median_step_latency_ms", r.median_step_latency_ms},
          {"mean_episode_latency_ms", r.mean_episode_latency_ms},
          {"refusal_rate", r.refusal_rate},
          {"agent_failures", r.agent_failures},
          {"terminations", r.terminations}};
}

void write_jsonl(const std::filesystem::path& path, const std::vector<json>& records) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorCode::Io, "cannot write " + path.string());
  for (const auto& r : records) os << r.dump() << '\n';
  if (!os) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

std::vector<json> read_jsonl(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorCode::Io, "cannot read " + path.string());
  std::vector<json> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(json::parse(line));
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::DataFormat, path.string() + ":" + std::to_string(lineno) + ": " + e.what(),
                  lineno);
    }
  }
  return out;
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorCode::Io, "cannot write " + path.string());
  os << j.dump(2) << '\n';
}

json read_json(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorCode::Io, "cannot read " + path.string());
  try {
    return json::parse(is);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::DataFormat, path.string() + ": " + e.what());
  }
}

namespace {

std::vector<json> split_records(const Split& split) {
  std::vector<json> out;
  out.reserve(split.size());
  for (const auto& s : split) out.push_back(to_json(s));
  return out;
}

Split read_split(const std::filesystem::path& path) {
  Split out;
  for (const auto& j : read_jsonl(path)) out.push_back(sample_from_json(j));
  return out;
}

}  // namespace

void write_bundle(const std::filesystem::path& dir, const DatasetBundle& b) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create " + dir.string() + ": " + ec.message());
  write_jsonl(dir / "train.jsonl", split_records(b.train));
  write_jsonl(dir / "valid.jsonl", split_records(b.valid));
  write_jsonl(dir / "test.jsonl", split_records(b.test));
  write_json(dir / "manifest.json", to_json(b.manifest));
}

DatasetBundle read_bundle(const std::filesystem::path& dir) {
  DatasetBundle b;
  b.manifest = manifest_from_json(read_json(dir / "manifest.json"));
  b.train = read_split(dir / "train.jsonl");
  b.valid = read_split(dir / "valid.jsonl");
  b.test = read_split(dir / "test.jsonl");
  return b;
}

void write_trajectories(const std::filesystem::path& path, const std::vector<Trajectory>& ts) {
  std::vector<json> records;
  records.reserve(ts.size());
  for (const auto& t : ts) records.push_back(to_json(t));
  write_jsonl(path, records);
}

std::vector<Trajectory> read_trajectories(const std::filesystem::path& path) {
  std::vector<Trajectory> out;
  for (const auto& j : read_jsonl(path)) {
    try {
      out.push_back(trajectory_from_json(j));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::DataFormat, path.string() + ": " + e.what());
    }
  }
  return out;
}

}  // namespace editgym::io
