#include "editgym/commands.hpp"

#include <iostream>

#include <CLI11.hpp>

#include "editgym/error.hpp"
#include "editgym/expert_agent.hpp"
#include "editgym/external_agent.hpp"
#include "editgym/io.hpp"
#include "editgym/log.hpp"
#include "editgym/protocol.hpp"

namespace editgym::cli {

using nlohmann::json;

namespace {

std::filesystem::path sidecar(const std::filesystem::path& p) {
  return std::filesystem::path(p.string() + ".config.json");
}

std::vector<Sample> select_split(const DatasetBundle& b, const std::string& name) {
  if (name == "all") {
    std::vector<Sample> all = b.train;
    all.insert(all.end(), b.valid.begin(), b.valid.end());
    all.insert(all.end(), b.test.begin(), b.test.end());
    return all;
  }
  return b.split(name);
}

void check_metric(Task task, Metric metric) {
  if (metric == Metric::Self && task != Task::AES)
    throw Error(ErrorCode::MetricTaskMismatch, "SELF applies to AES only");
}

}  // namespace

int exit_code_for(const Error& e) {
  if (e.code() == ErrorCode::Usage || e.code() == ErrorCode::MetricTaskMismatch) return kUsage;
  if (e.is_agent_error()) return kAgentError;
  return kDataError;
}

TaskSpec resolve_spec(const DatasetBundle& b, std::optional<Metric> metric, int design) {
  TaskSpec spec = b.manifest.spec;
  spec.metric = metric.value_or(default_metric(spec.task));
  check_metric(spec.task, spec.metric);
  if (design < 1 || design > 3) throw Error(ErrorCode::Usage, "--design must be 1, 2 or 3");
  spec.design = design;
  spec.action_length = action_length_for(spec.task);
  const int t_max = spec.metric == b.manifest.spec.metric
                        ? b.manifest.t_max
                        : max_trajectory_length({&b.train, &b.valid, &b.test}, spec);
  spec.max_steps = 2 * t_max;
  return spec;
}

DatasetBundle cmd_gen(const GenOptions& opt, std::ostream& out) {
  TaskSpec spec = TaskSpec::defaults(opt.task);
  if (opt.n) spec.n = *opt.n;
  if (opt.l) spec.l = *opt.l;
  spec.d = opt.d;
  DatasetBundle b = generate(spec, opt.seed);
  io::write_bundle(opt.out, b);
  io::write_json(opt.out / "config.json",
                 {{"subcommand", "gen"},
                  {"task", std::string(to_string(opt.task))},
                  {"n", spec.n},
                  {"l", spec.l},
                  {"d", spec.d},
                  {"seed", opt.seed},
                  {"out", opt.out.string()},
                  {"spec", io::to_json(b.manifest.spec)}});
  out << "train/valid/test: " << b.train.size() << '/' << b.valid.size() << '/' << b.test.size()
      << '\n'
      << "T_max: " << b.manifest.t_max << '\n'
      << "pos_vocab_bound: " << b.manifest.spec.pos_vocab_bound << '\n';
  return b;
}

TrajStats cmd_traj(const TrajOptions& opt, std::ostream& out) {
  const DatasetBundle b = io::read_bundle(opt.data);
  const TaskSpec spec = resolve_spec(b, opt.metric, opt.design);

  std::vector<std::pair<State, State>> pairs;
  for (const Sample& s : select_split(b, opt.split)) pairs.emplace_back(s.x, s.y);
  DemoSet demos = make_demoset(pairs, spec);
  if (opt.augment) demos = augment_demoset(demos, spec);

  io::write_trajectories(opt.out, demos.trajectories);
  TrajStats stats{demos.count(Provenance::Expert), demos.count(Provenance::Augmented),
                  demos.max_length()};
  io::write_json(sidecar(opt.out), {{"subcommand", "traj"},
                                    {"data", opt.data.string()},
                                    {"split", opt.split},
                                    {"augment", opt.augment},
                                    {"out", opt.out.string()},
                                    {"spec", io::to_json(spec)},
                                    {"expert", stats.expert},
                                    {"augmented", stats.augmented},
                                    {"max_length", stats.max_length}});
  out << "expert trajectories: " << stats.expert << '\n'
      << "augmented trajectories: " << stats.augmented << '\n'
      << "max trajectory length: " << stats.max_length << '\n';
  return stats;
}

EvalReport cmd_eval(const EvalOptions& opt, std::ostream& out) {
  const DatasetBundle b = io::read_bundle(opt.data);
  TaskSpec spec = resolve_spec(b, opt.metric, opt.design);
  if (opt.max_steps) {
    if (*opt.max_steps < 1) throw Error(ErrorCode::Usage, "--max-steps must be positive");
    spec.max_steps = *opt.max_steps;
  }
  const Split& split = b.split(opt.split);

  AgentFactory factory;
  if (opt.agent == "expert") {
    factory = [&split] { return std::make_unique<ExpertAgent>(&split); };
  } else if (opt.agent.starts_with("cmd:")) {
    const std::string command = opt.agent.substr(4);
    const json hello = protocol::hello_manifest(spec, b.manifest.vocab_states,
                                                action_vocabulary(spec, b.manifest.vocab_states));
    const auto timeout = opt.agent_timeout;
    factory = [command, hello, timeout] {
      return std::make_unique<ExternalAgent>(command, hello, timeout);
    };
  } else {
    throw Error(ErrorCode::Usage, "--agent must be 'expert' or 'cmd:<command>'");
  }

  const EvalReport report = evaluate_split(spec, split, factory, opt.jobs);
  print_report(out, report);
  if (opt.report) {
    io::write_json(*opt.report, io::to_json(report));
    io::write_json(sidecar(*opt.report), {{"subcommand", "eval"},
                                          {"data", opt.data.string()},
                                          {"split", opt.split},
                                          {"agent", opt.agent},
                                          {"jobs", opt.jobs},
                                          {"agent_timeout_ms", opt.agent_timeout.count()},
                                          {"spec", io::to_json(spec)}});
  }
  return report;
}

int run(int argc, char** argv) {
  CLI::App app{"editgym: text editing as an imitation game"};
  app.require_subcommand(1);

  const auto tasks = CLI::IsMember({"aor", "aes", "aec"});
  const auto metrics = CLI::IsMember({"levenshtein", "lcs", "self"});

  GenOptions gen;
  std::string gen_task, gen_out;
  auto* g = app.add_subcommand("gen", "Generate an arithmetic equation dataset");
  g->add_option("--task", gen_task, "aor|aes|aec")->required()->check(tasks);
  g->add_option("--n", gen.n, "integer size bound N");
  g->add_option("--l", gen.l, "number of integers L");
  g->add_option("--d", gen.d, "dataset size D");
  g->add_option("--seed", gen.seed, "random seed");
  g->add_option("--out", gen_out, "output directory")->required();

  TrajOptions traj;
  std::string traj_data, traj_out;
  std::string traj_metric;
  auto* t = app.add_subcommand("traj", "Build expert (and augmented) trajectories");
  t->add_option("--data", traj_data, "dataset directory")->required();
  t->add_option("--split", traj.split, "train|valid|test|all")
      ->check(CLI::IsMember({"train", "valid", "test", "all"}));
  auto* traj_metric_opt = t->add_option("--metric", traj_metric, "levenshtein|lcs|self")
                              ->check(metrics);
  t->add_option("--design", traj.design, "AES action design 1|2|3")->check(CLI::Range(1, 3));
  t->add_flag("--augment", traj.augment, "add trajectory augmentation");
  t->add_option("--out", traj_out, "trajectory file")->required();

  EvalOptions ev;
  std::string ev_data, ev_report;
  std::string ev_metric;
  int timeout_ms = 30000;
  auto* e = app.add_subcommand("eval", "Play a split with an agent and score it");
  e->add_option("--data", ev_data, "dataset directory")->required();
  e->add_option("--split", ev.split, "train|valid|test")
      ->check(CLI::IsMember({"train", "valid", "test"}));
  e->add_option("--agent", ev.agent, "expert | cmd:\"<command>\"");
  auto* ev_metric_opt = e->add_option("--metric", ev_metric, "expert edit metric")
                            ->check(metrics);
  e->add_option("--design", ev.design, "AES action design 1|2|3")->check(CLI::Range(1, 3));
  e->add_option("--max-steps", ev.max_steps, "step budget per game");
  e->add_option("--report", ev_report, "report file");
  e->add_option("--jobs", ev.jobs, "parallel workers")->check(CLI::PositiveNumber);
  e->add_option("--agent-timeout", timeout_ms, "per-query timeout in ms")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*g) {
      gen.task = parse_task(gen_task);
      gen.out = gen_out;
      cmd_gen(gen, std::cout);
    } else if (*t) {
      traj.data = traj_data;
      traj.out = traj_out;
      if (*traj_metric_opt) traj.metric = parse_metric(traj_metric);
      cmd_traj(traj, std::cout);
    } else if (*e) {
      ev.data = ev_data;
      if (*ev_metric_opt) ev.metric = parse_metric(ev_metric);
      if (!ev_report.empty()) ev.report = ev_report;
      ev.agent_timeout = std::chrono::milliseconds(timeout_ms);
      cmd_eval(ev, std::cout);
    }
  } catch (const Error& err) {
    std::cerr << "editgym: " << err.what() << '\n';
    return exit_code_for(err);
  } catch (const std::exception& err) {
    std::cerr << "editgym: " << err.what() << '\n';
    return kDataError;
  }
  return kOk;
}

}  // namespace editgym::cli
