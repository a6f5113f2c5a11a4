#include <doctest.h>

#include <fstream>

#include "editgym/benchmark_gen.hpp"
#include "editgym/error.hpp"
#include "editgym/io.hpp"
#include "editgym/metrics_eval.hpp"
#include "editgym/trajectory.hpp"
#include "test_support.hpp"

using namespace editgym;

TEST_CASE("bundle round trips through disk") {
  testing::TempDir dir;
  for (Task t : {Task::AOR, Task::AES, Task::AEC}) {
    auto spec = TaskSpec::defaults(t);
    spec.d = 40;
    const auto b = generate(spec, 5);
    io::write_bundle(dir.path(), b);
    for (const char* f : {"train.jsonl", "valid.jsonl", "test.jsonl", "manifest.json"})
      CHECK(std::filesystem::exists(dir / f));
    const auto back = io::read_bundle(dir.path());
    CHECK(back.train == b.train);
    CHECK(back.valid == b.valid);
    CHECK(back.test == b.test);
    CHECK(back.manifest == b.manifest);
  }
}

TEST_CASE("sample records are token lists") {
  const auto j = io::to_json(Sample{parse_state("1 1 2"), parse_state("1 + 1 = 2")});
  CHECK(j.at("x") == nlohmann::json::array({"1", "1", "2"}));
  CHECK(j.at("y").size() == 5);
}

TEST_CASE("trajectories round trip with provenance") {
  testing::TempDir dir;
  const auto spec = TaskSpec::defaults(Task::AOR);
  const auto demos = augment_demoset(
      make_demoset({{parse_state("1 1 2"), parse_state("1 + 1 = 2")},
                    {parse_state("3 1 2"), parse_state("3 = 1 + 2")}},
                   spec),
      spec);
  io::write_trajectories(dir / "t.jsonl", demos.trajectories);
  CHECK(io::read_trajectories(dir / "t.jsonl") == demos.trajectories);

  const auto j = io::to_json(demos.trajectories[0]);
  CHECK(j.at("provenance") == "expert");
  CHECK(j.at("steps")[0].at("a") == nlohmann::json::array({"POS_1", "+"}));
  CHECK(j.at("steps")[0].at("s") == nlohmann::json::array({"1", "1", "2"}));
}

TEST_CASE("jsonl writes one object per line") {
  testing::TempDir dir;
  io::write_jsonl(dir / "a.jsonl", {nlohmann::json{{"k", 1}}, nlohmann::json{{"k", 2}}});
  std::ifstream in(dir / "a.jsonl");
  std::string l1, l2, l3;
  std::getline(in, l1);
  std::getline(in, l2);
  CHECK(l1 == R"({"k":1})");
  CHECK(l2 == R"({"k":2})");
  CHECK_FALSE(std::getline(in, l3));
}

TEST_CASE("bad files are data errors with the line number") {
  testing::TempDir dir;
  {
    std::ofstream out(dir / "bad.jsonl");
    out << "{\"k\":1}\n{oops\n";
  }
  try {
    io::read_jsonl(dir / "bad.jsonl");
    FAIL("expected DATA_FORMAT");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DataFormat);
    REQUIRE(e.index().has_value());
    CHECK(*e.index() == 2u);
  }
  CHECK_THROWS_AS(io::read_json(dir / "missing.json"), Error);
  CHECK_THROWS_AS(io::read_bundle(dir / "nowhere"), Error);
}

TEST_CASE("report json carries every metric") {
  EvalReport r;
  r.seq_acc = 0.5;
  r.terminations = {{"done", 2}, {"step_limit", 1}};
  const auto j = io::to_json(r);
  for (const char* k : {"token_acc", "seq_acc", "eq_acc", "n_samples", "refusal_rate",
                        "mean_step_latency_ms", "median_step_latency_ms", "terminations"})
    CHECK(j.contains(k));
  CHECK(j.at("terminations").at("step_limit") == 1);
}
