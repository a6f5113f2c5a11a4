#include <doctest.h>

#include <chrono>

#include "editgym/environment.hpp"
#include "editgym/error.hpp"
#include "editgym/external_agent.hpp"
#include "editgym/protocol.hpp"

using namespace editgym;
using namespace std::chrono_literals;

namespace {

// Shell agent that acknowledges hello/reset and answers act with `reply`.
std::string shell_agent(const std::string& on_act) {
  return "while IFS= read -r l; do case \"$l\" in *'\"type\":\"act\"'*) " + on_act +
         ";; *'\"type\":\"shutdown\"'*) exit 0;; *) echo '{\"ok\":true}';; esac; done";
}

ErrorCode error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Usage;
}

}  // namespace

TEST_CASE("requests and responses round trip") {
  using namespace protocol;
  const std::vector<Request> reqs = {
      Hello{nlohmann::json{{"task", "AOR"}, {"action_length", 2}}},
      Reset{"AOR", 3, {"1", "1", "2"}},
      Act{{"1", "+", "1", "2"}, 1},
      Shutdown{},
  };
  for (const auto& r : reqs) {
    const auto line = serialize(r);
    CHECK(line.find('\n') == std::string::npos);
    CHECK(parse_request(line) == r);
  }
  Response ok;
  ok.ok = true;
  Response act;
  act.action = std::vector<std::string>{"POS_1", "+"};
  Response err;
  err.ok = false;
  err.error = "boom";
  for (const auto& r : {ok, act, err}) CHECK(parse_response(serialize(r)) == r);
}

TEST_CASE("unknown fields are ignored") {
  const auto r = protocol::parse_response(R"({"action":["DONE","DONE"],"extra":1})");
  CHECK(r.action == std::vector<std::string>{"DONE", "DONE"});
  const auto q = protocol::parse_request(R"({"type":"act","state":[],"step":0,"note":"x"})");
  CHECK(std::get<protocol::Act>(q).step == 0);
}

TEST_CASE("bad lines are protocol violations") {
  for (const char* line : {"", "not json", "[1,2]", R"({"type":"dance"})", R"({"type":"act","step":0})",
                           R"({"type":"act","state":[1],"step":0})", R"({"type":"reset","episode":-1})"})
    CHECK(error_of([&] { protocol::parse_request(line); }) == ErrorCode::ProtocolViolation);
  for (const char* line : {"{", R"({"ok":"yes"})", R"({"action":"POS_1"})", R"({"error":3})"})
    CHECK(error_of([&] { protocol::parse_response(line); }) == ErrorCode::ProtocolViolation);
}

TEST_CASE("hello manifest carries the task layout") {
  const auto spec = TaskSpec::defaults(Task::AEC);
  const auto m = protocol::hello_manifest(spec, {"1", "+"}, {"POS_0", "DONE"});
  CHECK(m.at("task") == "aec");
  CHECK(m.at("action_length") == 3);
  CHECK(m.at("vocab_states").size() == 2);
}

TEST_CASE("external agent plays an episode") {
  const auto spec = TaskSpec::defaults(Task::AOR);
  ExternalAgent agent(shell_agent("echo '{\"action\":[\"DONE\",\"DONE\"]}'"), nlohmann::json::object(), 5s);
  for (std::size_t ep = 0; ep < 3; ++ep) {
    const auto out = run_game(spec, parse_state("1 1 2"), agent, ep);
    CHECK_FALSE(out.agent_failed);
    CHECK(out.steps_taken == 1);
    CHECK(out.final_state == parse_state("1 1 2"));
  }
}

TEST_CASE("wrong-length action is a protocol violation") {
  const auto spec = TaskSpec::defaults(Task::AOR);
  ExternalAgent agent(shell_agent("echo '{\"action\":[\"POS_1\"]}'"), nlohmann::json::object(), 5s);
  agent.begin_episode(spec, 0, parse_state("1 1 2"));
  CHECK(error_of([&] { agent.act(spec, parse_state("1 1 2"), 0); }) == ErrorCode::ProtocolViolation);
  const auto out = run_game(spec, parse_state("1 1 2"), agent, 1);
  CHECK(out.agent_failed);
  CHECK(out.terminated_by == Termination::StepLimit);
}

TEST_CASE("a silent agent times out and is respawned") {
  const auto spec = TaskSpec::defaults(Task::AOR);
  ExternalAgent agent(shell_agent("sleep 5"), nlohmann::json::object(), 200ms);
  const auto t0 = std::chrono::steady_clock::now();
  agent.begin_episode(spec, 0, parse_state("1 1 2"));
  CHECK(error_of([&] { agent.act(spec, parse_state("1 1 2"), 0); }) == ErrorCode::Timeout);
  CHECK(std::chrono::steady_clock::now() - t0 < 3s);
  CHECK_NOTHROW(agent.begin_episode(spec, 1, parse_state("1 1 2")));
}

TEST_CASE("agents that cannot start fail to spawn") {
  CHECK(error_of([] { ExternalAgent a("exit 3", nlohmann::json::object(), 2s); }) ==
        ErrorCode::SpawnFailed);
  CHECK(error_of([] { ExternalAgent a("/nonexistent/agent-binary", nlohmann::json::object(), 2s); }) ==
        ErrorCode::SpawnFailed);
  CHECK(error_of([] {
          ExternalAgent a("read l; echo '{\"ok\":false,\"error\":\"no\"}'", nlohmann::json::object(), 2s);
        }) == ErrorCode::SpawnFailed);
}
