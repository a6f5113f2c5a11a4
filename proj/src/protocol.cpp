#include "editgym/protocol.hpp"

#include "editgym/error.hpp"

namespace editgym::protocol {

using nlohmann::json;

namespace {

[[noreturn]] void violation(std::string_view line, const std::string& why) {
  throw Error(ErrorCode::ProtocolViolation, why + " in line: " + std::string(line));
}

json parse_object(std::string_view line) {
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) violation(line, "not JSON");
  if (!j.is_object()) violation(line, "not an object");
  return j;
}

std::vector<Token> token_list(const json& j, std::string_view line, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) violation(line, std::string("missing list '") + key + "'");
  std::vector<Token> out;
  for (const auto& t : j[key]) {
    if (!t.is_string()) violation(line, std::string("non-string entry in '") + key + "'");
    out.push_back(t.get<std::string>());
  }
  return out;
}

}  // namespace

std::string serialize(const Request& r) {
  struct Visitor {
    json operator()(const Hello& h) const { return {{"type", "hello"}, {"manifest", h.manifest}}; }
    json operator()(const Reset& x) const {
      return {{"type", "reset"}, {"task", x.task}, {"episode", x.episode}, {"state", x.state}};
    }
    json operator()(const Act& a) const {
      return {{"type", "act"}, {"state", a.state}, {"step", a.step}};
    }
    json operator()(const Shutdown&) const { return {{"type", "shutdown"}}; }
  };
  return std::visit(Visitor{}, r).dump();
}

std::string serialize(const Response& r) {
  json j = json::object();
  if (r.ok) j["ok"] = *r.ok;
  if (r.action) j["action"] = *r.action;
  if (r.error) j["error"] = *r.error;
  return j.dump();
}

Request parse_request(std::string_view line) {
  const json j = parse_object(line);
  if (!j.contains("type") || !j["type"].is_string()) violation(line, "missing 'type'");
  const auto type = j["type"].get<std::string>();
  if (type == "hello") return Hello{j.value("manifest", json::object())};
  if (type == "reset") {
    Reset r;
    r.task = j.value("task", std::string());
    if (!j.contains("episode") || !j["episode"].is_number_unsigned())
      violation(line, "reset needs a non-negative 'episode'");
    r.episode = j["episode"].get<std::size_t>();
    if (j.contains("state")) r.state = token_list(j, line, "state");
    return r;
  }
  if (type == "act") {
    Act a;
    a.state = token_list(j, line, "state");
    if (!j.contains("step") || !j["step"].is_number_integer()) violation(line, "act needs 'step'");
    a.step = j["step"].get<int>();
    return a;
  }
  if (type == "shutdown") return Shutdown{};
  violation(line, "unknown request type '" + type + "'");
}

Response parse_response(std::string_view line) {
  const json j = parse_object(line);
  Response r;
  if (j.contains("ok")) {
    if (!j["ok"].is_boolean()) violation(line, "'ok' must be boolean");
    r.ok = j["ok"].get<bool>();
  }
  if (j.contains("action")) r.action = token_list(j, line, "action");
  if (j.contains("error")) {
    if (!j["error"].is_string()) violation(line, "'error' must be a string");
    r.error = j["error"].get<std::string>();
  }
  return r;
}

json hello_manifest(const TaskSpec& spec, const std::vector<Token>& vocab_states,
                    const std::vector<std::string>& vocab_actions) {
  return {{"task", std::string(to_string(spec.task))},
          {"metric", std::string(to_string(spec.metric))},
          {"design", spec.design},
          {"action_length", spec.action_length},
          {"pos_vocab_bound", spec.pos_vocab_bound},
          {"max_steps", spec.max_steps},
          {"vocab_states", vocab_states},
          {"vocab_actions", vocab_actions}};
}

}  // namespace editgym::protocol
