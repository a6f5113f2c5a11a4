// Protocol agent that replays stored expert trajectories: episode i plays the
// i-th expert record of --traj. Used to check that an out-of-process agent
// scores exactly like the in-process expert.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "editgym/error.hpp"
#include "editgym/io.hpp"
#include "editgym/protocol.hpp"

using namespace editgym;

int main(int argc, char** argv) {
  CLI::App app{"editgym-replay-agent"};
  std::string traj_path;
  app.add_option("--traj", traj_path, "expert trajectory file")->required();
  CLI11_PARSE(app, argc, argv);

  std::vector<Trajectory> experts;
  try {
    for (auto& t : io::read_trajectories(traj_path))
      if (t.provenance == Provenance::Expert) experts.push_back(std::move(t));
  } catch (const Error& e) {
    std::cerr << "replay-agent: " << e.what() << '\n';
    return 2;
  }

  std::size_t action_length = 0;
  const Trajectory* current = nullptr;
  std::string line;
  while (std::getline(std::cin, line)) {
    protocol::Response resp;
    try {
      const auto req = protocol::parse_request(line);
      if (const auto* hello = std::get_if<protocol::Hello>(&req)) {
        action_length = hello->manifest.value("action_length", 0);
        resp.ok = true;
      } else if (const auto* reset = std::get_if<protocol::Reset>(&req)) {
        current = reset->episode < experts.size() ? &experts[reset->episode] : nullptr;
        resp.ok = current != nullptr;
        if (!current) resp.error = "no trajectory for episode " + std::to_string(reset->episode);
      } else if (const auto* act = std::get_if<protocol::Act>(&req)) {
        std::vector<std::string> action(action_length, "DONE");
        if (current) {
          const State s(act->state);
          for (const Step& st : current->steps)
            if (st.state == s) {
              action = to_strings(st.action);
              break;
            }
        }
        resp.action = std::move(action);
      } else {
        return 0;
      }
    } catch (const Error& e) {
      resp.ok = false;
      resp.error = e.what();
    }
    std::cout << protocol::serialize(resp) << std::endl;
  }
  return 0;
}
