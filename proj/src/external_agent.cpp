#include "editgym/external_agent.hpp"

#include <cerrno>
#include <csignal>
#include <cstring>
#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include "editgym/error.hpp"
#include "editgym/log.hpp"
#include "editgym/protocol.hpp"

namespace editgym {

ExternalAgent::ExternalAgent(std::string command, nlohmann::json hello_manifest,
                             std::chrono::milliseconds timeout)
    : command_(std::move(command)), hello_(std::move(hello_manifest)), timeout_(timeout) {
  std::signal(SIGPIPE, SIG_IGN);
  spawn();
}

ExternalAgent::~ExternalAgent() {
  if (pid_ > 0 && !broken_) {
    try {
      send_line(protocol::serialize(protocol::Request{protocol::Shutdown{}}));
    } catch (const Error&) {
    }
  }
  kill_child();
}

void ExternalAgent::spawn() {
  int in_pipe[2], out_pipe[2];
  if (pipe2(in_pipe, O_CLOEXEC) != 0) throw Error(ErrorCode::SpawnFailed, std::strerror(errno));
  if (pipe2(out_pipe, O_CLOEXEC) != 0) {
    close(in_pipe[0]);
    close(in_pipe[1]);
    throw Error(ErrorCode::SpawnFailed, std::strerror(errno));
  }
  const pid_t pid = fork();
  if (pid < 0) {
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) close(fd);
    throw Error(ErrorCode::SpawnFailed, std::strerror(errno));
  }
  if (pid == 0) {
    dup2(in_pipe[0], STDIN_FILENO);
    dup2(out_pipe[1], STDOUT_FILENO);
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) close(fd);
    execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(in_pipe[0]);
  close(out_pipe[1]);
  pid_ = pid;
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];
  buffer_.clear();
  broken_ = false;

  try {
    const auto resp = protocol::parse_response(exchange(protocol::serialize(protocol::Request{protocol::Hello{hello_}})));
    if (resp.ok != true)
      throw Error(ErrorCode::SpawnFailed, "agent refused hello" + (resp.error ? ": " + *resp.error : std::string()));
  } catch (const Error& e) {
    kill_child();
    if (e.code() == ErrorCode::SpawnFailed) throw;
    throw Error(ErrorCode::SpawnFailed, std::string("hello failed: ") + e.what());
  }
  logger().debug("spawned agent pid {}: {}", pid_, command_);
}

void ExternalAgent::kill_child() {
  if (to_child_ >= 0) close(to_child_);
  if (from_child_ >= 0) close(from_child_);
  to_child_ = from_child_ = -1;
  if (pid_ > 0) {
    // Give a well-behaved agent a moment to exit after shutdown / EOF.
    int status = 0;
    for (int i = 0; i < 50; ++i) {
      if (waitpid(pid_, &status, WNOHANG) == pid_) {
        pid_ = -1;
        return;
      }
      usleep(2000);
    }
    kill(pid_, SIGKILL);
    waitpid(pid_, &status, 0);
    pid_ = -1;
  }
}

void ExternalAgent::send_line(const std::string& line) {
  std::string data = line + '\n';
  std::size_t off = 0;
  while (off < data.size()) {
    const ssize_t n = write(to_child_, data.data() + off, data.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::AgentFailure, std::string("write to agent failed: ") + std::strerror(errno));
    }
    off += static_cast<std::size_t>(n);
  }
}

std::string ExternalAgent::read_line() {
  using Clock = std::chrono::steady_clock;
  const auto deadline = Clock::now() + timeout_;
  for (;;) {
    if (auto nl = buffer_.find('\n'); nl != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
    if (left.count() <= 0)
      throw Error(ErrorCode::Timeout, "no response within " + std::to_string(timeout_.count()) + " ms");
    pollfd pfd{from_child_, POLLIN, 0};
    const int rc = poll(&pfd, 1, static_cast<int>(left.count()));
    if (rc < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::AgentFailure, std::string("poll failed: ") + std::strerror(errno));
    }
    if (rc == 0) continue;
    char chunk[4096];
    const ssize_t n = read(from_child_, chunk, sizeof chunk);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::AgentFailure, std::string("read failed: ") + std::strerror(errno));
    }
    if (n == 0) throw Error(ErrorCode::AgentFailure, "agent closed its output");
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

std::string ExternalAgent::exchange(const std::string& request) {
  try {
    send_line(request);
    return read_line();
  } catch (const Error&) {
    broken_ = true;
    throw;
  }
}

void ExternalAgent::begin_episode(const TaskSpec& spec, std::size_t episode, const State& x) {
  if (broken_ || pid_ <= 0) {
    kill_child();
    spawn();
  }
  protocol::Reset reset{std::string(to_string(spec.task)), episode, x.tokens};
  try {
    const auto resp = protocol::parse_response(exchange(protocol::serialize(protocol::Request{reset})));
    if (resp.ok != true) throw Error(ErrorCode::ProtocolViolation, "reset not acknowledged");
  } catch (const Error&) {
    broken_ = true;
    throw;
  }
}

ActionSeq ExternalAgent::act(const TaskSpec& spec, const State& state, int step) {
  const std::string line = exchange(protocol::serialize(protocol::Request{protocol::Act{state.tokens, step}}));
  try {
    const auto resp = protocol::parse_response(line);
    if (!resp.action) throw Error(ErrorCode::ProtocolViolation, "missing 'action' in line: " + line);
    if (resp.action->size() != static_cast<std::size_t>(spec.action_length))
      throw Error(ErrorCode::ProtocolViolation, "action length " + std::to_string(resp.action->size()) +
                                                     " != " + std::to_string(spec.action_length) +
                                                     " in line: " + line);
    return parse_action(*resp.action);
  } catch (const Error&) {
    broken_ = true;
    throw;
  }
}

}  // namespace editgym
