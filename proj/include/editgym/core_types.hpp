#pragma once

#include <chrono>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace editgym {

using Token = std::string;

/// A token sequence: both the game board and a dataset sample.
struct State {
  std::vector<Token> tokens;

  State() = default;
  State(std::vector<Token> toks) : tokens(std::move(toks)) {}
  State(std::initializer_list<Token> toks) : tokens(toks) {}

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }
  const Token& operator[](std::size_t i) const { return tokens[i]; }

  friend bool operator==(const State&, const State&) = default;
  friend auto operator<=>(const State&, const State&) = default;
};

/// Splits on runs of whitespace. Total.
State parse_state(std::string_view text);
/// Single-space join.
std::string render_state(const State& s);

// ---------------------------------------------------------------------------
// Action tokens

enum class Verb { Insert, Delete, Replace };

struct PosToken {
  int index = 0;
  friend bool operator==(const PosToken&, const PosToken&) = default;
};
struct ContentToken {
  Token text;
  friend bool operator==(const ContentToken&, const ContentToken&) = default;
};
struct VerbToken {
  Verb verb = Verb::Insert;
  friend bool operator==(const VerbToken&, const VerbToken&) = default;
};
struct DoneToken {
  friend bool operator==(const DoneToken&, const DoneToken&) = default;
};

using ActionToken = std::variant<PosToken, ContentToken, VerbToken, DoneToken>;

/// Textual encoding: POS_k, INSERT/DELETE/REPLACE, DONE, or the content text.
std::string to_string(const ActionToken& tok);
/// Inverse of to_string. Only the canonical spellings map to non-content
/// kinds; anything else is content.
ActionToken parse_action_token(std::string_view text);

struct ActionSeq {
  std::vector<ActionToken> tokens;

  std::size_t size() const noexcept { return tokens.size(); }
  /// Every token is DONE (and there is at least one).
  bool is_done() const noexcept;
  /// Some but not all tokens are DONE.
  bool is_partial_done() const noexcept;

  static ActionSeq done(std::size_t length);

  friend bool operator==(const ActionSeq&, const ActionSeq&) = default;
};

std::vector<std::string> to_strings(const ActionSeq& a);
ActionSeq parse_action(const std::vector<std::string>& texts);
/// "[POS_6, +]"
std::string render_action(const ActionSeq& a);

// ---------------------------------------------------------------------------
// Edit operations. Positions are 0-indexed into the state the op applies to;
// Insert uses insert-before semantics.

struct Insert {
  std::size_t pos = 0;
  Token token;
  friend bool operator==(const Insert&, const Insert&) = default;
};
struct Delete {
  std::size_t pos = 0;
  friend bool operator==(const Delete&, const Delete&) = default;
};
struct Replace {
  std::size_t pos = 0;
  Token token;
  friend bool operator==(const Replace&, const Replace&) = default;
};
/// Replaces tokens [left, right] inclusive with a single token.
struct SpanReplace {
  std::size_t left = 0;
  std::size_t right = 0;
  Token token;
  friend bool operator==(const SpanReplace&, const SpanReplace&) = default;
};

using EditOp = std::variant<Insert, Delete, Replace, SpanReplace>;
using OpScript = std::vector<EditOp>;

std::string describe(const EditOp& op);

// ---------------------------------------------------------------------------
// Task configuration

enum class Task { AOR, AES, AEC };
enum class Metric { Levenshtein, LCS, Self };

std::string_view to_string(Task t);
std::string_view to_string(Metric m);
Task parse_task(std::string_view text);
Metric parse_metric(std::string_view text);

/// Edit metric used for the task's published expert trajectories.
Metric default_metric(Task t);
/// 2 for AOR, 3 for AES/AEC.
int action_length_for(Task t);

struct TaskSpec {
  Task task = Task::AOR;
  int n = 10;  // integer-size bound
  int l = 5;   // number of base integers
  int d = 10000;
  Metric metric = Metric::Levenshtein;
  int design = 1;  // AES token order, 1..3
  int action_length = 2;
  int pos_vocab_bound = 64;
  int max_steps = 12;

  /// Benchmark defaults for a task (N=100 for AES, N=10 otherwise).
  static TaskSpec defaults(Task t);

  friend bool operator==(const TaskSpec&, const TaskSpec&) = default;
};

// ---------------------------------------------------------------------------
// Trajectories

enum class Provenance { Expert, Augmented };

struct Step {
  State state;
  ActionSeq action;
  friend bool operator==(const Step&, const Step&) = default;
};

struct Trajectory {
  State x;
  State y;
  std::vector<Step> steps;
  Provenance provenance = Provenance::Expert;

  std::size_t length() const noexcept { return steps.size(); }
  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

// ---------------------------------------------------------------------------
// Game results

enum class Termination { Done, StepLimit };

using Duration = std::chrono::duration<double, std::milli>;

struct GameOutcome {
  State final_state;
  int steps_taken = 0;
  int refused_count = 0;
  Termination terminated_by = Termination::Done;
  bool agent_failed = false;
  std::vector<Duration> per_step_latency;
  Duration total_latency{0};
};

}  // namespace editgym
