#include "editgym/core_types.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "editgym/error.hpp"

namespace editgym {

State parse_state(std::string_view text) {
  State s;
  std::size_t i = 0;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  };
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) s.tokens.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return s;
}

std::string render_state(const State& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += s[i];
  }
  return out;
}

namespace {

constexpr std::string_view kPosPrefix = "POS_";

std::optional<int> parse_pos_index(std::string_view text) {
  if (!text.starts_with(kPosPrefix)) return std::nullopt;
  auto digits = text.substr(kPosPrefix.size());
  if (digits.empty() || (digits.size() > 1 && digits[0] == '0')) return std::nullopt;
  if (!std::all_of(digits.begin(), digits.end(),
                   [](char c) { return c >= '0' && c <= '9'; }))
    return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  return value;
}

}  // namespace

std::string to_string(const ActionToken& tok) {
  struct Visitor {
    std::string operator()(const PosToken& p) const {
      return std::string(kPosPrefix) + std::to_string(p.index);
    }
    std::string operator()(const ContentToken& c) const { return c.text; }
    std::string operator()(const VerbToken& v) const {
      switch (v.verb) {
        case Verb::Insert: return "INSERT";
        case Verb::Delete: return "DELETE";
        case Verb::Replace: return "REPLACE";
      }
      return "INSERT";
    }
    std::string operator()(const DoneToken&) const { return "DONE"; }
  };
  return std::visit(Visitor{}, tok);
}

ActionToken parse_action_token(std::string_view text) {
  if (text == "DONE") return DoneToken{};
  if (text == "INSERT") return VerbToken{Verb::Insert};
  if (text == "DELETE") return VerbToken{Verb::Delete};
  if (text == "REPLACE") return VerbToken{Verb::Replace};
  if (auto k = parse_pos_index(text)) return PosToken{*k};
  return ContentToken{std::string(text)};
}

bool ActionSeq::is_done() const noexcept {
  return !tokens.empty() &&
         std::all_of(tokens.begin(), tokens.end(), [](const ActionToken& t) {
           return std::holds_alternative<DoneToken>(t);
         });
}

bool ActionSeq::is_partial_done() const noexcept {
  auto n = std::count_if(tokens.begin(), tokens.end(), [](const ActionToken& t) {
    return std::holds_alternative<DoneToken>(t);
  });
  return n > 0 && static_cast<std::size_t>(n) < tokens.size();
}

ActionSeq ActionSeq::done(std::size_t length) {
  return ActionSeq{std::vector<ActionToken>(length, DoneToken{})};
}

std::vector<std::string> to_strings(const ActionSeq& a) {
  std::vector<std::string> out;
  out.reserve(a.size());
  for (const auto& t : a.tokens) out.push_back(to_string(t));
  return out;
}

ActionSeq parse_action(const std::vector<std::string>& texts) {
  ActionSeq a;
  a.tokens.reserve(texts.size());
  for (const auto& t : texts) a.tokens.push_back(parse_action_token(t));
  return a;
}

std::string render_action(const ActionSeq& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += to_string(a.tokens[i]);
  }
  return out + "]";
}

std::string describe(const EditOp& op) {
  std::ostringstream os;
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Insert>)
          os << "Insert(" << o.pos << ", \"" << o.token << "\")";
        else if constexpr (std::is_same_v<T, Delete>)
          os << "Delete(" << o.pos << ")";
        else if constexpr (std::is_same_v<T, Replace>)
          os << "Replace(" << o.pos << ", \"" << o.token << "\")";
        else
          os << "SpanReplace(" << o.left << ", " << o.right << ", \"" << o.token << "\")";
      },
      op);
  return os.str();
}

std::string_view to_string(Task t) {
  switch (t) {
    case Task::AOR: return "aor";
    case Task::AES: return "aes";
    case Task::AEC: return "aec";
  }
  return "aor";
}

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::Levenshtein: return "levenshtein";
    case Metric::LCS: return "lcs";
    case Metric::Self: return "self";
  }
  return "levenshtein";
}

Task parse_task(std::string_view text) {
  if (text == "aor" || text == "AOR") return Task::AOR;
  if (text == "aes" || text == "AES") return Task::AES;
  if (text == "aec" || text == "AEC") return Task::AEC;
  throw Error(ErrorCode::Usage, "unknown task '" + std::string(text) + "'");
}

Metric parse_metric(std::string_view text) {
  if (text == "levenshtein") return Metric::Levenshtein;
  if (text == "lcs") return Metric::LCS;
  if (text == "self") return Metric::Self;
  throw Error(ErrorCode::Usage, "unknown metric '" + std::string(text) + "'");
}

Metric default_metric(Task t) {
  return t == Task::AES ? Metric::Self : Metric::Levenshtein;
}

int action_length_for(Task t) { return t == Task::AOR ? 2 : 3; }

TaskSpec TaskSpec::defaults(Task t) {
  TaskSpec s;
  s.task = t;
  s.n = t == Task::AES ? 100 : 10;
  s.l = 5;
  s.d = 10000;
  s.metric = default_metric(t);
  s.design = 1;
  s.action_length = action_length_for(t);
  s.pos_vocab_bound = 64;
  s.max_steps = t == Task::AEC ? 8 : 12;
  return s;
}

}  // namespace editgym
