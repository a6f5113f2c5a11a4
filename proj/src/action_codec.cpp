#include "editgym/action_codec.hpp"

#include <array>

#include "editgym/error.hpp"

namespace editgym {

namespace {

// Slot index of (pos_left, pos_right, token) for each AES design.
std::array<std::size_t, 3> span_slots(int design) {
  switch (design) {
    case 1: return {0, 1, 2};  // [Pos_L, Pos_R, Tok]
    case 2: return {0, 2, 1};  // [Pos_L, Tok, Pos_R]
    case 3: return {1, 2, 0};  // [Tok, Pos_L, Pos_R]
  }
  throw Error(ErrorCode::Usage, "action design must be 1, 2 or 3");
}

[[noreturn]] void malformed(const ActionSeq& a, const std::string& why) {
  throw Error(ErrorCode::MalformedAction, render_action(a) + ": " + why);
}

PosToken pos_token(std::size_t pos, const TaskSpec& spec) {
  if (pos > static_cast<std::size_t>(spec.pos_vocab_bound))
    throw Error(ErrorCode::MalformedAction,
                "position " + std::to_string(pos) + " exceeds vocabulary bound " +
                    std::to_string(spec.pos_vocab_bound));
  return PosToken{static_cast<int>(pos)};
}

ContentToken content_token(const Token& t) {
  auto parsed = parse_action_token(t);
  if (!std::holds_alternative<ContentToken>(parsed))
    throw Error(ErrorCode::UnsupportedOp, "content '" + t + "' collides with a reserved token");
  return ContentToken{t};
}

std::size_t expect_pos(const ActionSeq& a, std::size_t slot, const TaskSpec& spec,
                       bool enforce_vocab) {
  const auto* p = std::get_if<PosToken>(&a.tokens[slot]);
  if (!p) malformed(a, "slot " + std::to_string(slot) + " must be a position");
  if (p->index < 0) malformed(a, "negative position");
  if (enforce_vocab && p->index > spec.pos_vocab_bound)
    malformed(a, "position beyond vocabulary bound " + std::to_string(spec.pos_vocab_bound));
  return static_cast<std::size_t>(p->index);
}

const Token& expect_content(const ActionSeq& a, std::size_t slot) {
  const auto* c = std::get_if<ContentToken>(&a.tokens[slot]);
  if (!c) malformed(a, "slot " + std::to_string(slot) + " must be a content token");
  return c->text;
}

}  // namespace

ActionSchema schema_for(const TaskSpec& spec) {
  switch (spec.task) {
    case Task::AOR: return ActionSchema::InsertOnly;
    case Task::AES: return spec.metric == Metric::Self ? ActionSchema::Span : ActionSchema::Verb;
    case Task::AEC: return ActionSchema::Verb;
  }
  return ActionSchema::Verb;
}

ActionSeq encode_action(const EditOp& op, const TaskSpec& spec) {
  const ActionSchema schema = schema_for(spec);
  auto unsupported = [&] {
    throw Error(ErrorCode::UnsupportedOp,
                describe(op) + " is not expressible for task " + std::string(to_string(spec.task)));
  };
  ActionSeq a;
  switch (schema) {
    case ActionSchema::InsertOnly: {
      const auto* ins = std::get_if<Insert>(&op);
      if (!ins) unsupported();
      a.tokens = {pos_token(ins->pos, spec), content_token(ins->token)};
      break;
    }
    case ActionSchema::Span: {
      const auto* span = std::get_if<SpanReplace>(&op);
      if (!span) unsupported();
      const auto slots = span_slots(spec.design);
      a.tokens.resize(3);
      a.tokens[slots[0]] = pos_token(span->left, spec);
      a.tokens[slots[1]] = pos_token(span->right, spec);
      a.tokens[slots[2]] = content_token(span->token);
      break;
    }
    case ActionSchema::Verb: {
      if (const auto* ins = std::get_if<Insert>(&op)) {
        a.tokens = {VerbToken{Verb::Insert}, pos_token(ins->pos, spec), content_token(ins->token)};
      } else if (const auto* del = std::get_if<Delete>(&op)) {
        const auto p = pos_token(del->pos, spec);
        a.tokens = {VerbToken{Verb::Delete}, p, p};
      } else if (const auto* rep = std::get_if<Replace>(&op)) {
        a.tokens = {VerbToken{Verb::Replace}, pos_token(rep->pos, spec),
                    content_token(rep->token)};
      } else {
        unsupported();
      }
      break;
    }
  }
  return a;
}

std::optional<EditOp> decode_action(const ActionSeq& a, const TaskSpec& spec,
                                    bool enforce_vocab) {
  if (a.size() != static_cast<std::size_t>(spec.action_length))
    malformed(a, "expected " + std::to_string(spec.action_length) + " tokens");
  if (a.is_done()) return std::nullopt;
  if (a.is_partial_done()) malformed(a, "partial DONE");

  switch (schema_for(spec)) {
    case ActionSchema::InsertOnly:
      return Insert{expect_pos(a, 0, spec, enforce_vocab), expect_content(a, 1)};
    case ActionSchema::Span: {
      const auto slots = span_slots(spec.design);
      const auto left = expect_pos(a, slots[0], spec, enforce_vocab);
      const auto right = expect_pos(a, slots[1], spec, enforce_vocab);
      if (left >= right) malformed(a, "span requires pos_left < pos_right");
      return SpanReplace{left, right, expect_content(a, slots[2])};
    }
    case ActionSchema::Verb: {
      const auto* verb = std::get_if<VerbToken>(&a.tokens[0]);
      if (!verb) malformed(a, "slot 0 must be a verb");
      const auto pos = expect_pos(a, 1, spec, enforce_vocab);
      switch (verb->verb) {
        case Verb::Insert: return Insert{pos, expect_content(a, 2)};
        case Verb::Replace: return Replace{pos, expect_content(a, 2)};
        case Verb::Delete:
          if (expect_pos(a, 2, spec, enforce_vocab) != pos)
            malformed(a, "DELETE repeats its position");
          return Delete{pos};
      }
    }
  }
  malformed(a, "unknown schema");
}

}  // namespace editgym
