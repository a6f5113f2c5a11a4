#pragma once

#include <optional>

#include "editgym/core_types.hpp"

namespace editgym {

/// Slot layout of an action, fixed by task and metric.
enum class ActionSchema {
  InsertOnly,  // [POS, TOK]
  Span,        // permutation of [POS_L, POS_R, TOK] by design
  Verb,        // [VERB, POS, ARG]
};

ActionSchema schema_for(const TaskSpec& spec);

/// Throws Error{UnsupportedOp} if the schema cannot express `op`, and
/// Error{MalformedAction} if a position exceeds spec.pos_vocab_bound.
ActionSeq encode_action(const EditOp& op, const TaskSpec& spec);

/// Inverse of encode_action. Returns nullopt for the all-DONE action.
/// Throws Error{MalformedAction} on any slot-schema violation.
///
/// With `enforce_vocab` false, positions beyond pos_vocab_bound are accepted;
/// trajectory augmentation uses this for actions it rebases internally.
std::optional<EditOp> decode_action(const ActionSeq& a, const TaskSpec& spec,
                                    bool enforce_vocab = true);

}  // namespace editgym
