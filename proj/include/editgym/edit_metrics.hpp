#pragma once

#include "editgym/core_types.hpp"

namespace editgym {

/// Minimal left-to-right edit script turning x into y.
///
/// Each op is indexed into the state produced by all earlier ops. Ties are
/// broken deterministically: Levenshtein prefers Replace, then Delete, then
/// Insert; LCS prefers Delete over Insert. SELF emits one SpanReplace per
/// parenthesized group of x, aligned positionally with the tokens of y.
///
/// Throws Error{SelfMalformed} for unbalanced or nested groups and
/// Error{Incompatible} if x and y do not align under SELF.
OpScript dp_ops(const State& x, const State& y, Metric metric);

/// Applies one op. Throws Error{OutOfRange}.
State apply_op(const State& s, const EditOp& op);

/// Applies ops in order. Throws Error{OutOfRange} carrying the op index.
State apply_script(const State& x, const OpScript& script);

/// Unit-cost distance. Throws Error{UnsupportedMetric} for SELF.
std::size_t edit_distance(const State& x, const State& y, Metric metric);

}  // namespace editgym
