#pragma once

#include "editgym/core_types.hpp"

namespace editgym {

enum class EquationVerdict { Valid, Invalid, Malformed };

std::string_view to_string(EquationVerdict v);

/// Parses `expr = expr` with
///   expr   := ["-"] term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := INT | "(" expr ")"
/// and compares both sides in exact rational arithmetic. Division by zero is
/// Invalid; parse failures are Malformed.
EquationVerdict check_equation(const State& s);

}  // namespace editgym
