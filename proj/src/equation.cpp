#include "editgym/equation.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "equation_eval.hpp"

namespace editgym {

std::string_view to_string(EquationVerdict v) {
  switch (v) {
    case EquationVerdict::Valid: return "VALID";
    case EquationVerdict::Invalid: return "INVALID";
    case EquationVerdict::Malformed: return "MALFORMED";
  }
  return "MALFORMED";
}

EquationVerdict check_equation(const State& s) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  auto parse_int = [](const Token& t) { return cpp_rational(cpp_int(t)); };
  switch (detail::evaluate_equation<cpp_rational>(std::span<const Token>(s.tokens), parse_int)) {
    case detail::Verdict::Valid: return EquationVerdict::Valid;
    case detail::Verdict::Invalid: return EquationVerdict::Invalid;
    case detail::Verdict::Malformed: return EquationVerdict::Malformed;
  }
  return EquationVerdict::Malformed;
}

}  // namespace editgym
