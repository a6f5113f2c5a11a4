#pragma once

// Recursive-descent evaluator shared by check_equation and the generators.
// Number must model an exact field (rational) constructible from an integer
// parsed out of a digit string.

#include <optional>
#include <span>
#include <string>

#include "editgym/core_types.hpp"

namespace editgym::detail {

struct DivideByZero {};

template <typename Number, typename ParseInt>
class ExprParser {
 public:
  ExprParser(std::span<const Token> toks, ParseInt parse_int)
      : toks_(toks), parse_int_(parse_int) {}

  // nullopt on syntax error; throws DivideByZero.
  std::optional<Number> expr() {
    bool negate = false;
    if (peek("-")) {
      negate = true;
      ++pos_;
    }
    auto value = term();
    if (!value) return std::nullopt;
    if (negate) *value = -*value;
    while (peek("+") || peek("-")) {
      const bool plus = toks_[pos_++] == "+";
      auto rhs = term();
      if (!rhs) return std::nullopt;
      if (plus)
        *value += *rhs;
      else
        *value -= *rhs;
    }
    return value;
  }

  bool at(std::string_view t) const { return peek(t); }
  bool done() const { return pos_ == toks_.size(); }
  void skip() { ++pos_; }

 private:
  std::optional<Number> term() {
    auto value = factor();
    if (!value) return std::nullopt;
    while (peek("*") || peek("/")) {
      const bool mul = toks_[pos_++] == "*";
      auto rhs = factor();
      if (!rhs) return std::nullopt;
      if (mul) {
        *value *= *rhs;
      } else {
        if (*rhs == Number(0)) throw DivideByZero{};
        *value /= *rhs;
      }
    }
    return value;
  }

  std::optional<Number> factor() {
    if (pos_ >= toks_.size()) return std::nullopt;
    if (toks_[pos_] == "(") {
      ++pos_;
      auto inner = expr();
      if (!inner || !peek(")")) return std::nullopt;
      ++pos_;
      return inner;
    }
    const Token& t = toks_[pos_];
    if (t.empty()) return std::nullopt;
    for (char c : t)
      if (c < '0' || c > '9') return std::nullopt;
    ++pos_;
    return parse_int_(t);
  }

  bool peek(std::string_view t) const { return pos_ < toks_.size() && toks_[pos_] == t; }

  std::span<const Token> toks_;
  ParseInt parse_int_;
  std::size_t pos_ = 0;
};

enum class Verdict { Valid, Invalid, Malformed };

/// Evaluates `expr = expr` over Number.
template <typename Number, typename ParseInt>
Verdict evaluate_equation(std::span<const Token> toks, ParseInt parse_int) {
  std::size_t eq = toks.size(), count = 0;
  int depth = 0;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i] == "(") ++depth;
    if (toks[i] == ")") --depth;
    if (toks[i] == "=") {
      if (depth != 0) return Verdict::Malformed;
      eq = i;
      ++count;
    }
  }
  if (count != 1) return Verdict::Malformed;
  try {
    ExprParser<Number, ParseInt> lhs(toks.subspan(0, eq), parse_int);
    auto l = lhs.expr();
    if (!l || !lhs.done()) return Verdict::Malformed;
    ExprParser<Number, ParseInt> rhs(toks.subspan(eq + 1), parse_int);
    auto r = rhs.expr();
    if (!r || !rhs.done()) return Verdict::Malformed;
    return *l == *r ? Verdict::Valid : Verdict::Invalid;
  } catch (const DivideByZero&) {
    return Verdict::Invalid;
  }
}

}  // namespace editgym::detail
