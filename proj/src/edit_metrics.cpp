#include "editgym/edit_metrics.hpp"

#include <vector>

#include "editgym/error.hpp"

namespace editgym {

namespace {

// Suffix cost table: cost(i, j) transforms x[i..] into y[j..]. Walking it
// forward from (0, 0) yields ops left to right, and the intermediate state at
// (i, j) is y[..j] + x[i..], so every op lands at position j.
class SuffixTable {
 public:
  SuffixTable(std::size_t m, std::size_t n) : cols_(n + 1), cells_((m + 1) * (n + 1)) {}
  int& operator()(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
  int operator()(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

 private:
  std::size_t cols_;
  std::vector<int> cells_;
};

SuffixTable fill_table(const State& x, const State& y, bool allow_replace) {
  const std::size_t m = x.size(), n = y.size();
  SuffixTable cost(m, n);
  for (std::size_t i = m + 1; i-- > 0;) {
    for (std::size_t j = n + 1; j-- > 0;) {
      if (i == m) {
        cost(i, j) = static_cast<int>(n - j);
      } else if (j == n) {
        cost(i, j) = static_cast<int>(m - i);
      } else if (x[i] == y[j]) {
        cost(i, j) = cost(i + 1, j + 1);
      } else {
        int best = std::min(cost(i + 1, j), cost(i, j + 1)) + 1;
        if (allow_replace) best = std::min(best, cost(i + 1, j + 1) + 1);
        cost(i, j) = best;
      }
    }
  }
  return cost;
}

OpScript trace_table(const State& x, const State& y, const SuffixTable& cost,
                     bool allow_replace) {
  const std::size_t m = x.size(), n = y.size();
  OpScript ops;
  std::size_t i = 0, j = 0;
  while (i < m || j < n) {
    const int here = cost(i, j);
    if (i < m && j < n && x[i] == y[j] && cost(i + 1, j + 1) == here) {
      ++i, ++j;
    } else if (allow_replace && i < m && j < n && cost(i + 1, j + 1) + 1 == here) {
      ops.emplace_back(Replace{j, y[j]});
      ++i, ++j;
    } else if (i < m && cost(i + 1, j) + 1 == here) {
      ops.emplace_back(Delete{j});
      ++i;
    } else {
      ops.emplace_back(Insert{j, y[j]});
      ++j;
    }
  }
  return ops;
}

OpScript self_ops(const State& x, const State& y) {
  OpScript ops;
  std::size_t i = 0, j = 0;
  while (i < x.size()) {
    if (x[i] == "(") {
      std::size_t r = i + 1;
      while (r < x.size() && x[r] != ")") {
        if (x[r] == "(")
          throw Error(ErrorCode::SelfMalformed, "nested group at token " + std::to_string(r));
        ++r;
      }
      if (r == x.size())
        throw Error(ErrorCode::SelfMalformed, "unclosed group at token " + std::to_string(i));
      if (j >= y.size())
        throw Error(ErrorCode::Incompatible, "group at token " + std::to_string(i) +
                                                 " has no target token");
      ops.emplace_back(SpanReplace{j, j + (r - i), y[j]});
      i = r + 1;
      ++j;
    } else if (x[i] == ")") {
      throw Error(ErrorCode::SelfMalformed, "unmatched ')' at token " + std::to_string(i));
    } else {
      if (j >= y.size() || x[i] != y[j])
        throw Error(ErrorCode::Incompatible,
                    "token " + std::to_string(i) + " outside groups does not match target");
      ++i;
      ++j;
    }
  }
  if (j != y.size())
    throw Error(ErrorCode::Incompatible, "target has trailing tokens");
  return ops;
}

}  // namespace

OpScript dp_ops(const State& x, const State& y, Metric metric) {
  if (metric == Metric::Self) return self_ops(x, y);
  const bool allow_replace = metric == Metric::Levenshtein;
  return trace_table(x, y, fill_table(x, y, allow_replace), allow_replace);
}

State apply_op(const State& s, const EditOp& op) {
  std::vector<Token> t = s.tokens;
  const std::size_t m = t.size();
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::OutOfRange, describe(op) + " on state of length " +
                                           std::to_string(m) + ": " + why);
  };
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Insert>) {
          if (o.pos > m) fail("insert position past end");
          t.insert(t.begin() + static_cast<std::ptrdiff_t>(o.pos), o.token);
        } else if constexpr (std::is_same_v<T, Delete>) {
          if (o.pos >= m) fail("delete position past end");
          t.erase(t.begin() + static_cast<std::ptrdiff_t>(o.pos));
        } else if constexpr (std::is_same_v<T, Replace>) {
          if (o.pos >= m) fail("replace position past end");
          t[o.pos] = o.token;
        } else {
          if (o.left >= o.right || o.right >= m) fail("span out of range");
          t.erase(t.begin() + static_cast<std::ptrdiff_t>(o.left) + 1,
                  t.begin() + static_cast<std::ptrdiff_t>(o.right) + 1);
          t[o.left] = o.token;
        }
      },
      op);
  return State(std::move(t));
}

State apply_script(const State& x, const OpScript& script) {
  State s = x;
  for (std::size_t k = 0; k < script.size(); ++k) {
    try {
      s = apply_op(s, script[k]);
    } catch (const Error& e) {
      throw Error(ErrorCode::OutOfRange, "op " + std::to_string(k) + ": " + e.what(), k);
    }
  }
  return s;
}

std::size_t edit_distance(const State& x, const State& y, Metric metric) {
  if (metric == Metric::Self)
    throw Error(ErrorCode::UnsupportedMetric, "SELF has no scalar distance");
  return static_cast<std::size_t>(fill_table(x, y, metric == Metric::Levenshtein)(0, 0));
}

}  // namespace editgym
