#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zitterlab/amplitude.hpp"

namespace zitterlab::seqlang {

// Measurement-sequence algebra over atoms of outcomes:
//   expr   := term { "|" term }          parallel (synonym: bare "v")
//   term   := factor { "." factor }      series
//   factor := atom | "(" expr ")"
//   atom   := "[" item { "," item } "]"
//   item   := IDENT | "(" IDENT { "," IDENT } ")"
// A grouped item coarse-grains the slot: the atom desugars into a parallel
// combination of fine-grained atoms, one per choice.

struct SyntaxError : std::runtime_error {
  SyntaxError(std::string message, std::size_t position)
      : std::runtime_error(std::move(message)), position(position) {}
  std::size_t position;
};

struct EmptyAtom : SyntaxError {
  explicit EmptyAtom(std::size_t position)
      : SyntaxError("atom has no outcomes", position) {}
};

struct MissingLink : std::runtime_error {
  MissingLink(std::string from_outcome, std::string to_outcome)
      : std::runtime_error("no amplitude for link (" + from_outcome + ", " +
                           to_outcome + ")"),
        from(std::move(from_outcome)),
        to(std::move(to_outcome)) {}
  std::string from;
  std::string to;
};

struct ChainMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class SeqExpr;
using SeqExprPtr = std::shared_ptr<const SeqExpr>;

class SeqExpr {
 public:
  struct Atom {
    std::vector<std::string> outcomes;
  };
  struct Series {
    SeqExprPtr lhs, rhs;
  };
  struct Parallel {
    SeqExprPtr lhs, rhs;
  };
  using Node = std::variant<Atom, Series, Parallel>;

  explicit SeqExpr(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

  static SeqExprPtr atom(std::vector<std::string> outcomes);
  static SeqExprPtr series(SeqExprPtr lhs, SeqExprPtr rhs);
  static SeqExprPtr parallel(SeqExprPtr lhs, SeqExprPtr rhs);

 private:
  Node node_;
};

SeqExprPtr parse(std::string_view text);

std::string pretty_print(const SeqExpr& expr);
inline std::string pretty_print(const SeqExprPtr& expr) {
  return pretty_print(*expr);
}

/// Amplitudes of the elementary links (m_i, m_j) appearing in expressions.
class AmplitudeEnv {
 public:
  void set(std::string from, std::string to, Amplitude a) {
    links_[{std::move(from), std::move(to)}] = a;
  }
  std::optional<Amplitude> find(const std::string& from,
                                const std::string& to) const {
    auto it = links_.find({from, to});
    if (it == links_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::map<std::pair<std::string, std::string>, Amplitude> links_;
};

/// Atoms evaluate to the series product of their link amplitudes, Parallel to
/// amp_add, Series to amp_mul. Series requires the shared boundary outcome.
Amplitude evaluate(const SeqExpr& expr, const AmplitudeEnv& env);

inline double probability(const SeqExpr& expr, const AmplitudeEnv& env) {
  return born(evaluate(expr, env));
}

}  // namespace zitterlab::seqlang
