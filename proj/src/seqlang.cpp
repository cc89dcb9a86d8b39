#include "zitterlab/seqlang.hpp"

#include <cctype>
#include <utility>

namespace zitterlab::seqlang {

SeqExprPtr SeqExpr::atom(std::vector<std::string> outcomes) {
  return std::make_shared<SeqExpr>(Atom{std::move(outcomes)});
}
SeqExprPtr SeqExpr::series(SeqExprPtr lhs, SeqExprPtr rhs) {
  return std::make_shared<SeqExpr>(Series{std::move(lhs), std::move(rhs)});
}
SeqExprPtr SeqExpr::parallel(SeqExprPtr lhs, SeqExprPtr rhs) {
  return std::make_shared<SeqExpr>(Parallel{std::move(lhs), std::move(rhs)});
}

namespace {

struct Token {
  enum Kind {
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Dot,
    Pipe,
    Ident,
    End
  };
  Kind kind;
  std::string text;
  std::size_t pos;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    switch (c) {
      case '[':
        out.push_back({Token::LBracket, "[", i++});
        continue;
      case ']':
        out.push_back({Token::RBracket, "]", i++});
        continue;
      case '(':
        out.push_back({Token::LParen, "(", i++});
        continue;
      case ')':
        out.push_back({Token::RParen, ")", i++});
        continue;
      case ',':
        out.push_back({Token::Comma, ",", i++});
        continue;
      case '.':
        out.push_back({Token::Dot, ".", i++});
        continue;
      case '|':
        out.push_back({Token::Pipe, "|", i++});
        continue;
      default:
        break;
    }
    if (ident_char(c)) {
      std::size_t start = i;
      while (i < text.size() && ident_char(text[i])) ++i;
      out.push_back(
          {Token::Ident, std::string(text.substr(start, i - start)), start});
      continue;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Token::End, "", text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  SeqExprPtr run() {
    SeqExprPtr e = expr();
    expect(Token::End, "end of input");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_++]; }

  bool is_parallel_op() const {
    const Token& t = peek();
    return t.kind == Token::Pipe || (t.kind == Token::Ident && t.text == "v");
  }

  void expect(Token::Kind kind, const char* what) {
    if (peek().kind != kind) {
      throw SyntaxError(std::string("expected ") + what, peek().pos);
    }
    ++pos_;
  }

  SeqExprPtr expr() {
    SeqExprPtr lhs = term();
    while (is_parallel_op()) {
      next();
      lhs = SeqExpr::parallel(std::move(lhs), term());
    }
    return lhs;
  }

  SeqExprPtr term() {
    SeqExprPtr lhs = factor();
    while (peek().kind == Token::Dot) {
      next();
      lhs = SeqExpr::series(std::move(lhs), factor());
    }
    return lhs;
  }

  SeqExprPtr factor() {
    if (peek().kind == Token::LParen) {
      next();
      SeqExprPtr e = expr();
      expect(Token::RParen, "')'");
      return e;
    }
    if (peek().kind == Token::LBracket) return atom();
    throw SyntaxError("expected atom or '('", peek().pos);
  }

  // One slot of an atom: a single outcome or a coarse-grained group.
  std::vector<std::string> item() {
    if (peek().kind == Token::Ident) return {next().text};
    if (peek().kind == Token::LParen) {
      next();
      std::vector<std::string> group;
      for (;;) {
        if (peek().kind != Token::Ident) {
          throw SyntaxError("expected outcome name", peek().pos);
        }
        group.push_back(next().text);
        if (peek().kind == Token::Comma) {
          next();
          continue;
        }
        break;
      }
      expect(Token::RParen, "')'");
      return group;
    }
    throw SyntaxError("expected outcome or group", peek().pos);
  }

  SeqExprPtr atom() {
    const std::size_t open_pos = peek().pos;
    expect(Token::LBracket, "'['");
    if (peek().kind == Token::RBracket) throw EmptyAtom(open_pos);
    std::vector<std::vector<std::string>> slots;
    for (;;) {
      slots.push_back(item());
      if (peek().kind == Token::Comma) {
        next();
        continue;
      }
      break;
    }
    expect(Token::RBracket, "']'");
    return desugar(slots);
  }

  // Cartesian expansion of coarse slots, earlier slots varying slowest,
  // folded with the parallel operation.
  static SeqExprPtr desugar(const std::vector<std::vector<std::string>>& slots) {
    std::vector<std::vector<std::string>> expansions{{}};
    for (const auto& slot : slots) {
      std::vector<std::vector<std::string>> grown;
      grown.reserve(expansions.size() * slot.size());
      for (const auto& prefix : expansions) {
        for (const auto& choice : slot) {
          auto copy = prefix;
          copy.push_back(choice);
          grown.push_back(std::move(copy));
        }
      }
      expansions = std::move(grown);
    }
    SeqExprPtr e = SeqExpr::atom(expansions.front());
    for (std::size_t i = 1; i < expansions.size(); ++i) {
      e = SeqExpr::parallel(std::move(e), SeqExpr::atom(expansions[i]));
    }
    return e;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Precedence: Parallel = 0, Series = 1, Atom needs no parentheses.
void print(const SeqExpr& e, int parent_prec, std::string& out) {
  if (const auto* a = std::get_if<SeqExpr::Atom>(&e.node())) {
    out += '[';
    for (std::size_t i = 0; i < a->outcomes.size(); ++i) {
      if (i) out += ',';
      out += a->outcomes[i];
    }
    out += ']';
    return;
  }
  if (const auto* s = std::get_if<SeqExpr::Series>(&e.node())) {
    const bool wrap = parent_prec > 1;
    if (wrap) out += '(';
    print(*s->lhs, 1, out);
    out += '.';
    print(*s->rhs, 1, out);
    if (wrap) out += ')';
    return;
  }
  const auto& p = std::get<SeqExpr::Parallel>(e.node());
  const bool wrap = parent_prec > 0;
  if (wrap) out += '(';
  print(*p.lhs, 0, out);
  out += '|';
  print(*p.rhs, 0, out);
  if (wrap) out += ')';
}

std::optional<std::string> first_outcome(const SeqExpr& e);
std::optional<std::string> last_outcome(const SeqExpr& e);

std::optional<std::string> first_outcome(const SeqExpr& e) {
  if (const auto* a = std::get_if<SeqExpr::Atom>(&e.node())) {
    return a->outcomes.front();
  }
  if (const auto* s = std::get_if<SeqExpr::Series>(&e.node())) {
    return first_outcome(*s->lhs);
  }
  const auto& p = std::get<SeqExpr::Parallel>(e.node());
  auto l = first_outcome(*p.lhs);
  auto r = first_outcome(*p.rhs);
  if (l && r && *l == *r) return l;
  return std::nullopt;
}

std::optional<std::string> last_outcome(const SeqExpr& e) {
  if (const auto* a = std::get_if<SeqExpr::Atom>(&e.node())) {
    return a->outcomes.back();
  }
  if (const auto* s = std::get_if<SeqExpr::Series>(&e.node())) {
    return last_outcome(*s->rhs);
  }
  const auto& p = std::get<SeqExpr::Parallel>(e.node());
  auto l = last_outcome(*p.lhs);
  auto r = last_outcome(*p.rhs);
  if (l && r && *l == *r) return l;
  return std::nullopt;
}

}  // namespace

std::string pretty_print(const SeqExpr& expr) {
  std::string out;
  print(expr, 0, out);
  return out;
}

Amplitude evaluate(const SeqExpr& expr, const AmplitudeEnv& env) {
  if (const auto* a = std::get_if<SeqExpr::Atom>(&expr.node())) {
    // Left-associative series decomposition into adjacent links; a
    // single-outcome atom is the empty product.
    Amplitude acc(1.0, 0.0);
    for (std::size_t i = 0; i + 1 < a->outcomes.size(); ++i) {
      auto link = env.find(a->outcomes[i], a->outcomes[i + 1]);
      if (!link) throw MissingLink(a->outcomes[i], a->outcomes[i + 1]);
      acc = amp_mul(acc, *link);
    }
    return acc;
  }
  if (const auto* s = std::get_if<SeqExpr::Series>(&expr.node())) {
    auto l = last_outcome(*s->lhs);
    auto r = first_outcome(*s->rhs);
    if (!l || !r || *l != *r) {
      throw ChainMismatch(
          "series operands do not share a boundary outcome (" +
          (l ? *l : std::string("?")) + " vs " + (r ? *r : std::string("?")) +
          ")");
    }
    return amp_mul(evaluate(*s->lhs, env), evaluate(*s->rhs, env));
  }
  const auto& p = std::get<SeqExpr::Parallel>(expr.node());
  return amp_add(evaluate(*p.lhs, env), evaluate(*p.rhs, env));
}

SeqExprPtr parse(std::string_view text) { return Parser(text).run(); }

}  // namespace zitterlab::seqlang
