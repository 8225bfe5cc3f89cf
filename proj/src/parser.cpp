#include "autoseq/parser.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "autoseq/error.hpp"

namespace autoseq {

namespace {

enum class Tok {
  Ident, Number, Exists, Forall, True, False, Dollar,
  LParen, RParen, LBracket, RBracket, Comma, Plus, Minus,
  And, Or, Not, Implies, Iff, Eq, Ne, Lt, Le, Gt, Ge, End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t{Tok::End, {}, line, col};
    auto rest = src.substr(i);
    auto starts = [&](std::string_view p) { return rest.substr(0, p.size()) == p; };
    std::size_t len = 1;
    if (std::islower(static_cast<unsigned char>(c)) || c == '_') {
      while (len < rest.size() && (std::isalnum(static_cast<unsigned char>(rest[len])) || rest[len] == '_' ||
                                   rest[len] == '\''))
        ++len;
      t.text = std::string(rest.substr(0, len));
      t.kind = t.text == "true" ? Tok::True : t.text == "false" ? Tok::False : Tok::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (len < rest.size() && std::isdigit(static_cast<unsigned char>(rest[len]))) ++len;
      t.kind = Tok::Number;
      t.text = std::string(rest.substr(0, len));
    } else if (c == '$') {
      while (len < rest.size() && (std::isalnum(static_cast<unsigned char>(rest[len])) || rest[len] == '_' ||
                                   rest[len] == '\''))
        ++len;
      if (len == 1) throw SyntaxError("expected a relation name after '$'", line, col);
      t.kind = Tok::Dollar;
      t.text = std::string(rest.substr(1, len - 1));
    } else if (c == 'E') {
      t.kind = Tok::Exists;
    } else if (c == 'A') {
      t.kind = Tok::Forall;
    } else if (starts("<=>")) {
      t.kind = Tok::Iff;
      len = 3;
    } else if (starts("=>")) {
      t.kind = Tok::Implies;
      len = 2;
    } else if (starts("<=")) {
      t.kind = Tok::Le;
      len = 2;
    } else if (starts(">=")) {
      t.kind = Tok::Ge;
      len = 2;
    } else if (starts("!=")) {
      t.kind = Tok::Ne;
      len = 2;
    } else {
      switch (c) {
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case '[': t.kind = Tok::LBracket; break;
        case ']': t.kind = Tok::RBracket; break;
        case ',': t.kind = Tok::Comma; break;
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '&': t.kind = Tok::And; break;
        case '|': t.kind = Tok::Or; break;
        case '~': t.kind = Tok::Not; break;
        case '=': t.kind = Tok::Eq; break;
        case '<': t.kind = Tok::Lt; break;
        case '>': t.kind = Tok::Gt; break;
        default: throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
      }
    }
    if (t.text.empty()) t.text = std::string(rest.substr(0, len));
    out.push_back(std::move(t));
    advance(len);
  }
  out.push_back({Tok::End, "end of input", line, col});
  return out;
}

std::optional<Relation> relation_of(Tok t) {
  switch (t) {
    case Tok::Eq: return Relation::Eq;
    case Tok::Ne: return Relation::Ne;
    case Tok::Lt: return Relation::Lt;
    case Tok::Le: return Relation::Le;
    case Tok::Gt: return Relation::Gt;
    case Tok::Ge: return Relation::Ge;
    default: return std::nullopt;
  }
}

struct Operand {
  TermPtr term;
  std::string seq;  // non-empty for x[term]
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  FormulaPtr parse_all() {
    auto f = formula();
    if (peek().kind != Tok::End) error("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    take();
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) error(std::string("expected ") + what + ", found '" + peek().text + "'");
    return take();
  }
  [[noreturn]] void error(const std::string& msg) const { throw SyntaxError(msg, peek().line, peek().column); }

  FormulaPtr formula() {
    auto f = implication();
    while (accept(Tok::Iff)) f = Formula::binary(Formula::Kind::Iff, f, implication());
    return f;
  }

  FormulaPtr implication() {
    auto f = disjunction();
    if (accept(Tok::Implies)) return Formula::binary(Formula::Kind::Implies, f, implication());
    return f;
  }

  FormulaPtr disjunction() {
    auto f = conjunction();
    while (accept(Tok::Or)) f = Formula::binary(Formula::Kind::Or, f, conjunction());
    return f;
  }

  FormulaPtr conjunction() {
    auto f = unary();
    while (accept(Tok::And)) f = Formula::binary(Formula::Kind::And, f, unary());
    return f;
  }

  FormulaPtr unary() {
    switch (peek().kind) {
      case Tok::Not: take(); return Formula::negation(unary());
      case Tok::Exists:
      case Tok::Forall: return quantifier();
      case Tok::LParen: {
        // Either a parenthesized formula or a parenthesized term on the left
        // of a comparison; try the formula first.
        std::size_t save = pos_;
        try {
          take();
          auto f = formula();
          expect(Tok::RParen, "')'");
          return f;
        } catch (const SyntaxError& first) {
          pos_ = save;
          try {
            return atom();
          } catch (const SyntaxError& second) {
            auto further = [](const SyntaxError& x, const SyntaxError& y) {
              return x.line() != y.line() ? x.line() > y.line() : x.column() > y.column();
            };
            if (further(second, first)) throw;
            throw first;
          }
        }
      }
      default: return atom();
    }
  }

  FormulaPtr quantifier() {
    auto kind = take().kind == Tok::Exists ? Formula::Kind::Exists : Formula::Kind::Forall;
    std::vector<std::string> vars;
    do {
      const Token& v = peek();
      expect(Tok::Ident, "a variable after quantifier");
      for (const auto& b : bound_)
        if (b == v.text) throw SyntaxError("variable '" + v.text + "' is already bound", v.line, v.column);
      for (const auto& b : vars)
        if (b == v.text) throw SyntaxError("variable '" + v.text + "' bound twice", v.line, v.column);
      vars.push_back(v.text);
    } while (accept(Tok::Comma));
    for (const auto& v : vars) bound_.push_back(v);
    FormulaPtr body;
    try {
      body = formula();
    } catch (...) {
      bound_.resize(bound_.size() - vars.size());
      throw;
    }
    bound_.resize(bound_.size() - vars.size());
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = Formula::quantified(kind, *it, body);
    return body;
  }

  FormulaPtr atom() {
    if (accept(Tok::True)) return Formula::truth(true);
    if (accept(Tok::False)) return Formula::truth(false);
    if (peek().kind == Tok::Dollar) {
      std::string name = take().text;
      expect(Tok::LParen, "'('");
      std::vector<TermPtr> args{term()};
      while (accept(Tok::Comma)) args.push_back(term());
      expect(Tok::RParen, "')'");
      return Formula::call(std::move(name), std::move(args));
    }
    const Token& left_tok = peek();
    Operand left = operand();
    auto rel = relation_of(peek().kind);
    if (!rel) error("expected a comparison, found '" + peek().text + "'");
    const Token& op_tok = take();
    const Token& right_tok = peek();
    Operand right = operand();

    if (left.seq.empty() && right.seq.empty()) return Formula::compare(left.term, *rel, right.term);
    if (*rel != Relation::Eq && *rel != Relation::Ne)
      throw SyntaxError("sequence values can only be compared with '=' or '!='", op_tok.line, op_tok.column);
    if (!left.seq.empty() && !right.seq.empty())
      return Formula::seq_compare(left.seq, left.term, *rel, right.seq, right.term);
    const Operand& s = left.seq.empty() ? right : left;
    const Operand& c = left.seq.empty() ? left : right;
    const Token& c_tok = left.seq.empty() ? left_tok : right_tok;
    if (c.term->kind != Term::Kind::Constant)
      throw SyntaxError("a sequence value can only be compared with a sequence value or a constant", c_tok.line,
                        c_tok.column);
    return Formula::seq_const(s.seq, s.term, *rel, static_cast<Symbol>(c.term->value));
  }

  Operand operand() {
    if (peek().kind == Tok::Ident && tokens_[pos_ + 1].kind == Tok::LBracket) {
      std::string name = take().text;
      take();
      auto index = term();
      expect(Tok::RBracket, "']'");
      return {index, name};
    }
    return {term(), {}};
  }

  TermPtr term() {
    auto t = primary();
    while (true) {
      if (accept(Tok::Plus))
        t = Term::sum(t, primary());
      else if (accept(Tok::Minus))
        t = Term::difference(t, primary());
      else
        return t;
    }
  }

  TermPtr primary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Ident:
        if (tokens_[pos_ + 1].kind == Tok::LBracket) error("sequence values cannot be used in arithmetic");
        return Term::variable(take().text);
      case Tok::Number: {
        std::uint64_t v = 0;
        auto [p, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
        if (ec != std::errc()) error("constant out of range");
        take();
        return Term::constant(v);
      }
      case Tok::LParen: {
        take();
        auto t = term();
        expect(Tok::RParen, "')'");
        return t;
      }
      default: error("expected a term, found '" + tok.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string> bound_;
};

}  // namespace

FormulaPtr parse(std::string_view text) { return Parser(lex(text)).parse_all(); }

}  // namespace autoseq
