#include "autoseq/formula.hpp"

namespace autoseq {

TermPtr Term::variable(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Variable;
  t->name = std::move(name);
  return t;
}

TermPtr Term::constant(std::uint64_t value) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Constant;
  t->value = value;
  return t;
}

TermPtr Term::sum(TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Sum;
  t->lhs = std::move(a);
  t->rhs = std::move(b);
  return t;
}

TermPtr Term::difference(TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Difference;
  t->lhs = std::move(a);
  t->rhs = std::move(b);
  return t;
}

const char* to_string(Relation r) noexcept {
  switch (r) {
    case Relation::Eq: return "=";
    case Relation::Ne: return "!=";
    case Relation::Lt: return "<";
    case Relation::Le: return "<=";
    case Relation::Gt: return ">";
    case Relation::Ge: return ">=";
  }
  return "?";
}

FormulaPtr Formula::truth(bool value) {
  auto f = std::make_shared<Formula>();
  f->kind = value ? Kind::True : Kind::False;
  return f;
}

FormulaPtr Formula::compare(TermPtr lhs, Relation rel, TermPtr rhs) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Compare;
  f->lhs = std::move(lhs);
  f->rel = rel;
  f->rhs = std::move(rhs);
  return f;
}

FormulaPtr Formula::seq_compare(std::string seq, TermPtr index, Relation rel, std::string seq2, TermPtr index2) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::SeqCompare;
  f->seq = std::move(seq);
  f->lhs = std::move(index);
  f->rel = rel;
  f->seq2 = std::move(seq2);
  f->rhs = std::move(index2);
  return f;
}

FormulaPtr Formula::seq_const(std::string seq, TermPtr index, Relation rel, Symbol symbol) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::SeqConst;
  f->seq = std::move(seq);
  f->lhs = std::move(index);
  f->rel = rel;
  f->symbol = symbol;
  return f;
}

FormulaPtr Formula::call(std::string name, std::vector<TermPtr> args) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Call;
  f->seq = std::move(name);
  f->args = std::move(args);
  return f;
}

FormulaPtr Formula::negation(FormulaPtr a) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Not;
  f->a = std::move(a);
  return f;
}

FormulaPtr Formula::binary(Kind kind, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}

FormulaPtr Formula::quantified(Kind kind, std::string var, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->var = std::move(var);
  f->a = std::move(body);
  return f;
}

std::string to_string(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Variable: return t.name;
    case Term::Kind::Constant: return std::to_string(t.value);
    case Term::Kind::Sum: return "(" + to_string(*t.lhs) + " + " + to_string(*t.rhs) + ")";
    case Term::Kind::Difference: return "(" + to_string(*t.lhs) + " - " + to_string(*t.rhs) + ")";
  }
  return "?";
}

std::string to_string(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::True: return "true";
    case K::False: return "false";
    case K::Compare: return to_string(*f.lhs) + " " + to_string(f.rel) + " " + to_string(*f.rhs);
    case K::SeqCompare:
      return f.seq + "[" + to_string(*f.lhs) + "] " + to_string(f.rel) + " " + f.seq2 + "[" + to_string(*f.rhs) + "]";
    case K::SeqConst: return f.seq + "[" + to_string(*f.lhs) + "] " + to_string(f.rel) + " " + std::to_string(f.symbol);
    case K::Call: {
      std::string s = "$" + f.seq + "(";
      for (std::size_t i = 0; i < f.args.size(); ++i) s += (i ? ", " : "") + to_string(*f.args[i]);
      return s + ")";
    }
    case K::Not: return "~(" + to_string(*f.a) + ")";
    case K::And: return "(" + to_string(*f.a) + " & " + to_string(*f.b) + ")";
    case K::Or: return "(" + to_string(*f.a) + " | " + to_string(*f.b) + ")";
    case K::Implies: return "(" + to_string(*f.a) + " => " + to_string(*f.b) + ")";
    case K::Iff: return "(" + to_string(*f.a) + " <=> " + to_string(*f.b) + ")";
    case K::Exists: return "(E " + f.var + " " + to_string(*f.a) + ")";
    case K::Forall: return "(A " + f.var + " " + to_string(*f.a) + ")";
  }
  return "?";
}

std::set<std::string> free_variables(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Variable: return {t.name};
    case Term::Kind::Constant: return {};
    default: {
      auto s = free_variables(*t.lhs);
      s.merge(free_variables(*t.rhs));
      return s;
    }
  }
}

std::set<std::string> free_variables(const Formula& f) {
  using K = Formula::Kind;
  std::set<std::string> s;
  switch (f.kind) {
    case K::True:
    case K::False: break;
    case K::Compare:
    case K::SeqCompare:
      s = free_variables(*f.lhs);
      s.merge(free_variables(*f.rhs));
      break;
    case K::SeqConst: s = free_variables(*f.lhs); break;
    case K::Call:
      for (const auto& t : f.args) s.merge(free_variables(*t));
      break;
    case K::Not: s = free_variables(*f.a); break;
    case K::And:
    case K::Or:
    case K::Implies:
    case K::Iff:
      s = free_variables(*f.a);
      s.merge(free_variables(*f.b));
      break;
    case K::Exists:
    case K::Forall:
      s = free_variables(*f.a);
      s.erase(f.var);
      break;
  }
  return s;
}

bool same_formula(const Formula& x, const Formula& y) { return to_string(x) == to_string(y); }

}  // namespace autoseq
