#include "autoseq/rewrite.hpp"

#include <functional>
#include <string>
#include <vector>

#include "autoseq/error.hpp"

namespace autoseq {

namespace {

using K = Formula::Kind;

// Fresh names use a '$' prefix, which the parser never produces.
class FreshNames {
 public:
  explicit FreshNames(const Formula& f) { scan(f); }
  std::string next() { return "$" + std::to_string(++counter_); }

 private:
  void note(const std::string& name) {
    if (name.size() > 1 && name[0] == '$') {
      try {
        counter_ = std::max(counter_, std::stoul(name.substr(1)));
      } catch (...) {
      }
    }
  }
  void scan(const Term& t) {
    if (t.kind == Term::Kind::Variable) note(t.name);
    if (t.lhs) scan(*t.lhs);
    if (t.rhs) scan(*t.rhs);
  }
  void scan(const Formula& f) {
    note(f.var);
    if (f.lhs) scan(*f.lhs);
    if (f.rhs) scan(*f.rhs);
    for (const auto& t : f.args) scan(*t);
    if (f.a) scan(*f.a);
    if (f.b) scan(*f.b);
  }
  unsigned long counter_ = 0;
};

bool has_difference(const Term& t) {
  if (t.kind == Term::Kind::Difference) return true;
  return (t.lhs && has_difference(*t.lhs)) || (t.rhs && has_difference(*t.rhs));
}

// Signed atomic summands of a term, in order of appearance.
void summands(const TermPtr& t, bool positive, std::vector<TermPtr>& pos, std::vector<TermPtr>& neg) {
  switch (t->kind) {
    case Term::Kind::Variable:
    case Term::Kind::Constant: (positive ? pos : neg).push_back(t); break;
    case Term::Kind::Sum:
      summands(t->lhs, positive, pos, neg);
      summands(t->rhs, positive, pos, neg);
      break;
    case Term::Kind::Difference:
      summands(t->lhs, positive, pos, neg);
      summands(t->rhs, !positive, pos, neg);
      break;
  }
}

TermPtr chain(const std::vector<TermPtr>& parts) {
  if (parts.empty()) return Term::constant(0);
  TermPtr t = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) t = Term::sum(t, parts[i]);
  return t;
}

TermPtr chain(const std::vector<TermPtr>& a, const std::vector<TermPtr>& b) {
  std::vector<TermPtr> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return chain(all);
}

FormulaPtr rebuild(const Formula& f, FormulaPtr a, FormulaPtr b) {
  if (f.kind == K::Not) return Formula::negation(std::move(a));
  if (f.kind == K::Exists || f.kind == K::Forall) return Formula::quantified(f.kind, f.var, std::move(a));
  return Formula::binary(f.kind, std::move(a), std::move(b));
}

// Replaces each non-conforming index/argument of an atom with a fresh
// variable u and wraps the atom as E u (define(u, term) & atom').
FormulaPtr name_subterms(const FormulaPtr& f, FreshNames& fresh, const std::function<bool(const Term&)>& needs_name,
                         const std::function<FormulaPtr(const std::string&, const TermPtr&)>& define) {
  auto copy = std::make_shared<Formula>(*f);
  std::vector<std::pair<std::string, TermPtr>> named;
  auto visit = [&](TermPtr& t) {
    if (!needs_name(*t)) return;
    std::string u = fresh.next();
    named.emplace_back(u, t);
    t = Term::variable(u);
  };
  if (f->kind == K::SeqCompare || f->kind == K::SeqConst) {
    visit(copy->lhs);
    if (f->kind == K::SeqCompare) visit(copy->rhs);
  } else if (f->kind == K::Call) {
    for (auto& t : copy->args) visit(t);
  }
  FormulaPtr out = copy;
  for (auto it = named.rbegin(); it != named.rend(); ++it)
    out = Formula::quantified(K::Exists, it->first,
                              Formula::binary(K::And, define(it->first, it->second), out));
  return out;
}

FormulaPtr eliminate(const FormulaPtr& f, FreshNames& fresh) {
  switch (f->kind) {
    case K::True:
    case K::False: return f;
    case K::Compare: {
      if (!has_difference(*f->lhs) && !has_difference(*f->rhs)) return f;
      std::vector<TermPtr> lp, ln, rp, rn;
      summands(f->lhs, true, lp, ln);
      summands(f->rhs, true, rp, rn);
      return Formula::compare(chain(lp, rn), f->rel, chain(rp, ln));
    }
    case K::SeqCompare:
    case K::SeqConst:
    case K::Call:
      return name_subterms(
          f, fresh, [](const Term& t) { return has_difference(t); },
          [](const std::string& u, const TermPtr& t) {
            std::vector<TermPtr> pos, neg;
            summands(t, true, pos, neg);
            std::vector<TermPtr> lhs{Term::variable(u)};
            return Formula::compare(chain(lhs, neg), Relation::Eq, chain(pos));
          });
    case K::Not: return rebuild(*f, eliminate(f->a, fresh), nullptr);
    case K::Exists:
    case K::Forall: return rebuild(*f, eliminate(f->a, fresh), nullptr);
    default: return rebuild(*f, eliminate(f->a, fresh), eliminate(f->b, fresh));
  }
}

bool flat_side(const Term& t) {
  if (t.atomic()) return true;
  return t.kind == Term::Kind::Sum && t.lhs->atomic() && t.rhs->atomic();
}

FormulaPtr flatten(const FormulaPtr& f, FreshNames& fresh);

// Comparison whose sides may be arbitrary sums.
FormulaPtr flatten_compare(const FormulaPtr& f, FreshNames& fresh) {
  std::vector<std::pair<std::string, TermPtr>> defs;
  // Rewrites a sum so that it is flat, naming nested non-atomic operands.
  std::function<TermPtr(const TermPtr&)> flat_operand;
  std::function<TermPtr(const TermPtr&)> flat_sum = [&](const TermPtr& t) -> TermPtr {
    if (t->atomic()) return t;
    if (t->kind != Term::Kind::Sum) throw Error("flatten_terms: difference left in formula; run eliminate_difference first");
    return Term::sum(flat_operand(t->lhs), flat_operand(t->rhs));
  };
  flat_operand = [&](const TermPtr& t) -> TermPtr {
    if (t->atomic()) return t;
    TermPtr inner = flat_sum(t);
    std::string u = fresh.next();
    defs.emplace_back(u, inner);
    return Term::variable(u);
  };
  FormulaPtr out = Formula::compare(flat_sum(f->lhs), f->rel, flat_sum(f->rhs));
  for (auto it = defs.rbegin(); it != defs.rend(); ++it)
    out = Formula::quantified(
        K::Exists, it->first,
        Formula::binary(K::And, Formula::compare(it->second, Relation::Eq, Term::variable(it->first)), out));
  return out;
}

FormulaPtr flatten(const FormulaPtr& f, FreshNames& fresh) {
  switch (f->kind) {
    case K::True:
    case K::False: return f;
    case K::Compare: return flatten_compare(f, fresh);
    case K::SeqCompare:
    case K::SeqConst:
    case K::Call: {
      for (const auto& t : {f->lhs, f->rhs})
        if (t && has_difference(*t)) throw Error("flatten_terms: difference left in formula; run eliminate_difference first");
      for (const auto& t : f->args)
        if (has_difference(*t)) throw Error("flatten_terms: difference left in formula; run eliminate_difference first");
      return name_subterms(
          f, fresh, [](const Term& t) { return t.kind != Term::Kind::Variable; },
          [&fresh](const std::string& u, const TermPtr& t) {
            return flatten_compare(Formula::compare(t, Relation::Eq, Term::variable(u)), fresh);
          });
    }
    case K::Not:
    case K::Exists:
    case K::Forall: return rebuild(*f, flatten(f->a, fresh), nullptr);
    default: return rebuild(*f, flatten(f->a, fresh), flatten(f->b, fresh));
  }
}

}  // namespace

FormulaPtr eliminate_difference(const FormulaPtr& f) {
  FreshNames fresh(*f);
  return eliminate(f, fresh);
}

FormulaPtr flatten_terms(const FormulaPtr& f) {
  FreshNames fresh(*f);
  return flatten(f, fresh);
}

bool is_flat(const Formula& f) {
  switch (f.kind) {
    case K::True:
    case K::False: return true;
    case K::Compare: return flat_side(*f.lhs) && flat_side(*f.rhs);
    case K::SeqCompare: return f.lhs->kind == Term::Kind::Variable && f.rhs->kind == Term::Kind::Variable;
    case K::SeqConst: return f.lhs->kind == Term::Kind::Variable;
    case K::Call:
      for (const auto& t : f.args)
        if (t->kind != Term::Kind::Variable) return false;
      return true;
    case K::Not:
    case K::Exists:
    case K::Forall: return is_flat(*f.a);
    default: return is_flat(*f.a) && is_flat(*f.b);
  }
}

}  // namespace autoseq
