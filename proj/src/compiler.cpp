#include "autoseq/compiler.hpp"

#include <algorithm>
#include <unordered_map>

#include "autoseq/error.hpp"
#include "autoseq/numeration.hpp"
#include "autoseq/operations.hpp"
#include "autoseq/parser.hpp"
#include "autoseq/rewrite.hpp"

namespace autoseq {

Dfa seq_atom_automaton(const Dfao& s1, const std::string& var1, bool equal, const Dfao& s2,
                       const std::string& var2) {
  if (s1.base() != s2.base()) throw Error("incompatible numeration base");
  const unsigned k = s1.base();
  const bool shared = var1 == var2;
  TrackAlphabet alpha(k, shared ? 1 : 2);

  std::unordered_map<std::uint64_t, State> ids;
  std::vector<std::pair<State, State>> pairs;
  auto id_of = [&](State p, State q) {
    auto [it, fresh] = ids.try_emplace((std::uint64_t{p} << 32) | q, static_cast<State>(pairs.size()));
    if (fresh) pairs.emplace_back(p, q);
    return it->second;
  };
  id_of(s1.start(), s2.start());
  std::vector<State> delta;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [p, q] = pairs[i];
    for (Letter c = 0; c < alpha.size(); ++c) {
      unsigned d1 = alpha.digit(c, 0), d2 = shared ? d1 : alpha.digit(c, 1);
      delta.push_back(id_of(s1.next(p, d1), s2.next(q, d2)));
    }
  }
  std::vector<std::uint8_t> acc(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    acc[i] = (s1.output(pairs[i].first) == s2.output(pairs[i].second)) == equal;
  std::vector<std::string> tracks = shared ? std::vector<std::string>{var1} : std::vector<std::string>{var1, var2};
  Dfa raw(k, tracks, static_cast<State>(pairs.size()), 0, std::move(acc), std::move(delta));
  return minimize(bind_tracks(raw, tracks));
}

namespace {

using K = Formula::Kind;

class Compiler {
 public:
  Compiler(const CompileEnv& env, const CompileOptions& options, CompileStats* stats)
      : env_(env), options_(options), stats_(stats), base_(resolve_base(env)) {}

  Dfa run(const Formula& f) { return minimize(compile(f)); }

 private:
  static unsigned resolve_base(const CompileEnv& env) {
    unsigned base = env.base;
    for (const auto& [name, s] : env.sequences)
      if (s.base() != base) throw Error("incompatible numeration base: sequence '" + name + "'");
    for (const auto& [name, r] : env.relations)
      if (r.automaton.base() != base) throw Error("incompatible numeration base: relation '" + name + "'");
    return base;
  }

  Dfa note(Dfa a) {
    if (stats_) {
      ++stats_->steps;
      stats_->largest = std::max(stats_->largest, a.num_states());
    }
    return options_.eager_minimize ? minimize(a) : a;
  }

  const Dfao& sequence(const std::string& name) const {
    auto it = env_.sequences.find(name);
    if (it == env_.sequences.end()) throw Error("unbound sequence '" + name + "'");
    return it->second;
  }

  static const std::string& var_of(const TermPtr& t) {
    if (t->kind != Term::Kind::Variable) throw Error("compile: formula is not flat (index is not a variable)");
    return t->name;
  }

  Dfa flip(const Dfa& a) {
    if (options_.eager_minimize) return complement(a);
    std::vector<std::uint8_t> acc(a.num_states());
    for (State q = 0; q < a.num_states(); ++q) acc[q] = !a.accepting(q);
    return Dfa(a.base(), a.tracks(), a.num_states(), a.start(), std::move(acc), a.transitions(), a.order());
  }

  Dfa compare(const Formula& f) {
    std::vector<Dfa> parts;
    std::vector<std::string> temps;
    auto temp = [&] {
      temps.push_back("#" + std::to_string(++temp_counter_));
      return temps.back();
    };
    auto name_of = [&](const TermPtr& t) -> std::string {
      if (t->kind == Term::Kind::Variable) return t->name;
      if (t->kind != Term::Kind::Constant) throw Error("compile: formula is not flat (nested sum)");
      std::string c = temp();
      parts.push_back(const_automaton(t->value, base_, c));
      return c;
    };
    auto side = [&](const TermPtr& t) -> std::string {
      if (t->kind != Term::Kind::Sum) return name_of(t);
      std::string a = name_of(t->lhs), b = name_of(t->rhs), s = temp();
      parts.push_back(add_automaton(base_, a, b, s));
      return s;
    };
    std::string l = side(f.lhs), r = side(f.rhs);
    Dfa rel = [&] {
      if (l == r) {
        bool reflexive = f.rel == Relation::Eq || f.rel == Relation::Le || f.rel == Relation::Ge;
        return reflexive ? universal(base_, {l}) : empty_language(base_, {l});
      }
      switch (f.rel) {
        case Relation::Eq: return eq_automaton(base_, l, r);
        case Relation::Ne: return complement(eq_automaton(base_, l, r));
        case Relation::Lt: return lt_automaton(base_, l, r);
        case Relation::Le: return leq_automaton(base_, l, r);
        case Relation::Gt: return lt_automaton(base_, r, l);
        case Relation::Ge: return leq_automaton(base_, r, l);
      }
      throw Error("unknown relation");
    }();
    for (const auto& p : parts) rel = minimize(product(rel, p, BoolOp::And));
    for (auto it = temps.rbegin(); it != temps.rend(); ++it) rel = exists(rel, *it);
    return note(rel);
  }

  Dfa call(const Formula& f) {
    auto it = env_.relations.find(f.seq);
    if (it == env_.relations.end()) throw Error("unbound relation '" + f.seq + "'");
    const NamedRelation& r = it->second;
    if (r.params.size() != f.args.size())
      throw Error("relation '" + f.seq + "' takes " + std::to_string(r.params.size()) + " arguments");
    std::vector<std::string> names;
    for (const auto& track : r.automaton.tracks()) {
      auto p = std::find(r.params.begin(), r.params.end(), track);
      if (p == r.params.end()) throw Error("relation '" + f.seq + "' has unbound track '" + track + "'");
      names.push_back(var_of(f.args[p - r.params.begin()]));
    }
    Dfa bound = bind_tracks(r.automaton, names);
    // Parameters without a track are unconstrained; extend to their arguments.
    std::vector<std::string> all = bound.tracks();
    for (const auto& arg : f.args) all.push_back(var_of(arg));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return note(cylindrify(bound, all));
  }

  Dfa quantify(const Formula& f) {
    Dfa body = compile(*f.a);
    if (body.track_index(f.var) < 0) return body;
    if (f.kind == K::Exists) return note(determinize(project(body, f.var, SubsetAcceptance::Any)));
    if (options_.forall_via_negation)
      return note(flip(note(determinize(project(flip(body), f.var, SubsetAcceptance::Any)))));
    return note(determinize(project(body, f.var, SubsetAcceptance::All)));
  }

  Dfa compile(const Formula& f) {
    switch (f.kind) {
      case K::True: return universal(base_, {});
      case K::False: return empty_language(base_, {});
      case K::Compare: return compare(f);
      case K::SeqCompare: {
        if (f.rel != Relation::Eq && f.rel != Relation::Ne) throw Error("sequence comparison must be = or !=");
        return note(seq_atom_automaton(sequence(f.seq), var_of(f.lhs), f.rel == Relation::Eq, sequence(f.seq2),
                                       var_of(f.rhs)));
      }
      case K::SeqConst: {
        Dfa eq = output_automaton(sequence(f.seq), f.symbol, var_of(f.lhs));
        return note(f.rel == Relation::Eq ? eq : complement(eq));
      }
      case K::Call: return call(f);
      case K::Not: return note(flip(compile(*f.a)));
      case K::And:
      case K::Or:
      case K::Implies:
      case K::Iff: {
        BoolOp op = f.kind == K::And ? BoolOp::And
                    : f.kind == K::Or ? BoolOp::Or
                    : f.kind == K::Implies ? BoolOp::Implies
                                           : BoolOp::Iff;
        Dfa a = compile(*f.a);
        Dfa b = compile(*f.b);
        return note(product(a, b, op));
      }
      case K::Exists:
      case K::Forall: return quantify(f);
    }
    throw Error("unknown formula kind");
  }

  const CompileEnv& env_;
  CompileOptions options_;
  CompileStats* stats_;
  unsigned base_;
  unsigned temp_counter_ = 0;
};

}  // namespace

Dfa compile(const Formula& f, const CompileEnv& env, const CompileOptions& options, CompileStats* stats) {
  if (!is_flat(f)) throw Error("compile: formula is not flat; run flatten_terms first");
  return Compiler(env, options, stats).run(f);
}

Dfa compile_predicate(std::string_view text, const CompileEnv& env, const CompileOptions& options,
                      CompileStats* stats) {
  return compile(*flatten_terms(eliminate_difference(parse(text))), env, options, stats);
}

}  // namespace autoseq
