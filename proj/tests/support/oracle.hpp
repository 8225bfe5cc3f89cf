#pragma once

// Independent ground truth for the compiler: a direct evaluator of formulas
// over bounded quantifiers, and a few hand-built automata.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "autoseq/automaton.hpp"
#include "autoseq/dfao.hpp"
#include "autoseq/formula.hpp"
#include "autoseq/sequences.hpp"

namespace testsupport {

using autoseq::Formula;
using autoseq::Term;

using Assignment = std::map<std::string, std::int64_t>;
using SeqFn = std::function<std::uint32_t(std::uint64_t)>;
using RelFn = std::function<bool(const std::vector<std::int64_t>&)>;

struct Model {
  std::map<std::string, SeqFn> sequences;
  std::map<std::string, RelFn> relations;
  // Quantifiers range over [0, bound).
  std::int64_t bound = 32;
};

inline std::int64_t value(const Term& t, const Assignment& env) {
  switch (t.kind) {
    case Term::Kind::Variable:
      return env.at(t.name);
    case Term::Kind::Constant:
      return static_cast<std::int64_t>(t.value);
    case Term::Kind::Sum:
      return value(*t.lhs, env) + value(*t.rhs, env);
    case Term::Kind::Difference:
      return value(*t.lhs, env) - value(*t.rhs, env);
  }
  return 0;
}

inline bool compare(std::int64_t x, autoseq::Relation r, std::int64_t y) {
  using autoseq::Relation;
  switch (r) {
    case Relation::Eq: return x == y;
    case Relation::Ne: return x != y;
    case Relation::Lt: return x < y;
    case Relation::Le: return x <= y;
    case Relation::Gt: return x > y;
    case Relation::Ge: return x >= y;
  }
  return false;
}

// Sequence atoms with a negative index are false, as are relation calls with
// a negative argument: the compiled automata only ever see naturals.
inline bool holds(const Formula& f, const Model& m, Assignment& env) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::True: return true;
    case K::False: return false;
    case K::Compare: return compare(value(*f.lhs, env), f.rel, value(*f.rhs, env));
    case K::SeqCompare: {
      auto i = value(*f.lhs, env), j = value(*f.rhs, env);
      if (i < 0 || j < 0) return false;
      auto x = m.sequences.at(f.seq)(static_cast<std::uint64_t>(i));
      auto y = m.sequences.at(f.seq2)(static_cast<std::uint64_t>(j));
      return (x == y) == (f.rel == autoseq::Relation::Eq);
    }
    case K::SeqConst: {
      auto i = value(*f.lhs, env);
      if (i < 0) return false;
      auto x = m.sequences.at(f.seq)(static_cast<std::uint64_t>(i));
      return (x == f.symbol) == (f.rel == autoseq::Relation::Eq);
    }
    case K::Call: {
      std::vector<std::int64_t> args;
      for (const auto& a : f.args) {
        args.push_back(value(*a, env));
        if (args.back() < 0) return false;
      }
      return m.relations.at(f.seq)(args);
    }
    case K::Not: return !holds(*f.a, m, env);
    case K::And: return holds(*f.a, m, env) && holds(*f.b, m, env);
    case K::Or: return holds(*f.a, m, env) || holds(*f.b, m, env);
    case K::Implies: return !holds(*f.a, m, env) || holds(*f.b, m, env);
    case K::Iff: return holds(*f.a, m, env) == holds(*f.b, m, env);
    case K::Exists:
    case K::Forall: {
      bool want = f.kind == K::Exists;
      auto saved = env.find(f.var) != env.end() ? std::optional<std::int64_t>(env[f.var]) : std::nullopt;
      bool result = !want;
      for (std::int64_t v = 0; v < m.bound; ++v) {
        env[f.var] = v;
        if (holds(*f.a, m, env) == want) {
          result = want;
          break;
        }
      }
      if (saved)
        env[f.var] = *saved;
      else
        env.erase(f.var);
      return result;
    }
  }
  return false;
}

// Does x[i..j] (inclusive, i <= j + 1) have period n? Vacuous for empty and short factors.
inline bool has_period(const SeqFn& x, std::int64_t n, std::int64_t i, std::int64_t j) {
  for (std::int64_t t = i; t + n <= j; ++t)
    if (x(t) != x(t + n)) return false;
  return true;
}

inline bool is_least_period(const SeqFn& x, std::int64_t n, std::int64_t i, std::int64_t j) {
  if (!has_period(x, n, i, j)) return false;
  for (std::int64_t m = 1; m < n; ++m)
    if (has_period(x, m, i, j)) return false;
  return true;
}

// Runs an automaton on an explicit word of letters.
inline bool run_word(const autoseq::Dfa& a, const std::vector<autoseq::Letter>& word) {
  auto q = a.start();
  for (auto c : word) q = a.next(q, c);
  return a.accepting(q);
}

// n is even, LSD-first, base 2, on track "n".
inline autoseq::Dfa even_automaton() {
  return autoseq::Dfa(2, {"n"}, 3, 0, {1, 1, 0}, {1, 2, 1, 1, 2, 2});
}

// Random complete automaton; accepting flags and successors uniform.
inline autoseq::Dfa random_dfa(std::mt19937& rng, unsigned base, std::vector<std::string> tracks,
                               autoseq::State states) {
  autoseq::Letter letters = 1;
  for (std::size_t m = 0; m < tracks.size(); ++m) letters *= base;
  std::uniform_int_distribution<autoseq::State> pick(0, states - 1);
  std::vector<std::uint8_t> acc(states);
  for (auto& f : acc) f = static_cast<std::uint8_t>(rng() & 1);
  std::vector<autoseq::State> delta(std::size_t{states} * letters);
  for (auto& d : delta) d = pick(rng);
  return autoseq::Dfa(base, std::move(tracks), states, 0, std::move(acc), std::move(delta));
}

}  // namespace testsupport
