#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "autoseq/dfao.hpp"

namespace autoseq {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Arithmetic term over naturals. Differences are surface syntax only: they
/// are rewritten away before compilation.
struct Term {
  enum class Kind { Variable, Constant, Sum, Difference };

  Kind kind = Kind::Constant;
  std::string name;
  std::uint64_t value = 0;
  TermPtr lhs, rhs;

  static TermPtr variable(std::string name);
  static TermPtr constant(std::uint64_t value);
  static TermPtr sum(TermPtr a, TermPtr b);
  static TermPtr difference(TermPtr a, TermPtr b);

  bool atomic() const noexcept { return kind == Kind::Variable || kind == Kind::Constant; }
};

enum class Relation { Eq, Ne, Lt, Le, Gt, Ge };

const char* to_string(Relation r) noexcept;

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind {
    True,
    False,
    Compare,     ///< lhs rel rhs
    SeqCompare,  ///< seq[lhs] rel seq2[rhs], rel in {Eq, Ne}
    SeqConst,    ///< seq[lhs] rel symbol, rel in {Eq, Ne}
    Call,        ///< $seq(args...), a named precompiled relation
    Not,
    And,
    Or,
    Implies,
    Iff,
    Exists,
    Forall,
  };

  Kind kind = Kind::True;
  Relation rel = Relation::Eq;
  TermPtr lhs, rhs;
  std::string seq, seq2;
  Symbol symbol = 0;
  std::vector<TermPtr> args;
  std::string var;
  FormulaPtr a, b;

  static FormulaPtr truth(bool value);
  static FormulaPtr compare(TermPtr lhs, Relation rel, TermPtr rhs);
  static FormulaPtr seq_compare(std::string seq, TermPtr index, Relation rel, std::string seq2, TermPtr index2);
  static FormulaPtr seq_const(std::string seq, TermPtr index, Relation rel, Symbol symbol);
  static FormulaPtr call(std::string name, std::vector<TermPtr> args);
  static FormulaPtr negation(FormulaPtr a);
  static FormulaPtr binary(Kind kind, FormulaPtr a, FormulaPtr b);
  static FormulaPtr quantified(Kind kind, std::string var, FormulaPtr body);

  bool is_atom() const noexcept {
    return kind == Kind::True || kind == Kind::False || kind == Kind::Compare || kind == Kind::SeqCompare ||
           kind == Kind::SeqConst || kind == Kind::Call;
  }
};

/// Fully parenthesized concrete syntax; parses back to the same tree.
std::string to_string(const Term& t);
std::string to_string(const Formula& f);

std::set<std::string> free_variables(const Formula& f);
std::set<std::string> free_variables(const Term& t);

/// Structural equality (printing both sides is exact for this grammar).
bool same_formula(const Formula& x, const Formula& y);

}  // namespace autoseq
