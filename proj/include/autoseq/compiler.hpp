#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "autoseq/automaton.hpp"
#include "autoseq/dfao.hpp"
#include "autoseq/formula.hpp"

namespace autoseq {

/// A precompiled relation callable as $name(args...). params[m] is the
/// formal parameter bound to the m-th argument; every track of the automaton
/// must be one of the params.
struct NamedRelation {
  Dfa automaton;
  std::vector<std::string> params;
};

struct CompileEnv {
  unsigned base = 2;
  std::map<std::string, Dfao> sequences;
  std::map<std::string, NamedRelation> relations;
};

struct CompileOptions {
  /// Minimize after every connective and quantifier. When off, only the
  /// final result is minimized.
  bool eager_minimize = true;
  /// Compile A v phi as ~E v ~phi instead of a universal subset construction.
  bool forall_via_negation = false;
};

struct CompileStats {
  std::size_t steps = 0;
  /// Largest automaton produced at any step (before minimization).
  State largest = 0;
};

/// Compiles a difference-free, flat formula (see flatten_terms) into a
/// minimal LSD automaton whose tracks are the free variables, sorted.
Dfa compile(const Formula& f, const CompileEnv& env, const CompileOptions& options = {},
            CompileStats* stats = nullptr);

/// parse -> eliminate_difference -> flatten_terms -> compile.
Dfa compile_predicate(std::string_view text, const CompileEnv& env, const CompileOptions& options = {},
                      CompileStats* stats = nullptr);

/// Two DFAOs run in lockstep, each on its own track; accepts when the current
/// outputs are equal (equal = true) or differ. If var1 == var2 both run on
/// one track.
Dfa seq_atom_automaton(const Dfao& s1, const std::string& var1, bool equal, const Dfao& s2,
                       const std::string& var2);

}  // namespace autoseq
