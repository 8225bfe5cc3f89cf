#pragma once

#include "autoseq/formula.hpp"

namespace autoseq {

/// Removes every difference. A comparison containing a difference is
/// rewritten by moving each subtracted summand to the other side, which is
/// exact over the integers (t <= j - n becomes t + n <= j). A difference in a
/// sequence index or relation argument, x[a - b], becomes
/// E u (u + b = a & ... x[u] ...), so the atom is false when b > a.
FormulaPtr eliminate_difference(const FormulaPtr& f);

/// Three-address form for a difference-free formula: comparison sides are a
/// variable, a constant, or a binary sum of those; sequence indices and
/// relation arguments are variables. Fresh existentials name the removed
/// subterms, e.g. x[t + n] = x[t] becomes E u (t + n = u & x[u] = x[t]).
FormulaPtr flatten_terms(const FormulaPtr& f);

/// True if the formula already satisfies flatten_terms' postcondition.
bool is_flat(const Formula& f);

}  // namespace autoseq
