#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "autoseq/automaton.hpp"

namespace autoseq {

using Rational = boost::multiprecision::cpp_rational;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// M = sum over digits a of M_a, where M_a[i][j] = 1 iff state i reads a into j.
struct CountMatrix {
  unsigned base = 2;
  std::vector<std::vector<std::uint64_t>> entries;

  std::size_t size() const noexcept { return entries.size(); }
};

CountMatrix count_matrix(const Dfa& a);

struct LimitMatrix {
  /// Cesaro limit of (M / k)^n.
  RationalMatrix limit;
  /// Terminal strongly connected components, each sorted.
  std::vector<std::vector<State>> recurrent_classes;
  /// Period (gcd of cycle lengths) of each recurrent class.
  std::vector<std::uint64_t> periods;
  /// True when every recurrent class is aperiodic, so lim (M / k)^n exists.
  bool aperiodic = true;
  /// True when there is exactly one recurrent class, so all rows coincide.
  bool rank_one = false;
};

/// Exact limit by stationary distributions of the recurrent classes and
/// absorption probabilities of the transient states.
LimitMatrix limit_matrix(const CountMatrix& m);

struct DensityReport {
  Rational density;  ///< Cesaro density of the accepted set
  bool natural_density_exists = true;
  bool rank_one = false;
  std::vector<Rational> stationary_row;  ///< start row of the limit
  std::optional<std::uint64_t> least_omitted;
  bool complement_infinite = false;
};

/// Density analysis of an arity-1 automaton (either digit order).
/// `omitted_bound` limits the search for the least rejected n >= 1.
DensityReport density(const Dfa& a, std::uint64_t omitted_bound = std::uint64_t{1} << 20);

/// Smallest n in [1, bound] that `a` rejects.
std::optional<std::uint64_t> least_omitted(const Dfa& a, std::uint64_t bound);

struct MassSplit {
  std::vector<Rational> accepting;  ///< sorted descending
  std::vector<Rational> rejecting;  ///< sorted descending
};

/// Start-row limit masses grouped by whether their state accepts.
MassSplit accepting_mass_split(const Dfa& a);

/// Number of integers in [0, k^digits) accepted; arity 1, pad-normalized.
std::uint64_t accepted_below_power(const Dfa& a, unsigned digits);

RationalMatrix multiply(const RationalMatrix& x, const RationalMatrix& y);
/// S = M / k.
RationalMatrix stochastic(const CountMatrix& m);

std::string to_string(const Rational& r);
/// Human-readable multi-line report.
std::string to_text(const DensityReport& r);

}  // namespace autoseq
