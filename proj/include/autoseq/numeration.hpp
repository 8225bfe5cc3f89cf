#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "autoseq/automaton.hpp"

namespace autoseq {

/// A tuple of naturals written column-wise, least significant digit first.
struct DigitWord {
  unsigned base = 2;
  unsigned arity = 1;
  std::vector<std::vector<unsigned>> columns;  ///< columns[pos][track]

  friend bool operator==(const DigitWord&, const DigitWord&) = default;
};

/// Encodes `values` in base `base`. Without `pad_to` the word has the minimal
/// length (zero is the empty word).
DigitWord encode(const std::vector<std::uint64_t>& values, unsigned base,
                 std::optional<std::size_t> pad_to = std::nullopt);
std::vector<std::uint64_t> decode(const DigitWord& word);

/// Number of base-k digits of n (0 for n = 0).
std::size_t digit_length(std::uint64_t n, unsigned base);

// Relation automata. All are LSD-first, minimal and pad-normalized; the
// resulting tracks are the distinct names, sorted.
Dfa eq_automaton(unsigned base, const std::string& x = "x", const std::string& y = "y");
Dfa lt_automaton(unsigned base, const std::string& x = "x", const std::string& y = "y");
Dfa leq_automaton(unsigned base, const std::string& x = "x", const std::string& y = "y");
/// x + y = z; one state per carry value plus a sink.
Dfa add_automaton(unsigned base, const std::string& x = "x", const std::string& y = "y",
                  const std::string& z = "z");
/// Exactly {c}.
Dfa const_automaton(std::uint64_t c, unsigned base, const std::string& x = "x");
/// {n : n >= lower}.
Dfa at_least_automaton(std::uint64_t lower, unsigned base, const std::string& x = "x");

/// The 3-state comparison automaton before minimization (equal so far / less
/// / greater), exposed for tests.
Dfa raw_lt_automaton(unsigned base);

/// Digit reversal of an arity-1 LSD automaton into an MSD-first one that is
/// insensitive to leading zeros.
Dfa reverse_to_msd(const Dfa& a);

}  // namespace autoseq
