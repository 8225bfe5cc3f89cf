#pragma once

#include <cstdint>
#include <vector>

#include "autoseq/automaton.hpp"

namespace autoseq {

using Symbol = std::uint32_t;

/// Deterministic automaton with output, reading base-k digits LSD-first.
/// Construction rejects automata that are not zero-stable: along every
/// reachable 0-transition the output must stay the same.
class Dfao {
 public:
  Dfao(unsigned base, State num_states, State start, std::vector<State> delta, std::vector<Symbol> outputs);

  unsigned base() const noexcept { return base_; }
  State num_states() const noexcept { return static_cast<State>(outputs_.size()); }
  State start() const noexcept { return start_; }
  State next(State q, unsigned digit) const noexcept { return delta_[std::size_t{q} * base_ + digit]; }
  Symbol output(State q) const noexcept { return outputs_[q]; }
  /// One more than the largest output symbol.
  Symbol output_count() const noexcept;
  const std::vector<State>& transitions() const noexcept { return delta_; }
  const std::vector<Symbol>& outputs() const noexcept { return outputs_; }

  Symbol operator()(std::uint64_t n) const noexcept;

  friend bool operator==(const Dfao&, const Dfao&) = default;

 private:
  unsigned base_;
  State start_;
  std::vector<State> delta_;
  std::vector<Symbol> outputs_;
};

/// Same output on every input.
bool output_equivalent(const Dfao& a, const Dfao& b);

/// Minimal DFAO with canonical breadth-first numbering.
Dfao minimize(const Dfao& a);

/// Arity-1 LSD automaton viewed as a 0/1 sequence (1 = accepted).
Dfao to_dfao(const Dfa& a);

/// {n : x[n] = symbol} on the given track.
Dfa output_automaton(const Dfao& seq, Symbol symbol, const std::string& track = "n");

}  // namespace autoseq
