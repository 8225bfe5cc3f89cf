#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "autoseq/alphabet.hpp"

namespace autoseq {

/// Which end of the digit string an automaton reads first. Everything the
/// compiler builds is LSD-first; MSD-first automata only come from reversal.
enum class DigitOrder { Lsd, Msd };

const char* to_string(DigitOrder order) noexcept;

/// Complete deterministic automaton over a multi-track digit alphabet.
///
/// Track m of the alphabet carries the variable tracks()[m]. Transitions are
/// stored row-major: delta[q * letters + a].
class Dfa {
 public:
  Dfa(unsigned base, std::vector<std::string> tracks, State num_states, State start,
      std::vector<std::uint8_t> accepting, std::vector<State> delta,
      DigitOrder order = DigitOrder::Lsd);

  const TrackAlphabet& alphabet() const noexcept { return alphabet_; }
  unsigned base() const noexcept { return alphabet_.base(); }
  unsigned arity() const noexcept { return alphabet_.arity(); }
  Letter letter_count() const noexcept { return alphabet_.size(); }
  const std::vector<std::string>& tracks() const noexcept { return tracks_; }
  DigitOrder order() const noexcept { return order_; }

  State num_states() const noexcept { return num_states_; }
  State start() const noexcept { return start_; }
  bool accepting(State q) const noexcept { return accepting_[q] != 0; }
  const std::vector<std::uint8_t>& accepting_flags() const noexcept { return accepting_; }
  State next(State q, Letter a) const noexcept { return delta_[std::size_t{q} * letter_count() + a]; }
  std::span<const State> row(State q) const noexcept {
    return {delta_.data() + std::size_t{q} * letter_count(), letter_count()};
  }
  const std::vector<State>& transitions() const noexcept { return delta_; }

  /// Index of a track name, or -1.
  int track_index(const std::string& name) const noexcept;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  TrackAlphabet alphabet_;
  std::vector<std::string> tracks_;
  State num_states_;
  State start_;
  std::vector<std::uint8_t> accepting_;
  std::vector<State> delta_;
  DigitOrder order_;
};

/// How a subset of NFA states is judged when determinizing.
enum class SubsetAcceptance {
  Any,  ///< accepting if some member is accepting (existential)
  All,  ///< accepting if every member is accepting (universal)
};

/// Nondeterministic automaton; successor lists are sorted and duplicate-free.
class Nfa {
 public:
  Nfa(unsigned base, std::vector<std::string> tracks, State num_states, std::vector<State> starts,
      std::vector<std::uint8_t> accepting, std::vector<std::vector<State>> delta,
      SubsetAcceptance mode = SubsetAcceptance::Any, DigitOrder order = DigitOrder::Lsd);

  const TrackAlphabet& alphabet() const noexcept { return alphabet_; }
  unsigned base() const noexcept { return alphabet_.base(); }
  unsigned arity() const noexcept { return alphabet_.arity(); }
  Letter letter_count() const noexcept { return alphabet_.size(); }
  const std::vector<std::string>& tracks() const noexcept { return tracks_; }
  DigitOrder order() const noexcept { return order_; }
  SubsetAcceptance mode() const noexcept { return mode_; }

  State num_states() const noexcept { return num_states_; }
  const std::vector<State>& starts() const noexcept { return starts_; }
  bool accepting(State q) const noexcept { return accepting_[q] != 0; }
  const std::vector<std::uint8_t>& accepting_flags() const noexcept { return accepting_; }
  const std::vector<State>& next(State q, Letter a) const noexcept {
    return delta_[std::size_t{q} * letter_count() + a];
  }

  /// View a DFA as an NFA with singleton successor sets.
  static Nfa from_dfa(const Dfa& dfa);

 private:
  TrackAlphabet alphabet_;
  std::vector<std::string> tracks_;
  State num_states_;
  std::vector<State> starts_;
  std::vector<std::uint8_t> accepting_;
  std::vector<std::vector<State>> delta_;
  SubsetAcceptance mode_;
  DigitOrder order_;
};

}  // namespace autoseq
