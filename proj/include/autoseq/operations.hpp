#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "autoseq/automaton.hpp"

namespace autoseq {

enum class BoolOp { And, Or, Xor, Implies, Iff };

/// Accepts every word (every tuple) over the given tracks.
Dfa universal(unsigned base, std::vector<std::string> tracks);
/// Accepts nothing over the given tracks.
Dfa empty_language(unsigned base, std::vector<std::string> tracks);

/// Renames the tracks of `a` positionally to `names` (which may repeat: a
/// repeated name forces the corresponding tracks to carry equal digits).
/// The result's tracks are the distinct names in sorted order.
Dfa bind_tracks(const Dfa& a, const std::vector<std::string>& names);

/// Extends `a` to `new_tracks`, ignoring the added tracks. Also used to
/// reorder tracks. Every track of `a` must occur in `new_tracks`.
Dfa cylindrify(const Dfa& a, const std::vector<std::string>& new_tracks);

/// Sorted union of both track lists.
std::vector<std::string> merged_tracks(const std::vector<std::string>& a,
                                       const std::vector<std::string>& b);

/// Synchronous product over the sorted union of tracks; reachable part only.
Dfa product(const Dfa& a, const Dfa& b, BoolOp op);

/// Flips acceptance, then pad-normalizes.
Dfa complement(const Dfa& a);

/// Erases one track. The accepting set of the result already includes the
/// zero closure along columns that are zero on the remaining tracks, so the
/// erased variable may be longer than the others. With SubsetAcceptance::All
/// the result realizes universal instead of existential quantification.
Nfa project(const Dfa& a, const std::string& track,
            SubsetAcceptance mode = SubsetAcceptance::Any);

/// Subset construction; honours the NFA's subset acceptance mode.
Dfa determinize(const Nfa& a);

/// Minimal complete DFA, canonically numbered.
Dfa minimize(const Dfa& a);

/// Keeps the reachable part and renumbers states in breadth-first order from
/// the start state, visiting letters in increasing order.
Dfa canonicalize(const Dfa& a);

/// Makes acceptance independent of trailing all-zero columns: a word is
/// accepted iff, after stripping its trailing zero columns, some zero
/// padding of it was accepted before. Result is minimized. LSD only.
Dfa pad_normalize(const Dfa& a);

/// Zero closure on the accepting set: a state accepts iff an accepting state
/// is reachable from it on all-zero columns.
Nfa pad_normalize(const Nfa& a);

/// Membership of a tuple of naturals, encoded with `extra_padding` zero
/// columns beyond the minimal length.
bool run(const Dfa& a, std::span<const std::uint64_t> values, std::size_t extra_padding = 0);
bool run(const Dfa& a, std::initializer_list<std::uint64_t> values, std::size_t extra_padding = 0);

/// Language equality. Both automata need the same base, digit order and
/// track set; `b` is reordered to `a`'s track order if necessary.
bool equivalent(const Dfa& a, const Dfa& b);

bool is_empty(const Dfa& a);

/// True iff an arity-1 automaton accepts infinitely many integers.
bool is_infinite(const Dfa& a);

/// Digit reversal: LSD-first becomes MSD-first and vice versa. The result is
/// minimal and accepts the same tuples.
Dfa reverse_digits(const Dfa& a);

/// Existential / universal elimination of a track, minimized.
Dfa exists(const Dfa& a, const std::string& track);
Dfa forall(const Dfa& a, const std::string& track);

}  // namespace autoseq
