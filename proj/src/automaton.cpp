#include "autoseq/automaton.hpp"

#include <algorithm>
#include <set>

#include "autoseq/error.hpp"

namespace autoseq {

const char* to_string(DigitOrder order) noexcept { return order == DigitOrder::Lsd ? "lsd" : "msd"; }

namespace {

void check_tracks(const std::vector<std::string>& tracks) {
  std::set<std::string> seen;
  for (const auto& t : tracks) {
    if (t.empty()) throw Error("empty track name");
    if (!seen.insert(t).second) throw Error("duplicate track name '" + t + "'");
  }
}

}  // namespace

Dfa::Dfa(unsigned base, std::vector<std::string> tracks, State num_states, State start,
         std::vector<std::uint8_t> accepting, std::vector<State> delta, DigitOrder order)
    : alphabet_(base, static_cast<unsigned>(tracks.size())),
      tracks_(std::move(tracks)),
      num_states_(num_states),
      start_(start),
      accepting_(std::move(accepting)),
      delta_(std::move(delta)),
      order_(order) {
  check_tracks(tracks_);
  if (num_states_ == 0) throw Error("automaton needs at least one state");
  if (start_ >= num_states_) throw Error("start state out of range");
  if (accepting_.size() != num_states_) throw Error("accepting flags do not cover every state");
  if (delta_.size() != std::size_t{num_states_} * alphabet_.size())
    throw Error("transition table is not complete");
  for (State s : delta_)
    if (s >= num_states_) throw Error("transition target out of range");
}

int Dfa::track_index(const std::string& name) const noexcept {
  auto it = std::find(tracks_.begin(), tracks_.end(), name);
  return it == tracks_.end() ? -1 : static_cast<int>(it - tracks_.begin());
}

Nfa::Nfa(unsigned base, std::vector<std::string> tracks, State num_states, std::vector<State> starts,
         std::vector<std::uint8_t> accepting, std::vector<std::vector<State>> delta,
         SubsetAcceptance mode, DigitOrder order)
    : alphabet_(base, static_cast<unsigned>(tracks.size())),
      tracks_(std::move(tracks)),
      num_states_(num_states),
      starts_(std::move(starts)),
      accepting_(std::move(accepting)),
      delta_(std::move(delta)),
      mode_(mode),
      order_(order) {
  check_tracks(tracks_);
  if (accepting_.size() != num_states_) throw Error("accepting flags do not cover every state");
  if (delta_.size() != std::size_t{num_states_} * alphabet_.size())
    throw Error("transition table has wrong size");
  auto tidy = [this](std::vector<State>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    for (State s : v)
      if (s >= num_states_) throw Error("NFA state out of range");
  };
  tidy(starts_);
  for (auto& row : delta_) tidy(row);
}

Nfa Nfa::from_dfa(const Dfa& dfa) {
  std::vector<std::vector<State>> delta;
  delta.reserve(dfa.transitions().size());
  for (State s : dfa.transitions()) delta.push_back({s});
  return Nfa(dfa.base(), dfa.tracks(), dfa.num_states(), {dfa.start()}, dfa.accepting_flags(),
             std::move(delta), SubsetAcceptance::Any, dfa.order());
}

}  // namespace autoseq
