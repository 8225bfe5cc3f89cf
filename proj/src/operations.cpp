#include "autoseq/operations.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "autoseq/error.hpp"

namespace autoseq {

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<State>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (State s : v) {
      h ^= s;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

void require_lsd(const Dfa& a, const char* what) {
  if (a.order() != DigitOrder::Lsd) throw Error(std::string(what) + " requires an LSD-first automaton");
}

bool apply(BoolOp op, bool x, bool y) {
  switch (op) {
    case BoolOp::And: return x && y;
    case BoolOp::Or: return x || y;
    case BoolOp::Xor: return x != y;
    case BoolOp::Implies: return !x || y;
    case BoolOp::Iff: return x == y;
  }
  return false;
}

// Letter of `from` obtained by reading the digit of track slot[m] of a letter
// over `to` for each track m of `from`.
std::vector<Letter> letter_map(const TrackAlphabet& from, const TrackAlphabet& to,
                               const std::vector<unsigned>& slot) {
  std::vector<Letter> out(to.size());
  std::vector<unsigned> digits(from.arity());
  for (Letter b = 0; b < to.size(); ++b) {
    for (unsigned m = 0; m < from.arity(); ++m) digits[m] = to.digit(b, slot[m]);
    out[b] = from.letter(digits);
  }
  return out;
}

Dfa reindex(const Dfa& a, std::vector<std::string> out_tracks, const std::vector<unsigned>& slot) {
  TrackAlphabet to(a.base(), static_cast<unsigned>(out_tracks.size()));
  auto map = letter_map(a.alphabet(), to, slot);
  std::vector<State> delta(std::size_t{a.num_states()} * to.size());
  for (State q = 0; q < a.num_states(); ++q)
    for (Letter b = 0; b < to.size(); ++b) delta[std::size_t{q} * to.size() + b] = a.next(q, map[b]);
  return Dfa(a.base(), std::move(out_tracks), a.num_states(), a.start(), a.accepting_flags(),
             std::move(delta), a.order());
}

std::vector<State> reachable_order(const Dfa& a) {
  std::vector<State> order;
  std::vector<std::uint8_t> seen(a.num_states(), 0);
  order.push_back(a.start());
  seen[a.start()] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (State s : a.row(order[head]))
      if (!seen[s]) {
        seen[s] = 1;
        order.push_back(s);
      }
  }
  return order;
}

// States from which some state in `targets` is reachable using only `letters`.
std::vector<std::uint8_t> backward_closure(State n, Letter letter_count,
                                           const std::vector<std::vector<State>>& delta,
                                           const std::vector<Letter>& letters,
                                           std::vector<std::uint8_t> targets) {
  std::vector<std::vector<State>> pred(n);
  for (State q = 0; q < n; ++q)
    for (Letter a : letters)
      for (State s : delta[std::size_t{q} * letter_count + a]) pred[s].push_back(q);
  std::vector<State> stack;
  for (State q = 0; q < n; ++q)
    if (targets[q]) stack.push_back(q);
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (State p : pred[s])
      if (!targets[p]) {
        targets[p] = 1;
        stack.push_back(p);
      }
  }
  return targets;
}

std::vector<std::uint8_t> zero_closure(const Dfa& a) {
  std::vector<std::uint8_t> acc = a.accepting_flags();
  std::vector<std::vector<State>> pred(a.num_states());
  for (State q = 0; q < a.num_states(); ++q) pred[a.next(q, TrackAlphabet::kZero)].push_back(q);
  std::vector<State> stack;
  for (State q = 0; q < a.num_states(); ++q)
    if (acc[q]) stack.push_back(q);
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (State p : pred[s])
      if (!acc[p]) {
        acc[p] = 1;
        stack.push_back(p);
      }
  }
  return acc;
}

}  // namespace

Dfa universal(unsigned base, std::vector<std::string> tracks) {
  TrackAlphabet alpha(base, static_cast<unsigned>(tracks.size()));
  return Dfa(base, std::move(tracks), 1, 0, {1}, std::vector<State>(alpha.size(), 0));
}

Dfa empty_language(unsigned base, std::vector<std::string> tracks) {
  TrackAlphabet alpha(base, static_cast<unsigned>(tracks.size()));
  return Dfa(base, std::move(tracks), 1, 0, {0}, std::vector<State>(alpha.size(), 0));
}

Dfa bind_tracks(const Dfa& a, const std::vector<std::string>& names) {
  if (names.size() != a.arity()) throw Error("bind_tracks: expected " + std::to_string(a.arity()) + " names");
  std::vector<std::string> out = names;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::vector<unsigned> slot(names.size());
  for (std::size_t m = 0; m < names.size(); ++m)
    slot[m] = static_cast<unsigned>(std::lower_bound(out.begin(), out.end(), names[m]) - out.begin());
  return reindex(a, std::move(out), slot);
}

Dfa cylindrify(const Dfa& a, const std::vector<std::string>& new_tracks) {
  if (new_tracks == a.tracks()) return a;
  std::vector<unsigned> slot(a.arity());
  for (unsigned m = 0; m < a.arity(); ++m) {
    auto it = std::find(new_tracks.begin(), new_tracks.end(), a.tracks()[m]);
    if (it == new_tracks.end()) throw Error("cylindrify: track '" + a.tracks()[m] + "' missing from target tracks");
    slot[m] = static_cast<unsigned>(it - new_tracks.begin());
  }
  return reindex(a, new_tracks, slot);
}

std::vector<std::string> merged_tracks(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Dfa product(const Dfa& a, const Dfa& b, BoolOp op) {
  if (a.base() != b.base()) throw Error("incompatible numeration base");
  if (a.order() != b.order()) throw Error("incompatible digit order");
  auto tracks = merged_tracks(a.tracks(), b.tracks());
  Dfa x = cylindrify(a, tracks);
  Dfa y = cylindrify(b, tracks);
  const Letter letters = x.letter_count();

  std::unordered_map<std::uint64_t, State> ids;
  std::vector<std::pair<State, State>> pairs;
  auto id_of = [&](State p, State q) {
    std::uint64_t key = (std::uint64_t{p} << 32) | q;
    auto [it, fresh] = ids.try_emplace(key, static_cast<State>(pairs.size()));
    if (fresh) pairs.emplace_back(p, q);
    return it->second;
  };
  id_of(x.start(), y.start());
  std::vector<State> delta;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [p, q] = pairs[i];
    for (Letter c = 0; c < letters; ++c) delta.push_back(id_of(x.next(p, c), y.next(q, c)));
  }
  std::vector<std::uint8_t> acc(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    acc[i] = apply(op, x.accepting(pairs[i].first), y.accepting(pairs[i].second));
  return Dfa(a.base(), std::move(tracks), static_cast<State>(pairs.size()), 0, std::move(acc),
             std::move(delta), a.order());
}

Dfa complement(const Dfa& a) {
  std::vector<std::uint8_t> acc(a.num_states());
  for (State q = 0; q < a.num_states(); ++q) acc[q] = !a.accepting(q);
  Dfa flipped(a.base(), a.tracks(), a.num_states(), a.start(), std::move(acc), a.transitions(), a.order());
  if (a.order() == DigitOrder::Msd) return reverse_digits(pad_normalize(reverse_digits(flipped)));
  return pad_normalize(flipped);
}

Nfa project(const Dfa& a, const std::string& track, SubsetAcceptance mode) {
  require_lsd(a, "projection");
  int erased = a.track_index(track);
  if (erased < 0) throw Error("project: unknown track '" + track + "'");
  std::vector<std::string> rest = a.tracks();
  rest.erase(rest.begin() + erased);
  TrackAlphabet to(a.base(), static_cast<unsigned>(rest.size()));

  // lift[b] = letters over the old alphabet that restrict to b
  std::vector<std::vector<Letter>> lift(to.size());
  for (Letter old = 0; old < a.letter_count(); ++old) {
    std::vector<unsigned> digits = a.alphabet().digits(old);
    digits.erase(digits.begin() + erased);
    lift[to.letter(digits)].push_back(old);
  }

  const State n = a.num_states();
  std::vector<std::vector<State>> delta(std::size_t{n} * to.size());
  for (State q = 0; q < n; ++q)
    for (Letter b = 0; b < to.size(); ++b) {
      auto& out = delta[std::size_t{q} * to.size() + b];
      for (Letter old : lift[b]) out.push_back(a.next(q, old));
    }

  // Closure along columns that are zero on every remaining track.
  std::vector<std::vector<State>> old_delta(std::size_t{n} * a.letter_count());
  for (State q = 0; q < n; ++q)
    for (Letter c = 0; c < a.letter_count(); ++c) old_delta[std::size_t{q} * a.letter_count() + c] = {a.next(q, c)};
  std::vector<std::uint8_t> acc;
  if (mode == SubsetAcceptance::Any) {
    acc = backward_closure(n, a.letter_count(), old_delta, lift[TrackAlphabet::kZero], a.accepting_flags());
  } else {
    std::vector<std::uint8_t> rejecting(n);
    for (State q = 0; q < n; ++q) rejecting[q] = !a.accepting(q);
    auto bad = backward_closure(n, a.letter_count(), old_delta, lift[TrackAlphabet::kZero], rejecting);
    acc.resize(n);
    for (State q = 0; q < n; ++q) acc[q] = !bad[q];
  }
  return Nfa(a.base(), std::move(rest), n, {a.start()}, std::move(acc), std::move(delta), mode, a.order());
}

Dfa determinize(const Nfa& a) {
  const Letter letters = a.letter_count();
  std::unordered_map<std::vector<State>, State, VectorHash> ids;
  std::vector<std::vector<State>> subsets;
  auto id_of = [&](std::vector<State>&& subset) {
    auto it = ids.find(subset);
    if (it != ids.end()) return it->second;
    State id = static_cast<State>(subsets.size());
    ids.emplace(subset, id);
    subsets.push_back(std::move(subset));
    return id;
  };
  id_of(std::vector<State>(a.starts()));

  std::vector<State> delta;
  std::vector<std::uint32_t> stamp(a.num_states(), 0);
  std::uint32_t epoch = 0;
  std::vector<State> next;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (Letter c = 0; c < letters; ++c) {
      ++epoch;
      next.clear();
      for (State q : subsets[i])
        for (State s : a.next(q, c))
          if (stamp[s] != epoch) {
            stamp[s] = epoch;
            next.push_back(s);
          }
      std::sort(next.begin(), next.end());
      delta.push_back(id_of(std::vector<State>(next)));
    }
  }
  std::vector<std::uint8_t> acc(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const auto& set = subsets[i];
    if (a.mode() == SubsetAcceptance::Any)
      acc[i] = std::any_of(set.begin(), set.end(), [&](State q) { return a.accepting(q); });
    else
      acc[i] = std::all_of(set.begin(), set.end(), [&](State q) { return a.accepting(q); });
  }
  return Dfa(a.base(), a.tracks(), static_cast<State>(subsets.size()), 0, std::move(acc), std::move(delta),
             a.order());
}

Dfa canonicalize(const Dfa& a) {
  auto order = reachable_order(a);
  std::vector<State> id(a.num_states(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) id[order[i]] = static_cast<State>(i);
  std::vector<State> delta;
  delta.reserve(order.size() * a.letter_count());
  std::vector<std::uint8_t> acc;
  for (State q : order) {
    for (State s : a.row(q)) delta.push_back(id[s]);
    acc.push_back(a.accepting(q));
  }
  return Dfa(a.base(), a.tracks(), static_cast<State>(order.size()), 0, std::move(acc), std::move(delta),
             a.order());
}

Dfa minimize(const Dfa& input) {
  // Moore partition refinement on the reachable part.
  Dfa a = canonicalize(input);
  const State n = a.num_states();
  const Letter letters = a.letter_count();
  std::vector<State> cls(n);
  bool has_accept = false, has_reject = false;
  for (State q = 0; q < n; ++q) {
    cls[q] = a.accepting(q) ? 1 : 0;
    (a.accepting(q) ? has_accept : has_reject) = true;
  }
  State classes = (has_accept && has_reject) ? 2 : 1;
  if (classes == 1) std::fill(cls.begin(), cls.end(), 0);

  std::vector<State> signature(letters + 1);
  while (true) {
    std::unordered_map<std::vector<State>, State, VectorHash> ids;
    ids.reserve(n * 2);
    std::vector<State> next(n);
    for (State q = 0; q < n; ++q) {
      signature[0] = cls[q];
      for (Letter c = 0; c < letters; ++c) signature[c + 1] = cls[a.next(q, c)];
      auto [it, fresh] = ids.try_emplace(signature, static_cast<State>(ids.size()));
      next[q] = it->second;
    }
    State count = static_cast<State>(ids.size());
    cls.swap(next);
    if (count == classes) break;
    classes = count;
  }

  std::vector<State> delta(std::size_t{classes} * letters);
  std::vector<std::uint8_t> acc(classes);
  for (State q = 0; q < n; ++q) {
    acc[cls[q]] = a.accepting(q);
    for (Letter c = 0; c < letters; ++c) delta[std::size_t{cls[q]} * letters + c] = cls[a.next(q, c)];
  }
  return canonicalize(Dfa(a.base(), a.tracks(), classes, cls[a.start()], std::move(acc), std::move(delta),
                          a.order()));
}

Dfa pad_normalize(const Dfa& a) {
  require_lsd(a, "pad normalization");
  auto closed = zero_closure(a);
  // Pair (current, state after the last non-zero column).
  const Letter letters = a.letter_count();
  std::unordered_map<std::uint64_t, State> ids;
  std::vector<std::pair<State, State>> pairs;
  auto id_of = [&](State c, State s) {
    std::uint64_t key = (std::uint64_t{c} << 32) | s;
    auto [it, fresh] = ids.try_emplace(key, static_cast<State>(pairs.size()));
    if (fresh) pairs.emplace_back(c, s);
    return it->second;
  };
  id_of(a.start(), a.start());
  std::vector<State> delta;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [c, s] = pairs[i];
    for (Letter x = 0; x < letters; ++x) {
      State t = a.next(c, x);
      delta.push_back(x == TrackAlphabet::kZero ? id_of(t, s) : id_of(t, t));
    }
  }
  std::vector<std::uint8_t> acc(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) acc[i] = closed[pairs[i].second];
  return minimize(Dfa(a.base(), a.tracks(), static_cast<State>(pairs.size()), 0, std::move(acc),
                      std::move(delta), a.order()));
}

Nfa pad_normalize(const Nfa& a) {
  std::vector<std::vector<State>> delta(std::size_t{a.num_states()} * a.letter_count());
  for (State q = 0; q < a.num_states(); ++q)
    for (Letter c = 0; c < a.letter_count(); ++c) delta[std::size_t{q} * a.letter_count() + c] = a.next(q, c);
  auto acc = backward_closure(a.num_states(), a.letter_count(), delta, {TrackAlphabet::kZero}, a.accepting_flags());
  return Nfa(a.base(), a.tracks(), a.num_states(), a.starts(), std::move(acc), std::move(delta), a.mode(),
             a.order());
}

bool run(const Dfa& a, std::span<const std::uint64_t> values, std::size_t extra_padding) {
  if (values.size() != a.arity()) throw Error("run: expected " + std::to_string(a.arity()) + " values");
  const unsigned k = a.base();
  std::size_t length = 0;
  for (std::uint64_t v : values) {
    std::size_t len = 0;
    for (; v > 0; v /= k) ++len;
    length = std::max(length, len);
  }
  length += extra_padding;
  std::vector<Letter> word(length, 0);
  std::vector<std::uint64_t> rest(values.begin(), values.end());
  Letter weight = 1;
  for (unsigned m = 0; m < a.arity(); ++m, weight *= k)
    for (std::size_t pos = 0; pos < length; ++pos) {
      word[pos] += static_cast<Letter>(rest[m] % k) * weight;
      rest[m] /= k;
    }
  if (a.order() == DigitOrder::Msd) std::reverse(word.begin(), word.end());
  State q = a.start();
  for (Letter c : word) q = a.next(q, c);
  return a.accepting(q);
}

bool run(const Dfa& a, std::initializer_list<std::uint64_t> values, std::size_t extra_padding) {
  return run(a, std::span<const std::uint64_t>(values.begin(), values.size()), extra_padding);
}

bool equivalent(const Dfa& a, const Dfa& b) {
  if (a.base() != b.base()) throw Error("incompatible numeration base");
  if (a.order() != b.order()) throw Error("incompatible digit order");
  auto sa = a.tracks(), sb = b.tracks();
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) throw Error("equivalence check: track names differ");
  return minimize(a) == minimize(cylindrify(b, a.tracks()));
}

bool is_empty(const Dfa& a) {
  for (State q : reachable_order(a))
    if (a.accepting(q)) return false;
  return true;
}

bool is_infinite(const Dfa& input) {
  if (input.arity() != 1) throw Error("is_infinite needs an arity-1 automaton");
  Dfa a = input.order() == DigitOrder::Lsd ? input : reverse_digits(input);
  const State n = a.num_states();
  const Letter letters = a.letter_count();
  std::vector<std::uint8_t> reach(n, 0);
  for (State q : reachable_order(a)) reach[q] = 1;
  // States that can emit a non-zero digit into an accepting state.
  std::vector<std::uint8_t> co(n, 0);
  for (State q = 0; q < n; ++q)
    for (Letter c = 1; c < letters; ++c)
      if (a.accepting(a.next(q, c))) co[q] = 1;
  std::vector<std::vector<State>> delta(std::size_t{n} * letters);
  for (State q = 0; q < n; ++q)
    for (Letter c = 0; c < letters; ++c) delta[std::size_t{q} * letters + c] = {a.next(q, c)};
  std::vector<Letter> all(letters);
  std::iota(all.begin(), all.end(), 0);
  co = backward_closure(n, letters, delta, all, co);

  // Cycle detection restricted to reach ∩ co (iterative DFS colouring).
  std::vector<std::uint8_t> colour(n, 0);
  for (State root = 0; root < n; ++root) {
    if (!reach[root] || !co[root] || colour[root]) continue;
    std::vector<std::pair<State, Letter>> stack{{root, 0}};
    colour[root] = 1;
    while (!stack.empty()) {
      auto& [q, c] = stack.back();
      if (c == letters) {
        colour[q] = 2;
        stack.pop_back();
        continue;
      }
      State s = a.next(q, c++);
      if (!co[s]) continue;
      if (colour[s] == 1) return true;
      if (colour[s] == 0) {
        colour[s] = 1;
        stack.emplace_back(s, 0);
      }
    }
  }
  return false;
}

Dfa reverse_digits(const Dfa& a) {
  const State n = a.num_states();
  const Letter letters = a.letter_count();
  std::vector<std::vector<State>> delta(std::size_t{n} * letters);
  for (State q = 0; q < n; ++q)
    for (Letter c = 0; c < letters; ++c) delta[std::size_t{a.next(q, c)} * letters + c].push_back(q);
  std::vector<State> starts;
  for (State q = 0; q < n; ++q)
    if (a.accepting(q)) starts.push_back(q);
  std::vector<std::uint8_t> acc(n, 0);
  acc[a.start()] = 1;
  DigitOrder flipped = a.order() == DigitOrder::Lsd ? DigitOrder::Msd : DigitOrder::Lsd;
  Nfa rev(a.base(), a.tracks(), n, std::move(starts), std::move(acc), std::move(delta), SubsetAcceptance::Any,
          flipped);
  return minimize(determinize(rev));
}

Dfa exists(const Dfa& a, const std::string& track) {
  if (a.track_index(track) < 0) return a;
  return minimize(determinize(project(a, track, SubsetAcceptance::Any)));
}

Dfa forall(const Dfa& a, const std::string& track) {
  if (a.track_index(track) < 0) return a;
  return minimize(determinize(project(a, track, SubsetAcceptance::All)));
}

}  // namespace autoseq
