#include "autoseq/dfao.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "autoseq/error.hpp"
#include "autoseq/operations.hpp"

namespace autoseq {

Dfao::Dfao(unsigned base, State num_states, State start, std::vector<State> delta, std::vector<Symbol> outputs)
    : base_(base), start_(start), delta_(std::move(delta)), outputs_(std::move(outputs)) {
  if (base < 2) throw Error("numeration base must be at least 2");
  if (num_states == 0 || outputs_.size() != num_states) throw Error("DFAO output list does not match state count");
  if (start_ >= num_states) throw Error("DFAO start state out of range");
  if (delta_.size() != std::size_t{num_states} * base) throw Error("DFAO transition table is not complete");
  for (State s : delta_)
    if (s >= num_states) throw Error("DFAO transition target out of range");

  std::vector<std::uint8_t> seen(num_states, 0);
  std::vector<State> queue{start_};
  seen[start_] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    State q = queue[head];
    if (outputs_[next(q, 0)] != outputs_[q])
      throw Error("DFAO is not zero-stable: state " + std::to_string(q) + " changes output on digit 0");
    for (unsigned d = 0; d < base_; ++d)
      if (!seen[next(q, d)]) {
        seen[next(q, d)] = 1;
        queue.push_back(next(q, d));
      }
  }
}

Symbol Dfao::output_count() const noexcept { return *std::max_element(outputs_.begin(), outputs_.end()) + 1; }

Symbol Dfao::operator()(std::uint64_t n) const noexcept {
  State q = start_;
  for (; n > 0; n /= base_) q = next(q, static_cast<unsigned>(n % base_));
  return outputs_[q];
}

bool output_equivalent(const Dfao& a, const Dfao& b) {
  if (a.base() != b.base()) return false;
  std::map<std::pair<State, State>, bool> seen;
  std::vector<std::pair<State, State>> stack{{a.start(), b.start()}};
  seen[stack.front()] = true;
  while (!stack.empty()) {
    auto [p, q] = stack.back();
    stack.pop_back();
    if (a.output(p) != b.output(q)) return false;
    for (unsigned d = 0; d < a.base(); ++d) {
      std::pair<State, State> nxt{a.next(p, d), b.next(q, d)};
      if (seen.emplace(nxt, true).second) stack.push_back(nxt);
    }
  }
  return true;
}

Dfao minimize(const Dfao& a) {
  // Encode as a DFA partition problem: refine on outputs.
  const unsigned k = a.base();
  std::vector<State> order{a.start()};
  std::vector<State> index(a.num_states(), a.num_states());
  index[a.start()] = 0;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (unsigned d = 0; d < k; ++d) {
      State s = a.next(order[h], d);
      if (index[s] == a.num_states()) {
        index[s] = static_cast<State>(order.size());
        order.push_back(s);
      }
    }
  const State n = static_cast<State>(order.size());
  std::vector<State> cls(n);
  for (State i = 0; i < n; ++i) cls[i] = a.output(order[i]);
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<State>, State> ids;
    std::vector<State> next(n);
    std::vector<State> sig(k + 1);
    for (State i = 0; i < n; ++i) {
      sig[0] = cls[i];
      for (unsigned d = 0; d < k; ++d) sig[d + 1] = cls[index[a.next(order[i], d)]];
      next[i] = ids.try_emplace(sig, static_cast<State>(ids.size())).first->second;
    }
    cls.swap(next);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  // Canonical numbering by BFS over classes.
  std::vector<State> rep(classes, n), renum(classes, static_cast<State>(classes));
  for (State i = 0; i < n; ++i)
    if (rep[cls[i]] == n) rep[cls[i]] = i;
  std::vector<State> queue{cls[0]};
  renum[cls[0]] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (unsigned d = 0; d < k; ++d) {
      State c = cls[index[a.next(order[rep[queue[h]]], d)]];
      if (renum[c] == classes) {
        renum[c] = static_cast<State>(queue.size());
        queue.push_back(c);
      }
    }
  std::vector<State> delta(classes * k);
  std::vector<Symbol> out(classes);
  for (std::size_t c = 0; c < classes; ++c) {
    State i = rep[queue[c]];
    out[c] = a.output(order[i]);
    for (unsigned d = 0; d < k; ++d) delta[c * k + d] = renum[cls[index[a.next(order[i], d)]]];
  }
  return Dfao(k, static_cast<State>(classes), 0, std::move(delta), std::move(out));
}

Dfao to_dfao(const Dfa& a) {
  if (a.arity() != 1 || a.order() != DigitOrder::Lsd) throw Error("to_dfao needs an arity-1 LSD automaton");
  std::vector<Symbol> out(a.num_states());
  for (State q = 0; q < a.num_states(); ++q) out[q] = a.accepting(q) ? 1 : 0;
  return Dfao(a.base(), a.num_states(), a.start(), a.transitions(), std::move(out));
}

Dfa output_automaton(const Dfao& seq, Symbol symbol, const std::string& track) {
  std::vector<std::uint8_t> acc(seq.num_states());
  for (State q = 0; q < seq.num_states(); ++q) acc[q] = seq.output(q) == symbol;
  return minimize(Dfa(seq.base(), {track}, seq.num_states(), seq.start(), std::move(acc), seq.transitions()));
}

}  // namespace autoseq
