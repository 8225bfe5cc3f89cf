#include "autoseq/sequences.hpp"

#include <bit>
#include <map>
#include <unordered_map>

#include "autoseq/error.hpp"

namespace autoseq {

namespace {

Symbol thue_morse_at(std::uint64_t n) { return std::popcount(n) & 1U; }

Symbol rudin_shapiro_at(std::uint64_t n) { return std::popcount(n & (n >> 1)) & 1U; }

// p_0 = 0 has length 1; p_{i+1} = p_i 0 rev(comp(p_i)) has length 2^{i+1} - 1.
Symbol paperfolding_at(std::uint64_t n) {
  std::uint64_t len = 1;
  while (len <= n) len = 2 * len + 1;
  Symbol flip = 0;
  while (len > 1) {
    std::uint64_t half = (len - 1) / 2;
    if (n == half) return flip;
    if (n > half) {
      n = 2 * half - n;
      flip ^= 1U;
    }
    len = half;
  }
  return flip;
}

}  // namespace

SequenceOracle thue_morse_oracle() {
  return {"thue-morse", "t[n] = number of 1 bits of n, mod 2", thue_morse_at};
}

SequenceOracle rudin_shapiro_oracle() {
  return {"rudin-shapiro", "r[n] = number of (overlapping) 11 blocks in binary n, mod 2", rudin_shapiro_at};
}

SequenceOracle period_doubling_oracle() {
  return {"period-doubling", "d[n] = 1 if t[n] != t[n+1] else 0",
          [](std::uint64_t n) -> Symbol { return thue_morse_at(n) != thue_morse_at(n + 1) ? 1 : 0; }};
}

SequenceOracle paperfolding_oracle() {
  return {"paperfolding", "limit of p_0 = 0, p_{i+1} = p_i 0 reverse(complement(p_i))", paperfolding_at};
}

Dfao thue_morse() { return Dfao(2, 2, 0, {0, 1, 1, 0}, {0, 1}); }

Dfao rudin_shapiro() {
  // state = 2 * parity + previous bit
  std::vector<State> delta(8);
  for (State parity = 0; parity < 2; ++parity)
    for (State prev = 0; prev < 2; ++prev)
      for (unsigned bit = 0; bit < 2; ++bit) {
        State p = parity ^ (prev & bit);
        delta[(2 * parity + prev) * 2 + bit] = 2 * p + bit;
      }
  return Dfao(2, 4, 0, std::move(delta), {0, 0, 1, 1});
}

Dfao period_doubling() {
  static const Dfao cached = synthesize_dfao(period_doubling_oracle(), 2);
  return cached;
}

Dfao paperfolding() {
  static const Dfao cached = synthesize_dfao(paperfolding_oracle(), 2);
  return cached;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"thue-morse", "rudin-shapiro", "period-doubling", "paperfolding"};
  return names;
}

std::optional<Builtin> find_builtin(const std::string& name) {
  if (name == "thue-morse") return Builtin{thue_morse_oracle(), thue_morse()};
  if (name == "rudin-shapiro") return Builtin{rudin_shapiro_oracle(), rudin_shapiro()};
  if (name == "period-doubling") return Builtin{period_doubling_oracle(), period_doubling()};
  if (name == "paperfolding") return Builtin{paperfolding_oracle(), paperfolding()};
  return std::nullopt;
}

Dfao synthesize_dfao(const SequenceOracle& oracle, unsigned base, const SynthesisOptions& options) {
  if (base < 2) throw Error("numeration base must be at least 2");
  if (options.probe_len == 0) throw Error("probe length must be positive");

  struct Element {
    std::uint64_t scale;  // k^e
    std::uint64_t offset;
  };
  std::vector<Element> elements;
  std::map<std::vector<Symbol>, State> by_probe;
  std::vector<State> delta;

  auto state_of = [&](Element e) -> State {
    std::vector<Symbol> probe(options.probe_len);
    for (std::uint64_t n = 0; n < options.probe_len; ++n) probe[n] = oracle.at(e.scale * n + e.offset);
    auto [it, fresh] = by_probe.try_emplace(std::move(probe), static_cast<State>(elements.size()));
    if (fresh) {
      if (elements.size() >= options.max_states) throw Error("kernel exceeds state limit; sequence may not be automatic");
      elements.push_back(e);
    }
    return it->second;
  };

  state_of({1, 0});
  for (std::size_t i = 0; i < elements.size(); ++i) {
    Element e = elements[i];
    if (e.scale > (std::uint64_t{1} << 40) / base) throw Error("kernel exploration too deep");
    for (unsigned d = 0; d < base; ++d) delta.push_back(state_of({e.scale * base, e.offset + d * e.scale}));
  }
  std::vector<Symbol> out(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) out[i] = oracle.at(elements[i].offset);

  Dfao result(base, static_cast<State>(elements.size()), 0, std::move(delta), std::move(out));
  for (std::uint64_t n = 0; n < options.verify_len; ++n)
    if (result(n) != oracle.at(n))
      throw Error("kernel probe length insufficient (" + oracle.name + " differs at " + std::to_string(n) + ")");
  return result;
}

std::size_t least_period(const std::vector<Symbol>& word) {
  if (word.empty()) return 0;
  std::vector<std::size_t> border(word.size(), 0);
  std::size_t k = 0;
  for (std::size_t m = 1; m < word.size(); ++m) {
    while (k > 0 && word[k] != word[m]) k = border[k - 1];
    if (word[k] == word[m]) ++k;
    border[m] = k;
  }
  return word.size() - border.back();
}

std::vector<std::uint64_t> factor_least_periods(const SequenceOracle& oracle, std::uint64_t prefix_len,
                                                std::uint64_t max_n, unsigned min_extra) {
  std::vector<Symbol> x(prefix_len);
  for (std::uint64_t n = 0; n < prefix_len; ++n) x[n] = oracle.at(n);

  std::vector<std::uint8_t> found(max_n + 1, 0);
  std::vector<std::uint64_t> border;
  border.reserve(4096);
  // For a fixed start the least period never decreases as the factor grows,
  // so each scan stops once it exceeds max_n.
  for (std::uint64_t i = 0; i < prefix_len; ++i) {
    const Symbol* w = x.data() + i;
    const std::uint64_t avail = prefix_len - i;
    border.assign(1, 0);
    std::uint64_t k = 0;
    for (std::uint64_t m = 1; m <= avail; ++m) {
      if (m > 1) {
        Symbol c = w[m - 1];
        while (k > 0 && w[k] != c) k = border[k - 1];
        if (w[k] == c) ++k;
        border.push_back(k);
      }
      std::uint64_t lp = m - border[m - 1];
      if (lp > max_n) break;
      if (m >= lp + min_extra) found[lp] = 1;
    }
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 1; p <= max_n; ++p)
    if (found[p]) out.push_back(p);
  return out;
}

}  // namespace autoseq
