#include "autoseq/numeration.hpp"

#include "autoseq/error.hpp"
#include "autoseq/operations.hpp"

namespace autoseq {

std::size_t digit_length(std::uint64_t n, unsigned base) {
  std::size_t len = 0;
  for (; n > 0; n /= base) ++len;
  return len;
}

DigitWord encode(const std::vector<std::uint64_t>& values, unsigned base, std::optional<std::size_t> pad_to) {
  if (base < 2) throw Error("numeration base must be at least 2");
  std::size_t minimal = 0;
  for (auto v : values) minimal = std::max(minimal, digit_length(v, base));
  std::size_t length = pad_to.value_or(minimal);
  if (length < minimal) throw Error("encode: padding length " + std::to_string(length) + " below minimal " +
                                    std::to_string(minimal));
  DigitWord word{base, static_cast<unsigned>(values.size()), {}};
  word.columns.assign(length, std::vector<unsigned>(values.size(), 0));
  for (std::size_t m = 0; m < values.size(); ++m) {
    std::uint64_t v = values[m];
    for (std::size_t pos = 0; pos < length; ++pos, v /= base) word.columns[pos][m] = static_cast<unsigned>(v % base);
  }
  return word;
}

std::vector<std::uint64_t> decode(const DigitWord& word) {
  std::vector<std::uint64_t> out(word.arity, 0);
  for (std::size_t pos = word.columns.size(); pos-- > 0;)
    for (unsigned m = 0; m < word.arity; ++m) {
      unsigned d = word.columns[pos][m];
      if (d >= word.base) throw Error("decode: digit out of range");
      out[m] = out[m] * word.base + d;
    }
  return out;
}

namespace {

Dfa pairwise_relation(unsigned base, bool accept_equal, bool accept_less) {
  // 0: equal so far, 1: less, 2: greater. A more significant differing column
  // overrides, and LSD reading sees it later.
  Dfa raw = raw_lt_automaton(base);
  std::vector<std::uint8_t> acc{accept_equal, accept_less, 0};
  return Dfa(base, raw.tracks(), 3, 0, std::move(acc), raw.transitions());
}

}  // namespace

Dfa raw_lt_automaton(unsigned base) {
  TrackAlphabet alpha(base, 2);
  std::vector<State> delta(3 * alpha.size());
  for (State q = 0; q < 3; ++q)
    for (Letter c = 0; c < alpha.size(); ++c) {
      unsigned a = alpha.digit(c, 0), b = alpha.digit(c, 1);
      delta[q * alpha.size() + c] = a < b ? 1 : a > b ? 2 : q;
    }
  return Dfa(base, {"x", "y"}, 3, 0, {0, 1, 0}, std::move(delta));
}

Dfa eq_automaton(unsigned base, const std::string& x, const std::string& y) {
  return minimize(bind_tracks(pairwise_relation(base, true, false), {x, y}));
}

Dfa lt_automaton(unsigned base, const std::string& x, const std::string& y) {
  return minimize(bind_tracks(pairwise_relation(base, false, true), {x, y}));
}

Dfa leq_automaton(unsigned base, const std::string& x, const std::string& y) {
  return minimize(bind_tracks(pairwise_relation(base, true, true), {x, y}));
}

Dfa add_automaton(unsigned base, const std::string& x, const std::string& y, const std::string& z) {
  TrackAlphabet alpha(base, 3);
  // states: carry 0, carry 1, sink
  std::vector<State> delta(3 * alpha.size(), 2);
  for (State carry = 0; carry < 2; ++carry)
    for (Letter c = 0; c < alpha.size(); ++c) {
      unsigned sum = alpha.digit(c, 0) + alpha.digit(c, 1) + carry;
      if (sum % base == alpha.digit(c, 2)) delta[carry * alpha.size() + c] = sum / base;
    }
  Dfa raw(base, {"x", "y", "z"}, 3, 0, {1, 0, 0}, std::move(delta));
  return minimize(bind_tracks(raw, {x, y, z}));
}

Dfa const_automaton(std::uint64_t c, unsigned base, const std::string& x) {
  // Chain of the digits of c, then a zero loop; anything else sinks.
  std::size_t len = digit_length(c, base);
  State tail = static_cast<State>(len), sink = tail + 1;
  std::vector<State> delta(std::size_t{sink + 1} * base, sink);
  std::uint64_t v = c;
  for (State q = 0; q < tail; ++q, v /= base) delta[q * base + v % base] = q + 1;
  delta[tail * base + 0] = tail;
  std::vector<std::uint8_t> acc(sink + 1, 0);
  acc[tail] = 1;
  return minimize(Dfa(base, {x}, sink + 1, 0, std::move(acc), std::move(delta)));
}

Dfa at_least_automaton(std::uint64_t lower, unsigned base, const std::string& x) {
  Dfa below = exists(minimize(product(lt_automaton(base, x, "$c"), const_automaton(lower, base, "$c"), BoolOp::And)),
                     "$c");
  return minimize(complement(below));
}

Dfa reverse_to_msd(const Dfa& a) {
  if (a.arity() != 1) throw Error("reverse_to_msd needs an arity-1 automaton");
  if (a.order() != DigitOrder::Lsd) throw Error("reverse_to_msd expects an LSD-first automaton");
  return reverse_digits(a);
}

}  // namespace autoseq
