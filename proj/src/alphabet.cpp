#include "autoseq/alphabet.hpp"

#include "autoseq/error.hpp"

namespace autoseq {

namespace {
constexpr Letter kMaxLetters = Letter{1} << 22;
}

TrackAlphabet::TrackAlphabet(unsigned base, unsigned arity) : base_(base), arity_(arity), size_(1) {
  if (base < 2) throw Error("numeration base must be at least 2");
  powers_.reserve(arity);
  for (unsigned m = 0; m < arity; ++m) {
    powers_.push_back(size_);
    if (size_ > kMaxLetters / base) throw Error("track alphabet too large");
    size_ *= base;
  }
}

Letter TrackAlphabet::letter(std::span<const unsigned> digits) const {
  if (digits.size() != arity_) throw Error("letter arity mismatch");
  Letter out = 0;
  for (unsigned m = 0; m < arity_; ++m) {
    if (digits[m] >= base_) throw Error("digit out of range");
    out += digits[m] * powers_[m];
  }
  return out;
}

std::vector<unsigned> TrackAlphabet::digits(Letter letter) const {
  std::vector<unsigned> out(arity_);
  for (unsigned m = 0; m < arity_; ++m) out[m] = digit(letter, m);
  return out;
}

}  // namespace autoseq
