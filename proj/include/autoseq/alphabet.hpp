#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace autoseq {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// Letters are r-tuples of base-k digits. Track m contributes digit * k^m to
/// the letter index, so letter 0 is the all-zero column.
class TrackAlphabet {
 public:
  TrackAlphabet(unsigned base, unsigned arity);

  unsigned base() const noexcept { return base_; }
  unsigned arity() const noexcept { return arity_; }
  Letter size() const noexcept { return size_; }

  unsigned digit(Letter letter, unsigned track) const noexcept {
    return (letter / powers_[track]) % base_;
  }
  Letter letter(std::span<const unsigned> digits) const;
  std::vector<unsigned> digits(Letter letter) const;

  static constexpr Letter kZero = 0;

  friend bool operator==(const TrackAlphabet&, const TrackAlphabet&) = default;

 private:
  unsigned base_;
  unsigned arity_;
  Letter size_;
  std::vector<Letter> powers_;
};

}  // namespace autoseq
