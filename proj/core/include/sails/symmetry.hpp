#pragma once

// Cyclic words: palindrome tests, reflection axes ("centers") of the
// bi-infinite periodic sequence, and the rotation shapes that exhibit them.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sails/arith.hpp"

namespace sails {

/// A primitive word of positive letters, read up to rotation.
class CyclicWord {
 public:
  /// Throws InvalidArgument on an empty, non-positive or non-primitive word.
  static CyclicWord make(std::vector<BigInt> letters);

  const std::vector<BigInt>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  const BigInt& operator[](std::size_t i) const { return letters_[i % letters_.size()]; }

  /// Letters i, i+1, ..., i+t-1 (mod t).
  std::vector<BigInt> rotated(std::size_t i) const;

 private:
  explicit CyclicWord(std::vector<BigInt> letters) : letters_(std::move(letters)) {}
  std::vector<BigInt> letters_;
};

bool is_primitive_word(std::span<const BigInt> word);

bool is_regular_palindrome(std::span<const BigInt> word);

/// Some rotation of the word equals its reversal.
bool is_cyclic_palindrome(const CyclicWord& word);

enum class CenterKind { EvenElement, OddElement, Gap };

std::string_view to_string(CenterKind kind) noexcept;

/// Reflection axis through letter `position` or, for Gap, through the space
/// between letters `position` and `position + 1` (mod t).
struct Center {
  CenterKind kind;
  std::size_t position;

  friend bool operator==(const Center&, const Center&) = default;
};

/// All axes fixing the periodic sequence, element axis before gap axis at
/// each position.
std::vector<Center> centers(const CyclicWord& word);

/// Rotation offsets at which the word reads as a regular palindrome, as a
/// palindrome followed by one even letter, or followed by one odd letter.
struct ShapeDecomposition {
  std::optional<std::size_t> regular_rotation;
  std::optional<std::size_t> even_extra;
  std::optional<std::size_t> odd_extra;
};

ShapeDecomposition shape_decompose(const CyclicWord& word);

/// Lexicographically least rotation.
std::vector<BigInt> canonical_rotation(const CyclicWord& word);

}  // namespace sails
