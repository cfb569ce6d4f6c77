#include "sails/symmetry.hpp"

#include <algorithm>

namespace sails {

bool is_primitive_word(std::span<const BigInt> word) {
  const std::size_t t = word.size();
  for (std::size_t p = 1; p < t; ++p) {
    if (t % p != 0) continue;
    bool repeats = true;
    for (std::size_t i = p; i < t && repeats; ++i) repeats = word[i] == word[i - p];
    if (repeats) return false;
  }
  return true;
}

CyclicWord CyclicWord::make(std::vector<BigInt> letters) {
  if (letters.empty()) throw Error(ErrorKind::InvalidArgument, "empty word");
  for (const auto& a : letters) {
    if (a.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "letter " + a.str() + " < 1");
  }
  if (!is_primitive_word(letters)) {
    throw Error(ErrorKind::InvalidArgument, "word is a power of a shorter word");
  }
  return CyclicWord(std::move(letters));
}

std::vector<BigInt> CyclicWord::rotated(std::size_t i) const {
  std::vector<BigInt> out;
  out.reserve(letters_.size());
  for (std::size_t k = 0; k < letters_.size(); ++k) out.push_back((*this)[i + k]);
  return out;
}

bool is_regular_palindrome(std::span<const BigInt> word) {
  return std::equal(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(word.size() / 2),
                    word.rbegin());
}

bool is_cyclic_palindrome(const CyclicWord& word) {
  const auto& w = word.letters();
  std::vector<BigInt> doubled(w.begin(), w.end());
  doubled.insert(doubled.end(), w.begin(), w.end());
  return std::search(doubled.begin(), doubled.end(), w.rbegin(), w.rend()) != doubled.end();
}

std::string_view to_string(CenterKind kind) noexcept {
  switch (kind) {
    case CenterKind::EvenElement: return "even";
    case CenterKind::OddElement: return "odd";
    case CenterKind::Gap: return "gap";
  }
  return "?";
}

std::vector<Center> centers(const CyclicWord& word) {
  const std::size_t t = word.size();
  // reflection k -> s - k (mod t); s = 2i for the element axis at i, 2i + 1
  // for the gap axis after i
  auto fixes = [&](std::size_t s) {
    for (std::size_t k = 0; k < t; ++k) {
      if (word[k] != word[(s + t - k) % t]) return false;
    }
    return true;
  };
  std::vector<Center> out;
  for (std::size_t i = 0; i < t; ++i) {
    if (fixes((2 * i) % t)) {
      const bool even = word[i] % 2 == 0;
      out.push_back({even ? CenterKind::EvenElement : CenterKind::OddElement, i});
    }
    if (fixes((2 * i + 1) % t)) out.push_back({CenterKind::Gap, i});
  }
  return out;
}

ShapeDecomposition shape_decompose(const CyclicWord& word) {
  ShapeDecomposition out;
  for (std::size_t r = 0; r < word.size(); ++r) {
    const std::vector<BigInt> w = word.rotated(r);
    if (!out.regular_rotation && is_regular_palindrome(w)) out.regular_rotation = r;
    const std::span<const BigInt> body(w.data(), w.size() - 1);
    if (is_regular_palindrome(body)) {
      auto& slot = w.back() % 2 == 0 ? out.even_extra : out.odd_extra;
      if (!slot) slot = r;
    }
  }
  return out;
}

std::vector<BigInt> canonical_rotation(const CyclicWord& word) {
  // least rotation by the two-candidate scan (i, j), k = matched length
  const std::size_t n = word.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const BigInt& x = word[i + k];
    const BigInt& y = word[j + k];
    if (x == y) {
      ++k;
      continue;
    }
    if (x > y) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return word.rotated(std::min(i, j));
}

}  // namespace sails
