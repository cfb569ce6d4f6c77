#pragma once

// Cyclic-palindrome criterion: a surd alpha has a cyclic-palindromic period
// iff it is equivalent to some omega with
//   (a) omega + conj omega = 0      (even center)
//   (b) omega + conj omega = 1      (odd center)
//   (c) omega * conj omega = 1      (odd center)
//   (d) omega * conj omega = -1     (center between two letters)

#include <map>
#include <string_view>
#include <vector>

#include "sails/cfrac.hpp"
#include "sails/symmetry.hpp"

namespace sails {

enum class Flag { A, B, C, D };

char to_char(Flag flag) noexcept;
/// Accepts "a".."d"; throws InvalidArgument.
Flag flag_from_string(std::string_view text);

/// The symmetry matrix exchanging the two lines of a witness for `flag`, as a
/// lattice operator: slope_action(certificate(f), omega) == conj omega.
UnimodularMatrix certificate(Flag flag);

/// The trace or norm equation that defines `flag`.
bool satisfies(Flag flag, const QuadraticSurd& omega);

struct Witness {
  QuadraticSurd omega;
  UnimodularMatrix certificate;
};

struct Classification {
  QuadraticSurd surd;
  PeriodicCF cf;
  std::vector<Flag> flags;  // sorted
  std::vector<Center> centers;
  std::map<Flag, Witness> witnesses;

  bool has(Flag flag) const;
};

Classification classify(const QuadraticSurd& alpha);

/// Witness built from the periodic word alone, with a_0 placed at the center.
/// Checks the defining equation and the certificate; throws IncompatibleCenter
/// when `center` is not an axis of the right kind.
Witness word_witness(const CyclicWord& period, Flag flag, const Center& center);

/// word_witness on the period of alpha, plus the equivalence alpha ~ omega.
Witness witness(const QuadraticSurd& alpha, Flag flag, const Center& center);

/// Flags read off rotation shapes: regular palindrome -> d, palindrome plus an
/// even letter -> a, palindrome plus an odd letter -> b.
std::vector<Flag> shape_oracle(const QuadraticSurd& alpha);

/// sqrt(r) = [a0; (P, 2 a0)] with P a regular palindrome. Throws
/// PreconditionViolated unless r > 1 is not a rational square, and
/// ShapeViolation if the shape is wrong.
bool sqrt_shape_check(const Rational& r);

/// Root of x^2 - q x - 1 is [(q)] and (root of x^2 - (q+2) x + 1) - 1 is
/// [(q, 1)]. Throws PreconditionViolated for q < 1.
bool unit_period_check(const BigInt& q);

}  // namespace sails
