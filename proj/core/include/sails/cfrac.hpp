#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sails/arith.hpp"

namespace sails {

/// Eventually periodic continued fraction [pre_0; pre_1, ..., (per_0, ..., per_{t-1})].
///
/// Normal form: the period is primitive and the preperiod cannot be shortened
/// by rotating its last letter into the period. Every letter except the very
/// first one is >= 1.
class PeriodicCF {
 public:
  /// Validates and normalizes. Throws InvalidPeriod on an empty period or a
  /// nonpositive letter.
  static PeriodicCF make(std::vector<BigInt> preperiod, std::vector<BigInt> period);

  const std::vector<BigInt>& preperiod() const noexcept { return preperiod_; }
  const std::vector<BigInt>& period() const noexcept { return period_; }
  bool purely_periodic() const noexcept { return preperiod_.empty(); }

  /// Partial quotient a_k, k >= 0.
  const BigInt& letter(std::size_t k) const;

  friend bool operator==(const PeriodicCF&, const PeriodicCF&) = default;

 private:
  PeriodicCF(std::vector<BigInt> pre, std::vector<BigInt> per)
      : preperiod_(std::move(pre)), period_(std::move(per)) {}

  std::vector<BigInt> preperiod_;
  std::vector<BigInt> period_;
};

/// `[a0; a1, (b1, b2)]`, or `[(b1, b2)]` when purely periodic.
std::string to_string(const PeriodicCF& cf);

struct Convergent {
  BigInt p;
  BigInt q;
  friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// Upper bound on complete-quotient steps; hitting it means a bug.
inline constexpr std::size_t kExpansionStepCap = 1'000'000;

PeriodicCF expand(const QuadraticSurd& x);

/// Expansion together with the complete quotients x_0, ..., x_{s+t-1}.
struct Expansion {
  PeriodicCF cf;
  std::vector<QuadraticSurd> quotients;

  std::size_t preperiod_length() const noexcept { return cf.preperiod().size(); }
  std::size_t period_length() const noexcept { return cf.period().size(); }
};
Expansion expand_with_quotients(const QuadraticSurd& x);

/// Exact value of a periodic continued fraction. Throws InvalidPeriod.
QuadraticSurd value(const PeriodicCF& cf);

/// First n convergents p_k / q_k, k = 0 .. n-1.
std::vector<Convergent> convergents(const PeriodicCF& cf, std::size_t n);

/// Product of [[a_k, 1], [1, 0]] over the letters; as a Moebius map it sends
/// the tail x_n to x_0.
UnimodularMatrix convergent_matrix(const std::vector<BigInt>& letters);

/// The reduced complete quotients of x, in expansion order.
std::vector<QuadraticSurd> complete_quotient_cycle(const QuadraticSurd& x);

/// (expand(x), expand(-1/conj x)) after checking that the second period is
/// the reversal of the first. Throws NotPurelyPeriodic.
std::pair<PeriodicCF, PeriodicCF> galois_reverse(const QuadraticSurd& x);

/// True iff the continued fractions of x and y share a tail.
bool serret_equivalent(const QuadraticSurd& x, const QuadraticSurd& y);

/// A with mobius(A, y) == x. Throws NotEquivalent.
UnimodularMatrix serret_matrix(const QuadraticSurd& x, const QuadraticSurd& y);

}  // namespace sails
