#pragma once

// Exact arithmetic over Q and real quadratic fields Q(sqrt d), plus the
// GL2(Z) Moebius action on quadratic irrationalities.

#include <compare>
#include <string>
#include <utility>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "sails/error.hpp"

namespace sails {

using BigInt = boost::multiprecision::cpp_int;
/// Always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Integer helpers

int sign(const BigInt& x);
BigInt abs(const BigInt& x);
BigInt gcd(const BigInt& x, const BigInt& y);
/// floor(x / y) for y != 0.
BigInt floor_div(const BigInt& x, const BigInt& y);
/// Largest s >= 0 with s*s <= x; x must be >= 0.
BigInt isqrt(const BigInt& x);
bool is_perfect_square(const BigInt& x);

/// Splits x > 0 as square^2 * core with core squarefree (trial division).
struct SquarefreeSplit {
  BigInt square;
  BigInt core;
};
SquarefreeSplit squarefree_split(const BigInt& x);

std::string to_string(const Rational& x);

// ---------------------------------------------------------------------------

/// The value (a + b*sqrt(d)) / c with c > 0, gcd(a, b, c) = 1, b != 0 and
/// d > 1 squarefree. Immutable; equality is field-by-field.
class QuadraticSurd {
 public:
  /// Canonicalizes: extracts square factors of d into b, makes c positive and
  /// divides out gcd(a, b, c). Throws RationalValue when the value is rational
  /// and ZeroDenominator when c == 0.
  static QuadraticSurd make(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d);

  /// Same as make() for a radicand the caller knows is squarefree and > 1.
  static QuadraticSurd from_squarefree(BigInt a, BigInt b, BigInt c, BigInt d);

  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }
  const BigInt& c() const noexcept { return c_; }
  const BigInt& d() const noexcept { return d_; }

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

 private:
  QuadraticSurd(BigInt a, BigInt b, BigInt c, BigInt d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  BigInt a_;
  BigInt b_;
  BigInt c_;
  BigInt d_;
};

/// Lexicographic order on (d, c, a, b); a key order, not the numeric one.
struct StructuralLess {
  bool operator()(const QuadraticSurd& x, const QuadraticSurd& y) const;
};

std::string to_string(const QuadraticSurd& x);

QuadraticSurd conjugate(const QuadraticSurd& x);

struct TraceNorm {
  Rational trace;
  Rational norm;
};
/// (x + conj x, x * conj x).
TraceNorm trace_norm(const QuadraticSurd& x);

/// Exact three-way comparison; never goes through floating point.
std::strong_ordering compare(const QuadraticSurd& x, const Rational& y);
/// Numeric comparison of two surds; throws RadicandMismatch if d differs.
std::strong_ordering compare(const QuadraticSurd& x, const QuadraticSurd& y);

BigInt floor(const QuadraticSurd& x);

/// Galois' reducedness: x > 1 and -1 < conj x < 0.
bool is_reduced(const QuadraticSurd& x);

/// Primitive (A, B, C) with A > 0 and A x^2 + B x + C = 0.
struct IntegerQuadratic {
  BigInt a;
  BigInt b;
  BigInt c;
  friend bool operator==(const IntegerQuadratic&, const IntegerQuadratic&) = default;
};
IntegerQuadratic minimal_polynomial(const QuadraticSurd& x);
BigInt discriminant(const IntegerQuadratic& poly);

/// Real roots of A t^2 + B t + C as (larger, smaller). Throws
/// PreconditionViolated when A == 0 or the discriminant is negative and
/// RationalValue when it is a perfect square.
std::pair<QuadraticSurd, QuadraticSurd> quadratic_roots(const BigInt& a, const BigInt& b,
                                                        const BigInt& c);

// ---------------------------------------------------------------------------
// Field arithmetic

using Number = std::variant<Rational, QuadraticSurd>;

enum class ArithOp { Add, Sub, Mul, Div };

/// Exact arithmetic in Q(sqrt d). Results whose sqrt(d) part cancels come back
/// as Rational. Throws RadicandMismatch and DivisionByZero.
Number arith(const Number& x, const Number& y, ArithOp op);

Number operator+(const QuadraticSurd& x, const Number& y);
Number operator-(const QuadraticSurd& x, const Number& y);
Number operator*(const QuadraticSurd& x, const Number& y);
Number operator/(const QuadraticSurd& x, const Number& y);

QuadraticSurd operator-(const QuadraticSurd& x);

std::string to_string(const Number& x);

/// Unwraps a Number known to be irrational; throws RationalValue otherwise.
QuadraticSurd expect_surd(const Number& x);

// ---------------------------------------------------------------------------

/// Row-major [[p, q], [r, s]] with p*s - q*r = +-1.
class UnimodularMatrix {
 public:
  /// Throws NotUnimodular when the determinant is not +-1.
  static UnimodularMatrix make(BigInt p, BigInt q, BigInt r, BigInt s);
  static UnimodularMatrix identity();

  const BigInt& p() const noexcept { return p_; }
  const BigInt& q() const noexcept { return q_; }
  const BigInt& r() const noexcept { return r_; }
  const BigInt& s() const noexcept { return s_; }

  int det() const;
  BigInt trace() const { return p_ + s_; }
  UnimodularMatrix inverse() const;
  /// [[s, r], [q, p]]: turns a lattice operator into the Moebius matrix of the
  /// map it induces on slopes (and back).
  UnimodularMatrix slope_form() const;

  friend UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y);
  friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;

 private:
  UnimodularMatrix(BigInt p, BigInt q, BigInt r, BigInt s)
      : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {}

  BigInt p_;
  BigInt q_;
  BigInt r_;
  BigInt s_;
};

std::string to_string(const UnimodularMatrix& m);

/// (p x + q) / (r x + s).
QuadraticSurd mobius(const UnimodularMatrix& m, const QuadraticSurd& x);

/// Image of slope x under the lattice operator m acting on column vectors:
/// the line through (1, x) goes to the line through m * (1, x).
QuadraticSurd slope_action(const UnimodularMatrix& m, const QuadraticSurd& x);

}  // namespace sails
