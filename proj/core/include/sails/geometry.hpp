#pragma once

// Klein sails of a pair of irrational lines through the origin: integer
// lengths and angles, vertex sprouts, the vertex recurrence
// v_k = v_{k-2} + a_k v_{k-1}, and the automorphism search on quadratic forms.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sails/arith.hpp"

namespace sails {

struct LatticePoint {
  BigInt x;
  BigInt y;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

LatticePoint operator+(const LatticePoint& u, const LatticePoint& v);
LatticePoint operator-(const LatticePoint& u, const LatticePoint& v);
LatticePoint operator*(const BigInt& k, const LatticePoint& v);
/// det of the 2x2 matrix with columns u, v.
BigInt det(const LatticePoint& u, const LatticePoint& v);
/// Matrix times column vector.
LatticePoint apply(const UnimodularMatrix& m, const LatticePoint& v);
bool is_primitive(const LatticePoint& v);
std::string to_string(const LatticePoint& v);

struct Segment {
  LatticePoint from;
  LatticePoint to;
};

/// Number of empty subsegments of [p, q]. Throws DegenerateSegment if p == q.
BigInt integer_length(const LatticePoint& p, const LatticePoint& q);

/// Integer angle at v between [v, u] and [v, w]. Throws DegenerateAngle.
BigInt integer_angle(const LatticePoint& u, const LatticePoint& v, const LatticePoint& w);

/// Sprout [v, u + w - v] at a vertex v whose closest neighbours on the two
/// incident edges are u and w. Requires {v, u} and {v, w} to be bases of Z^2
/// lying on opposite sides of the line through v (NotUnimodularArms).
Segment sprout(const LatticePoint& v, const LatticePoint& u, const LatticePoint& w);

struct IndexedPoint {
  std::int64_t k;
  LatticePoint point;
};

struct Label {
  std::int64_t k;
  BigInt a;
};

using Cone = std::pair<QuadraticSurd, QuadraticSurd>;

/// Window [k_min, k_max] of the labelled vertex chain v_k. A chain produced by
/// korkina_construct holds both parities; sail_from_surd splits it into the
/// two adjacent Klein polygons.
struct Sail {
  std::vector<IndexedPoint> vertices;  // increasing k
  std::vector<Label> labels;           // increasing k
  std::optional<Cone> cone;            // (alpha, beta): k grows towards L_alpha

  const LatticePoint* vertex(std::int64_t k) const;
  const BigInt* label(std::int64_t k) const;
};

struct KRange {
  std::int64_t first;
  std::int64_t last;
};

/// Chain from seeds v_{-2}, v_0 with integer_length(v_{-2}, v_0) = a_0.
/// `forward` holds a_1, a_2, ... and `backward` holds a_{-1}, a_{-2}, ...;
/// the result spans k = -2 - |backward| .. |forward|. Throws BadSeed.
Sail korkina_construct(const LatticePoint& v_m2, const LatticePoint& v_0,
                       std::span<const BigInt> forward, const BigInt& a_0,
                       std::span<const BigInt> backward = {});

/// Checks v_k = v_{k-2} + a_k v_{k-1}, the alternating determinant laws and
/// local convexity on every full window; throws InvariantViolation.
void verify_chain(const Sail& chain);

/// The two adjacent sails of L_x and L_{conj x} over the window: first holds
/// the even-indexed vertices, second the odd ones. For reduced x the seeds are
/// v_{-2} = (1, 0), v_{-1} = (0, 1).
std::pair<Sail, Sail> sail_from_surd(const QuadraticSurd& x, KRange range);

/// The full vertex chain over the window (both parities).
Sail chain_from_surd(const QuadraticSurd& x, KRange range);

std::pair<Sail, Sail> split_by_parity(const Sail& chain);

/// Lattice operator G with G v_k = target v_k for all common k, if any.
std::optional<UnimodularMatrix> sail_isomorphism(const Sail& from, const Sail& to);

struct SegmentMatch {
  enum class Kind { SproutToEdge, EdgeToSprout };
  Kind kind;
  std::int64_t k;  // index of the sprout vertex (or edge end) on the source sail
  Segment source;
  Segment target;
  BigInt length;
};

/// Sprouts of one sail against edges of the other and vice versa, over the
/// part of the window where both ends are present. Throws NotAdjacent.
std::vector<SegmentMatch> edge_sprout_bijection(const Sail& first, const Sail& second);

// ---------------------------------------------------------------------------

/// The form c x^2 + 2b xy + a y^2 attached to a t^2 + 2b t + c.
struct QuadraticForm {
  BigInt a;
  BigInt b;
  BigInt c;

  BigInt discriminant() const { return b * b - a * c; }
  /// f(x, y)
  BigInt evaluate(const BigInt& x, const BigInt& y) const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

/// Form for A t^2 + B t + C; doubled when B is odd.
QuadraticForm form_from_polynomial(const BigInt& a, const BigInt& b, const BigInt& c);

/// Coefficients of f(A (x, y)).
QuadraticForm compose(const QuadraticForm& f, const UnimodularMatrix& m);

/// Nontrivial automorphism with nonnegative entries found by iterating
/// (x, y) -> (x, x + y) and (x, y) -> (x + y, y). Throws PreconditionViolated
/// and NonConvergence.
UnimodularMatrix lagrange_automorphism(const QuadraticForm& form);

/// Eigen-slopes of a hyperbolic lattice operator as (expanding, contracting).
/// Throws NotHyperbolic.
std::pair<QuadraticSurd, QuadraticSurd> fixed_line_surds(const UnimodularMatrix& m);

// ---------------------------------------------------------------------------

struct Viewport {
  std::int64_t x_min;
  std::int64_t x_max;
  std::int64_t y_min;
  std::int64_t y_max;
};

/// Standalone SVG 1.1 document: lattice dots, cone lines, sail boundaries,
/// sprout diagonals and the a_k labels.
std::string emit_svg(std::span<const Sail> sails, const Viewport& viewport);

}  // namespace sails
