#include "sails/criterion.hpp"

#include <algorithm>
#include <array>

#include "sails/geometry.hpp"

namespace sails {

namespace {

CenterKind required_kind(Flag flag) {
  switch (flag) {
    case Flag::A: return CenterKind::EvenElement;
    case Flag::B:
    case Flag::C: return CenterKind::OddElement;
    case Flag::D: return CenterKind::Gap;
  }
  return CenterKind::Gap;
}

constexpr std::array kAllFlags{Flag::A, Flag::B, Flag::C, Flag::D};

BigInt half(const BigInt& x) {
  if (x % 2 != 0) throw Error(ErrorKind::InvariantViolation, "odd seed numerator " + x.str());
  return x / 2;
}

struct Seeds {
  LatticePoint v_m2;
  LatticePoint v_m1;
};

// v_{-2} and v_{-1} of the symmetric chain; v_0 = v_{-2} + a_0 v_{-1}.
Seeds seeds(Flag flag, const BigInt& a0) {
  switch (flag) {
    case Flag::A: return {{1, half(-a0)}, {0, 1}};
    case Flag::B: return {{1, half(1 - a0)}, {0, 1}};
    case Flag::C: return {{half(1 + a0), half(1 - a0)}, {-1, 1}};
    case Flag::D: return {{1, 0}, {0, 1}};
  }
  return {{1, 0}, {0, 1}};
}

}  // namespace

char to_char(Flag flag) noexcept { return static_cast<char>('a' + static_cast<int>(flag)); }

Flag flag_from_string(std::string_view text) {
  if (text.size() == 1 && text[0] >= 'a' && text[0] <= 'd') return static_cast<Flag>(text[0] - 'a');
  throw Error(ErrorKind::InvalidArgument, "unknown flag '" + std::string(text) + "'");
}

UnimodularMatrix certificate(Flag flag) {
  switch (flag) {
    case Flag::A: return UnimodularMatrix::make(1, 0, 0, -1);
    case Flag::B: return UnimodularMatrix::make(1, 0, 1, -1);
    case Flag::C: return UnimodularMatrix::make(0, 1, 1, 0);
    case Flag::D: return UnimodularMatrix::make(0, -1, 1, 0);
  }
  return UnimodularMatrix::identity();
}

bool satisfies(Flag flag, const QuadraticSurd& omega) {
  const TraceNorm tn = trace_norm(omega);
  switch (flag) {
    case Flag::A: return tn.trace == 0;
    case Flag::B: return tn.trace == 1;
    case Flag::C: return tn.norm == 1;
    case Flag::D: return tn.norm == -1;
  }
  return false;
}

bool Classification::has(Flag flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

Witness word_witness(const CyclicWord& period, Flag flag, const Center& center) {
  const std::vector<Center> axes = centers(period);
  if (center.kind != required_kind(flag) ||
      std::find(axes.begin(), axes.end(), center) == axes.end()) {
    throw Error(ErrorKind::IncompatibleCenter,
                std::string(1, to_char(flag)) + " at " + std::string(to_string(center.kind)) + " " +
                    std::to_string(center.position));
  }
  const std::size_t t = period.size();
  // for a gap the axis lies between a_{-1} = w[i] and a_0 = w[i+1]
  const std::size_t origin = center.position + (center.kind == CenterKind::Gap ? 1 : 0);
  auto letter = [&](std::size_t k) -> const BigInt& { return period[origin + k]; };

  const Seeds s = seeds(flag, letter(0));
  LatticePoint prev = s.v_m2;
  LatticePoint cur = s.v_m1;
  for (std::size_t k = 0; k < 2 * t; ++k) {
    LatticePoint next = prev + letter(k) * cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  // prev = v_{2t-2}, cur = v_{2t-1}; M [v_{-2} v_{-1}] = [v_{2t-2} v_{2t-1}]
  const auto base = UnimodularMatrix::make(s.v_m2.x, s.v_m1.x, s.v_m2.y, s.v_m1.y);
  const auto image = UnimodularMatrix::make(prev.x, cur.x, prev.y, cur.y);
  const UnimodularMatrix map = image * base.inverse();
  const QuadraticSurd omega = fixed_line_surds(map).first;

  Witness out{omega, certificate(flag)};
  if (!satisfies(flag, omega)) {
    throw Error(ErrorKind::InvariantViolation,
                std::string("witness ") + to_char(flag) + " = " + to_string(omega) + " fails its equation");
  }
  if (slope_action(out.certificate, omega) != conjugate(omega)) {
    throw Error(ErrorKind::InvariantViolation,
                to_string(out.certificate) + " does not exchange the lines of " + to_string(omega));
  }
  return out;
}

Witness witness(const QuadraticSurd& alpha, Flag flag, const Center& center) {
  const CyclicWord period = CyclicWord::make(expand(alpha).period());
  Witness out = word_witness(period, flag, center);
  if (!serret_equivalent(alpha, out.omega)) {
    throw Error(ErrorKind::InvariantViolation,
                to_string(out.omega) + " is not equivalent to " + to_string(alpha));
  }
  return out;
}

Classification classify(const QuadraticSurd& alpha) {
  PeriodicCF cf = expand(alpha);
  const CyclicWord period = CyclicWord::make(cf.period());
  Classification out{alpha, std::move(cf), {}, centers(period), {}};
  for (Flag flag : kAllFlags) {
    const auto it = std::find_if(out.centers.begin(), out.centers.end(),
                                 [&](const Center& c) { return c.kind == required_kind(flag); });
    if (it == out.centers.end()) continue;
    Witness w = word_witness(period, flag, *it);
    if (!serret_equivalent(alpha, w.omega)) {
      throw Error(ErrorKind::InvariantViolation,
                  to_string(w.omega) + " is not equivalent to " + to_string(alpha));
    }
    out.flags.push_back(flag);
    out.witnesses.emplace(flag, std::move(w));
  }
  return out;
}

std::vector<Flag> shape_oracle(const QuadraticSurd& alpha) {
  const ShapeDecomposition shape = shape_decompose(CyclicWord::make(expand(alpha).period()));
  std::vector<Flag> out;
  if (shape.even_extra) out.push_back(Flag::A);
  if (shape.odd_extra) out.push_back(Flag::B);
  if (shape.regular_rotation) out.push_back(Flag::D);
  return out;
}

bool sqrt_shape_check(const Rational& r) {
  const BigInt p = numerator(r);
  const BigInt q = denominator(r);
  if (r <= 1 || is_perfect_square(p * q)) {
    throw Error(ErrorKind::PreconditionViolated, "sqrt(" + to_string(r) + ") is not a quadratic irrational > 1");
  }
  const QuadraticSurd x = QuadraticSurd::make(0, 1, q, p * q);
  const PeriodicCF cf = expand(x);
  const BigInt a0 = floor(x);
  const auto& per = cf.period();
  const bool ok = cf.preperiod() == std::vector<BigInt>{a0} && per.back() == 2 * a0 &&
                  is_regular_palindrome(std::span<const BigInt>(per.data(), per.size() - 1));
  if (!ok) throw Error(ErrorKind::ShapeViolation, "sqrt(" + to_string(r) + ") = " + to_string(cf));
  return true;
}

bool unit_period_check(const BigInt& q) {
  if (q < 1) throw Error(ErrorKind::PreconditionViolated, "q = " + q.str() + " < 1");
  const QuadraticSurd x = quadratic_roots(1, -q, -1).first;
  const QuadraticSurd y = expect_surd(quadratic_roots(1, -(q + 2), 1).first - Number(Rational(1)));
  return expand(x) == PeriodicCF::make({}, {q}) && expand(y) == PeriodicCF::make({}, {q, 1});
}

}  // namespace sails
