#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sails/arith.hpp"

using namespace sails;

namespace {

QuadraticSurd S(long a, long b, long c, long d) { return QuadraticSurd::make(a, b, c, d); }

Rational R(long p, long q = 1) { return Rational(p) / q; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(SurdNew, ExtractsSquaresAndReduces) {
  const auto x = S(2, 2, 2, 8);
  EXPECT_EQ(x.a(), 1);
  EXPECT_EQ(x.b(), 2);
  EXPECT_EQ(x.c(), 1);
  EXPECT_EQ(x.d(), 2);
  EXPECT_EQ(S(0, 1, 1, 2), QuadraticSurd::from_squarefree(0, 1, 1, 2));
}

TEST(SurdNew, NormalizesSign) {
  const auto x = S(1, 1, -2, 5);
  EXPECT_EQ(x.a(), -1);
  EXPECT_EQ(x.b(), -1);
  EXPECT_EQ(x.c(), 2);
}

TEST(SurdNew, Errors) {
  EXPECT_EQ(kind_of([] { S(0, 1, 1, 4); }), ErrorKind::RationalValue);
  EXPECT_EQ(kind_of([] { S(0, 1, 1, 1); }), ErrorKind::RationalValue);
  EXPECT_EQ(kind_of([] { S(1, 0, 1, 2); }), ErrorKind::RationalValue);
  EXPECT_EQ(kind_of([] { S(1, 1, 0, 2); }), ErrorKind::ZeroDenominator);
}

TEST(SurdNew, Idempotent) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto x = oracle::random_surd(rng, 50, 20, 30, 300);
    EXPECT_EQ(QuadraticSurd::make(x.a(), x.b(), x.c(), x.d()), x);
  }
}

TEST(SurdText, Rendering) {
  EXPECT_EQ(to_string(S(0, 1, 1, 2)), "sqrt(2)");
  EXPECT_EQ(to_string(S(1, 1, 2, 5)), "(1+sqrt(5))/2");
  EXPECT_EQ(to_string(S(1, -1, 2, 5)), "(1-sqrt(5))/2");
  EXPECT_EQ(to_string(S(0, 1, 2, 2)), "sqrt(2)/2");
  EXPECT_EQ(to_string(S(1, 2, 1, 2)), "1+2*sqrt(2)");
  EXPECT_EQ(to_string(S(0, -1, 1, 2)), "-sqrt(2)");
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(S(1, 1, 2, 5)), S(1, -1, 2, 5));
  EXPECT_EQ(conjugate(S(0, 1, 1, 2)), S(0, -1, 1, 2));
  EXPECT_EQ(conjugate(S(3, 2, 5, 7)), S(3, -2, 5, 7));
}

TEST(Conjugate, IsFieldAutomorphism) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const auto x = oracle::random_surd(rng, 20, 10, 20, 13);
    auto y = oracle::random_surd(rng, 20, 10, 20, 13);
    y = QuadraticSurd::make(y.a(), y.b(), y.c(), x.d());
    EXPECT_EQ(conjugate(conjugate(x)), x);
    for (ArithOp op : {ArithOp::Add, ArithOp::Sub, ArithOp::Mul, ArithOp::Div}) {
      const Number lhs = arith(x, y, op);
      const Number rhs = arith(conjugate(x), conjugate(y), op);
      if (const auto* s = std::get_if<QuadraticSurd>(&lhs)) {
        EXPECT_EQ(conjugate(*s), std::get<QuadraticSurd>(rhs));
      } else {
        EXPECT_EQ(std::get<Rational>(lhs), std::get<Rational>(rhs));
      }
    }
  }
}

TEST(TraceNorm, Examples) {
  auto tn = trace_norm(S(1, 1, 2, 5));
  EXPECT_EQ(tn.trace, 1);
  EXPECT_EQ(tn.norm, -1);
  tn = trace_norm(S(0, 1, 1, 2));
  EXPECT_EQ(tn.trace, 0);
  EXPECT_EQ(tn.norm, -2);
  tn = trace_norm(S(1, 1, 1, 2));
  EXPECT_EQ(tn.trace, 2);
  EXPECT_EQ(tn.norm, -1);
  tn = trace_norm(S(3, 2, 5, 7));
  EXPECT_EQ(tn.trace, R(6, 5));
  EXPECT_EQ(tn.norm, R(9 - 28, 25));
}

TEST(TraceNorm, ConjugationInvariant) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto x = oracle::random_surd(rng, 100, 30, 50, 500);
    const auto a = trace_norm(x);
    const auto b = trace_norm(conjugate(x));
    EXPECT_EQ(a.trace, b.trace);
    EXPECT_EQ(a.norm, b.norm);
  }
}

TEST(Compare, Examples) {
  EXPECT_EQ(compare(S(0, 1, 1, 2), R(3, 2)), std::strong_ordering::less);
  EXPECT_EQ(compare(S(0, 1, 1, 2), R(1)), std::strong_ordering::greater);
  EXPECT_EQ(compare(S(1, 1, 2, 5), R(2)), std::strong_ordering::less);
  EXPECT_EQ(compare(S(0, -1, 1, 2), R(-1)), std::strong_ordering::less);
  EXPECT_EQ(compare(S(0, 1, 1, 2), S(0, 1, 1, 2)), std::strong_ordering::equal);
}

TEST(Compare, RadicandMismatch) {
  EXPECT_EQ(kind_of([] { (void)compare(S(0, 1, 1, 2), S(0, 1, 1, 3)); }), ErrorKind::RadicandMismatch);
}

TEST(Compare, AgreesWithFloatOracle) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-5000, 5000), den(1, 1000);
  for (int i = 0; i < 5000; ++i) {
    const auto x = oracle::random_surd(rng, 1000, 1000, 1000, 1000);
    const Rational y = R(num(rng), den(rng));
    const double fx = oracle::approx(x);
    const double fy = y.convert_to<double>();
    if (std::abs(fx - fy) < 1e-9 * (1 + std::abs(fy))) continue;  // too close for doubles
    EXPECT_EQ(compare(x, y) == std::strong_ordering::less, fx < fy) << to_string(x) << " vs " << y;
  }
}

TEST(Compare, SurdOrderIsTotalAndConsistent) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 2000; ++i) {
    const auto x = oracle::random_surd(rng, 1000, 1000, 1000, 1000);
    auto y = oracle::random_surd(rng, 1000, 1000, 1000, 1000);
    y = QuadraticSurd::make(y.a(), y.b(), y.c(), x.d());
    const auto xy = compare(x, y);
    EXPECT_EQ(compare(y, x), 0 <=> xy);
    if (x == y) {
      EXPECT_EQ(xy, std::strong_ordering::equal);
      continue;
    }
    EXPECT_NE(xy, std::strong_ordering::equal);
    const double fx = oracle::approx(x), fy = oracle::approx(y);
    if (std::abs(fx - fy) > 1e-9 * (1 + std::abs(fx))) EXPECT_EQ(xy == std::strong_ordering::less, fx < fy);
  }
}

TEST(Floor, Examples) {
  EXPECT_EQ(sails::floor(S(0, 1, 1, 2)), 1);
  EXPECT_EQ(sails::floor(S(3, 1, 5, 19)), 1);
  EXPECT_EQ(sails::floor(S(0, -1, 1, 2)), -2);
  EXPECT_EQ(sails::floor(S(1, 1, 2, 5)), 1);
  EXPECT_EQ(sails::floor(S(-7, 3, 4, 11)), 0);
}

TEST(Floor, BracketsValue) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 10000; ++i) {
    const auto x = oracle::random_surd(rng, 1000, 100, 100, 1000);
    const BigInt n = sails::floor(x);
    EXPECT_NE(compare(x, Rational(n)), std::strong_ordering::less) << to_string(x);
    EXPECT_EQ(compare(x, Rational(n + 1)), std::strong_ordering::less) << to_string(x);
  }
}

TEST(Arith, Examples) {
  EXPECT_EQ(std::get<Rational>(S(1, 1, 1, 2) * Number(S(-1, 1, 1, 2))), 1);
  EXPECT_EQ(std::get<QuadraticSurd>(S(0, 1, 1, 2) + Number(S(0, 1, 1, 2))), S(0, 2, 1, 2));
  EXPECT_EQ(std::get<QuadraticSurd>(arith(R(1), S(1, 1, 1, 2), ArithOp::Div)), S(-1, 1, 1, 2));
  EXPECT_EQ(std::get<Rational>(S(0, 1, 1, 2) - Number(S(0, 1, 1, 2))), 0);
}

TEST(Arith, Errors) {
  EXPECT_EQ(kind_of([] { (void)(S(0, 1, 1, 2) + Number(S(0, 1, 1, 3))); }), ErrorKind::RadicandMismatch);
  EXPECT_EQ(kind_of([] { (void)(S(0, 1, 1, 2) / Number(R(0))); }), ErrorKind::DivisionByZero);
}

TEST(Arith, MatchesFloatOracle) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    const auto x = oracle::random_surd(rng, 30, 10, 30, 30);
    auto y = oracle::random_surd(rng, 30, 10, 30, 30);
    y = QuadraticSurd::make(y.a(), y.b(), y.c(), x.d());
    const Number prod = x * Number(y);
    const Number quot = x / Number(y);
    auto as_double = [](const Number& n) {
      return std::visit([](const auto& v) -> double {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Rational>) {
          return v.template convert_to<double>();
        } else {
          return oracle::approx(v);
        }
      }, n);
    };
    const double fx = oracle::approx(x), fy = oracle::approx(y);
    EXPECT_NEAR(as_double(prod), fx * fy, 1e-9 * (1 + std::abs(fx * fy)));
    EXPECT_NEAR(as_double(quot), fx / fy, 1e-7 * (1 + std::abs(fx / fy)));
  }
}

TEST(Mobius, Examples) {
  const auto phi = S(1, 1, 2, 5);
  EXPECT_EQ(mobius(UnimodularMatrix::identity(), phi), phi);
  EXPECT_EQ(mobius(UnimodularMatrix::make(0, 1, 1, 0), phi), S(-1, 1, 2, 5));
  EXPECT_EQ(mobius(UnimodularMatrix::make(1, 1, 0, 1), S(0, 1, 1, 2)), S(1, 1, 1, 2));
}

TEST(Mobius, LeftGroupAction) {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> small(-3, 3);
  auto random_matrix = [&] {
    // products of elementary generators stay unimodular
    UnimodularMatrix m = UnimodularMatrix::identity();
    for (int k = 0; k < 4; ++k) {
      m = m * UnimodularMatrix::make(small(rng), 1, 1, 0);
    }
    return m;
  };
  for (int i = 0; i < 500; ++i) {
    const auto a = random_matrix();
    const auto b = random_matrix();
    const auto x = oracle::random_surd(rng, 20, 10, 20, 50);
    EXPECT_EQ(mobius(a * b, x), mobius(a, mobius(b, x)));
    EXPECT_EQ(mobius(a.inverse(), mobius(a, x)), x);
  }
}

TEST(Unimodular, RejectsBadDeterminant) {
  EXPECT_EQ(kind_of([] { UnimodularMatrix::make(2, 0, 0, 1); }), ErrorKind::NotUnimodular);
  EXPECT_EQ(UnimodularMatrix::make(0, 1, 1, 0).det(), -1);
  EXPECT_EQ(to_string(UnimodularMatrix::make(3, 2, 4, 3)), "[[3,2],[4,3]]");
}

TEST(SlopeAction, LatticeOperatorOnSlopes) {
  // diag(1, -1) sends the line through (1, x) to the line through (1, -x)
  const auto x = S(1, 1, 2, 5);
  EXPECT_EQ(slope_action(UnimodularMatrix::make(1, 0, 0, -1), x), -x);
  // swap of coordinates inverts slopes
  EXPECT_EQ(slope_action(UnimodularMatrix::make(0, 1, 1, 0), x), S(-1, 1, 2, 5));
}

TEST(IsReduced, Examples) {
  EXPECT_TRUE(is_reduced(S(1, 1, 2, 5)));
  EXPECT_TRUE(is_reduced(S(1, 1, 1, 2)));
  EXPECT_FALSE(is_reduced(S(0, 1, 1, 2)));
  EXPECT_FALSE(is_reduced(S(1, -1, 2, 5)));
}

TEST(MinimalPolynomial, Examples) {
  EXPECT_EQ(minimal_polynomial(S(1, 1, 2, 5)), (IntegerQuadratic{1, -1, -1}));
  EXPECT_EQ(minimal_polynomial(S(0, 1, 1, 2)), (IntegerQuadratic{1, 0, -2}));
  EXPECT_EQ(minimal_polynomial(S(3, 1, 5, 19)), (IntegerQuadratic{5, -6, -2}));
}

TEST(MinimalPolynomial, VanishesOnBothRoots) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 1000; ++i) {
    const auto x = oracle::random_surd(rng, 100, 30, 50, 200);
    const auto p = minimal_polynomial(x);
    EXPECT_GT(p.a, 0);
    EXPECT_EQ(gcd(gcd(p.a, p.b), p.c), 1);
    for (const auto& r : {x, conjugate(x)}) {
      const Number sq = r * Number(r);
      const Number lin = r * Number(Rational(p.b));
      Number sum = arith(arith(sq, Rational(p.a), ArithOp::Mul), lin, ArithOp::Add);
      sum = arith(sum, Rational(p.c), ArithOp::Add);
      EXPECT_EQ(std::get<Rational>(sum), 0);
    }
    const auto [big, small] = quadratic_roots(p.a, p.b, p.c);
    EXPECT_TRUE((big == x && small == conjugate(x)) || (big == conjugate(x) && small == x));
  }
}

TEST(IntegerHelpers, Basics) {
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_div(7, -2), -4);
  EXPECT_EQ(floor_div(6, 3), 2);
  EXPECT_EQ(isqrt(BigInt(99)), 9);
  EXPECT_EQ(isqrt(BigInt(100)), 10);
  EXPECT_TRUE(is_perfect_square(BigInt(144)));
  EXPECT_FALSE(is_perfect_square(BigInt(-4)));
  const auto split = squarefree_split(BigInt(72));
  EXPECT_EQ(split.square, 6);
  EXPECT_EQ(split.core, 2);
  const BigInt huge = BigInt(1) << 80;
  EXPECT_EQ(isqrt(huge), BigInt(1) << 40);
}
