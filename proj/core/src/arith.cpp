#include "sails/arith.hpp"

#include <cstdint>
#include <limits>

namespace sails {

namespace bmp = boost::multiprecision;

int sign(const BigInt& x) { return x.sign(); }

BigInt abs(const BigInt& x) { return x.sign() < 0 ? BigInt(-x) : x; }

BigInt gcd(const BigInt& x, const BigInt& y) { return bmp::gcd(x, y); }

BigInt floor_div(const BigInt& x, const BigInt& y) {
  if (y == 0) throw Error(ErrorKind::DivisionByZero, "floor_div by zero");
  BigInt q;
  BigInt r;
  bmp::divide_qr(x, y, q, r);
  if (r != 0 && ((r.sign() < 0) != (y.sign() < 0))) --q;
  return q;
}

BigInt isqrt(const BigInt& x) {
  if (x.sign() < 0) throw Error(ErrorKind::InvalidArgument, "isqrt of a negative number");
  return bmp::sqrt(x);
}

bool is_perfect_square(const BigInt& x) {
  if (x.sign() < 0) return false;
  BigInt s = bmp::sqrt(x);
  return s * s == x;
}

namespace {

SquarefreeSplit squarefree_split_small(std::uint64_t x) {
  std::uint64_t square = 1;
  std::uint64_t core = 1;
  for (std::uint64_t p = 2; p * p <= x; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) square *= p;
    if (e % 2 == 1) core *= p;
  }
  core *= x;
  return {BigInt(square), BigInt(core)};
}

}  // namespace

SquarefreeSplit squarefree_split(const BigInt& x) {
  if (x.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "squarefree_split needs x > 0");
  if (x <= std::numeric_limits<std::uint64_t>::max()) {
    return squarefree_split_small(static_cast<std::uint64_t>(x));
  }
  BigInt rest = x;
  BigInt square = 1;
  BigInt core = 1;
  for (BigInt p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) square *= p;
    if (e % 2 == 1) core *= p;
  }
  core *= rest;
  return {square, core};
}

std::string to_string(const Rational& x) {
  const BigInt& n = bmp::numerator(x);
  const BigInt& d = bmp::denominator(x);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

// ---------------------------------------------------------------------------

QuadraticSurd QuadraticSurd::make(const BigInt& a, const BigInt& b, const BigInt& c,
                                  const BigInt& d) {
  if (c == 0) throw Error(ErrorKind::ZeroDenominator, "surd with zero denominator");
  if (d.sign() < 0) throw Error(ErrorKind::InvalidArgument, "negative radicand " + d.str());
  if (b == 0 || d == 0) throw Error(ErrorKind::RationalValue, "sqrt coefficient vanishes");
  auto [square, core] = squarefree_split(d);
  if (core == 1) {
    throw Error(ErrorKind::RationalValue, "radicand " + d.str() + " is a perfect square");
  }
  return from_squarefree(a, b * square, c, core);
}

QuadraticSurd QuadraticSurd::from_squarefree(BigInt a, BigInt b, BigInt c, BigInt d) {
  if (c == 0) throw Error(ErrorKind::ZeroDenominator, "surd with zero denominator");
  if (b == 0) throw Error(ErrorKind::RationalValue, "sqrt coefficient vanishes");
  if (c.sign() < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  BigInt g = bmp::gcd(bmp::gcd(a, b), c);
  if (g != 1) {
    a /= g;
    b /= g;
    c /= g;
  }
  return QuadraticSurd(std::move(a), std::move(b), std::move(c), std::move(d));
}

bool StructuralLess::operator()(const QuadraticSurd& x, const QuadraticSurd& y) const {
  if (x.d() != y.d()) return x.d() < y.d();
  if (x.c() != y.c()) return x.c() < y.c();
  if (x.a() != y.a()) return x.a() < y.a();
  return x.b() < y.b();
}

std::string to_string(const QuadraticSurd& x) {
  const BigInt mag = abs(x.b());
  std::string root = mag == 1 ? "sqrt(" + x.d().str() + ")"
                              : mag.str() + "*sqrt(" + x.d().str() + ")";
  std::string num;
  if (x.a() == 0) {
    num = (x.b().sign() < 0 ? "-" : "") + root;
  } else {
    num = x.a().str() + (x.b().sign() < 0 ? "-" : "+") + root;
  }
  if (x.c() == 1) return num;
  if (x.a() == 0) return num + "/" + x.c().str();
  return "(" + num + ")/" + x.c().str();
}

QuadraticSurd conjugate(const QuadraticSurd& x) {
  return QuadraticSurd::from_squarefree(x.a(), -x.b(), x.c(), x.d());
}

TraceNorm trace_norm(const QuadraticSurd& x) {
  Rational trace(BigInt(2 * x.a()), x.c());
  Rational norm(BigInt(x.a() * x.a() - x.b() * x.b() * x.d()), BigInt(x.c() * x.c()));
  return {trace, norm};
}

namespace {

// Orders lhs * sqrt(d) against rhs for squarefree d > 1.
std::strong_ordering compare_root_term(const BigInt& lhs, const BigInt& d, const BigInt& rhs) {
  const int sl = lhs.sign();
  const int sr = rhs.sign();
  if (sl == 0) return 0 <=> sr;
  if (sr == 0 || sl != sr) return sl <=> 0;
  // same sign: compare squares, flipping for negatives
  const BigInt l2 = lhs * lhs * d;
  const BigInt r2 = rhs * rhs;
  const bool bigger_magnitude = l2 > r2;  // never equal: sqrt(d) is irrational
  if (sl > 0) return bigger_magnitude ? std::strong_ordering::greater : std::strong_ordering::less;
  return bigger_magnitude ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace

std::strong_ordering compare(const QuadraticSurd& x, const Rational& y) {
  // (a + b sqrt d)/c <=> n/m   <=>   (b m) sqrt d <=> c n - a m
  const BigInt& n = bmp::numerator(y);
  const BigInt& m = bmp::denominator(y);
  return compare_root_term(x.b() * m, x.d(), x.c() * n - x.a() * m);
}

std::strong_ordering compare(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.d() != y.d()) {
    throw Error(ErrorKind::RadicandMismatch, to_string(x) + " vs " + to_string(y));
  }
  // sign of x - y = ((a1 c2 - a2 c1) + (b1 c2 - b2 c1) sqrt d) / (c1 c2)
  const BigInt rat = x.a() * y.c() - y.a() * x.c();
  const BigInt irr = x.b() * y.c() - y.b() * x.c();
  return compare_root_term(irr, x.d(), BigInt(-rat));
}

BigInt floor(const QuadraticSurd& x) {
  const BigInt root = bmp::sqrt(BigInt(x.b() * x.b() * x.d()));
  // floor(b sqrt d); sqrt d is irrational so the negative side rounds down by one
  const BigInt floor_term = x.b().sign() > 0 ? root : BigInt(-root - 1);
  BigInt n = floor_div(x.a() + floor_term, x.c());
  // bracket n <= x < n + 1
  while (compare(x, Rational(n)) < 0) --n;
  while (compare(x, Rational(n + 1)) >= 0) ++n;
  return n;
}

bool is_reduced(const QuadraticSurd& x) {
  if (compare(x, Rational(1)) <= 0) return false;
  const QuadraticSurd y = conjugate(x);
  return compare(y, Rational(-1)) > 0 && compare(y, Rational(0)) < 0;
}

IntegerQuadratic minimal_polynomial(const QuadraticSurd& x) {
  // (c t - a)^2 = b^2 d
  BigInt a = x.c() * x.c();
  BigInt b = -2 * x.a() * x.c();
  BigInt c = x.a() * x.a() - x.b() * x.b() * x.d();
  const BigInt g = bmp::gcd(bmp::gcd(a, b), c);
  return {a / g, b / g, c / g};
}

BigInt discriminant(const IntegerQuadratic& poly) { return poly.b * poly.b - 4 * poly.a * poly.c; }

std::pair<QuadraticSurd, QuadraticSurd> quadratic_roots(const BigInt& a, const BigInt& b,
                                                        const BigInt& c) {
  if (a == 0) throw Error(ErrorKind::PreconditionViolated, "leading coefficient is zero");
  // period matrices give hugely non-primitive triples; the primitive
  // discriminant is what keeps the square-free split cheap
  const BigInt g = gcd(gcd(a, b), c);
  const BigInt pa = a / g, pb = b / g;
  const BigInt disc = pb * pb - 4 * pa * (c / g);
  if (disc.sign() < 0) {
    throw Error(ErrorKind::PreconditionViolated, "negative discriminant " + disc.str());
  }
  if (disc == 0 || is_perfect_square(disc)) {
    throw Error(ErrorKind::RationalValue, "discriminant " + disc.str() + " is a square");
  }
  // (-b +- sqrt disc) / 2a; with 2a > 0 the + root is the larger one
  BigInt two_a = 2 * pa;
  BigInt minus_b = -pb;
  if (two_a.sign() < 0) {
    two_a = -two_a;
    minus_b = -minus_b;
  }
  return {QuadraticSurd::make(minus_b, 1, two_a, disc), QuadraticSurd::make(minus_b, -1, two_a, disc)};
}

// ---------------------------------------------------------------------------

namespace {

// x + y sqrt(d); y may be zero.
struct FieldElement {
  Rational x;
  Rational y;
  BigInt d;  // 0 for plain rationals
};

FieldElement lift(const Number& n) {
  if (const auto* r = std::get_if<Rational>(&n)) return {*r, Rational(0), BigInt(0)};
  const auto& s = std::get<QuadraticSurd>(n);
  return {Rational(s.a(), s.c()), Rational(s.b(), s.c()), s.d()};
}

Number lower(const FieldElement& e) {
  if (e.y == 0) return e.x;
  const BigInt& dx = bmp::denominator(e.x);
  const BigInt& dy = bmp::denominator(e.y);
  const BigInt l = dx / bmp::gcd(dx, dy) * dy;
  return QuadraticSurd::from_squarefree(bmp::numerator(e.x) * (l / dx),
                                        bmp::numerator(e.y) * (l / dy), l, e.d);
}

}  // namespace

Number arith(const Number& lhs, const Number& rhs, ArithOp op) {
  FieldElement u = lift(lhs);
  FieldElement v = lift(rhs);
  if (u.d != 0 && v.d != 0 && u.d != v.d) {
    throw Error(ErrorKind::RadicandMismatch,
                "sqrt(" + u.d.str() + ") and sqrt(" + v.d.str() + ") live in different fields");
  }
  const BigInt d = u.d != 0 ? u.d : v.d;
  FieldElement out{Rational(0), Rational(0), d};
  switch (op) {
    case ArithOp::Add:
      out.x = u.x + v.x;
      out.y = u.y + v.y;
      break;
    case ArithOp::Sub:
      out.x = u.x - v.x;
      out.y = u.y - v.y;
      break;
    case ArithOp::Mul:
      out.x = u.x * v.x + u.y * v.y * Rational(d);
      out.y = u.x * v.y + u.y * v.x;
      break;
    case ArithOp::Div: {
      const Rational norm = v.x * v.x - v.y * v.y * Rational(d);
      if (norm == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
      // multiply by the conjugate of v
      out.x = (u.x * v.x - u.y * v.y * Rational(d)) / norm;
      out.y = (u.y * v.x - u.x * v.y) / norm;
      break;
    }
  }
  return lower(out);
}

Number operator+(const QuadraticSurd& x, const Number& y) { return arith(x, y, ArithOp::Add); }
Number operator-(const QuadraticSurd& x, const Number& y) { return arith(x, y, ArithOp::Sub); }
Number operator*(const QuadraticSurd& x, const Number& y) { return arith(x, y, ArithOp::Mul); }
Number operator/(const QuadraticSurd& x, const Number& y) { return arith(x, y, ArithOp::Div); }

QuadraticSurd operator-(const QuadraticSurd& x) {
  return QuadraticSurd::from_squarefree(-x.a(), -x.b(), x.c(), x.d());
}

std::string to_string(const Number& x) {
  return std::visit([](const auto& v) { return to_string(v); }, x);
}

QuadraticSurd expect_surd(const Number& x) {
  if (const auto* s = std::get_if<QuadraticSurd>(&x)) return *s;
  throw Error(ErrorKind::RationalValue, "expected an irrational value, got " + to_string(x));
}

// ---------------------------------------------------------------------------

UnimodularMatrix UnimodularMatrix::make(BigInt p, BigInt q, BigInt r, BigInt s) {
  const BigInt det = p * s - q * r;
  if (det != 1 && det != -1) {
    throw Error(ErrorKind::NotUnimodular, "determinant " + det.str() + " is not +-1");
  }
  return UnimodularMatrix(std::move(p), std::move(q), std::move(r), std::move(s));
}

UnimodularMatrix UnimodularMatrix::identity() { return UnimodularMatrix(1, 0, 0, 1); }

int UnimodularMatrix::det() const { return p_ * s_ - q_ * r_ == 1 ? 1 : -1; }

UnimodularMatrix UnimodularMatrix::inverse() const {
  if (det() == 1) return UnimodularMatrix(s_, -q_, -r_, p_);
  return UnimodularMatrix(-s_, q_, r_, -p_);
}

UnimodularMatrix UnimodularMatrix::slope_form() const { return UnimodularMatrix(s_, r_, q_, p_); }

UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y) {
  return UnimodularMatrix(x.p_ * y.p_ + x.q_ * y.r_, x.p_ * y.q_ + x.q_ * y.s_,
                          x.r_ * y.p_ + x.s_ * y.r_, x.r_ * y.q_ + x.s_ * y.s_);
}

std::string to_string(const UnimodularMatrix& m) {
  return "[[" + m.p().str() + "," + m.q().str() + "],[" + m.r().str() + "," + m.s().str() + "]]";
}

QuadraticSurd mobius(const UnimodularMatrix& m, const QuadraticSurd& x) {
  // numerator (P + B1 sqrt d)/c, denominator (R + B2 sqrt d)/c
  const BigInt num_rat = m.p() * x.a() + m.q() * x.c();
  const BigInt num_irr = m.p() * x.b();
  const BigInt den_rat = m.r() * x.a() + m.s() * x.c();
  const BigInt den_irr = m.r() * x.b();
  // multiply through by the conjugate of the denominator
  BigInt a = num_rat * den_rat - num_irr * den_irr * x.d();
  BigInt b = num_irr * den_rat - num_rat * den_irr;  // = +-b c, never zero
  BigInt c = den_rat * den_rat - den_irr * den_irr * x.d();
  return QuadraticSurd::from_squarefree(std::move(a), std::move(b), std::move(c), x.d());
}

QuadraticSurd slope_action(const UnimodularMatrix& m, const QuadraticSurd& x) {
  return mobius(m.slope_form(), x);
}

}  // namespace sails
