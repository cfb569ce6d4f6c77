#include "sails/cfrac.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace sails {

namespace {

bool has_period(const std::vector<BigInt>& word, std::size_t p) {
  for (std::size_t i = p; i < word.size(); ++i) {
    if (word[i] != word[i - p]) return false;
  }
  return true;
}

std::vector<BigInt> primitive_root(std::vector<BigInt> word) {
  const std::size_t t = word.size();
  for (std::size_t p = 1; p < t; ++p) {
    if (t % p == 0 && has_period(word, p)) {
      word.resize(p);
      return word;
    }
  }
  return word;
}

}  // namespace

PeriodicCF PeriodicCF::make(std::vector<BigInt> preperiod, std::vector<BigInt> period) {
  if (period.empty()) throw Error(ErrorKind::InvalidPeriod, "empty period");
  for (const auto& a : period) {
    if (a.sign() <= 0) throw Error(ErrorKind::InvalidPeriod, "period letter " + a.str() + " < 1");
  }
  for (std::size_t i = 1; i < preperiod.size(); ++i) {
    if (preperiod[i].sign() <= 0) {
      throw Error(ErrorKind::InvalidPeriod, "preperiod letter " + preperiod[i].str() + " < 1");
    }
  }
  period = primitive_root(std::move(period));
  while (!preperiod.empty() && preperiod.back() == period.back()) {
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    preperiod.pop_back();
  }
  return PeriodicCF(std::move(preperiod), std::move(period));
}

const BigInt& PeriodicCF::letter(std::size_t k) const {
  if (k < preperiod_.size()) return preperiod_[k];
  return period_[(k - preperiod_.size()) % period_.size()];
}

std::string to_string(const PeriodicCF& cf) {
  auto join = [](const std::vector<BigInt>& xs, std::size_t from) {
    std::string out;
    for (std::size_t i = from; i < xs.size(); ++i) {
      if (i > from) out += ", ";
      out += xs[i].str();
    }
    return out;
  };
  const auto& pre = cf.preperiod();
  std::string out = "[";
  if (!pre.empty()) {
    out += pre.front().str() + "; ";
    if (pre.size() > 1) out += join(pre, 1) + ", ";
  }
  out += "(" + join(cf.period(), 0) + ")]";
  return out;
}

// ---------------------------------------------------------------------------
// Expansion.
//
// Complete quotients are carried as (P + sqrt(D)) / Q with Q | D - P^2, where
// D is the discriminant of the minimal polynomial. For a fixed D this
// presentation is unique, so (P, Q) equality is exactly surd equality.

namespace {

struct Orbit {
  std::vector<BigInt> letters;
  std::vector<std::pair<BigInt, BigInt>> states;
  std::size_t cycle_start = 0;
  BigInt disc;
  BigInt root_scale;  // sqrt(D) = root_scale * sqrt(d)
  BigInt radicand;
};

Orbit run_orbit(const QuadraticSurd& x) {
  const IntegerQuadratic poly = minimal_polynomial(x);
  Orbit orbit;
  orbit.disc = discriminant(poly);
  orbit.radicand = x.d();
  orbit.root_scale = isqrt(BigInt(orbit.disc / x.d()));

  // x is the larger root iff b > 0
  BigInt p = x.b().sign() > 0 ? BigInt(-poly.b) : poly.b;
  BigInt q = x.b().sign() > 0 ? BigInt(2 * poly.a) : BigInt(-2 * poly.a);
  const BigInt root = isqrt(orbit.disc);

  std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
  for (std::size_t step = 0; step < kExpansionStepCap; ++step) {
    auto state = std::make_pair(p, q);
    if (auto it = seen.find(state); it != seen.end()) {
      orbit.cycle_start = it->second;
      return orbit;
    }
    seen.emplace(state, step);
    orbit.states.push_back(std::move(state));

    // floor((P + sqrt D) / Q); sqrt D lies strictly between root and root + 1
    BigInt a = q.sign() > 0 ? floor_div(p + root, q) : BigInt(-floor_div(p + root, -q) - 1);
    p = a * q - p;
    q = (orbit.disc - p * p) / q;
    orbit.letters.push_back(std::move(a));
  }
  throw Error(ErrorKind::NonConvergence, "expansion of " + to_string(x) + " did not cycle");
}

PeriodicCF orbit_cf(const Orbit& orbit, const QuadraticSurd& x) {
  const auto start = orbit.letters.begin() + static_cast<std::ptrdiff_t>(orbit.cycle_start);
  PeriodicCF cf = PeriodicCF::make({orbit.letters.begin(), start}, {start, orbit.letters.end()});
  if (cf.preperiod().size() != orbit.cycle_start ||
      cf.period().size() != orbit.letters.size() - orbit.cycle_start) {
    throw Error(ErrorKind::InvariantViolation,
                "cycle detection for " + to_string(x) + " did not yield a normal form");
  }
  return cf;
}

QuadraticSurd orbit_quotient(const Orbit& orbit, std::size_t k) {
  const auto& [p, q] = orbit.states[k];
  return QuadraticSurd::from_squarefree(p, orbit.root_scale, q, orbit.radicand);
}

}  // namespace

PeriodicCF expand(const QuadraticSurd& x) {
  const Orbit orbit = run_orbit(x);
  return orbit_cf(orbit, x);
}

Expansion expand_with_quotients(const QuadraticSurd& x) {
  const Orbit orbit = run_orbit(x);
  Expansion out{orbit_cf(orbit, x), {}};
  out.quotients.reserve(orbit.states.size());
  for (std::size_t k = 0; k < orbit.states.size(); ++k) {
    out.quotients.push_back(orbit_quotient(orbit, k));
  }
  return out;
}

UnimodularMatrix convergent_matrix(const std::vector<BigInt>& letters) {
  BigInt p = 1, q = 0, r = 0, s = 1;
  for (const auto& a : letters) {
    // [[p, q], [r, s]] * [[a, 1], [1, 0]]
    BigInt np = p * a + q;
    BigInt nr = r * a + s;
    q = std::move(p);
    s = std::move(r);
    p = std::move(np);
    r = std::move(nr);
  }
  return UnimodularMatrix::make(std::move(p), std::move(q), std::move(r), std::move(s));
}

QuadraticSurd value(const PeriodicCF& cf) {
  const UnimodularMatrix period = convergent_matrix(cf.period());
  // tail w satisfies w = (p w + q) / (r w + s)  =>  r w^2 + (s - p) w - q = 0
  const auto [larger, smaller] =
      quadratic_roots(period.r(), BigInt(period.s() - period.p()), BigInt(-period.q()));
  const bool larger_reduced = is_reduced(larger);
  if (larger_reduced == is_reduced(smaller)) {
    throw Error(ErrorKind::InvariantViolation,
                "period " + to_string(cf) + " has no unique reduced fixed point");
  }
  const QuadraticSurd& tail = larger_reduced ? larger : smaller;
  if (cf.preperiod().empty()) return tail;
  return mobius(convergent_matrix(cf.preperiod()), tail);
}

std::vector<Convergent> convergents(const PeriodicCF& cf, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "convergents: n must be >= 1");
  std::vector<Convergent> out;
  out.reserve(n);
  BigInt p2 = 0, p1 = 1, q2 = 1, q1 = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const BigInt& a = cf.letter(k);
    BigInt p = a * p1 + p2;
    BigInt q = a * q1 + q2;
    p2 = std::exchange(p1, p);
    q2 = std::exchange(q1, q);
    out.push_back({std::move(p), std::move(q)});
  }
  return out;
}

std::vector<QuadraticSurd> complete_quotient_cycle(const QuadraticSurd& x) {
  Expansion e = expand_with_quotients(x);
  return {e.quotients.begin() + static_cast<std::ptrdiff_t>(e.preperiod_length()),
          e.quotients.end()};
}

std::pair<PeriodicCF, PeriodicCF> galois_reverse(const QuadraticSurd& x) {
  PeriodicCF forward = expand(x);
  if (!forward.purely_periodic()) {
    throw Error(ErrorKind::NotPurelyPeriodic, to_string(x) + " = " + to_string(forward));
  }
  const QuadraticSurd partner =
      expect_surd(arith(Rational(-1), conjugate(x), ArithOp::Div));
  PeriodicCF backward = expand(partner);
  std::vector<BigInt> reversed(forward.period().rbegin(), forward.period().rend());
  if (!backward.purely_periodic() || backward.period() != reversed) {
    throw Error(ErrorKind::InvariantViolation, "-1/conj(" + to_string(x) + ") = " +
                                                   to_string(backward) + " is not the reversal of " +
                                                   to_string(forward));
  }
  return {std::move(forward), std::move(backward)};
}

namespace {

// Position m within the cycle of ex with ex.quotients[s_x + m] == target.
std::optional<std::size_t> cycle_position(const Expansion& ex, const QuadraticSurd& target) {
  const std::size_t s = ex.preperiod_length();
  for (std::size_t m = 0; m < ex.period_length(); ++m) {
    if (ex.quotients[s + m] == target) return m;
  }
  return std::nullopt;
}

}  // namespace

bool serret_equivalent(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.d() != y.d()) return false;
  const Expansion ex = expand_with_quotients(x);
  const Expansion ey = expand_with_quotients(y);
  return cycle_position(ex, ey.quotients[ey.preperiod_length()]).has_value();
}

UnimodularMatrix serret_matrix(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.d() != y.d()) {
    throw Error(ErrorKind::NotEquivalent, to_string(x) + " and " + to_string(y));
  }
  const Expansion ex = expand_with_quotients(x);
  const Expansion ey = expand_with_quotients(y);
  const std::size_t sx = ex.preperiod_length();
  const std::size_t sy = ey.preperiod_length();
  const auto m = cycle_position(ex, ey.quotients[sy]);
  if (!m) throw Error(ErrorKind::NotEquivalent, to_string(x) + " and " + to_string(y));

  // x_i == y_j exactly when i - j = offset (mod t); take the offset closest
  // to zero so equal tails give the identity
  const auto t = static_cast<long long>(ex.period_length());
  const long long e0 = static_cast<long long>(sx + *m) - static_cast<long long>(sy);
  const long long up = ((e0 % t) + t) % t;
  const long long down = up - t;
  const long long offset = (up <= -down) ? up : down;
  const auto i = std::max(static_cast<long long>(sx), static_cast<long long>(sy) + offset);
  const auto j = i - offset;

  std::vector<BigInt> xs, ys;
  for (long long k = 0; k < i; ++k) xs.push_back(ex.cf.letter(static_cast<std::size_t>(k)));
  for (long long k = 0; k < j; ++k) ys.push_back(ey.cf.letter(static_cast<std::size_t>(k)));
  UnimodularMatrix a = convergent_matrix(xs) * convergent_matrix(ys).inverse();
  if (mobius(a, y) != x) {
    throw Error(ErrorKind::InvariantViolation, "serret matrix " + to_string(a) + " fails for " +
                                                   to_string(x) + " ~ " + to_string(y));
  }
  return a;
}

}  // namespace sails
