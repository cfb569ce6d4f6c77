#include "sails/geometry.hpp"

#include <algorithm>
#include <map>

#include "sails/cfrac.hpp"

namespace sails {

LatticePoint operator+(const LatticePoint& u, const LatticePoint& v) { return {u.x + v.x, u.y + v.y}; }
LatticePoint operator-(const LatticePoint& u, const LatticePoint& v) { return {u.x - v.x, u.y - v.y}; }
LatticePoint operator*(const BigInt& k, const LatticePoint& v) { return {k * v.x, k * v.y}; }

BigInt det(const LatticePoint& u, const LatticePoint& v) { return u.x * v.y - u.y * v.x; }

LatticePoint apply(const UnimodularMatrix& m, const LatticePoint& v) {
  return {m.p() * v.x + m.q() * v.y, m.r() * v.x + m.s() * v.y};
}

bool is_primitive(const LatticePoint& v) { return gcd(v.x, v.y) == 1; }

std::string to_string(const LatticePoint& v) { return "(" + v.x.str() + "," + v.y.str() + ")"; }

namespace {

bool is_zero(const LatticePoint& v) { return v.x == 0 && v.y == 0; }

LatticePoint primitive_direction(const LatticePoint& v) {
  const BigInt g = gcd(v.x, v.y);
  return {v.x / g, v.y / g};
}

bool parity_odd(std::int64_t k) { return (k & 1) != 0; }

}  // namespace

BigInt integer_length(const LatticePoint& p, const LatticePoint& q) {
  if (p == q) throw Error(ErrorKind::DegenerateSegment, "segment " + to_string(p) + " has no length");
  const LatticePoint delta = q - p;
  return gcd(delta.x, delta.y);
}

BigInt integer_angle(const LatticePoint& u, const LatticePoint& v, const LatticePoint& w) {
  const LatticePoint e1 = u - v;
  const LatticePoint e2 = w - v;
  if (is_zero(e1) || is_zero(e2) || det(e1, e2) == 0) {
    throw Error(ErrorKind::DegenerateAngle,
                "arms " + to_string(e1) + " and " + to_string(e2) + " at " + to_string(v));
  }
  return abs(det(primitive_direction(e1), primitive_direction(e2)));
}

Segment sprout(const LatticePoint& v, const LatticePoint& u, const LatticePoint& w) {
  integer_angle(u, v, w);
  const BigInt du = det(v, u);
  const BigInt dw = det(v, w);
  if (abs(du) != 1 || dw != -du) {
    throw Error(ErrorKind::NotUnimodularArms, "det(v,u) = " + du.str() + ", det(v,w) = " + dw.str());
  }
  LatticePoint top = u + w - v;
  if (is_zero(top)) throw Error(ErrorKind::OriginSprout, "sprout at " + to_string(v) + " hits 0");
  return {v, std::move(top)};
}

// ---------------------------------------------------------------------------

const LatticePoint* Sail::vertex(std::int64_t k) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), k,
                             [](const IndexedPoint& p, std::int64_t key) { return p.k < key; });
  return it != vertices.end() && it->k == k ? &it->point : nullptr;
}

const BigInt* Sail::label(std::int64_t k) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), k,
                             [](const Label& l, std::int64_t key) { return l.k < key; });
  return it != labels.end() && it->k == k ? &it->a : nullptr;
}

Sail korkina_construct(const LatticePoint& v_m2, const LatticePoint& v_0,
                       std::span<const BigInt> forward, const BigInt& a_0,
                       std::span<const BigInt> backward) {
  if (v_m2 == v_0 || a_0.sign() <= 0 || integer_length(v_m2, v_0) != a_0) {
    throw Error(ErrorKind::BadSeed, "[" + to_string(v_m2) + ", " + to_string(v_0) +
                                        "] does not have integer length " + a_0.str());
  }
  const LatticePoint delta = v_0 - v_m2;
  const LatticePoint v_m1{delta.x / a_0, delta.y / a_0};
  if (abs(det(v_m2, v_m1)) != 1) {
    throw Error(ErrorKind::BadSeed, "the seed segment " + to_string(v_m2) + ", " + to_string(v_0) +
                                        " has lattice points between it and the origin");
  }
  auto check_letters = [](std::span<const BigInt> letters) {
    for (const auto& a : letters) {
      if (a.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "letter " + a.str() + " < 1");
    }
  };
  check_letters(forward);
  check_letters(backward);

  // backward: v_{k-2} = v_k - a_k v_{k-1}
  std::vector<LatticePoint> low{v_m1, v_m2};  // v_{-1}, v_{-2}, v_{-3}, ...
  for (std::size_t j = 0; j < backward.size(); ++j) {
    const LatticePoint& vk = low[low.size() - 2];
    const LatticePoint& vk1 = low[low.size() - 1];
    low.push_back(vk - backward[j] * vk1);
  }

  Sail chain;
  const auto k_min = -2 - static_cast<std::int64_t>(backward.size());
  for (std::int64_t k = k_min; k <= -1; ++k) {
    chain.vertices.push_back({k, low[static_cast<std::size_t>(-1 - k)]});
  }
  chain.vertices.push_back({0, v_0});
  for (std::size_t j = 0; j < forward.size(); ++j) {
    const auto n = chain.vertices.size();
    chain.vertices.push_back({static_cast<std::int64_t>(j) + 1,
                              chain.vertices[n - 2].point + forward[j] * chain.vertices[n - 1].point});
  }
  for (std::size_t j = backward.size(); j-- > 0;) {
    chain.labels.push_back({-1 - static_cast<std::int64_t>(j), backward[j]});
  }
  chain.labels.push_back({0, a_0});
  for (std::size_t j = 0; j < forward.size(); ++j) {
    chain.labels.push_back({static_cast<std::int64_t>(j) + 1, forward[j]});
  }
  verify_chain(chain);
  return chain;
}

void verify_chain(const Sail& chain) {
  const auto& vs = chain.vertices;
  if (vs.empty()) return;
  auto fail = [](const std::string& what) { throw Error(ErrorKind::InvariantViolation, what); };
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!is_primitive(vs[i].point)) fail("vertex " + to_string(vs[i].point) + " is not primitive");
    if (i > 0 && vs[i].k != vs[i - 1].k + 1) fail("chain indices are not contiguous");
  }
  if (vs.size() < 2) return;
  // det(v_{k-1}, v_k) = eps (-1)^{k-1}
  const BigInt first = det(vs[0].point, vs[1].point);
  if (abs(first) != 1) fail("consecutive vertices do not form a basis");
  const int eps = (first.sign() > 0) == !parity_odd(vs[0].k) ? 1 : -1;
  auto signed_parity = [eps](std::int64_t k) { return parity_odd(k) ? -eps : eps; };

  for (std::size_t i = 1; i < vs.size(); ++i) {
    const std::int64_t k = vs[i].k;
    if (det(vs[i - 1].point, vs[i].point) != signed_parity(k - 1)) {
      fail("det(v_{k-1}, v_k) breaks alternation at k = " + std::to_string(k));
    }
  }
  for (std::size_t i = 2; i < vs.size(); ++i) {
    const std::int64_t k = vs[i].k;
    const BigInt* a = chain.label(k);
    if (a == nullptr) continue;
    if (vs[i].point != vs[i - 2].point + *a * vs[i - 1].point) {
      fail("recurrence fails at k = " + std::to_string(k));
    }
    if (det(vs[i - 2].point, vs[i].point) != signed_parity(k) * *a) {
      fail("det(v_{k-2}, v_k) != (-1)^k a_k at k = " + std::to_string(k));
    }
    if (i + 2 < vs.size()) {
      const BigInt* a1 = chain.label(k + 1);
      const BigInt* a2 = chain.label(k + 2);
      if (a1 != nullptr && a2 != nullptr) {
        const BigInt turn = det(vs[i - 2].point - vs[i].point, vs[i + 2].point - vs[i].point);
        if (turn != signed_parity(k) * *a * *a1 * *a2) {
          fail("broken line is not convex at k = " + std::to_string(k));
        }
      }
    }
  }
}

Sail chain_from_surd(const QuadraticSurd& x, KRange range) {
  if (range.first > range.last) throw Error(ErrorKind::InvalidArgument, "empty k range");
  const Expansion e = expand_with_quotients(x);
  const auto& period = e.cf.period();
  const auto t = static_cast<std::int64_t>(period.size());
  auto letter = [&](std::int64_t k) -> const BigInt& {
    return period[static_cast<std::size_t>(((k % t) + t) % t)];
  };

  // build in the frame of the first reduced complete quotient, where
  // v_{-2} = (1, 0) and v_{-1} = (0, 1)
  std::vector<BigInt> forward, backward;
  for (std::int64_t k = 1; k <= range.last; ++k) forward.push_back(letter(k));
  for (std::int64_t k = -1; k >= range.first + 2; --k) backward.push_back(letter(k));
  const BigInt& a0 = letter(0);
  Sail full = korkina_construct({1, 0}, {1, a0}, forward, a0, backward);

  std::vector<BigInt> head(e.cf.preperiod());
  const UnimodularMatrix to_x = convergent_matrix(head).slope_form();

  Sail out;
  for (const auto& v : full.vertices) {
    if (v.k >= range.first && v.k <= range.last) out.vertices.push_back({v.k, apply(to_x, v.point)});
  }
  for (std::int64_t k = range.first; k <= range.last; ++k) out.labels.push_back({k, letter(k)});
  out.cone = Cone{x, conjugate(x)};
  return out;
}

std::pair<Sail, Sail> split_by_parity(const Sail& chain) {
  Sail even, odd;
  for (const auto& v : chain.vertices) (parity_odd(v.k) ? odd : even).vertices.push_back(v);
  even.labels = odd.labels = chain.labels;
  even.cone = odd.cone = chain.cone;
  return {std::move(even), std::move(odd)};
}

std::pair<Sail, Sail> sail_from_surd(const QuadraticSurd& x, KRange range) {
  return split_by_parity(chain_from_surd(x, range));
}

std::optional<UnimodularMatrix> sail_isomorphism(const Sail& from, const Sail& to) {
  for (std::size_t i = 0; i + 1 < from.vertices.size(); ++i) {
    const auto& a = from.vertices[i];
    const auto& b = from.vertices[i + 1];
    const LatticePoint* ta = to.vertex(a.k);
    const LatticePoint* tb = to.vertex(b.k);
    if (ta == nullptr || tb == nullptr) continue;
    const BigInt d = det(a.point, b.point);
    if (abs(d) != 1) return std::nullopt;
    // G = [ta tb] * [a b]^{-1}
    const UnimodularMatrix basis =
        UnimodularMatrix::make(a.point.x, b.point.x, a.point.y, b.point.y).inverse();
    const BigInt gp = ta->x * basis.p() + tb->x * basis.r();
    const BigInt gq = ta->x * basis.q() + tb->x * basis.s();
    const BigInt gr = ta->y * basis.p() + tb->y * basis.r();
    const BigInt gs = ta->y * basis.q() + tb->y * basis.s();
    const BigInt gdet = gp * gs - gq * gr;
    if (gdet != 1 && gdet != -1) return std::nullopt;
    UnimodularMatrix g = UnimodularMatrix::make(gp, gq, gr, gs);
    for (const auto& v : from.vertices) {
      const LatticePoint* tv = to.vertex(v.k);
      if (tv != nullptr && apply(g, v.point) != *tv) return std::nullopt;
    }
    return g;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

bool same_segment(const Segment& s, const LatticePoint& p, const LatticePoint& q) {
  return (s.from == p && s.to == q) || (s.from == q && s.to == p);
}

bool parallel(const Segment& s, const Segment& t) { return det(s.to - s.from, t.to - t.from) == 0; }

bool touches(const Segment& s, const Segment& t) {
  return s.from == t.from || s.from == t.to || s.to == t.from || s.to == t.to;
}

// Sprouts of `own` and the edges of `other` they correspond to.
std::vector<SegmentMatch> sprouts_to_edges(const Sail& own, const Sail& other) {
  std::vector<SegmentMatch> out;
  for (const auto& [k, v] : own.vertices) {
    const LatticePoint* prev = own.vertex(k - 2);
    const LatticePoint* next = own.vertex(k + 2);
    if (prev == nullptr || next == nullptr) continue;
    const BigInt len_next = integer_length(v, *next);
    const BigInt len_prev = integer_length(v, *prev);
    const LatticePoint u{v.x + (next->x - v.x) / len_next, v.y + (next->y - v.y) / len_next};
    const LatticePoint w{v.x + (prev->x - v.x) / len_prev, v.y + (prev->y - v.y) / len_prev};
    Segment spr = sprout(v, u, w);

    // the matched edge is [v - w, u - v] or, with the arms swapped, [v - u, w - v]
    const LatticePoint cand[2][2] = {{v - w, u - v}, {v - u, w - v}};
    std::optional<Segment> edge;
    for (std::size_t i = 0; i + 1 < other.vertices.size() && !edge; ++i) {
      const auto& p = other.vertices[i];
      const LatticePoint* q = other.vertex(p.k + 2);
      if (q == nullptr) continue;
      for (const auto& c : cand) {
        if (same_segment({p.point, *q}, c[0], c[1])) {
          edge = Segment{p.point, *q};
          break;
        }
      }
    }
    if (!edge) {
      if (other.vertex(k - 1) != nullptr && other.vertex(k + 1) != nullptr) {
        throw Error(ErrorKind::NotAdjacent,
                    "no edge of the second sail matches the sprout at " + to_string(v));
      }
      continue;  // matched edge lies outside the window
    }
    BigInt length = integer_length(spr.from, spr.to);
    out.push_back({SegmentMatch::Kind::SproutToEdge, k, std::move(spr), std::move(*edge),
                   std::move(length)});
  }
  return out;
}

void verify_bijection(const std::vector<SegmentMatch>& matches) {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::InvariantViolation, what); };
  for (const auto& m : matches) {
    if (integer_length(m.source.from, m.source.to) != m.length ||
        integer_length(m.target.from, m.target.to) != m.length) {
      fail("edge/sprout correspondence does not preserve integer length at k = " + std::to_string(m.k));
    }
    if (!parallel(m.source, m.target)) {
      fail("edge/sprout correspondence is not parallel at k = " + std::to_string(m.k));
    }
  }
  for (const auto& e : matches) {
    if (e.kind != SegmentMatch::Kind::EdgeToSprout) continue;
    for (const auto& s : matches) {
      if (s.kind != SegmentMatch::Kind::SproutToEdge) continue;
      if (touches(e.target, s.target) && !touches(e.source, s.source)) {
        fail("edge/sprout correspondence breaks incidence near k = " + std::to_string(e.k));
      }
    }
  }
}

}  // namespace

std::vector<SegmentMatch> edge_sprout_bijection(const Sail& first, const Sail& second) {
  if (first.cone && second.cone && !(first.cone == second.cone)) {
    throw Error(ErrorKind::NotAdjacent, "sails belong to different cones");
  }
  std::vector<SegmentMatch> out = sprouts_to_edges(first, second);
  for (auto& m : sprouts_to_edges(second, first)) {
    out.push_back({SegmentMatch::Kind::EdgeToSprout, m.k, std::move(m.target), std::move(m.source),
                   std::move(m.length)});
  }
  verify_bijection(out);
  return out;
}

// ---------------------------------------------------------------------------

BigInt QuadraticForm::evaluate(const BigInt& x, const BigInt& y) const {
  return c * x * x + 2 * b * x * y + a * y * y;
}

QuadraticForm form_from_polynomial(const BigInt& a, const BigInt& b, const BigInt& c) {
  if (b % 2 == 0) return {a, b / 2, c};
  return {2 * a, b, 2 * c};
}

QuadraticForm compose(const QuadraticForm& f, const UnimodularMatrix& m) {
  const BigInt &p = m.p(), &q = m.q(), &r = m.r(), &s = m.s();
  return {f.c * q * q + 2 * f.b * q * s + f.a * s * s,
          f.c * p * q + f.b * (p * s + q * r) + f.a * r * s,
          f.c * p * p + 2 * f.b * p * r + f.a * r * r};
}

UnimodularMatrix lagrange_automorphism(const QuadraticForm& form) {
  if (sign(form.a) * sign(form.c) >= 0) {
    throw Error(ErrorKind::PreconditionViolated, "need a*c < 0");
  }
  const BigInt disc = form.discriminant();
  if (is_perfect_square(disc)) {
    throw Error(ErrorKind::PreconditionViolated, "discriminant " + disc.str() + " is a square");
  }
  // (b, a) determine the state once the discriminant is fixed; |b| < sqrt(disc), |a| <= disc
  const BigInt bound = (2 * isqrt(disc) + 2) * (2 * disc + 1) + 1;

  const UnimodularMatrix down = UnimodularMatrix::make(1, 0, 1, 1);   // (x, y) -> (x, x + y)
  const UnimodularMatrix right = UnimodularMatrix::make(1, 1, 0, 1);  // (x, y) -> (x + y, y)
  QuadraticForm f = form;
  UnimodularMatrix acc = UnimodularMatrix::identity();
  for (BigInt step = 0; step < bound; ++step) {
    const BigInt at_11 = f.a + 2 * f.b + f.c;  // f(1, 1)
    if (sign(at_11) * sign(f.a) < 0) {
      f = {f.a, f.b + f.a, at_11};
      acc = acc * down;
    } else if (sign(at_11) * sign(f.c) < 0) {
      f = {at_11, f.b + f.c, f.c};
      acc = acc * right;
    } else {
      throw Error(ErrorKind::InvariantViolation, "substitution choice is not unique");
    }
    if (f == form) {
      if (!(compose(form, acc) == form)) {
        throw Error(ErrorKind::InvariantViolation, "accumulated matrix does not preserve the form");
      }
      return acc;
    }
  }
  throw Error(ErrorKind::NonConvergence, "coefficient triple did not recur within the state bound");
}

std::pair<QuadraticSurd, QuadraticSurd> fixed_line_surds(const UnimodularMatrix& m) {
  // m (1, s) = lambda (1, s)  <=>  q s^2 + (p - s_) s - r = 0,  lambda = p + q s
  const BigInt disc = m.trace() * m.trace() - 4 * m.det();
  if (m.q() == 0 || disc.sign() <= 0 || is_perfect_square(disc)) {
    throw Error(ErrorKind::NotHyperbolic, to_string(m));
  }
  auto [larger, smaller] = quadratic_roots(m.q(), BigInt(m.p() - m.s()), BigInt(-m.r()));
  auto expanding = [&](const QuadraticSurd& slope) {
    const QuadraticSurd eigenvalue =
        expect_surd(arith(Rational(m.p()), slope * Number(Rational(m.q())), ArithOp::Add));
    return compare(eigenvalue, Rational(1)) > 0 || compare(eigenvalue, Rational(-1)) < 0;
  };
  if (expanding(larger)) return {larger, smaller};
  return {smaller, larger};
}

}  // namespace sails
