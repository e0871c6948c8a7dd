#include "gross/field.hpp"

#include <cassert>
#include <stdexcept>

#include "gross/intutil.hpp"

namespace gross {

FieldParams make_field(const mpz_class& q) {
  if (q <= 3 || q % 4 != 3) throw std::domain_error("field: need a prime q = 3 mod 4, q > 3");
  if (!is_prime(q)) throw std::domain_error("field: q is not prime");
  FieldParams F;
  F.q = q;
  F.mod8 = static_cast<int>(mpz_class(q % 8).get_si());
  F.m4 = (1 + q) / 4;
  return F;
}

QuadInt qi_add(const QuadInt& a, const QuadInt& b) { return {a.x + b.x, a.y + b.y}; }
QuadInt qi_sub(const QuadInt& a, const QuadInt& b) { return {a.x - b.x, a.y - b.y}; }
QuadInt qi_neg(const QuadInt& a) { return {-a.x, -a.y}; }

QuadInt qi_mul(const FieldParams& F, const QuadInt& a, const QuadInt& b) {
  // (x1 + y1 w)(x2 + y2 w) with w^2 = w - m4
  mpz_class yy = a.y * b.y;
  return {a.x * b.x - F.m4 * yy, a.x * b.y + a.y * b.x + yy};
}

QuadInt qi_conj(const QuadInt& a) { return {a.x + a.y, -a.y}; }

mpz_class qi_norm(const FieldParams& F, const QuadInt& a) {
  return a.x * a.x + a.x * a.y + F.m4 * a.y * a.y;
}

mpz_class qi_trace(const QuadInt& a) { return 2 * a.x + a.y; }

Complex embed(const FieldParams& F, const QuadInt& z, mpfr_prec_t prec) {
  Real sq = sqrt(Real::of(F.q, prec));
  Real y = Real::of(z.y, prec);
  return {Real::of(z.x, prec) + y / 2, y * sq / 2};
}

QuadIdeal ideal_make(const FieldParams& F, const mpz_class& content,
                     const mpz_class& a, const mpz_class& b) {
  if (content < 1 || a < 1) throw std::domain_error("ideal: content and a must be positive");
  mpz_class r = (b * b + F.q) % (4 * a);
  if (r != 0) throw std::domain_error("ideal: b^2 != -q mod 4a");
  QuadIdeal I;
  I.content = content;
  I.a = a;
  I.b = mod_symmetric(b, 2 * a);  // lands in (-a, a]
  return I;
}

QuadIdeal unit_ideal() { return {1, 1, 1}; }

QuadIdeal ideal_conj(const FieldParams& F, const QuadIdeal& I) {
  return ideal_make(F, I.content, I.a, -I.b);
}

QuadIdeal ideal_mul(const FieldParams& F, const QuadIdeal& I, const QuadIdeal& J) {
  // Primitive parts compose as [a1,b1][a2,b2] = d*[a1a2/d^2, b3] with
  // d = gcd(a1, a2, (b1+b2)/2) = u*a1 + v*a2 + w*s and
  // b3 = (u a1 b2 + v a2 b1 + w (b1 b2 - q)/2) / d.
  const mpz_class &a1 = I.a, &b1 = I.b, &a2 = J.a, &b2 = J.b;
  mpz_class s = (b1 + b2) / 2;
  mpz_class g0, u0, v0;
  mpz_gcdext(g0.get_mpz_t(), u0.get_mpz_t(), v0.get_mpz_t(), a1.get_mpz_t(), a2.get_mpz_t());
  mpz_class d, p0, w;
  mpz_gcdext(d.get_mpz_t(), p0.get_mpz_t(), w.get_mpz_t(), g0.get_mpz_t(), s.get_mpz_t());
  mpz_class u = u0 * p0, v = v0 * p0;
  mpz_class a3 = a1 * a2 / (d * d);
  mpz_class t = u * a1 * b2 + v * a2 * b1 + w * ((b1 * b2 - F.q) / 2);
  assert(t % d == 0);
  return ideal_make(F, I.content * J.content * d, a3, t / d);
}

QuadIdeal ideal_pow(const FieldParams& F, const QuadIdeal& I, unsigned long k) {
  QuadIdeal acc = unit_ideal();
  QuadIdeal base = I;
  while (k > 0) {
    if (k & 1) acc = ideal_mul(F, acc, base);
    base = ideal_mul(F, base, base);
    k >>= 1;
  }
  return acc;
}

QuadIdeal principal_ideal(const FieldParams& F, const QuadInt& z) {
  if (z.is_zero()) throw std::domain_error("principal_ideal: zero element");
  // Z-basis z, z*omega in half-coordinates; reduce to triangular form
  // (2ac, 0), (bc, c) which encodes content c and primitive part [a, b].
  QuadInt zw = qi_mul(F, z, {0, 1});
  mpz_class X1 = 2 * z.x + z.y, Y1 = z.y;
  mpz_class X2 = 2 * zw.x + zw.y, Y2 = zw.y;
  mpz_class c, u, v;
  if (Y1 == 0) {
    c = ::abs(Y2);
    u = 0;
    v = Y2 > 0 ? 1 : -1;
  } else if (Y2 == 0) {
    c = ::abs(Y1);
    u = Y1 > 0 ? 1 : -1;
    v = 0;
  } else {
    mpz_gcdext(c.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), Y1.get_mpz_t(), Y2.get_mpz_t());
  }
  assert(c > 0);
  mpz_class T = (X1 * Y2 - X2 * Y1) / c;  // generates the Y = 0 sublattice
  T = ::abs(T);
  mpz_class WX = u * X1 + v * X2;
  assert(T % (2 * c) == 0);
  mpz_class a = T / (2 * c);
  assert(WX % c == 0);
  QuadIdeal out = ideal_make(F, c, a, WX / c);
  assert(out.norm() == qi_norm(F, z));
  return out;
}

bool ideal_contains(const FieldParams& F, const QuadIdeal& I, const QuadInt& z) {
  (void)F;
  mpz_class X = 2 * z.x + z.y, Y = z.y;
  if (Y % I.content != 0) return false;
  return (X - I.b * Y) % (2 * I.a * I.content) == 0;
}

bool ideal_divides(const FieldParams& F, const QuadIdeal& P, const QuadIdeal& I) {
  QuadInt g1{I.content * I.a, 0};
  QuadInt g2{I.content * (I.b - 1) / 2, I.content};  // content*(b+sqrt(-q))/2
  return ideal_contains(F, P, g1) && ideal_contains(F, P, g2);
}

bool ideal_coprime(const FieldParams& F, const QuadIdeal& I, const QuadIdeal& J) {
  mpz_class g;
  mpz_class ni = I.norm(), nj = J.norm();
  mpz_gcd(g.get_mpz_t(), ni.get_mpz_t(), nj.get_mpz_t());
  if (g == 1) return true;
  // Shared norm factor: coprime unless a common prime ideal divides both.
  for (mpz_class ell = 2; ell * ell <= g; ++ell) {
    if (g % ell != 0) continue;
    while (g % ell == 0) g /= ell;
    Splitting s = prime_above(F, ell);
    if (ideal_divides(F, s.first, I) && ideal_divides(F, s.first, J)) return false;
    if (s.type == SplitType::split && ideal_divides(F, s.second, I) &&
        ideal_divides(F, s.second, J))
      return false;
  }
  if (g > 1) {
    if (!is_prime(g)) throw std::runtime_error("ideal_coprime: cannot factor norm gcd");
    Splitting s = prime_above(F, g);
    if (ideal_divides(F, s.first, I) && ideal_divides(F, s.first, J)) return false;
    if (s.type == SplitType::split && ideal_divides(F, s.second, I) &&
        ideal_divides(F, s.second, J))
      return false;
  }
  return true;
}

bool element_coprime(const FieldParams& F, const QuadInt& g, const QuadIdeal& f) {
  if (g.is_zero()) return false;
  return ideal_coprime(F, principal_ideal(F, g), f);
}

namespace {

struct Vec2 {
  mpz_class X, Y;
};

mpz_class qform(const FieldParams& F, const Vec2& v) { return v.X * v.X + F.q * v.Y * v.Y; }
mpz_class bform(const FieldParams& F, const Vec2& v, const Vec2& w) {
  return v.X * w.X + F.q * v.Y * w.Y;
}

}  // namespace

std::optional<QuadInt> principal_generator(const FieldParams& F, const QuadIdeal& I) {
  Vec2 u{2 * I.a * I.content, 0};
  Vec2 w{I.b * I.content, I.content};
  if (qform(F, u) < qform(F, w)) std::swap(u, w);
  // Lagrange reduction: afterwards u is a shortest nonzero lattice vector.
  for (;;) {
    std::swap(u, w);  // now Q(u) <= Q(w)
    mpz_class mu = round_div(bform(F, u, w), qform(F, u));
    w.X -= mu * u.X;
    w.Y -= mu * u.Y;
    if (qform(F, w) >= qform(F, u)) break;
  }
  if (qform(F, u) != 4 * I.norm()) return std::nullopt;
  assert((u.X - u.Y) % 2 == 0);
  QuadInt g{(u.X - u.Y) / 2, u.Y};
  // Deterministic sign: positive trace, or positive y on the trace-0 line.
  if (qi_trace(g) < 0 || (qi_trace(g) == 0 && g.y < 0)) g = qi_neg(g);
  assert(qi_norm(F, g) == I.norm());
  return g;
}

Splitting prime_above(const FieldParams& F, const mpz_class& ell) {
  if (ell < 2 || !is_prime(ell)) throw std::domain_error("prime_above: ell not prime");
  Splitting S;
  if (ell == F.q) {
    S.type = SplitType::ramified;
    S.first = ideal_make(F, 1, F.q, F.q);  // (sqrt(-q))
    return S;
  }
  if (ell == 2) {
    if (F.mod8 == 3) {
      S.type = SplitType::inert;
      S.first = ideal_make(F, 2, 1, 1);
    } else {
      S.type = SplitType::split;
      S.first = ideal_make(F, 1, 2, 1);
      S.second = ideal_make(F, 1, 2, -1);
    }
    return S;
  }
  mpz_class mq = -F.q;
  int leg = mpz_legendre(mq.get_mpz_t(), ell.get_mpz_t());
  if (leg == -1) {
    S.type = SplitType::inert;
    S.first = ideal_make(F, ell, 1, 1);
    return S;
  }
  mpz_class r = sqrt_mod_prime(mq, ell);
  if (r % 2 == 0) r = ell - r;  // b must be odd since -q = 1 mod 4
  S.type = SplitType::split;
  S.first = ideal_make(F, 1, ell, r);
  S.second = ideal_make(F, 1, ell, -r);
  assert(S.first.b > 0 && S.first.b < ell);
  return S;
}

QuadIdeal distinguished_prime_above_2(const FieldParams& F) {
  if (F.mod8 != 7) throw std::domain_error("distinguished prime: 2 does not split");
  Splitting S = prime_above(F, 2);
  QuadInt one_minus_omega{1, -1};
  bool in_first = ideal_contains(F, S.first, one_minus_omega);
  bool in_second = ideal_contains(F, S.second, one_minus_omega);
  assert(in_first != in_second);
  return in_first ? S.first : S.second;
}

QuadIdeal build_conductor(const FieldParams& F) {
  if (F.mod8 == 7) {
    QuadIdeal p = distinguished_prime_above_2(F);
    return ideal_mul(F, p, p);
  }
  return ideal_make(F, 4, 1, 1);  // 4*O_K, norm 16
}

ResidueSign residue_sign(const FieldParams& F, const QuadInt& gamma, const QuadIdeal& f) {
  if (!element_coprime(F, gamma, f))
    throw std::domain_error("residue_sign: element not coprime to modulus");
  if (ideal_contains(F, f, {gamma.x - 1, gamma.y})) return ResidueSign::plus_one;
  if (ideal_contains(F, f, {gamma.x + 1, gamma.y})) return ResidueSign::minus_one;
  return ResidueSign::neither;
}

}  // namespace gross
