#include "oracles.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

#include "gross/intutil.hpp"

namespace gross::testing {

namespace {

// arctan(1/x) = sum (-1)^k / ((2k+1) x^(2k+1)), truncated when the term
// drops below 2^-(prec+16).
Real arctan_inv(long x, mpfr_prec_t prec) {
  Real sum = Real::of(0, prec);
  Real t = Real::of(1, prec) / x;
  Real xx = Real::of(1, prec) / (x * x);
  Real cut = Real::of(1, prec);
  mpfr_mul_2si(cut.raw(), cut.raw(), -(prec + 16), MPFR_RNDN);
  for (long k = 0;; ++k) {
    Real term = t / (2 * k + 1);
    if (cmp_abs(term, cut) < 0) break;
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
    t *= xx;
  }
  return sum;
}

}  // namespace

Real machin_pi(mpfr_prec_t prec) {
  mpfr_prec_t p = prec + 32;
  Real v = arctan_inv(5, p) * 16 - arctan_inv(239, p) * 4;
  Real out(prec);
  mpfr_set(out.raw(), v.raw(), MPFR_RNDN);
  return out;
}

Real newton_sqrt(const Real& a, mpfr_prec_t prec) {
  if (a.sign() < 0) throw std::domain_error("newton_sqrt: negative");
  if (a.sign() == 0) return Real::of(0, prec);
  mpfr_prec_t p = prec + 32;
  Real x(p);
  mpfr_set_d(x.raw(), 1.0, MPFR_RNDN);
  // double-precision seed when representable
  double d = a.approx();
  if (d > 0 && d < 1e300) mpfr_set_d(x.raw(), __builtin_sqrt(d), MPFR_RNDN);
  Real ahi(p);
  mpfr_set(ahi.raw(), a.raw(), MPFR_RNDN);
  for (int i = 0; i < 200; ++i) {
    Real nx = (x + ahi / x) / 2;
    if (cmp_abs(nx - x, Real::pow10(-2 - static_cast<long>(p / 3), p)) < 0) {
      x = nx;
      break;
    }
    x = nx;
  }
  Real out(prec);
  mpfr_set(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

QuadIdeal hnf_ideal_mul(const FieldParams& F, const QuadIdeal& I, const QuadIdeal& J) {
  // Generators of an ideal content*[a,(b+sqrt(-q))/2] as elements of O_K.
  auto gens = [](const QuadIdeal& A) {
    std::vector<QuadInt> g;
    g.push_back({A.content * A.a, 0});
    g.push_back({A.content * (A.b - 1) / 2, A.content});  // content*(b+sqrt(-q))/2
    return g;
  };
  std::vector<QuadInt> prods;
  for (const QuadInt& z : gens(I))
    for (const QuadInt& w : gens(J)) prods.push_back(qi_mul(F, z, w));

  // Half-coordinates (X, Y) with z = (X + Y sqrt(-q))/2; triangularise.
  struct V {
    mpz_class X, Y;
  };
  std::vector<V> vs;
  for (const QuadInt& z : prods) vs.push_back({2 * z.x + z.y, z.y});

  mpz_class c = 0, wX = 0, wY = 0;
  for (const V& v : vs) {
    if (v.Y == 0) continue;
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), c.get_mpz_t(), v.Y.get_mpz_t());
    wX = s * wX + t * v.X;
    wY = s * wY + t * v.Y;
    c = g;
  }
  assert(c > 0 && wY == c);
  mpz_class T = 0;
  for (const V& v : vs) {
    mpz_class x0 = v.X - (v.Y / c) * wX;  // Y eliminated
    mpz_gcd(T.get_mpz_t(), T.get_mpz_t(), x0.get_mpz_t());
  }
  assert(T > 0 && T % (2 * c) == 0 && wX % c == 0);
  return ideal_make(F, c, T / (2 * c), wX / c);
}

std::vector<QuadIdeal> coprime_prime_pool(const FieldParams& F, const QuadIdeal& f,
                                          long ell_max) {
  std::vector<QuadIdeal> pool;
  for (long ell : sieve_primes(ell_max)) {
    Splitting sp = prime_above(F, ell);
    if (sp.type == SplitType::inert) {
      QuadIdeal whole = principal_ideal(F, {ell, 0});
      if (ideal_coprime(F, whole, f)) pool.push_back(whole);
      continue;
    }
    if (ideal_coprime(F, sp.first, f)) pool.push_back(sp.first);
    if (sp.type == SplitType::split && ideal_coprime(F, sp.second, f))
      pool.push_back(sp.second);
  }
  return pool;
}

QuadIdeal random_pool_product(const FieldParams& F, const std::vector<QuadIdeal>& pool,
                              std::mt19937_64& rng, int max_factors) {
  assert(!pool.empty() && max_factors >= 1);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> count(1, max_factors);
  QuadIdeal out = unit_ideal();
  for (int i = count(rng); i > 0; --i) out = ideal_mul(F, out, pool[pick(rng)]);
  return out;
}

}  // namespace gross::testing
