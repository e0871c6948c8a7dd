// L-series tests.  The coefficient array from the Euler-product recursion is
// checked against a direct enumeration of every integral ideal of bounded
// norm (the normal form content*[a,(b+sqrt(-q))/2] makes that a finite
// lattice walk), and the L-values against their internal consistency checks,
// cutoff-doubling stability, and a frozen q = 7 fixture whose root number is
// the exact algebraic value (sqrt(7) - 3i)/4.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "gross/lseries.hpp"

using namespace gross;

namespace {

constexpr unsigned kDigits = 50;

struct Family {
  FieldParams F;
  ClassGroup G;
  ClassGroupStructure S;
  Grossencharacter R;
  AFEConfig cfg;
};

Family make_family(long q, const PrecisionContext& ctx, int eps_id = 0, int skip = 0) {
  FieldParams F = make_field(q);
  ClassGroup G = enumerate_class_group(F);
  ClassGroupStructure S = build_structure(G);
  RhoBuildOptions opt;
  opt.prime_skip = skip;
  Grossencharacter R = build_rho(F, G, S, epsilon_candidates(F)[eps_id], ctx, opt);
  AFEConfig cfg = make_afe_config(F, R.f, ctx);
  return {F, G, S, R, cfg};
}

// Independent coefficient oracle: c_n = sum over ideals of norm n coprime to
// the conductor of rho(a) * chi(class(a)), by enumerating every two-generator
// normal form with content^2 * a <= bound.
std::vector<Complex> ideal_sum_coefficients(const Family& fam,
                                            const std::vector<Complex>& chi_tab,
                                            long bound, const PrecisionContext& ctx) {
  std::vector<Complex> c(bound + 1, ctx.complex(0, 0));
  c[1] = ctx.complex(1, 0);
  for (long a = 1; a <= bound; ++a)
    for (long b = -a + 1; b <= a; ++b) {
      if (((b * b + fam.F.q) % (4 * a)) != 0) continue;
      for (long ct = 1; ct * ct * a <= bound; ++ct) {
        if (ct == 1 && a == 1) continue;  // unit ideal already seeded
        QuadIdeal I = ideal_make(fam.F, ct, a, b);
        if (!ideal_coprime(fam.F, I, fam.R.f)) continue;
        Complex psi = rho_value(fam.R, I) *
                      chi_tab[fam.G.index_of(class_of(fam.F, I))];
        c[I.norm().get_si()] += psi;
      }
    }
  return c;
}

std::vector<Complex> trivial_chi(const Family& fam, const PrecisionContext& ctx) {
  return character_table(fam.G, fam.S, all_characters(fam.S)[0], ctx);
}

}  // namespace

TEST_CASE("afe config: cutoff count covers the target precision") {
  PrecisionContext ctx(kDigits);
  long prev = 0;
  for (long q : {7L, 23L, 199L}) {
    Family fam = make_family(q, ctx);
    CHECK(fam.cfg.X >= 16);
    CHECK(fam.cfg.X > prev);
    prev = fam.cfg.X;
    // C = sqrt(q * N(f)) / (2 pi); N(f) = 4 for q = 7 mod 8
    Real C_want = sqrt(Real::of(4 * q, ctx.bits())) / ctx.two_pi();
    CHECK(abs(fam.cfg.C - C_want) < Real::pow10(-45, ctx.bits()));
    // exp(-X * 0.8 / C) below the guard target (0.8 = slowest kernel rate)
    Real expo = exp(-(Real::of(fam.cfg.X, ctx.bits()) *
                      Real::parse("0.8", ctx.bits()) / fam.cfg.C));
    CHECK(expo < Real::pow10(-(long)(kDigits + ctx.guard_digits()), ctx.bits()));
  }
  PrecisionContext lo(20);
  Family fam20 = make_family(7, lo);
  Family fam50 = make_family(7, ctx);
  CHECK(fam20.cfg.X < fam50.cfg.X);
}

TEST_CASE("coefficients: direct ideal enumeration agrees with the Euler recursion") {
  PrecisionContext ctx(kDigits);
  Real tol = Real::pow10(-43, ctx.bits());
  const long B = 60;
  for (long q : {7L, 11L, 23L}) {
    Family fam = make_family(q, ctx);
    auto ptab = prime_table(fam.R, B);
    long nchi = fam.G.h();
    for (long k = 0; k < nchi; ++k) {
      auto chi_tab = character_table(fam.G, fam.S, all_characters(fam.S)[k], ctx);
      auto c = coefficients(fam.R, ptab, chi_tab, B, ctx);
      auto want = ideal_sum_coefficients(fam, chi_tab, B, ctx);
      REQUIRE(c.size() == B + 1);
      for (long n = 1; n <= B; ++n) {
        CHECK(abs(c[n].re - want[n].re) < tol);
        CHECK(abs(c[n].im - want[n].im) < tol);
      }
    }
  }
}

TEST_CASE("coefficients: c_1 = 1, Hasse bound at split primes, support for 3 mod 8") {
  PrecisionContext ctx(kDigits);
  Real tol = Real::pow10(-44, ctx.bits());
  Family fam = make_family(11, ctx);
  auto ptab = prime_table(fam.R, 200);
  auto c = coefficients(fam.R, ptab, trivial_chi(fam, ctx), 200, ctx);
  CHECK(abs(c[1].re - Real::of(1, ctx.bits())) < tol);
  CHECK(abs(c[1].im) < tol);
  // 2 is inert and divides the conductor: no ideal of even norm survives
  for (long n = 2; n <= 200; n += 2) {
    CHECK(abs(c[n].re) < tol);
    CHECK(abs(c[n].im) < tol);
  }
  for (const PrimeLocal& pl : ptab) {
    if (pl.type != SplitType::split || !pl.first_coprime || !pl.second_coprime) continue;
    Real bound = sqrt(Real::of(pl.ell, ctx.bits())) * 2 + Real::pow10(-40, ctx.bits());
    CHECK(c[pl.ell].abs() < bound);
  }
}

TEST_CASE("coefficients: multiplicative on coprime indices") {
  PrecisionContext ctx(kDigits);
  Real tol = Real::pow10(-42, ctx.bits());
  for (long q : {7L, 23L}) {
    Family fam = make_family(q, ctx);
    auto ptab = prime_table(fam.R, 400);
    long nchi = std::min<long>(fam.G.h(), 2);
    for (long k = 0; k < nchi; ++k) {
      auto chi_tab = character_table(fam.G, fam.S, all_characters(fam.S)[k], ctx);
      auto c = coefficients(fam.R, ptab, chi_tab, 400, ctx);
      for (long m = 2; m <= 20; ++m)
        for (long n = m + 1; n * m <= 400; ++n) {
          if (std::gcd(m, n) != 1) continue;
          Complex want = c[m] * c[n];
          CHECK(abs(c[m * n].re - want.re) < tol);
          CHECK(abs(c[m * n].im - want.im) < tol);
        }
    }
  }
}

TEST_CASE("l_value: frozen q = 7 point, exact algebraic root number") {
  PrecisionContext ctx(kDigits);
  Family fam = make_family(7, ctx);
  auto ptab = prime_table(fam.R, fam.cfg.X);
  LValue lv = l_value(fam.R, ptab, trivial_chi(fam, ctx), "1", fam.cfg, ctx);
  Real tol = Real::pow10(-40, ctx.bits());
  CHECK(lv.w_residual < tol);
  CHECK(lv.consistency < tol);
  Real L_re = ctx.real("5.0667380354848246918054317681388988163068287071029e-01");
  Real L_im = ctx.real("-2.2872077805781652388811245446761161724663246681569e-01");
  CHECK(abs(lv.L.re - L_re) < Real::pow10(-45, ctx.bits()));
  CHECK(abs(lv.L.im - L_im) < Real::pow10(-45, ctx.bits()));
  // W = (sqrt(7) - 3i)/4, a unit: 7/16 + 9/16 = 1
  CHECK(abs(lv.W.re - sqrt(Real::of(7, ctx.bits())) / 4) < tol);
  CHECK(abs(lv.W.im + Real::parse("0.75", ctx.bits())) < tol);
}

TEST_CASE("l_value: stable under doubling the series cutoff") {
  PrecisionContext ctx(kDigits);
  Real tol = Real::pow10(-58, ctx.bits());
  for (long q : {7L, 23L}) {
    Family fam = make_family(q, ctx);
    auto chi_tab = trivial_chi(fam, ctx);
    AFEConfig big = fam.cfg;
    big.X *= 2;
    auto pt1 = prime_table(fam.R, fam.cfg.X);
    auto pt2 = prime_table(fam.R, big.X);
    LValue a = l_value(fam.R, pt1, chi_tab, "1", fam.cfg, ctx);
    LValue b = l_value(fam.R, pt2, chi_tab, "1", big, ctx);
    CHECK(abs(a.L.re - b.L.re) < tol);
    CHECK(abs(a.L.im - b.L.im) < tol);
  }
}

TEST_CASE("l_product: residuals small, product positive, one value per character") {
  PrecisionContext ctx(kDigits);
  Real tol = Real::pow10(-40, ctx.bits());
  for (long q : {23L, 59L}) {
    Family fam = make_family(q, ctx);
    LSeriesResult res = l_product(fam.R, fam.cfg, ctx);
    REQUIRE(res.per_char.size() == static_cast<size_t>(fam.G.h()));
    for (const LValue& lv : res.per_char) {
      CHECK(lv.w_residual < tol);
      CHECK(lv.consistency < tol);
    }
    CHECK(res.product.sign() > 0);
    CHECK(res.min_abs_l.sign() > 0);
  }
}

TEST_CASE("l_product: branch prime choice only relabels the character family") {
  PrecisionContext ctx(kDigits);
  Family a = make_family(23, ctx, 0, 0);
  Family b = make_family(23, ctx, 0, 1);
  REQUIRE(!(a.R.branch[0].prime == b.R.branch[0].prime));
  LSeriesResult ra = l_product(a.R, a.cfg, ctx);
  LSeriesResult rb = l_product(b.R, b.cfg, ctx);
  CHECK(abs(ra.product - rb.product) / ra.product < Real::pow10(-42, ctx.bits()));
  // multisets of |L| agree after sorting
  auto mags = [](const LSeriesResult& r) {
    std::vector<Real> v;
    for (const LValue& lv : r.per_char) v.push_back(lv.L.abs());
    std::sort(v.begin(), v.end());
    return v;
  };
  auto ma = mags(ra), mb = mags(rb);
  for (size_t i = 0; i < ma.size(); ++i) CHECK(abs(ma[i] - mb[i]) < Real::pow10(-42, ctx.bits()));
}

TEST_CASE("l_product: for 3 mod 8 the two eps candidates are complex conjugates") {
  // The conductor (4) is fixed by conjugation, so a -> conj(rho(conj a))
  // lands in the family of the other candidate: the L-value multisets are
  // conjugate, and the products equal.
  PrecisionContext ctx(kDigits);
  Real tol = Real::pow10(-40, ctx.bits());
  for (long q : {11L, 59L}) {
    Family f0 = make_family(q, ctx, 0);
    Family f1 = make_family(q, ctx, 1);
    LSeriesResult r0 = l_product(f0.R, f0.cfg, ctx);
    LSeriesResult r1 = l_product(f1.R, f1.cfg, ctx);
    CHECK(abs(r0.product - r1.product) / r0.product < tol);
    std::vector<bool> used(r1.per_char.size(), false);
    for (const LValue& lv : r0.per_char) {
      bool matched = false;
      for (size_t k = 0; k < r1.per_char.size() && !matched; ++k) {
        if (used[k]) continue;
        Complex d = r1.per_char[k].L.conj() - lv.L;
        if (d.abs() < tol) {
          used[k] = true;
          matched = true;
        }
      }
      CHECK(matched);
    }
  }
}
