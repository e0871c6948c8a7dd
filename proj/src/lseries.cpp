#include "gross/lseries.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "gross/intutil.hpp"

namespace gross {

AFEConfig make_afe_config(const FieldParams& F, const QuadIdeal& f,
                          const PrecisionContext& ctx) {
  AFEConfig cfg;
  cfg.prec = ctx.bits();
  Real qn = Real::of(F.q * f.norm(), ctx.bits());
  cfg.C = sqrt(qn) / ctx.two_pi();
  // Truncation: the slowest kernel is exp(-n/(delta2*C)) with delta2 = 5/4.
  // X = ceil(C * ((P+guard) ln10 + 3 ln(C+2) + 20) / 0.8) keeps every tail
  // below the guard-digit target with a wide margin.
  double Cd = cfg.C.approx();
  double digits = static_cast<double>(ctx.decimal_digits()) + ctx.guard_digits();
  double xd = std::ceil(Cd * (digits * 2.302585092994046 + 3.0 * std::log(Cd + 2.0) + 20.0) / 0.8);
  cfg.X = static_cast<long>(xd);
  if (cfg.X < 16) cfg.X = 16;
  cfg.delta1 = Real::of(1, ctx.bits());
  cfg.delta2 = Real::of(5, ctx.bits()) / 4;
  cfg.delta3 = Real::of(9, ctx.bits()) / 8;
  return cfg;
}

std::vector<PrimeLocal> prime_table(const Grossencharacter& R, long X) {
  const FieldParams& F = R.F;
  std::vector<PrimeLocal> out;
  for (long ell : sieve_primes(X)) {
    PrimeLocal pl;
    pl.ell = ell;
    pl.eps_at_ell = 0;
    pl.first_coprime = pl.second_coprime = false;
    pl.cls_first = pl.cls_second = 0;
    mpz_class lm(ell);
    Splitting sp = prime_above(F, lm);
    pl.type = sp.type;
    if (element_coprime(F, {lm, 0}, R.f)) pl.eps_at_ell = eps_value(R.eps, {lm, 0});
    if (sp.type == SplitType::split) {
      pl.first_coprime = ideal_coprime(F, sp.first, R.f);
      pl.second_coprime = ideal_coprime(F, sp.second, R.f);
      if (pl.first_coprime) {
        pl.rho_first = rho_value(R, sp.first);
        pl.cls_first = R.G.index_of(class_of(F, sp.first));
      }
      if (pl.second_coprime) {
        pl.rho_second = rho_value(R, sp.second);
        pl.cls_second = R.G.index_of(class_of(F, sp.second));
      }
    } else {
      // inert (ell) or ramified (sqrt(-q)): single prime
      pl.first_coprime = ideal_coprime(F, sp.first, R.f);
      if (pl.first_coprime) {
        pl.rho_first = rho_value(R, sp.first);
        pl.cls_first = R.G.index_of(class_of(F, sp.first));
      }
    }
    out.push_back(pl);
  }
  return out;
}

std::vector<Complex> coefficients(const Grossencharacter& R,
                                  const std::vector<PrimeLocal>& ptab,
                                  const std::vector<Complex>& chi_tab, long X,
                                  const PrecisionContext& ctx) {
  assert(chi_tab.size() == static_cast<size_t>(R.G.h()));
  mpfr_prec_t prec = ctx.bits();
  Complex one{Real::of(1, prec), Real::of(0, prec)};
  Complex zero{Real::of(0, prec), Real::of(0, prec)};

  // local factor expansions u^(ell)_k for ell^k <= X
  std::vector<std::vector<Complex>> loc(ptab.size());
  std::vector<long> ells(ptab.size());
  for (size_t pi = 0; pi < ptab.size(); ++pi) {
    const PrimeLocal& pl = ptab[pi];
    ells[pi] = pl.ell;
    long kmax = 0;
    for (long pw = pl.ell; pw <= X && pw > 0; pw *= pl.ell) ++kmax;
    std::vector<Complex>& u = loc[pi];
    u.assign(static_cast<size_t>(kmax) + 1, zero);
    u[0] = one;
    if (kmax == 0) continue;
    auto psi = [&](const Complex& rho, long cls) { return rho * chi_tab[static_cast<size_t>(cls)]; };
    switch (pl.type) {
      case SplitType::split:
        if (pl.first_coprime && pl.second_coprime) {
          Complex u1 = psi(pl.rho_first, pl.cls_first) + psi(pl.rho_second, pl.cls_second);
          Real P = Real::of(pl.eps_at_ell * pl.ell, prec);  // psi(l) psi(lbar)
          if (kmax >= 1) u[1] = u1;
          for (long k = 2; k <= kmax; ++k)
            u[static_cast<size_t>(k)] =
                u1 * u[static_cast<size_t>(k - 1)] - u[static_cast<size_t>(k - 2)] * P;
        } else if (pl.first_coprime || pl.second_coprime) {
          // conductor divides the other factor: geometric series
          Complex p0 = pl.first_coprime ? psi(pl.rho_first, pl.cls_first)
                                        : psi(pl.rho_second, pl.cls_second);
          for (long k = 1; k <= kmax; ++k) u[static_cast<size_t>(k)] = u[static_cast<size_t>(k - 1)] * p0;
        }
        break;
      case SplitType::inert:
        if (pl.first_coprime) {
          // (ell) has norm ell^2: only even powers of ell appear
          Complex p0 = psi(pl.rho_first, pl.cls_first);
          for (long k = 2; k <= kmax; k += 2)
            u[static_cast<size_t>(k)] = u[static_cast<size_t>(k - 2)] * p0;
          for (long k = 1; k <= kmax; k += 2) u[static_cast<size_t>(k)] = zero;
        }
        break;
      case SplitType::ramified:
        if (pl.first_coprime) {
          Complex p0 = psi(pl.rho_first, pl.cls_first);
          for (long k = 1; k <= kmax; ++k) u[static_cast<size_t>(k)] = u[static_cast<size_t>(k - 1)] * p0;
        }
        break;
    }
  }

  // smallest-prime-factor sieve, then multiplicative fill
  std::vector<long> spf(static_cast<size_t>(X) + 1, 0);
  for (size_t pi = 0; pi < ells.size(); ++pi) {
    long ell = ells[pi];
    for (long n = ell; n <= X; n += ell)
      if (spf[static_cast<size_t>(n)] == 0) spf[static_cast<size_t>(n)] = static_cast<long>(pi);
  }
  std::vector<Complex> c(static_cast<size_t>(X) + 1, zero);
  c[1] = one;
  for (long n = 2; n <= X; ++n) {
    long pi = spf[static_cast<size_t>(n)];
    long ell = ells[static_cast<size_t>(pi)];
    long m = n, k = 0;
    while (m % ell == 0) {
      m /= ell;
      ++k;
    }
    c[static_cast<size_t>(n)] = c[static_cast<size_t>(m)] * loc[static_cast<size_t>(pi)][static_cast<size_t>(k)];
  }
  return c;
}

namespace {

// S(x) = sum_{n<=X} (c_n / n) exp(-n x / C)
Complex partial_sum(const std::vector<Complex>& c, const Real& x, const AFEConfig& cfg) {
  mpfr_prec_t prec = cfg.prec;
  Real t = exp(-(x / cfg.C));  // kernel ratio, < 1
  Real p = Real::of(1, prec);
  Complex S{Real::of(0, prec), Real::of(0, prec)};
  for (long n = 1; n <= cfg.X; ++n) {
    p *= t;
    const Complex& cn = c[static_cast<size_t>(n)];
    if (cn.re.sign() == 0 && cn.im.sign() == 0) continue;
    S += Complex{cn.re * p / n, cn.im * p / n};
  }
  return S;
}

}  // namespace

LValue l_value(const Grossencharacter& R, const std::vector<PrimeLocal>& ptab,
               const std::vector<Complex>& chi_tab, const std::string& label,
               const AFEConfig& cfg, const PrecisionContext& ctx) {
  std::vector<Complex> c = coefficients(R, ptab, chi_tab, cfg.X, ctx);
  Real one = Real::of(1, cfg.prec);
  Complex S[3] = {partial_sum(c, cfg.delta1, cfg), partial_sum(c, cfg.delta2, cfg),
                  partial_sum(c, cfg.delta3, cfg)};
  Complex T[3] = {partial_sum(c, one / cfg.delta1, cfg).conj(),
                  partial_sum(c, one / cfg.delta2, cfg).conj(),
                  partial_sum(c, one / cfg.delta3, cfg).conj()};

  // L = S_i + W T_i for each cutoff; eliminate L across a pair.  A pair is
  // unusable when T_b - T_a has cancelled down to noise.
  Real tiny = Real::pow10(-static_cast<long>(ctx.decimal_digits() / 2), cfg.prec);
  auto solve = [&](int a, int b, Complex& L, Complex& W) -> bool {
    Complex den = T[b] - T[a];
    if (cmp_abs(den.abs(), tiny) < 0) return false;
    W = (S[a] - S[b]) / den;
    L = S[a] + W * T[a];
    return true;
  };
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  Complex L, W, L2;
  int got = 0;
  for (auto [a, b] : pairs) {
    Complex Lp, Wp;
    if (!solve(a, b, Lp, Wp)) continue;
    if (got == 0) {
      L = Lp;
      W = Wp;
    } else {
      L2 = Lp;
    }
    if (++got == 2) break;
  }
  if (got < 2) throw std::runtime_error("l_value: root number solve degenerate");
  LValue out;
  out.chi_label = label;
  out.L = L;
  out.W = W;
  out.w_residual = abs(W.abs() - one);
  out.consistency = (L - L2).abs();
  return out;
}

LSeriesResult l_product(const Grossencharacter& R, const AFEConfig& cfg,
                        const PrecisionContext& ctx) {
  std::vector<PrimeLocal> ptab = prime_table(R, cfg.X);
  LSeriesResult res;
  res.product = Real::of(1, cfg.prec);
  res.min_abs_l = Real::of(-1, cfg.prec);
  for (const ClassCharacter& chi : all_characters(R.S)) {
    std::vector<Complex> tab = character_table(R.G, R.S, chi, ctx);
    LValue lv = l_value(R, ptab, tab, chi.label(), cfg, ctx);
    Real a = lv.L.abs();
    if (res.min_abs_l.sign() < 0 || a < res.min_abs_l) res.min_abs_l = a;
    res.product *= lv.L.norm();
    res.per_char.push_back(std::move(lv));
  }
  return res;
}

}  // namespace gross
