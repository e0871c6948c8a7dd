#pragma once
// L(psi, 1) for psi = rho * chi by the approximate functional equation.
// With C = sqrt(q * N(f)) / (2 pi) and the completed function
// Lambda(s) = C^s Gamma(s) L(psi, s) = W * Lambda(psi-bar, 2 - s), one has
//   L(psi, 1) = S(delta) + W * conj(S(1/delta)),
//   S(x) = sum_{n <= X} (c_n / n) exp(-n x / C),
// for any cutoff delta ~ 1.  Evaluating at two cutoffs gives a 2x2 linear
// system that determines L and the root number W simultaneously; |W| = 1 and
// agreement at a third cutoff are the accuracy checks.
//
// Coefficients c_n come from the Euler product over prime ideals coprime to
// the conductor: split primes contribute the Hecke recursion
// u_k = u_1 u_{k-1} - eps(ell) ell u_{k-2}, inert primes alternate with
// (eps(ell) ell)^j at even powers, the ramified prime and any split prime
// with exactly one coprime factor contribute geometric series.

#include <string>
#include <vector>

#include "gross/hecke.hpp"

namespace gross {

struct AFEConfig {
  Real C;       // sqrt(q * N(f)) / (2 pi)
  long X;       // series truncation; tail below the guard-digit target
  Real delta1, delta2, delta3;  // 1, 5/4, 9/8 (exact in binary)
  mpfr_prec_t prec;
};

AFEConfig make_afe_config(const FieldParams& F, const QuadIdeal& f,
                          const PrecisionContext& ctx);

// rho-values and class indices at every prime ideal with norm relevant up to
// X, computed once per character family and shared by all chi.
struct PrimeLocal {
  long ell;
  SplitType type;
  bool first_coprime, second_coprime;  // second used only when split
  Complex rho_first, rho_second;
  long cls_first, cls_second;
  int eps_at_ell;  // eps(ell), the local norm character value
};

std::vector<PrimeLocal> prime_table(const Grossencharacter& R, long X);

// c_1 .. c_X of L(rho * chi, s); chi given by its value table per class.
std::vector<Complex> coefficients(const Grossencharacter& R,
                                  const std::vector<PrimeLocal>& ptab,
                                  const std::vector<Complex>& chi_tab, long X,
                                  const PrecisionContext& ctx);

struct LValue {
  std::string chi_label;
  Complex L;
  Complex W;
  Real w_residual;   // | |W| - 1 |
  Real consistency;  // |L - L'| from the solve with the third cutoff
};

LValue l_value(const Grossencharacter& R, const std::vector<PrimeLocal>& ptab,
               const std::vector<Complex>& chi_tab, const std::string& label,
               const AFEConfig& cfg, const PrecisionContext& ctx);

struct LSeriesResult {
  std::vector<LValue> per_char;
  Real product;   // prod over chi of |L(rho chi, 1)|^2 = L(E/H, 1)
  Real min_abs_l;
};

LSeriesResult l_product(const Grossencharacter& R, const AFEConfig& cfg,
                        const PrecisionContext& ctx);

}  // namespace gross
