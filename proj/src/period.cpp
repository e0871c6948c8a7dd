#include "gross/period.hpp"

#include <stdexcept>

namespace gross {

long period_exponent_m(const FieldParams& F, long h) {
  mpz_class num = F.q - 1 - 2 * h;
  if (num < 0 || num % 4 != 0)
    throw std::logic_error("period_exponent_m: (q-1-2h)/4 is not a nonnegative integer");
  mpz_class m = num / 4;
  return m.get_si();
}

Real compute_period(const FieldParams& F, long h, const PrecisionContext& ctx) {
  long m = period_exponent_m(F, h);
  Real q = ctx.real(F.q);
  // log space: the Gamma product alone grows like q^(q/4)
  Real acc = ctx.real(0);
  for (mpz_class c = 1; c < F.q; ++c) {
    if (mpz_legendre(c.get_mpz_t(), F.q.get_mpz_t()) != 1) continue;
    acc += log(ctx.gamma(ctx.real(c) / q));
  }
  acc -= ctx.log_2pi() * m;
  acc -= log(q) * h / 2;
  return exp(acc);
}

ShaOrder sha_order(const FieldParams& F, const Real& L, const Real& omega,
                   long h, long r, const PrecisionContext& ctx) {
  if (L.sign() <= 0) throw std::domain_error("sha_order: L-value is not positive");
  ShaOrder out;
  out.exponent = F.mod8 == 7 ? h + 6 - 2 * r : 2 * h;
  Real s(ctx.bits());
  mpfr_mul_2si(s.raw(), L.raw(), out.exponent, MPFR_RNDN);
  s /= omega * omega * sqrt(ctx.real(F.q));
  out.value = s;
  out.rounded = s.round_to_integer();
  out.abs_error = abs(s - ctx.real(out.rounded));
  out.is_square = out.rounded > 0 && mpz_perfect_square_p(out.rounded.get_mpz_t()) != 0;
  return out;
}

}  // namespace gross
