#pragma once
// The period
//   Omega(q) = prod_{0<c<q, (c|q)=1} Gamma(c/q) / ((2 pi)^m * q^(h/2)),
//   m = (q-1)/4 - h/2,
// and the conjectural analytic order of the Tate-Shafarevich group,
//   #Sha = L(E/H,1) * 2^e / (Omega(q)^2 * sqrt(q)),
// with e = h + 6 - 2r for q = 7 mod 8 (r = h/j, j the order of the ideal
// class of the distinguished prime above 2) and e = 2h for q = 3 mod 8.

#include <gmpxx.h>

#include "gross/field.hpp"
#include "gross/numerics.hpp"

namespace gross {

// (q - 1 - 2h)/4; a nonnegative integer for every prime q = 3 mod 4, q > 3,
// with odd class number h.  Throws std::logic_error otherwise.
long period_exponent_m(const FieldParams& F, long h);

Real compute_period(const FieldParams& F, long h, const PrecisionContext& ctx);

struct ShaOrder {
  long exponent;     // e in the 2^e factor
  Real value;        // conjectured order; should be a positive integer
  mpz_class rounded;
  Real abs_error;    // |value - rounded|
  bool is_square;
};

// Throws std::domain_error if L <= 0.
ShaOrder sha_order(const FieldParams& F, const Real& L, const Real& omega,
                   long h, long r, const PrecisionContext& ctx);

}  // namespace gross
