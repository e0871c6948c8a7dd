#pragma once
// Independent cross-check for the class-number-one fields: the twist of the
// CM curve with j = j(O_K) has the explicit model
//   y^2 = x^3 + a4 x + a6,   a4 = -j^(1/3)/48,   a6 = +-(t/864) sqrt(-q),
// where j - 1728 = -q t^2 with integers j^(1/3) and t.  Reducing modulo a
// split prime l = [ell, b] (sqrt(-q) |-> s = -b mod ell) and counting points
// gives the Frobenius trace a_ell, which must equal
// rho(l) + conj(rho(l)) for the correctly chosen character; for q = 3 mod 8
// this is what distinguishes the two eps candidates.

#include <gmpxx.h>

#include <vector>

#include "gross/field.hpp"
#include "gross/hecke.hpp"

namespace gross {

struct CurveAnchor {
  long q;
  mpz_class j;        // j(O_K), a negative cube for these fields
  mpz_class j_cbrt;   // exact integer cube root
  mpz_class t;        // positive integer with j - 1728 = -q t^2
  mpq_class a4;       // -j_cbrt/48
  mpq_class a6_coeff; // t/864; a6 = sign * a6_coeff * sqrt(-q)
};

// q must be one of {7, 11, 19, 43, 67, 163} (class number one); throws
// std::domain_error otherwise.
CurveAnchor build_curve(long q);

// Frobenius trace of the reduced curve over F_ell with sqrt(-q) |-> s and
// the given sign (+1 upper / -1 lower half plane) of a6:
//   a_ell = -sum_x (x^3 + a4 x + a6 | ell).
// Requires ell prime, ell not dividing 6q; throws on bad reduction.
long count_points(const CurveAnchor& E, long ell, long s, int sign);

struct AnchorPrimeRow {
  long ell;
  long s;                       // -b mod ell for the prime l = [ell, b]
  long a_upper, a_lower;        // traces for the two a6 signs
  std::vector<long> trace;      // round(2 Re rho(l)) per eps candidate
};

struct AnchorMatch {
  int eps_id;
  int sign;          // +1 upper, -1 lower
  long mismatches;
};

struct AnchorReport {
  CurveAnchor curve;
  long primes_tested;
  std::vector<AnchorPrimeRow> rows;
  std::vector<AnchorMatch> matches;  // every (eps candidate, sign) pair
  int selected_eps = -1;             // unique zero-mismatch candidate at the
  int selected_sign = 0;             // conventional sign, or -1/0 if none
  bool ok = false;
};

// Tests every split prime ell < prime_bound, ell not dividing 6q.  The
// conventional sign is upper for q = 7 mod 8 and lower for q = 3 mod 8.
AnchorReport anchor_verify(const FieldParams& F, long prime_bound,
                           const PrecisionContext& ctx);

}  // namespace gross
