#pragma once
// Exact arithmetic in the imaginary quadratic field K = Q(sqrt(-q)) for a
// prime q = 3 mod 4, q > 3.  The ring of integers is Z[omega] with
// omega = (1 + sqrt(-q))/2, so omega^2 = omega - (1+q)/4.  Integral ideals
// are kept in two-generator normal form
//     content * [a, (b + sqrt(-q))/2],   b^2 = -q (mod 4a),  -a < b <= a,
// of norm content^2 * a.  Elements are written x + y*omega; in the
// half-coordinates X = 2x + y, Y = y (so z = (X + Y*sqrt(-q))/2) the norm is
// (X^2 + q Y^2)/4, which is what the lattice routines minimise.

#include <gmpxx.h>

#include <optional>

#include "gross/numerics.hpp"

namespace gross {

struct FieldParams {
  mpz_class q;    // prime, 3 mod 4, > 3
  int mod8;       // 3 or 7
  mpz_class m4;   // (1+q)/4, the constant term of omega^2 = omega - m4
};

FieldParams make_field(const mpz_class& q);

struct QuadInt {
  mpz_class x, y;  // x + y*omega

  bool is_zero() const { return x == 0 && y == 0; }
  friend bool operator==(const QuadInt& a, const QuadInt& b) = default;
};

QuadInt qi_add(const QuadInt& a, const QuadInt& b);
QuadInt qi_sub(const QuadInt& a, const QuadInt& b);
QuadInt qi_neg(const QuadInt& a);
QuadInt qi_mul(const FieldParams& F, const QuadInt& a, const QuadInt& b);
QuadInt qi_conj(const QuadInt& a);              // x + y - y*omega
mpz_class qi_norm(const FieldParams& F, const QuadInt& a);
mpz_class qi_trace(const QuadInt& a);           // 2x + y

// Embedding with sqrt(-q) |-> +i*sqrt(q) (upper half plane).
Complex embed(const FieldParams& F, const QuadInt& z, mpfr_prec_t prec);

struct QuadIdeal {
  mpz_class content;  // >= 1
  mpz_class a, b;     // primitive part [a, (b+sqrt(-q))/2], -a < b <= a

  mpz_class norm() const { return content * content * a; }
  friend bool operator==(const QuadIdeal& i, const QuadIdeal& j) = default;
};

// Validates b^2 = -q (mod 4a) and normalises b into (-a, a].
QuadIdeal ideal_make(const FieldParams& F, const mpz_class& content,
                     const mpz_class& a, const mpz_class& b);
QuadIdeal unit_ideal();

QuadIdeal ideal_conj(const FieldParams& F, const QuadIdeal& I);
QuadIdeal ideal_mul(const FieldParams& F, const QuadIdeal& I, const QuadIdeal& J);
QuadIdeal ideal_pow(const FieldParams& F, const QuadIdeal& I, unsigned long k);

// Two-generator form of the principal ideal z*O_K (z != 0).
QuadIdeal principal_ideal(const FieldParams& F, const QuadInt& z);

bool ideal_contains(const FieldParams& F, const QuadIdeal& I, const QuadInt& z);

// P | I, i.e. I is contained in P (both generators of I lie in P).
bool ideal_divides(const FieldParams& F, const QuadIdeal& P, const QuadIdeal& I);

// Exact coprimality I + J = O_K.  Norm-coprimality is only sufficient: the
// conjugate of a prime above 2 is coprime to the conductor p^2 despite the
// shared norm factor, and it does enter the Euler product.
bool ideal_coprime(const FieldParams& F, const QuadIdeal& I, const QuadIdeal& J);

// Coprimality of the principal ideal (g) with f.
bool element_coprime(const FieldParams& F, const QuadInt& g, const QuadIdeal& f);

// Shortest-vector search (Lagrange-Gauss reduction) on the ideal lattice.
// Returns a generator if I is principal, nullopt otherwise; the generator is
// unique up to sign and the returned one is deterministic.
std::optional<QuadInt> principal_generator(const FieldParams& F, const QuadIdeal& I);

enum class SplitType { split, inert, ramified };

struct Splitting {
  SplitType type;
  QuadIdeal first;   // split: the prime with b in (0, ell); inert/ramified: the prime
  QuadIdeal second;  // split only: the conjugate, b in (-ell, 0)
};

Splitting prime_above(const FieldParams& F, const mpz_class& ell);

// q = 7 mod 8 only: of the two primes above 2, the one containing 1 - omega
// (equivalently the one whose square contains 1 - sqrt(-q)).
QuadIdeal distinguished_prime_above_2(const FieldParams& F);

// Conductor of the Hecke character: p^2 for q = 7 mod 8 (p distinguished),
// 4*O_K for q = 3 mod 8.  Norm 4 resp. 16.
QuadIdeal build_conductor(const FieldParams& F);

// Is gamma = +1, -1, or neither modulo f?  Throws unless gamma is coprime to f.
enum class ResidueSign { plus_one, minus_one, neither };
ResidueSign residue_sign(const FieldParams& F, const QuadInt& gamma, const QuadIdeal& f);

}  // namespace gross
