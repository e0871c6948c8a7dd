#pragma once
// Test-only reference implementations, deliberately independent of the
// algorithms they cross-check: pi from Machin's arctangent series (vs the
// library constant), square roots by Newton iteration (vs mpfr_sqrt), and
// ideal multiplication through a 4-generator Hermite normal form (vs the
// two-generator composition formula).

#include <random>
#include <vector>

#include "gross/field.hpp"
#include "gross/numerics.hpp"

namespace gross::testing {

Real machin_pi(mpfr_prec_t prec);
Real newton_sqrt(const Real& a, mpfr_prec_t prec);

// Product I*J computed as the Z-span of the four pairwise generator
// products, triangularised into content*[a, (b+sqrt(-q))/2].
QuadIdeal hnf_ideal_mul(const FieldParams& F, const QuadIdeal& I, const QuadIdeal& J);

// Prime ideals of residue characteristic <= ell_max that are coprime to f
// (split primes individually, inert primes as (ell), the ramified prime);
// raw material for randomised ideal sampling.
std::vector<QuadIdeal> coprime_prime_pool(const FieldParams& F, const QuadIdeal& f,
                                          long ell_max);

// Product of 1..max_factors pool elements drawn with replacement.
QuadIdeal random_pool_product(const FieldParams& F, const std::vector<QuadIdeal>& pool,
                              std::mt19937_64& rng, int max_factors);

}  // namespace gross::testing
