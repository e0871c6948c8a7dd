#pragma once
// Elementary integer routines shared across modules: deterministic primality
// for the supported range, square roots modulo a prime, prime sieving, and
// rounded division helpers for lattice reduction.

#include <gmpxx.h>

#include <vector>

namespace gross {

// Deterministic for n < 3.3e14 (fixed Miller-Rabin bases {2,3,5,7,11,13,17});
// beyond that falls back to mpz_probab_prime_p with 40 rounds.
bool is_prime(const mpz_class& n);

// Smallest non-negative r with r*r = a (mod p), p an odd prime, (a|p) = 1.
// Tonelli-Shanks; throws std::domain_error if a is a non-residue.
mpz_class sqrt_mod_prime(const mpz_class& a, const mpz_class& p);

// Primes <= limit in increasing order.
std::vector<long> sieve_primes(long limit);

// Nearest integer to n/d for d > 0, ties rounded up.
mpz_class round_div(const mpz_class& n, const mpz_class& d);

// Symmetric residue: n mod m shifted into (-m/2, m/2] for m > 0.
mpz_class mod_symmetric(const mpz_class& n, const mpz_class& m);

}  // namespace gross
