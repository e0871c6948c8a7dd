#include "gross/intutil.hpp"

#include <cassert>
#include <stdexcept>

namespace gross {

namespace {

// One Miller-Rabin round; n odd, n > 2, d*2^s = n-1 with d odd.
bool mr_witness(const mpz_class& n, const mpz_class& d, unsigned long s, unsigned long base) {
  mpz_class x, b(base);
  mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;  // composite witness
}

}  // namespace

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul}) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n > mpz_class("330000000000000"))
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
  mpz_class d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (unsigned long b : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul})
    if (mr_witness(n, d, s, b)) return false;
  return true;
}

mpz_class sqrt_mod_prime(const mpz_class& a, const mpz_class& p) {
  mpz_class r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  if (mpz_legendre(r.get_mpz_t(), p.get_mpz_t()) != 1)
    throw std::domain_error("sqrt_mod_prime: non-residue");
  if (p % 4 == 3) {
    mpz_class e = (p + 1) / 4, x;
    mpz_powm(x.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if (x > p - x) x = p - x;
    return x;
  }
  // Tonelli-Shanks for p = 1 mod 4.
  mpz_class q = p - 1;
  unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
  mpz_class z(2);
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  mpz_class c, x, t, e = (q + 1) / 2;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(x.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  unsigned long m = s;
  while (t != 1) {
    mpz_class tt = t;
    unsigned long i = 0;
    while (tt != 1) {
      tt = (tt * tt) % p;
      ++i;
      if (i == m) throw std::domain_error("sqrt_mod_prime: internal failure");
    }
    mpz_class b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = (b * b) % p;
    x = (x * b) % p;
    c = (b * b) % p;
    t = (t * c) % p;
    m = i;
  }
  if (x > p - x) x = p - x;
  return x;
}

std::vector<long> sieve_primes(long limit) {
  std::vector<long> out;
  if (limit < 2) return out;
  std::vector<bool> comp(static_cast<size_t>(limit) + 1, false);
  for (long i = 2; i <= limit; ++i) {
    if (comp[static_cast<size_t>(i)]) continue;
    out.push_back(i);
    for (long j = i * i; j >= 0 && j <= limit; j += i) comp[static_cast<size_t>(j)] = true;
  }
  return out;
}

mpz_class round_div(const mpz_class& n, const mpz_class& d) {
  assert(d > 0);
  mpz_class q;
  mpz_class num = 2 * n + d;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), mpz_class(2 * d).get_mpz_t());
  return q;
}

mpz_class mod_symmetric(const mpz_class& n, const mpz_class& m) {
  assert(m > 0);
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());  // r in [0, m)
  if (2 * r > m) r -= m;
  return r;
}

}  // namespace gross
