#include "gross/anchor.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "gross/classgroup.hpp"
#include "gross/intutil.hpp"

namespace gross {

namespace {

struct JEntry {
  long q;
  const char* j;
};

// j(O_K) for the nine imaginary quadratic fields of class number one; only
// the q = 3 mod 4, q > 3 members appear here.
const JEntry kJTable[] = {
    {7, "-3375"},
    {11, "-32768"},
    {19, "-884736"},
    {43, "-884736000"},
    {67, "-147197952000"},
    {163, "-262537412640768000"},
};

long inverse_mod(long a, long ell) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), mpz_class(a).get_mpz_t(), mpz_class(ell).get_mpz_t()) == 0)
    throw std::domain_error("inverse_mod: not invertible");
  return r.get_si();
}

long reduce_rational(const mpq_class& x, long ell) {
  long num = mpz_class(x.get_num() % ell).get_si();
  long den = mpz_class(x.get_den() % ell).get_si();
  long v = ((num % ell) + ell) % ell;
  return v * inverse_mod(den, ell) % ell;
}

}  // namespace

CurveAnchor build_curve(long q) {
  const JEntry* entry = nullptr;
  for (const JEntry& e : kJTable)
    if (e.q == q) entry = &e;
  if (!entry) throw std::domain_error("build_curve: q is not a class-number-one field");
  CurveAnchor E;
  E.q = q;
  E.j = mpz_class(entry->j);
  // exact integer cube root (j < 0 for all entries)
  mpz_class mag = -E.j;
  mpz_class root;
  int exact = mpz_root(root.get_mpz_t(), mag.get_mpz_t(), 3);
  if (!exact) throw std::logic_error("build_curve: j is not a perfect cube");
  E.j_cbrt = -root;
  // j - 1728 = -q t^2
  mpz_class num = 1728 - E.j;
  if (num % q != 0) throw std::logic_error("build_curve: 1728 - j not divisible by q");
  mpz_class t2 = num / q;
  if (mpz_perfect_square_p(t2.get_mpz_t()) == 0)
    throw std::logic_error("build_curve: (1728 - j)/q is not a square");
  mpz_sqrt(E.t.get_mpz_t(), t2.get_mpz_t());
  E.a4 = mpq_class(-E.j_cbrt, 48);
  E.a4.canonicalize();
  E.a6_coeff = mpq_class(E.t, 864);
  E.a6_coeff.canonicalize();
  return E;
}

long count_points(const CurveAnchor& E, long ell, long s, int sign) {
  if (ell < 5 || ell == E.q || !is_prime(ell))
    throw std::domain_error("count_points: ell must be a prime not dividing 6q");
  long a4 = reduce_rational(E.a4, ell);
  long a6 = reduce_rational(E.a6_coeff, ell) * (((s % ell) + ell) % ell) % ell;
  if (sign < 0) a6 = (ell - a6) % ell;
  long disc = (4 * a4 % ell * a4 % ell * a4 + 27 * a6 % ell * a6) % ell;
  if (disc == 0) throw std::domain_error("count_points: bad reduction");
  // chi table: chi[v] = legendre(v | ell)
  std::vector<int> chi(static_cast<size_t>(ell), -1);
  chi[0] = 0;
  for (long v = 1; v < ell; ++v) chi[static_cast<size_t>(v * v % ell)] = 1;
  long sum = 0;
  for (long x = 0; x < ell; ++x) {
    long fx = ((x * x % ell * x + a4 * x + a6) % ell + ell) % ell;
    sum += chi[static_cast<size_t>(fx)];
  }
  long a = -sum;
  assert(static_cast<double>(a) * a <= 4.0 * ell);
  return a;
}

AnchorReport anchor_verify(const FieldParams& F, long prime_bound,
                           const PrecisionContext& ctx) {
  AnchorReport rep;
  rep.curve = build_curve(F.q.get_si());
  ClassGroup G = enumerate_class_group(F);
  if (G.h() != 1) throw std::domain_error("anchor_verify: class number is not one");
  ClassGroupStructure S = build_structure(G);
  std::vector<EpsilonChar> cands = epsilon_candidates(F);
  std::vector<Grossencharacter> rhos;
  for (const EpsilonChar& eps : cands) rhos.push_back(build_rho(F, G, S, eps, ctx));

  Real half = Real::of(1, ctx.bits()) / 2;
  rep.primes_tested = 0;
  std::vector<std::vector<long>> mism(cands.size(), std::vector<long>(2, 0));
  for (long ell : sieve_primes(prime_bound)) {
    if (ell < 5 || ell == rep.curve.q) continue;
    Splitting sp = prime_above(F, ell);
    if (sp.type != SplitType::split) continue;
    AnchorPrimeRow row;
    row.ell = ell;
    row.s = mpz_class((-sp.first.b) % ell + ell).get_si() % ell;
    row.a_upper = count_points(rep.curve, ell, row.s, +1);
    row.a_lower = count_points(rep.curve, ell, row.s, -1);
    for (const Grossencharacter& R : rhos) {
      Complex v = rho_value(R, sp.first);
      Real tr = v.re * 2;
      mpz_class rounded = tr.round_to_integer();
      // the trace of an algebraic integer of norm ell: must be a rational
      // integer to working precision
      Real err = abs(tr - Real::of(rounded, ctx.bits()));
      if (!(err < half)) throw std::logic_error("anchor_verify: trace far from an integer");
      row.trace.push_back(rounded.get_si());
    }
    for (size_t ci = 0; ci < cands.size(); ++ci) {
      if (row.trace[ci] != row.a_upper) ++mism[ci][0];
      if (row.trace[ci] != row.a_lower) ++mism[ci][1];
    }
    ++rep.primes_tested;
    rep.rows.push_back(std::move(row));
  }

  int conventional = F.mod8 == 7 ? +1 : -1;
  for (size_t ci = 0; ci < cands.size(); ++ci)
    for (int si = 0; si < 2; ++si)
      rep.matches.push_back({cands[ci].id, si == 0 ? +1 : -1, mism[ci][static_cast<size_t>(si)]});
  int hits = 0;
  for (const AnchorMatch& m : rep.matches)
    if (m.sign == conventional && m.mismatches == 0) {
      rep.selected_eps = m.eps_id;
      ++hits;
    }
  rep.selected_sign = conventional;
  rep.ok = hits == 1 && rep.primes_tested >= 10;
  return rep;
}

}  // namespace gross
