#include "gross/classgroup.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <stdexcept>

#include "gross/intutil.hpp"

namespace gross {

namespace {

long to_long_checked(const mpz_class& v) {
  if (!v.fits_slong_p()) throw std::domain_error("class group: value exceeds long range");
  return v.get_si();
}

}  // namespace

ReducedForm identity_form(const FieldParams& F) {
  return {1, 1, to_long_checked(F.m4)};
}

ReducedForm reduce_form(const FieldParams& F, mpz_class a, mpz_class b) {
  if (a <= 0) throw std::domain_error("reduce_form: a must be positive");
  assert((b * b + F.q) % (4 * a) == 0);
  b = mod_symmetric(b, 2 * a);
  mpz_class c = (b * b + F.q) / (4 * a);
  while (a > c) {  // rotate (a,b,c) -> (c,-b,a), then renormalise b
    b = mod_symmetric(-b, 2 * c);
    a = c;
    c = (b * b + F.q) / (4 * a);
  }
  if (a == c && b < 0) b = -b;
  return {to_long_checked(a), to_long_checked(b), to_long_checked(c)};
}

ReducedForm class_of(const FieldParams& F, const QuadIdeal& I) {
  return reduce_form(F, I.a, I.b);
}

QuadIdeal ideal_of(const FieldParams& F, const ReducedForm& f) {
  return ideal_make(F, 1, f.a, f.b);
}

ReducedForm compose(const FieldParams& F, const ReducedForm& f, const ReducedForm& g) {
  return class_of(F, ideal_mul(F, ideal_of(F, f), ideal_of(F, g)));
}

ReducedForm pow_form(const FieldParams& F, const ReducedForm& f, unsigned long k) {
  return class_of(F, ideal_pow(F, ideal_of(F, f), k));
}

ReducedForm inverse_form(const FieldParams& F, const ReducedForm& f) {
  return class_of(F, ideal_conj(F, ideal_of(F, f)));
}

long order_of(const FieldParams& F, const ReducedForm& f) {
  ReducedForm id = identity_form(F);
  ReducedForm e = f;
  long n = 1;
  while (!(e == id)) {
    e = compose(F, e, f);
    ++n;
    if (n > 1000000) throw std::runtime_error("order_of: runaway iteration");
  }
  return n;
}

long ClassGroup::index_of(const ReducedForm& f) const {
  auto it = std::lower_bound(forms.begin(), forms.end(), f);
  if (it == forms.end() || !(*it == f)) throw std::domain_error("class group: unknown form");
  return static_cast<long>(it - forms.begin());
}

ClassGroup enumerate_class_group(const FieldParams& F) {
  if (!F.q.fits_slong_p() || F.q > (1L << 40))
    throw std::domain_error("class group enumeration: q out of supported range");
  long q = F.q.get_si();
  ClassGroup G;
  G.F = F;
  // Reduced forms of discriminant -q: b odd, 0 < b, 3b^2 <= q, 4ac = b^2 + q,
  // b <= a <= c; the form (a,-b,c) is distinct unless b = a or a = c.
  for (long b = 1; 3 * b * b <= q; b += 2) {
    long n4 = (b * b + q) / 4;
    for (long a = b; a * a <= n4; ++a) {
      if (n4 % a != 0) continue;
      long c = n4 / a;
      G.forms.push_back({a, b, c});
      if (b < a && a < c) G.forms.push_back({a, -b, c});
    }
  }
  std::sort(G.forms.begin(), G.forms.end());
  return G;
}

long dirichlet_h(const mpz_class& q) {
  if (q <= 3 || q % 4 != 3 || !is_prime(q))
    throw std::domain_error("dirichlet_h: need a prime q = 3 mod 4, q > 3");
  long sum = 0;
  mpz_class a;
  for (a = 1; 2 * a < q; ++a) sum += mpz_legendre(a.get_mpz_t(), q.get_mpz_t());
  mpz_class two(2);
  long denom = 2 - mpz_legendre(two.get_mpz_t(), q.get_mpz_t());
  assert(sum % denom == 0);
  return sum / denom;
}

namespace {

using ComposeFn = std::function<ReducedForm(const ReducedForm&, const ReducedForm&)>;

long generic_order(const ReducedForm& f, const ReducedForm& id, const ComposeFn& mul) {
  ReducedForm e = f;
  long n = 1;
  while (!(e == id)) {
    e = mul(e, f);
    ++n;
  }
  return n;
}

ReducedForm generic_pow(const ReducedForm& f, long k, const ReducedForm& id, const ComposeFn& mul) {
  ReducedForm acc = id;
  for (long i = 0; i < k; ++i) acc = mul(acc, f);
  return acc;
}

// Invariant-factor basis of a finite abelian group given by an element list,
// a composition callback and the identity.  Recursion: take g1 of maximal
// order d1 (= the group exponent), quotient by <g1> using minimal coset
// representatives, and lift a basis of the quotient.  A lift x of a quotient
// generator of order d satisfies x^d = g1^s with d | s, and y = x * g1^(-s/d)
// then has exact order d and splits off a direct factor.
std::vector<std::pair<ReducedForm, long>> abelian_basis(
    const std::vector<ReducedForm>& elems, const ReducedForm& id, const ComposeFn& mul) {
  if (elems.size() <= 1) return {};
  long d1 = 0;
  ReducedForm g1 = id;
  for (const ReducedForm& f : elems) {
    long o = generic_order(f, id, mul);
    if (o > d1 || (o == d1 && f < g1)) {
      d1 = o;
      g1 = f;
    }
  }
  std::vector<std::pair<ReducedForm, long>> basis{{g1, d1}};
  if (d1 == static_cast<long>(elems.size())) return basis;

  std::vector<ReducedForm> g1_pows(static_cast<size_t>(d1));
  g1_pows[0] = id;
  for (long i = 1; i < d1; ++i) g1_pows[static_cast<size_t>(i)] = mul(g1_pows[static_cast<size_t>(i - 1)], g1);

  std::map<ReducedForm, ReducedForm> rep;  // element -> minimal form in its <g1>-coset
  for (const ReducedForm& f : elems) {
    ReducedForm best = f;
    for (const ReducedForm& p : g1_pows) best = std::min(best, mul(f, p));
    rep.emplace(f, best);
  }
  std::vector<ReducedForm> quotient;
  for (const auto& [f, r] : rep)
    if (f == r) quotient.push_back(f);
  assert(quotient.size() * static_cast<size_t>(d1) == elems.size());
  assert(rep.at(id) == id);

  ComposeFn qmul = [&](const ReducedForm& x, const ReducedForm& y) { return rep.at(mul(x, y)); };
  for (const auto& [gq, dq] : abelian_basis(quotient, id, qmul)) {
    ReducedForm t = generic_pow(gq, dq, id, mul);  // lands in <g1>
    long s = 0;
    while (!(g1_pows[static_cast<size_t>(s)] == t)) {
      ++s;
      assert(s < d1);
    }
    assert(s % dq == 0);
    long back = (d1 - s / dq) % d1;
    ReducedForm y = mul(gq, g1_pows[static_cast<size_t>(back)]);
    assert(generic_order(y, id, mul) == dq);
    basis.emplace_back(y, dq);
  }
  return basis;
}

}  // namespace

ClassGroupStructure build_structure(const ClassGroup& G) {
  const FieldParams& F = G.F;
  ReducedForm id = identity_form(F);
  ComposeFn mul = [&F](const ReducedForm& x, const ReducedForm& y) { return compose(F, x, y); };

  ClassGroupStructure S;
  S.identity_index = G.index_of(id);
  auto basis = abelian_basis(G.forms, id, mul);
  long prod = 1;
  for (const auto& [g, d] : basis) {
    S.gens.push_back(g);
    S.orders.push_back(d);
    prod *= d;
  }
  if (prod != G.h()) throw std::runtime_error("class group structure: order mismatch");
  for (size_t i = 0; i + 1 < S.orders.size(); ++i)
    if (S.orders[i] % S.orders[i + 1] != 0)
      throw std::runtime_error("class group structure: invariant factors out of order");

  // Discrete logs: walk all exponent tuples in odometer order (last index
  // fastest) and record the class each monomial lands on.
  size_t k = S.gens.size();
  std::vector<std::vector<ReducedForm>> pows(k);
  for (size_t i = 0; i < k; ++i) {
    pows[i].resize(static_cast<size_t>(S.orders[i]));
    pows[i][0] = id;
    for (long e = 1; e < S.orders[i]; ++e)
      pows[i][static_cast<size_t>(e)] = mul(pows[i][static_cast<size_t>(e - 1)], S.gens[i]);
  }
  S.tuples.assign(static_cast<size_t>(G.h()), {});
  std::vector<bool> seen(static_cast<size_t>(G.h()), false);
  std::vector<long> e(k, 0);
  for (;;) {
    ReducedForm f = id;
    for (size_t i = 0; i < k; ++i) f = mul(f, pows[i][static_cast<size_t>(e[i])]);
    size_t idx = static_cast<size_t>(G.index_of(f));
    if (seen[idx]) throw std::runtime_error("class group structure: tuple collision");
    seen[idx] = true;
    S.tuples[idx] = e;
    size_t i = k;
    while (i > 0 && ++e[i - 1] == S.orders[i - 1]) e[--i] = 0;
    if (i == 0) break;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw std::runtime_error("class group structure: tuple table incomplete");
  return S;
}

std::string ClassCharacter::label() const {
  std::string s;
  for (size_t i = 0; i < k.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(k[i]);
  }
  if (s.empty()) s = "0";
  return s;
}

std::vector<ClassCharacter> all_characters(const ClassGroupStructure& S) {
  std::vector<ClassCharacter> out;
  size_t k = S.orders.size();
  std::vector<long> e(k, 0);
  for (;;) {
    out.push_back({e});
    size_t i = k;
    while (i > 0 && ++e[i - 1] == S.orders[i - 1]) e[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::vector<Complex> character_table(const ClassGroup& G, const ClassGroupStructure& S,
                                     const ClassCharacter& chi, const PrecisionContext& ctx) {
  std::vector<Complex> out;
  out.reserve(static_cast<size_t>(G.h()));
  for (long idx = 0; idx < G.h(); ++idx) {
    const std::vector<long>& e = S.tuples[static_cast<size_t>(idx)];
    mpq_class r(0);
    for (size_t j = 0; j < e.size(); ++j) r += mpq_class(chi.k[j] * e[j], S.orders[j]);
    r.canonicalize();
    // angle 2*pi*frac(r)
    Real angle = ctx.two_pi() * Real::of(r.get_num(), ctx.bits()) / Real::of(r.get_den(), ctx.bits());
    Real c(ctx.bits()), s(ctx.bits());
    mpfr_sin_cos(s.raw(), c.raw(), angle.raw(), MPFR_RNDN);
    out.push_back({c, s});
  }
  return out;
}

}  // namespace gross
