#include "gross/hecke.hpp"

#include <cassert>
#include <stdexcept>

#include "gross/intutil.hpp"

namespace gross {

namespace {

// Index into the 16-entry table for x + y*omega mod 4.
size_t table_index(const mpz_class& x, const mpz_class& y) {
  auto m4 = [](const mpz_class& v) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mpz_class(4).get_mpz_t());
    return static_cast<size_t>(r.get_ui());
  };
  return 4 * m4(x) + m4(y);
}

// The two quadratic characters with eps(-1) = -1 on (O_K/4)^*, q = 3 mod 8.
// Every unit u has u^3 in 1 + 2*O_K; writing u^3 = 1 + 2t with t in O_K/2,
// the map u -> t is a surjective homomorphism onto (O_K/2, +) = F_4, and the
// candidates are (-1)^(t_x) * s^(t_y) for s = +-1.
EpsilonChar make_table_eps(const FieldParams& F, int s, int id) {
  EpsilonChar eps;
  eps.F = F;
  eps.f = build_conductor(F);
  eps.id = id;
  eps.table_mode = true;
  for (long x = 0; x < 4; ++x)
    for (long y = 0; y < 4; ++y) {
      QuadInt u{x, y};
      if (qi_norm(F, u) % 2 == 0) {
        eps.table[table_index(x, y)] = 0;
        continue;
      }
      QuadInt u2 = qi_mul(F, u, u);
      QuadInt u3 = qi_mul(F, u2, u);
      mpz_class x3, y3;
      mpz_fdiv_r(x3.get_mpz_t(), u3.x.get_mpz_t(), mpz_class(4).get_mpz_t());
      mpz_fdiv_r(y3.get_mpz_t(), u3.y.get_mpz_t(), mpz_class(4).get_mpz_t());
      assert(x3 % 2 == 1 && y3 % 2 == 0);
      long tx = mpz_class((x3 - 1) / 2 % 2).get_si();
      long ty = mpz_class(y3 / 2 % 2).get_si();
      int val = (tx ? -1 : 1) * (ty ? s : 1);
      eps.table[table_index(x, y)] = val;
    }
  // sanity: eps(-1) = -1 and multiplicativity over the 12-element unit group
  assert(eps.table[table_index(3, 0)] == -1);
  for (long x1 = 0; x1 < 4; ++x1)
    for (long y1 = 0; y1 < 4; ++y1)
      for (long x2 = 0; x2 < 4; ++x2)
        for (long y2 = 0; y2 < 4; ++y2) {
          int a = eps.table[table_index(x1, y1)], b = eps.table[table_index(x2, y2)];
          if (a == 0 || b == 0) continue;
          QuadInt prod = qi_mul(F, {x1, y1}, {x2, y2});
          assert(eps.table[table_index(prod.x, prod.y)] == a * b);
          (void)prod;
        }
  return eps;
}

}  // namespace

std::vector<EpsilonChar> epsilon_candidates(const FieldParams& F) {
  if (F.mod8 == 7) {
    EpsilonChar eps;
    eps.F = F;
    eps.f = build_conductor(F);
    eps.id = 0;
    eps.table_mode = false;
    return {eps};
  }
  return {make_table_eps(F, +1, 0), make_table_eps(F, -1, 1)};
}

int eps_value(const EpsilonChar& eps, const QuadInt& gamma) {
  if (eps.table_mode) {
    int v = eps.table[table_index(gamma.x, gamma.y)];
    if (v == 0) throw std::domain_error("eps_value: element not coprime to conductor");
    return v;
  }
  switch (residue_sign(eps.F, gamma, eps.f)) {
    case ResidueSign::plus_one:
      return 1;
    case ResidueSign::minus_one:
      return -1;
    default:
      throw std::logic_error("eps_value: residue group mod p^2 should be {+-1}");
  }
}

Grossencharacter build_rho(const FieldParams& F, const ClassGroup& G,
                           const ClassGroupStructure& S, const EpsilonChar& eps,
                           const PrecisionContext& ctx, const RhoBuildOptions& opt) {
  Grossencharacter R;
  R.F = F;
  R.f = build_conductor(F);
  R.eps = eps;
  R.G = G;
  R.S = S;
  R.prec = ctx.bits();

  size_t k = S.gens.size();
  for (size_t i = 0; i < k; ++i) {
    long d = S.orders[i];
    QuadIdeal li = unit_ideal();
    int skipped = 0;
    bool found = false;
    for (long ell = 3; ell < 100000 && !found; ell += 2) {
      mpz_class lm(ell);
      if (!is_prime(lm) || lm == F.q) continue;
      Splitting sp = prime_above(F, lm);
      if (sp.type != SplitType::split) continue;
      for (const QuadIdeal& cand : {sp.first, sp.second}) {
        if (!(class_of(F, cand) == S.gens[i])) continue;
        if (skipped++ < opt.prime_skip) continue;
        li = cand;
        found = true;
        break;
      }
    }
    if (!found) throw std::runtime_error("build_rho: no split prime found in generator class");
    auto beta = principal_generator(F, ideal_pow(F, li, static_cast<unsigned long>(d)));
    if (!beta) throw std::logic_error("build_rho: l^d is not principal");
    Complex val = embed(F, *beta, R.prec);
    if (eps_value(eps, *beta) < 0) val = -val;
    R.branch.push_back({li, *beta, root_principal(val, d)});
  }

  // Per-class cofactors M_e = prod l_i^(d_i - e_i) and complex corrections
  // prod r_i^(e_i) / (eps(beta_i) Phi(beta_i)).
  std::vector<std::vector<Complex>> root_pows(k);
  for (size_t i = 0; i < k; ++i) {
    root_pows[i].resize(static_cast<size_t>(S.orders[i] + 1));
    root_pows[i][0] = {Real::of(1, R.prec), Real::of(0, R.prec)};
    for (long e = 1; e <= S.orders[i]; ++e)
      root_pows[i][static_cast<size_t>(e)] =
          root_pows[i][static_cast<size_t>(e - 1)] * R.branch[i].root;
  }
  for (long idx = 0; idx < G.h(); ++idx) {
    const std::vector<long>& e = S.tuples[static_cast<size_t>(idx)];
    QuadIdeal M = unit_ideal();
    Complex corr{Real::of(1, R.prec), Real::of(0, R.prec)};
    for (size_t i = 0; i < k; ++i) {
      M = ideal_mul(F, M, ideal_pow(F, R.branch[i].prime,
                                    static_cast<unsigned long>(S.orders[i] - e[i])));
      corr = corr * root_pows[i][static_cast<size_t>(e[i])] /
             root_pows[i][static_cast<size_t>(S.orders[i])];
    }
    R.cofactor.push_back(M);
    R.correction.push_back(corr);
  }
  return R;
}

Complex rho_value(const Grossencharacter& R, const QuadIdeal& a) {
  if (!ideal_coprime(R.F, a, R.f))
    throw std::domain_error("rho_value: ideal not coprime to the conductor");
  long idx = R.G.index_of(class_of(R.F, a));
  QuadIdeal b = ideal_mul(R.F, a, R.cofactor[static_cast<size_t>(idx)]);
  auto g = principal_generator(R.F, b);
  if (!g) throw std::logic_error("rho_value: cofactor failed to principalise");
  Complex val = embed(R.F, *g, R.prec);
  if (eps_value(R.eps, *g) < 0) val = -val;
  return val * R.correction[static_cast<size_t>(idx)];
}

Complex rho_principal_value(const Grossencharacter& R, const QuadIdeal& a) {
  auto g = principal_generator(R.F, a);
  if (!g) throw std::domain_error("rho_principal_value: ideal is not principal");
  if (!ideal_coprime(R.F, a, R.f))
    throw std::domain_error("rho_principal_value: ideal not coprime to the conductor");
  Complex val = embed(R.F, *g, R.prec);
  if (eps_value(R.eps, *g) < 0) val = -val;
  return val;
}

}  // namespace gross
