#pragma once
// The Hecke (Grossen-)character rho attached to Q(sqrt(-q)): an ideal
// character with rho((gamma)) = eps(gamma) * Phi(gamma) on principal ideals
// coprime to the conductor f, where Phi is the embedding sending sqrt(-q) to
// +i*sqrt(q) and eps is a quadratic character on (O_K/f)^* with
// eps(-1) = -1.  Values satisfy |rho(a)|^2 = N(a).
//
// Construction away from principal ideals: fix the invariant-factor basis
// g_1, ..., g_k of the class group, pick a split prime l_i in each class g_i,
// a generator beta_i of l_i^{d_i}, and a d_i-th root r_i of
// eps(beta_i)*Phi(beta_i).  For an ideal a with discrete log (e_i), the
// cofactor M = prod l_i^(d_i - e_i) makes a*M principal, and
//   rho(a) = eps(g) * Phi(g) * prod r_i^(e_i - d_i),   (g) = a*M.
// Multiplicativity is exact: carries in the exponent addition contribute
// whole factors r_i^(d_i) = eps(beta_i) Phi(beta_i) on both sides.

#include <array>
#include <vector>

#include "gross/classgroup.hpp"
#include "gross/field.hpp"

namespace gross {

// Quadratic character on (O_K/f)^* with eps(-1) = -1.  For q = 7 mod 8 the
// residue group mod f = p^2 is {+-1} and the character is unique.  For
// q = 3 mod 8 (f = 4*O_K, unit group of order 12) there are exactly two such
// characters, swapped by conjugation; both are returned and downstream code
// decides which one is the Deuring character of the chosen curve.
struct EpsilonChar {
  FieldParams F;
  QuadIdeal f;
  int id = 0;               // candidate index (always 0 for q = 7 mod 8)
  bool table_mode = false;  // true: 16-entry table over (x mod 4, y mod 4)
  std::array<int, 16> table{};
};

std::vector<EpsilonChar> epsilon_candidates(const FieldParams& F);

// +1 or -1; throws if gamma is not coprime to the conductor.
int eps_value(const EpsilonChar& eps, const QuadInt& gamma);

struct RhoBranch {
  QuadIdeal prime;  // l_i, split, coprime to 2q, in the class of gens[i]
  QuadInt beta;     // generator of l_i^{d_i}
  Complex root;     // principal d_i-th root of eps(beta)*Phi(beta)
};

struct Grossencharacter {
  FieldParams F;
  QuadIdeal f;
  EpsilonChar eps;
  ClassGroup G;
  ClassGroupStructure S;
  mpfr_prec_t prec;
  std::vector<RhoBranch> branch;
  std::vector<QuadIdeal> cofactor;   // per class index
  std::vector<Complex> correction;   // per class index
};

struct RhoBuildOptions {
  // Skip the first n admissible primes when choosing each l_i; used to check
  // that a different branch choice only relabels the character family.
  int prime_skip = 0;
};

Grossencharacter build_rho(const FieldParams& F, const ClassGroup& G,
                           const ClassGroupStructure& S, const EpsilonChar& eps,
                           const PrecisionContext& ctx, const RhoBuildOptions& opt = {});

// rho(a) for an ideal coprime to the conductor; throws otherwise.
Complex rho_value(const Grossencharacter& R, const QuadIdeal& a);

// eps-normalised embedding of a generator of a principal ideal (the value
// rho takes there); used by tests for the defining relation rho(a)^h = ...
Complex rho_principal_value(const Grossencharacter& R, const QuadIdeal& a);

}  // namespace gross
