#pragma once
// The ideal class group of Q(sqrt(-q)) as reduced primitive binary quadratic
// forms (a, b, c) of discriminant -q (so b is odd, |b| <= a <= c, with b >= 0
// on the boundaries).  Composition goes through the ideal arithmetic in
// field.hpp rather than a second composition algorithm.  The structure
// routine extracts an invariant-factor basis g_1, ..., g_k with orders
// d_1, d_2, ... where d_{i+1} | d_i, together with a discrete-log table for
// the whole group.

#include <compare>
#include <string>
#include <vector>

#include "gross/field.hpp"

namespace gross {

struct ReducedForm {
  long a, b, c;
  friend auto operator<=>(const ReducedForm&, const ReducedForm&) = default;
};

ReducedForm identity_form(const FieldParams& F);  // (1, 1, (1+q)/4)

// Reduction of (a, b, *) with c implied by the discriminant -q.
ReducedForm reduce_form(const FieldParams& F, mpz_class a, mpz_class b);

ReducedForm class_of(const FieldParams& F, const QuadIdeal& I);
QuadIdeal ideal_of(const FieldParams& F, const ReducedForm& f);  // primitive [a, b]

ReducedForm compose(const FieldParams& F, const ReducedForm& f, const ReducedForm& g);
ReducedForm pow_form(const FieldParams& F, const ReducedForm& f, unsigned long k);
ReducedForm inverse_form(const FieldParams& F, const ReducedForm& f);
long order_of(const FieldParams& F, const ReducedForm& f);

class ClassGroup {
 public:
  FieldParams F;
  std::vector<ReducedForm> forms;  // all reduced forms, sorted by (a, b)

  long h() const { return static_cast<long>(forms.size()); }
  long index_of(const ReducedForm& f) const;  // throws if f is not in the list
};

ClassGroup enumerate_class_group(const FieldParams& F);

// Analytic class number formula for prime q = 3 mod 4, q > 3:
//   h = (sum of Legendre symbols (a|q) for 0 < a < q/2) / (2 - (2|q)).
long dirichlet_h(const mpz_class& q);

struct ClassGroupStructure {
  std::vector<ReducedForm> gens;
  std::vector<long> orders;               // invariant factors, d_{i+1} | d_i
  std::vector<std::vector<long>> tuples;  // discrete log per class, aligned with forms
  long identity_index;

  const std::vector<long>& tuple_of(const ClassGroup& G, const ReducedForm& f) const {
    return tuples[static_cast<size_t>(G.index_of(f))];
  }
};

ClassGroupStructure build_structure(const ClassGroup& G);

// Character of the class group: form |-> exp(2 pi i sum_j k_j e_j / d_j).
struct ClassCharacter {
  std::vector<long> k;  // 0 <= k_j < d_j
  std::string label() const;
};

std::vector<ClassCharacter> all_characters(const ClassGroupStructure& S);

// chi evaluated at every class, aligned with G.forms.
std::vector<Complex> character_table(const ClassGroup& G, const ClassGroupStructure& S,
                                     const ClassCharacter& chi, const PrecisionContext& ctx);

}  // namespace gross
