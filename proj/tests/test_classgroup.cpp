#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "gross/classgroup.hpp"
#include "gross/intutil.hpp"

using namespace gross;

namespace {

// Classical class numbers h(-q) for small primes q = 3 mod 4.
const std::pair<long, long> kKnownH[] = {
    {7, 1},   {11, 1},  {19, 1},   {23, 3},   {31, 3},  {43, 1},
    {47, 5},  {59, 3},  {67, 1},   {71, 7},   {79, 5},  {83, 3},
    {103, 5}, {127, 5}, {163, 1},  {167, 11}, {191, 13}, {199, 9},
};

}  // namespace

TEST_CASE("class numbers match the classical table") {
  for (auto [q, h] : kKnownH) {
    FieldParams F = make_field(q);
    CHECK(enumerate_class_group(F).h() == h);
    CHECK(dirichlet_h(q) == h);
  }
}

TEST_CASE("enumerated forms are reduced, distinct and sorted") {
  for (long q : {83L, 167L, 479L}) {
    FieldParams F = make_field(q);
    ClassGroup G = enumerate_class_group(F);
    std::set<std::pair<long, long>> seen;
    for (const ReducedForm& f : G.forms) {
      CHECK(f.b % 2 != 0);
      CHECK(static_cast<long long>(f.b) * f.b - 4LL * f.a * f.c == -q);
      CHECK(std::abs(f.b) <= f.a);
      CHECK(f.a <= f.c);
      if (std::abs(f.b) == f.a || f.a == f.c) CHECK(f.b >= 0);
      CHECK(seen.insert({f.a, f.b}).second);
    }
    CHECK(std::is_sorted(G.forms.begin(), G.forms.end()));
    CHECK(G.forms.front() == identity_form(F));
  }
}

TEST_CASE("reduction worked example") {
  FieldParams F = make_field(23);
  CHECK(reduce_form(F, 4, -3) == ReducedForm{2, -1, 3});
  CHECK(reduce_form(F, 1, 1) == identity_form(F));
  CHECK(reduce_form(F, 6, 1) == ReducedForm{1, 1, 6});  // (6,1,1) rotates down
  CHECK_THROWS_AS(reduce_form(F, 0, 1), std::domain_error);
}

TEST_CASE("composition worked examples") {
  FieldParams F = make_field(23);
  ReducedForm p{2, 1, 3};
  CHECK(class_of(F, prime_above(F, 2).first) == p);
  CHECK(compose(F, p, p) == ReducedForm{2, -1, 3});
  CHECK(compose(F, p, ReducedForm{2, -1, 3}) == identity_form(F));
  CHECK(inverse_form(F, p) == ReducedForm{2, -1, 3});
  CHECK(order_of(F, p) == 3);
  CHECK(pow_form(F, p, 3) == identity_form(F));
  CHECK(pow_form(F, p, 0) == identity_form(F));
}

TEST_CASE("group closure and inverses") {
  FieldParams F = make_field(47);
  ClassGroup G = enumerate_class_group(F);
  REQUIRE(G.h() == 5);
  for (const ReducedForm& f : G.forms) {
    for (const ReducedForm& g : G.forms) {
      ReducedForm fg = compose(F, f, g);
      CHECK_NOTHROW(G.index_of(fg));
      CHECK(fg == compose(F, g, f));
    }
    CHECK(compose(F, f, inverse_form(F, f)) == identity_form(F));
    if (!(f == identity_form(F))) CHECK(order_of(F, f) == 5);
  }
}

TEST_CASE("class_of is constant on principal ideals") {
  FieldParams F = make_field(31);
  for (long x = -4; x <= 4; ++x)
    for (long y = -4; y <= 4; ++y) {
      if (x == 0 && y == 0) continue;
      CHECK(class_of(F, principal_ideal(F, {x, y})) == identity_form(F));
    }
  // and ideal_of o class_of fixes reduced forms
  ClassGroup G = enumerate_class_group(F);
  for (const ReducedForm& f : G.forms) CHECK(class_of(F, ideal_of(F, f)) == f);
}

TEST_CASE("dirichlet_h agrees with enumeration below 300") {
  for (long q = 7; q < 300; q += 4) {
    mpz_class qm(q);
    if (!is_prime(qm)) continue;
    FieldParams F = make_field(qm);
    CHECK(enumerate_class_group(F).h() == dirichlet_h(qm));
  }
}

TEST_CASE("structure: invariant factors and discrete logs") {
  for (long q : {7L, 23L, 47L, 71L, 199L, 479L, 3299L}) {
    FieldParams F = make_field(q);
    ClassGroup G = enumerate_class_group(F);
    ClassGroupStructure S = build_structure(G);
    long prod = 1;
    for (size_t i = 0; i < S.orders.size(); ++i) {
      CHECK(order_of(F, S.gens[i]) == S.orders[i]);
      if (i + 1 < S.orders.size()) CHECK(S.orders[i] % S.orders[i + 1] == 0);
      prod *= S.orders[i];
    }
    CHECK(prod == G.h());
    CHECK(S.identity_index == G.index_of(identity_form(F)));
    CHECK(S.tuples[static_cast<size_t>(S.identity_index)] ==
          std::vector<long>(S.orders.size(), 0));
    // every class: the order predicted by its discrete log matches order_of
    for (long i = 0; i < G.h(); ++i) {
      const std::vector<long>& e = S.tuples[static_cast<size_t>(i)];
      REQUIRE(e.size() == S.orders.size());
      long pred = 1;
      for (size_t j = 0; j < e.size(); ++j)
        pred = std::lcm(pred, S.orders[j] / std::gcd(S.orders[j], e[j]));
      CHECK(order_of(F, G.forms[static_cast<size_t>(i)]) == pred);
    }
    // discrete logs are additive under composition (spot check)
    if (G.h() > 1) {
      const ReducedForm& f = G.forms[1];
      const ReducedForm& g = G.forms[static_cast<size_t>(G.h() - 1)];
      const auto& ef = S.tuple_of(G, f);
      const auto& eg = S.tuple_of(G, g);
      const auto& efg = S.tuple_of(G, compose(F, f, g));
      for (size_t j = 0; j < S.orders.size(); ++j)
        CHECK((ef[j] + eg[j]) % S.orders[j] == efg[j]);
    }
  }
}

TEST_CASE("characters: orthogonality and multiplicativity") {
  PrecisionContext ctx(50);
  FieldParams F = make_field(23);
  ClassGroup G = enumerate_class_group(F);
  ClassGroupStructure S = build_structure(G);
  auto chis = all_characters(S);
  REQUIRE(chis.size() == 3);
  CHECK(chis[0].label() == "0");
  Real tol = Real::pow10(-45, ctx.bits());
  for (const ClassCharacter& chi : chis) {
    auto tab = character_table(G, S, chi, ctx);
    // unit modulus, trivial on the identity
    for (const Complex& v : tab) CHECK(cmp_abs(v.norm() - Real::of(1, ctx.bits()), tol) < 0);
    CHECK(cmp_abs(tab[static_cast<size_t>(S.identity_index)].re - Real::of(1, ctx.bits()), tol) < 0);
    // multiplicative on classes
    for (const ReducedForm& f : G.forms)
      for (const ReducedForm& g : G.forms) {
        Complex lhs = tab[static_cast<size_t>(G.index_of(compose(F, f, g)))];
        Complex rhs = tab[static_cast<size_t>(G.index_of(f))] * tab[static_cast<size_t>(G.index_of(g))];
        CHECK(cmp_abs((lhs - rhs).abs(), tol) < 0);
      }
    // orthogonality: sum over classes is 0 unless chi is trivial
    Complex sum = ctx.complex(0, 0);
    for (const Complex& v : tab) sum += v;
    bool trivial = chi.label() == "0";
    Real expect = trivial ? Real::of(G.h(), ctx.bits()) : Real::of(0, ctx.bits());
    CHECK(cmp_abs(sum.re - expect, tol) < 0);
    CHECK(cmp_abs(sum.im, tol) < 0);
  }
  // h = 1: single trivial character
  FieldParams F7 = make_field(7);
  ClassGroup G7 = enumerate_class_group(F7);
  ClassGroupStructure S7 = build_structure(G7);
  CHECK(all_characters(S7).size() == 1);
  CHECK(all_characters(S7)[0].label() == "0");
}
