#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "schemoid/algebra.hpp"
#include "schemoid/constructors.hpp"
#include "schemoid/error.hpp"

using namespace schemoid;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

Schemoid h22() { return from_association_scheme(hamming(2)); }
Schemoid sz(std::size_t n) { return from_groupoid(group_category(cyclic_group(n))); }

// k[x]/(x^n) on the basis 1, x, ..., x^{n-1}.
FDAlgebra truncated_poly(const Field& k, std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::vector<Term>> prod(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("x^" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) prod[i * n + j] = {Term{static_cast<std::uint32_t>(i + j), 1}};
  }
  return FDAlgebra(k, labels, prod);
}

// Complete-graph groupoid on n objects as a category.
FinCat complete_groupoid(std::size_t n) { return from_association_scheme(AssociationScheme{
    n, [&] {
      std::vector<std::vector<std::uint32_t>> r(n, std::vector<std::uint32_t>(n, 1));
      for (std::size_t i = 0; i < n; ++i) r[i][i] = 0;
      return r;
    }(), {}}).cat(); }

}  // namespace

TEST_CASE("category algebras") {
  CHECK(category_algebra(terminal_category(), Q).dim() == 1);
  const auto z2 = category_algebra(group_category(cyclic_group(2)), Q);
  CHECK(z2.dim() == 2);
  CHECK(z2.is_commutative());
  CHECK_FALSE(associativity_defect(z2).has_value());
  const auto k4 = category_algebra(complete_groupoid(4), Q);
  CHECK(k4.dim() == 16);
  CHECK(center(k4).dimension == 1);
  CHECK_FALSE(associativity_defect(category_algebra(interval_category(), F3)).has_value());
}

TEST_CASE("structure tensors without a unit are rejected") {
  // One basis element with e*e = 0.
  CHECK_THROWS_AS(FDAlgebra(Q, {"e"}, {{}}), ValidationError);
}

TEST_CASE("Bose-Mesner algebras") {
  for (const Field& k : {Q, F2, F3}) {
    CAPTURE(k.name());
    const Schemoid s = h22();
    const auto bm = bose_mesner(s, k);
    CHECK(bm.dim() == 3);
    CHECK_FALSE(associativity_defect(bm).has_value());
    CHECK(bm.is_commutative());
    // T1 T1 = 2 T0 + 2 T2 as the constants dictate.
    const Vec t1 = bm.basis_vector(1);
    const Vec sq = bm.multiply(t1, t1);
    CHECK(sq == Vec{k.from_int(2), 0, k.from_int(2)});
    CHECK_FALSE(bose_mesner_relation_defect(s).has_value());
  }
  CHECK_FALSE(bose_mesner_relation_defect(from_association_scheme(hamming(3))).has_value());
  CHECK_FALSE(bose_mesner_relation_defect(simplicial_schemoid(closure(3, {7})).schemoid).has_value());

  // Discrete schemoid: the Bose-Mesner algebra is the category algebra.
  const FinCat i = interval_category();
  const auto bm = bose_mesner(discrete(i), Q);
  const auto ca = category_algebra(i, Q);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) CHECK(bm.product(a, b) == ca.product(a, b));
}

TEST_CASE("quotient algebras") {
  const auto qz2 = quotient_linear_algebra(sz(2), Q);
  CHECK(qz2.dim() == 2);
  CHECK(algebra_iso_bruteforce(qz2, category_algebra(group_category(cyclic_group(2)), Q)).verdict !=
        IsoVerdict::NotIsomorphic);
  const auto qt = quotient_linear_algebra(truncated_len(2), F3);
  const auto r = algebra_iso_bruteforce(qt, truncated_poly(F3, 3));
  CHECK(r.verdict != IsoVerdict::NotIsomorphic);
  CHECK(quotient_category_algebra(sz(3), Q).dim() == 3);
  CHECK_THROWS_AS(quotient_category_algebra(simplicial_schemoid(SimplicialComplex{2, {1, 2}}).schemoid, Q),
                  PreconditionError);
}

TEST_CASE("centers against brute force over F2 and F3") {
  std::vector<FDAlgebra> algebras = {
      bose_mesner(h22(), F2),
      category_algebra(group_category(cyclic_group(2)), F2),
      category_algebra(group_category(symmetric_group(3)), F2),
      category_algebra(interval_category(), F3),
      truncated_poly(F3, 3),
      bose_mesner(simplicial_schemoid(closure(2, {3})).schemoid, F2),
  };
  for (const auto& a : algebras) {
    const std::uint32_t p = a.field().characteristic();
    CHECK(center(a).dimension == oracle::log_p(oracle::count_central(a), p));
  }
  CHECK(center(bose_mesner(h22(), Q)).dimension == 3);
  CHECK(center(category_algebra(group_category(cyclic_group(2)), Q)).dimension == 2);
}

TEST_CASE("Hochschild cohomology") {
  const auto hh = hochschild_cohomology(category_algebra(group_category(cyclic_group(2)), Q), 1);
  CHECK(hh[0] == 2);
  CHECK(hochschild_cohomology(bose_mesner(h22(), Q), 0)[0] == 3);
  // Dual numbers: every linear D with D(1) = 0 is a derivation in char 2.
  const auto dual2 = truncated_poly(F2, 2);
  const auto hh2 = hochschild_cohomology(dual2, 2);
  CHECK(hh2[1] == oracle::log_p(oracle::count_derivations(dual2), 2));
  CHECK(hh2[1] == 2);
  CHECK(hochschild_cohomology(truncated_poly(Q, 2), 1)[1] == 1);
  CHECK(hochschild_cohomology(truncated_poly(F3, 2), 1)[1] == 1);
  const auto f3z3 = category_algebra(group_category(cyclic_group(3)), F3);
  CHECK(hochschild_cohomology(f3z3, 1)[1] == oracle::log_p(oracle::count_derivations(f3z3), 3));
  CHECK_THROWS_AS(hochschild_cohomology(category_algebra(complete_groupoid(4), Q), 1), GuardExceeded);
}

TEST_CASE("Stanley-Reisner comparison") {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& k : all_complexes(n)) {
      const auto c = stanley_reisner_mod_squares(k, Q);
      CHECK(c.bm.dim() == k.faces.size() + 1);
      CHECK(c.alpha_is_iso);
    }
  const auto edge = stanley_reisner_mod_squares(closure(2, {3}), F3);
  CHECK(edge.sr.dim() == 4);
  const auto apart = stanley_reisner_mod_squares(SimplicialComplex{2, {1, 2}}, Q);
  CHECK(apart.sr.dim() == 3);
  CHECK(apart.alpha_is_iso);
}

TEST_CASE("pullbacks commute") {
  const auto vertex = closure(1, {1});
  const auto edge = closure(2, {3});
  const auto path = closure(3, {3, 6});
  const auto two_edges = closure(4, {3, 12});
  const auto triangle = closure(3, {7});
  struct Case {
    SimplicialComplex k, l;
    std::vector<std::uint32_t> phi;
  };
  const std::vector<Case> cases = {
      {edge, edge, {0, 1}},        {edge, edge, {1, 0}},      {vertex, edge, {0}},
      {two_edges, edge, {0, 1, 0, 1}}, {path, edge, {0, 1, 0}}, {edge, triangle, {2, 0}},
      {triangle, triangle, {1, 2, 0}},
  };
  for (const auto& c : cases) {
    for (const Field& k : {Q, F2}) {
      const auto r = sr_pullbacks(c.k, c.l, c.phi, k);
      CHECK(r.commutes);
      CHECK(r.phi_star_multiplicative);
      CHECK(r.pphi_star_multiplicative);
    }
  }
  // Inclusion of a vertex kills the other generator.
  const auto inc = sr_pullbacks(vertex, edge, {0}, Q);
  CHECK(inc.phi_star.matrix.cols() == 4);
  CHECK_THROWS_AS(sr_pullbacks(path, edge, {0, 0, 1}, Q), PreconditionError);
}

TEST_CASE("algebra isomorphism search") {
  const auto a = bose_mesner(h22(), F2);
  const auto self = algebra_iso_bruteforce(a, a);
  CHECK(self.verdict == IsoVerdict::Isomorphic);
  REQUIRE(self.witness);
  CHECK_FALSE(algebra_map_defect(a, a, *self.witness).has_value());

  // k[Z/2] is local over F2, k x k is not.
  const auto group = category_algebra(group_category(cyclic_group(2)), F2);
  const auto split = category_algebra(discrete(FinCat::from_data(CategoryData{2, {{0, 0}, {1, 1}}, {0, 1},
                                                                               {{0, 0, 0}, {1, 1, 1}}})).cat(),
                                      F2);
  CHECK(algebra_iso_bruteforce(group, split).verdict == IsoVerdict::NotIsomorphic);
  CHECK(algebra_invariants(group).idempotents != algebra_invariants(split).idempotents);

  const auto e = bose_mesner(simplicial_schemoid(closure(2, {3})).schemoid, F2);
  const auto v3 = bose_mesner(simplicial_schemoid(SimplicialComplex{3, {1, 2, 4}}).schemoid, F2);
  CHECK(e.dim() == v3.dim());
  CHECK(algebra_iso_bruteforce(e, v3).verdict == IsoVerdict::NotIsomorphic);
}

TEST_CASE("span dimension") {
  CHECK(span_dimension(Q, {{1, 2}, {2, 4}}, 2) == 1);
  CHECK(span_dimension(F2, {{1, 1}, {1, 0}, {0, 1}}, 2) == 2);
  CHECK(span_dimension(Q, {}, 3) == 0);
}
