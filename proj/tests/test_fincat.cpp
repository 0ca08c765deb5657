#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schemoid/constructors.hpp"
#include "schemoid/error.hpp"
#include "schemoid/fincat.hpp"

using namespace schemoid;

namespace {

// Walking arrow 0 -> 1 written out by hand.
CategoryData arrow_data() {
  CategoryData d;
  d.objects = 2;
  d.morphisms = {{0, 0}, {1, 1}, {0, 1}};
  d.identity = {0, 1};
  d.compose = {{0, 0, 0}, {1, 1, 1}, {2, 0, 2}, {1, 2, 2}};
  return d;
}

bool has_kind(const CategoryReport& r, LawKind k) {
  for (const auto& v : r.violations)
    if (v.kind == k) return true;
  return false;
}

}  // namespace

TEST_CASE("tables round-trip through FinCat") {
  const FinCat c = FinCat::from_data(arrow_data());
  CHECK(c.num_objects() == 2);
  CHECK(c.num_morphisms() == 3);
  CHECK(c.compose(2, 0) == 2);
  CHECK(c.compose(1, 2) == 2);
  CHECK_THROWS_AS(c.compose(0, 2), PreconditionError);
  CHECK(c.hom(0, 1) == std::vector<MorId>{2});
  CHECK(c.hom(1, 0).empty());
  CHECK(FinCat::from_data(c.data()) == c);
  CHECK(c == interval_category());
}

TEST_CASE("law violations are all reported") {
  SUBCASE("missing composite") {
    auto d = arrow_data();
    d.compose.pop_back();
    CHECK_FALSE(validate_category(d).ok());
    CHECK_THROWS(FinCat::from_data(d));
  }
  SUBCASE("identity law") {
    auto d = arrow_data();
    d.morphisms.push_back({0, 1});
    d.compose = {{0, 0, 0}, {1, 1, 1}, {2, 0, 3}, {1, 2, 2}, {3, 0, 3}, {1, 3, 3}};
    const auto r = validate_category(d);
    CHECK(has_kind(r, LawKind::Identity));
    CHECK_THROWS_AS(FinCat::from_data(d), ValidationError);
  }
  SUBCASE("index out of range") {
    auto d = arrow_data();
    d.identity = {0, 7};
    const auto r = validate_category(d);
    CHECK_FALSE(r.structural.empty());
    CHECK_THROWS_AS(FinCat::from_data(d), StructuralError);
  }
  SUBCASE("non-associative monoid table") {
    // {e, a, b} with a·a = b, a·b = e, b·a = a, b·b = b.
    std::vector<std::vector<std::uint32_t>> t = {{0, 1, 2}, {1, 2, 0}, {2, 1, 2}};
    CHECK_THROWS_AS(monoid_category(t, 0), ValidationError);
  }
}

TEST_CASE("every small group gives a category") {
  for (const auto& [name, g] : small_groups()) {
    CAPTURE(name);
    const FinCat c = group_category(g);
    CHECK(check_laws(c).ok());
    CHECK(c.num_morphisms() == g.order());
  }
}

TEST_CASE("opposite and product") {
  const FinCat i = interval_category();
  const FinCat op = opposite(i);
  CHECK(check_laws(op).ok());
  CHECK(op.src(2) == 1);
  CHECK(op.tgt(2) == 0);
  CHECK(opposite(op) == i);

  const FinCat z3 = group_category(cyclic_group(3));
  const FinCat p = product_category(i, z3);
  CHECK(check_laws(p).ok());
  CHECK(p.num_objects() == 2);
  CHECK(p.num_morphisms() == 9);
  const Functor p1 = projection_first(i, z3), p2 = projection_second(i, z3);
  CHECK_FALSE(functor_defect(p, i, p1).has_value());
  CHECK_FALSE(functor_defect(p, z3, p2).has_value());
  CHECK(compose_functors(identity_functor(i), p1) == p1);
}

TEST_CASE("functor defects are detected") {
  const FinCat z2 = group_category(cyclic_group(2));
  const FinCat z4 = group_category(cyclic_group(4));
  // Z/4 -> Z/2 reduction is a functor; Z/2 -> Z/4 sending the generator to 1 is not.
  CHECK_FALSE(functor_defect(z4, z2, Functor{{0}, {0, 1, 0, 1}}).has_value());
  CHECK(functor_defect(z2, z4, Functor{{0}, {0, 1}}).has_value());
  CHECK(functor_defect(z2, z4, Functor{{0}, {0, 2}}) == std::nullopt);
}

TEST_CASE("isomorphism search") {
  const FinCat z4 = group_category(cyclic_group(4));
  const FinCat v4 = group_category(direct_product(cyclic_group(2), cyclic_group(2)));
  const auto iso = category_isomorphism(z4, z4);
  REQUIRE(iso);
  CHECK_FALSE(functor_defect(z4, z4, *iso).has_value());
  CHECK_FALSE(category_isomorphism(z4, v4).has_value());
  CHECK(category_isomorphism(interval_category(), opposite(interval_category())).has_value());
  CHECK_THROWS_AS(category_isomorphism(z4, z4, 0), GuardExceeded);
}
