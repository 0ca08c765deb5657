#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <set>

#include "oracles.hpp"
#include "schemoid/constructors.hpp"
#include "schemoid/error.hpp"

using namespace schemoid;

namespace {

SchemoidPtr share(Schemoid s) { return std::make_shared<const Schemoid>(std::move(s)); }

bool valid(const Schemoid& s) { return validate_schemoid(s.cat(), s.blocks()).ok(); }

// Downward-closed families of non-empty subsets of {0..n-1}, by brute force.
std::size_t count_complexes(std::size_t n) {
  const std::size_t subsets = (std::size_t{1} << n) - 1;  // non-empty ones
  std::size_t count = 0;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    auto has = [&](Subset s) { return s != 0 && (fam >> (s - 1) & 1); };
    bool closed = true;
    for (Subset s = 1; s <= subsets && closed; ++s)
      if (has(s))
        for (Subset t = (s - 1) & s; t && closed; t = (t - 1) & s) closed = has(t);
    count += closed;
  }
  return count;
}

std::vector<FiniteSpace> all_topologies(std::size_t n) {
  const Subset full = (Subset{1} << n) - 1;
  std::vector<FiniteSpace> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << (full + 1)); ++fam) {
    if (!(fam & 1) || !(fam >> full & 1)) continue;
    bool ok = true;
    for (Subset a = 0; a <= full && ok; ++a)
      for (Subset b = 0; b <= full && ok; ++b)
        if ((fam >> a & 1) && (fam >> b & 1)) ok = (fam >> (a | b) & 1) && (fam >> (a & b) & 1);
    if (!ok) continue;
    FiniteSpace x{n, {}};
    for (Subset a = 0; a <= full; ++a)
      if (fam >> a & 1) x.opens.push_back(a);
    out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("Hamming intersection numbers") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto a = hamming(n);
    const auto r = validate_association_scheme(a);
    REQUIRE(r.ok);
    CHECK(a.num_classes() == n + 1);
    for (unsigned e = 0; e <= n; ++e)
      for (unsigned f = 0; f <= n; ++f)
        for (unsigned g = 0; g <= n; ++g)
          CHECK(r.intersection[e][f][g] == oracle::hamming_intersection(n, e, f, g));
    const Schemoid s = from_association_scheme(a);
    CHECK(valid(s));
    for (unsigned e = 0; e <= n; ++e)
      for (unsigned f = 0; f <= n; ++f)
        for (unsigned g = 0; g <= n; ++g) CHECK(s.constant(e, f, g) == r.intersection[e][f][g]);
  }
  // hamming(3): distance-1 pairs have two middle words at distances 1 and 2.
  CHECK(validate_association_scheme(hamming(3)).intersection[1][2][1] == 2);
  const auto h2 = from_association_scheme(hamming(2));
  CHECK(h2.block(0).size() == 4);
  CHECK(h2.block(1).size() == 8);
  CHECK(h2.block(2).size() == 4);
}

TEST_CASE("invalid association schemes") {
  AssociationScheme no_diag{2, {{0, 1}, {1, 1}}, {}};
  CHECK_FALSE(validate_association_scheme(no_diag).ok);
  // Classes on 3 points: diagonal, {(0,1),(1,0)}, the rest.
  AssociationScheme lopsided{3, {{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}, {}};
  const auto r = validate_association_scheme(lopsided);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.failures.empty());
}

TEST_CASE("group-case schemes") {
  const auto z2 = group_case(cyclic_group(2), {0});
  CHECK(z2.points == 2);
  CHECK(z2.num_classes() == 2);
  const GroupTable s3 = symmetric_group(3);
  const auto thin = group_case(s3, {0});
  CHECK(thin.points == 6);
  CHECK(thin.num_classes() == 6);
  std::uint32_t involution = 0;
  for (std::uint32_t g = 1; g < 6 && !involution; ++g)
    if (s3.mul[g][g] == 0) involution = g;
  const auto cosets = group_case(s3, {0, involution});
  CHECK(cosets.points == 3);
  CHECK(cosets.num_classes() == 2);
  CHECK(validate_association_scheme(cosets).ok);
  const auto z3 = from_association_scheme(group_case(cyclic_group(3), {0}));
  CHECK(z3.num_blocks() == 3);
  for (const auto& b : z3.blocks()) CHECK(b.size() == 3);
  CHECK_THROWS(group_case(s3, {0, 1, 2, 3}));
}

TEST_CASE("groupoid schemoids of all small groups") {
  CHECK(small_groups().size() == 14);
  for (const auto& [name, g] : small_groups()) {
    CAPTURE(name);
    const Schemoid s = from_groupoid(group_category(g));
    const std::size_t n = g.order();
    CHECK(valid(s));
    CHECK(s.cat().num_objects() == n);
    CHECK(s.cat().num_morphisms() == n * n);
    CHECK(s.num_blocks() == n);
    const auto r = tameness_report(s);
    CHECK(r.tame);
    for (const auto& c : s.constants()) CHECK(c.value <= 1);
  }
}

TEST_CASE("S~(Z/2) blocks and quotients of groupoid schemoids") {
  const Schemoid s = from_groupoid(group_category(cyclic_group(2)));
  CHECK(s.block(0) == std::vector<MorId>{0, 3});
  CHECK(s.block(1) == std::vector<MorId>{1, 2});
  for (const auto& g : {cyclic_group(2), cyclic_group(4), symmetric_group(3)}) {
    const FinCat gc = group_category(g);
    const Quotient q = quotient_category(from_groupoid(gc));
    CHECK(category_isomorphism(q.category, gc).has_value());
  }
  CHECK_THROWS_AS(from_groupoid(interval_category()), ValidationError);
  GroupTable not_group{{{0, 0}, {0, 1}}};
  CHECK_THROWS_AS(check_group(not_group), ValidationError);
}

TEST_CASE("discrete and truncated schemoids") {
  CHECK(discrete(terminal_category()).num_blocks() == 1);
  CHECK(discrete(interval_category()).num_blocks() == 3);
  const Schemoid d = discrete(from_association_scheme(hamming(2)).cat());
  CHECK(d.num_blocks() == 16);
  CHECK(valid(d));
  const Schemoid t2 = truncated_len(2);
  CHECK(t2.cat().num_morphisms() == 6);
  CHECK(t2.block(0).size() == 3);
  CHECK(t2.block(1).size() == 2);
  CHECK(t2.block(2).size() == 1);
  CHECK(truncated_len(0).cat().num_morphisms() == 1);
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(valid(truncated_len(n)));
    for (const auto& c : truncated_len(n).constants()) CHECK(c.value <= 1);
  }
}

TEST_CASE("powerset schemoids") {
  for (std::size_t g = 0; g <= 4; ++g) {
    const auto p = powerset_difference(full_powerset(g), g);
    CHECK(valid(p.schemoid));
    CHECK(p.objects.size() == (std::size_t{1} << g));
    for (const auto& c : p.schemoid.constants()) CHECK(c.value <= 1);
  }
  const auto one = powerset_difference(full_powerset(1), 1);
  CHECK(one.schemoid.cat().num_morphisms() == 3);
  CHECK(one.schemoid.num_blocks() == 2);
  // On 2^{1,2}: p^{sigma}_{mu tau} = 1 iff sigma is the disjoint union.
  const auto two = powerset_difference(full_powerset(2), 2);
  const auto& d = two.differences;
  for (BlockId m = 0; m < d.size(); ++m)
    for (BlockId t = 0; t < d.size(); ++t)
      for (BlockId s = 0; s < d.size(); ++s) {
        const bool disjoint_union = (d[m] & d[t]) == 0 && (d[m] | d[t]) == d[s];
        CHECK(two.schemoid.constant(m, t, s) == (disjoint_union ? 1u : 0u));
      }
  const auto gap = powerset_difference({0, 0b11}, 2);
  CHECK(gap.schemoid.num_blocks() == 2);
  CHECK(subset_name(0) == "{}");
  CHECK(subset_name(0b101) == "{1,3}");
}

TEST_CASE("all simplicial complexes on at most four vertices") {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto ks = all_complexes(n);
    CHECK(ks.size() == count_complexes(n));
    for (const auto& k : ks) {
      check_complex(k);
      const auto p = simplicial_schemoid(k);
      CHECK(valid(p.schemoid));
      CHECK(p.objects.size() == k.faces.size() + 1);
    }
  }
  CHECK_THROWS_AS(check_complex(SimplicialComplex{2, {0b11}}), ValidationError);
  const auto vertex = simplicial_schemoid(closure(1, {1}));
  CHECK(vertex.schemoid.cat().num_morphisms() == 3);
  CHECK(vertex.schemoid.num_blocks() == 2);
  CHECK(simplicial_schemoid(closure(2, {0b11})).objects.size() == 4);
}

TEST_CASE("open-set schemoids of every topology on at most three points") {
  const std::size_t expected[] = {1, 1, 4, 29};
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto tops = all_topologies(n);
    CHECK(tops.size() == expected[n]);
    for (const auto& x : tops) {
      check_topology(x);
      CHECK(valid(open_set_schemoid(x).schemoid));
    }
  }
  CHECK_THROWS(check_topology(FiniteSpace{2, {0, 1, 2}}));
}

TEST_CASE("height and indicator morphisms") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto p = simplicial_schemoid(closure(n, {(Subset{1} << n) - 1}));
    const auto h = height_morphism(p);
    CHECK(h.target->cat().num_objects() == n + 1);
    const auto ind = indicator_morphism(p);
    CHECK(ind.target->cat().num_objects() == (std::size_t{1} << n));
  }
}

TEST_CASE("simplicial maps") {
  const auto edge = closure(2, {0b11});
  const auto path = closure(3, {0b011, 0b110});
  const auto vertex = closure(1, {1});
  const auto two_points = SimplicialComplex{2, {1, 2}};
  CHECK(simplicial_map_morphism(edge, edge, {1, 0}).ok());
  CHECK(simplicial_map_morphism(edge, path, {1, 2}).ok());
  CHECK(simplicial_map_morphism(two_points, vertex, {0, 0}).ok());
  CHECK(non_degenerate(edge, {1, 0}));
  CHECK(non_degenerate(path, {0, 1, 0}));
  CHECK_FALSE(non_degenerate(path, {0, 0, 1}));
  // Folding the path is degenerate on no face, so it is accepted.
  CHECK(simplicial_map_morphism(path, edge, {0, 1, 0}).ok());
  // Collapsing one edge of the path but not the other.
  const auto fold = simplicial_map_morphism(path, edge, {0, 0, 1});
  CHECK_FALSE(fold.ok());
  CHECK_FALSE(fold.rejection.empty());
  // Not simplicial: the edge lands on two points with no edge between them.
  CHECK_FALSE(simplicial_map_morphism(edge, two_points, {0, 1}).ok());
  // A constant map from an edge fails the block condition.
  const auto constant = simplicial_map_morphism(edge, vertex, {0, 0});
  CHECK_FALSE(constant.ok());
}

TEST_CASE("continuous maps") {
  const FiniteSpace sierpinski{2, {0, 0b01, 0b11}};
  const FiniteSpace discrete2{2, {0, 1, 2, 3}};
  CHECK(continuous_map_morphism(sierpinski, sierpinski, {0, 1}).target->cat().num_objects() == 3);
  CHECK_NOTHROW(continuous_map_morphism(discrete2, sierpinski, {0, 1}));
  CHECK_THROWS_AS(continuous_map_morphism(sierpinski, discrete2, {0, 1}), ValidationError);
}

TEST_CASE("Hamming witnesses") {
  auto s2 = share(from_groupoid(group_category(cyclic_group(2))));
  for (std::size_t n = 1; n <= 4; ++n) {
    auto hn = share(from_association_scheme(hamming(n)));
    const auto u = hamming_u(s2, hn);
    const auto v = hamming_v(hn, s2);
    CHECK(compose_morphisms(v, u).functor == identity_morphism(s2).functor);
    // Odd distances go to the non-identity block.
    for (BlockId b = 0; b <= n; ++b) CHECK(v.block_map[b] == b % 2);
    const auto w = hamming_v(hn, s2, true);
    CHECK_FALSE(compose_morphisms(w, u).functor == identity_morphism(s2).functor);
  }
}
