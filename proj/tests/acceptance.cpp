// Acceptance run: one PASS/FAIL line per criterion. Criteria whose stated
// values disagree with what the structures actually compute are listed in
// kKnownFailures; they are still computed and reported as FAIL, but do not
// change the exit status. Any other failure makes the run exit 1.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "schemoid/algebra.hpp"
#include "schemoid/constructors.hpp"
#include "schemoid/error.hpp"
#include "schemoid/repcat.hpp"

using namespace schemoid;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (pass) detail = what;
    else if (detail.size() < 400) detail += "; " + what;
    pass = false;
  }
};

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

SchemoidPtr share(Schemoid s) { return std::make_shared<const Schemoid>(std::move(s)); }
SchemoidPtr groupoid(const GroupTable& g) { return share(from_groupoid(group_category(g))); }

std::string vec_str(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string scalar_vec(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

SchemoidMorphism to_terminal(SchemoidPtr s) {
  Functor f;
  f.obj.assign(s->cat().num_objects(), 0);
  f.mor.assign(s->cat().num_morphisms(), 0);
  return validate_morphism(s, share(discrete(terminal_category())), f);
}

// ---------------------------------------------------------------------------

Verdict c1_constants() {
  Verdict v;
  const Schemoid s = from_association_scheme(hamming(2));
  struct Expected {
    BlockId sigma, tau, mu;
    std::uint64_t value;
  };
  const std::vector<Expected> table = {
      {1, 1, 0, 2}, {1, 2, 0, 0}, {2, 1, 0, 0}, {1, 1, 1, 0}, {1, 2, 1, 1}, {2, 1, 1, 1},
      {1, 1, 2, 1}, {1, 2, 2, 0}, {2, 1, 2, 0}, {0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1},
      {0, 2, 2, 1}, {2, 0, 2, 1},
  };
  for (const auto& e : table) {
    const auto got = s.constant(e.sigma, e.tau, e.mu);
    v.require(got == e.value, "p(T" + std::to_string(e.sigma) + ",T" + std::to_string(e.tau) + ";T" +
                                  std::to_string(e.mu) + ") = " + std::to_string(got) + ", expected " +
                                  std::to_string(e.value));
  }
  if (!v.pass)
    v.detail += " (00 and 11 are at distance 2 and share the two neighbours 01 and 10, so the count is 2)";
  return v;
}

Verdict c2_bm_relation() {
  Verdict v;
  const Schemoid s = from_association_scheme(hamming(2));
  v.require(!bose_mesner_relation_defect(s).has_value(), "Bose-Mesner algebra disagrees with block sums");
  for (const Field& k : {Q, F3}) {
    const auto bm = bose_mesner(s, k);
    const Vec sq = bm.multiply(bm.basis_vector(1), bm.basis_vector(1));
    const Vec expected = {k.from_int(2), 0, k.from_int(1)};
    v.require(sq == expected, "over " + k.name() + " T1*T1 = " + scalar_vec(sq) + " in basis (T0,T1,T2), expected " +
                                  scalar_vec(expected));
  }
  if (!v.pass) v.detail += " (the T2 coefficient is the constant p(T1,T1;T2) = 2)";
  return v;
}

Verdict c3_validation() {
  Verdict v;
  auto ok = [](const Schemoid& s) { return validate_schemoid(s.cat(), s.blocks()).ok(); };
  for (std::size_t n = 1; n <= 4; ++n)
    v.require(ok(from_association_scheme(hamming(n))), "H(" + std::to_string(n) + ",2) rejected");
  for (const auto& [name, g] : small_groups()) {
    v.require(ok(from_groupoid(group_category(g))), "S~(" + name + ") rejected");
    v.require(ok(discrete(group_category(g))), "discrete " + name + " rejected");
  }
  v.require(ok(discrete(interval_category())), "discrete interval rejected");
  v.require(ok(discrete(from_association_scheme(hamming(2)).cat())), "discrete H(2,2) category rejected");
  for (std::size_t g = 0; g <= 4; ++g)
    v.require(ok(powerset_difference(full_powerset(g), g).schemoid), "powerset of " + std::to_string(g) + " rejected");
  std::size_t complexes = 0;
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& k : all_complexes(n)) {
      ++complexes;
      v.require(ok(simplicial_schemoid(k).schemoid), "a complex on " + std::to_string(n) + " vertices rejected");
    }
  const Schemoid h = from_association_scheme(hamming(2));
  auto blocks = h.blocks();
  blocks[0].insert(blocks[0].end(), blocks[1].begin(), blocks[1].end());
  std::sort(blocks[0].begin(), blocks[0].end());
  blocks.erase(blocks.begin() + 1);
  const auto merged = validate_schemoid(h.cat(), blocks);
  v.require(!merged.ok(), "merged T0+T1 accepted");
  if (v.pass) v.detail = std::to_string(complexes) + " complexes; merged T0+T1 witness: " + merged.violation->describe();
  return v;
}

Verdict c4_tameness() {
  Verdict v;
  for (const auto& [name, g] : small_groups()) {
    const Schemoid s = from_groupoid(group_category(g));
    v.require(tameness_report(s).tame, "S~(" + name + ") not tame");
    for (const auto& c : s.constants()) v.require(c.value <= 1, "S~(" + name + ") has a constant above 1");
  }
  const auto p = simplicial_schemoid(SimplicialComplex{2, {1, 2}});
  const auto r = tameness_report(p.schemoid);
  v.require(!r.tame && !r.tiii_failures.empty(), "P(two points) reported tame");
  std::string witness;
  for (const auto& f : r.tiii_failures)
    if (f.sigma != f.tau) witness += (witness.empty() ? "" : "; ") + f.describe(p.schemoid);
  for (const auto& [name, g] : std::vector<std::pair<std::string, GroupTable>>{
           {"Z2", cyclic_group(2)}, {"Z4", cyclic_group(4)}, {"S3", symmetric_group(3)}}) {
    const FinCat gc = group_category(g);
    const Quotient q = quotient_category(from_groupoid(gc));
    const auto iso = category_isomorphism(q.category, gc);
    v.require(iso.has_value() && !functor_defect(q.category, gc, *iso), "[S~(" + name + ")] not isomorphic to " + name);
  }
  if (v.pass) v.detail = "P(two points): " + witness;
  return v;
}

Verdict c5_sr_rank() {
  Verdict v;
  std::size_t count = 0;
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& k : all_complexes(n)) {
      ++count;
      const auto c = stanley_reisner_mod_squares(k, Q);
      const auto bm = bose_mesner(simplicial_schemoid(k).schemoid, Q);
      v.require(bm.dim() == k.faces.size() + 1, "rank mismatch");
      v.require(c.alpha_is_iso, "alpha not an isomorphism: " + c.defect);
    }
  if (v.pass) v.detail = std::to_string(count) + " complexes";
  return v;
}

Verdict c6_pullbacks() {
  Verdict v;
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
      {edge, edge, {0, 1}},           {edge, edge, {1, 0}},      {vertex, edge, {0}},
      {two_edges, edge, {0, 1, 0, 1}}, {path, edge, {0, 1, 0}},  {edge, triangle, {2, 0}},
      {triangle, triangle, {1, 2, 0}}, {path, triangle, {0, 1, 2}},
  };
  for (std::size_t i = 0; i < cases.size(); ++i)
    for (const Field& k : {Q, F2}) {
      const auto r = sr_pullbacks(cases[i].k, cases[i].l, cases[i].phi, k);
      v.require(r.commutes && r.phi_star_multiplicative && r.pphi_star_multiplicative,
                "map " + std::to_string(i) + " over " + k.name());
    }
  if (v.pass) v.detail = std::to_string(cases.size()) + " maps over Q and F2";
  return v;
}

Verdict c7_centers() {
  Verdict v;
  const auto h = center(bose_mesner(from_association_scheme(hamming(2)), Q)).dimension;
  const auto z2 = center(category_algebra(group_category(cyclic_group(2)), Q)).dimension;
  std::vector<std::vector<std::uint32_t>> rel(4, std::vector<std::uint32_t>(4, 1));
  for (int i = 0; i < 4; ++i) rel[i][i] = 0;
  const auto k4alg = category_algebra(from_association_scheme(AssociationScheme{4, rel, {}}).cat(), Q);
  const auto k4 = center(k4alg).dimension;
  v.require(h == 3, "H(2,2): " + std::to_string(h));
  v.require(z2 == 2, "Z/2: " + std::to_string(z2));
  v.require(k4alg.dim() == 16 && k4 == 1, "K4: " + std::to_string(k4));
  v.detail = "centers " + std::to_string(h) + ", " + std::to_string(z2) + ", " + std::to_string(k4);
  return v;
}

Verdict c8_cohomology() {
  Verdict v;
  auto s = groupoid(cyclic_group(2));
  const auto f2 = schemoid_cohomology(identity_morphism(s), FunctorRep::constant(s, F2), 5);
  const auto q = schemoid_cohomology(identity_morphism(s), FunctorRep::constant(s, Q), 3);
  v.require(f2 == std::vector<std::size_t>(6, 1), "F2: " + vec_str(f2));
  v.require(q == std::vector<std::size_t>{1, 0, 0, 0}, "Q: " + vec_str(q));
  v.detail = "F2 " + vec_str(f2) + ", Q " + vec_str(q);
  return v;
}

Verdict c9_morita() {
  Verdict v;
  auto s2 = groupoid(cyclic_group(2));
  std::string info;
  for (std::size_t n : {2u, 3u}) {
    auto hn = share(from_association_scheme(hamming(n)));
    const auto u = hamming_u(s2, hn);
    const auto good = morita_witness_check(u, hamming_v(hn, s2), F2, 2);
    v.require(good.ok(), "n=" + std::to_string(n) + ": " + good.witness);
    const auto bad = morita_witness_check(u, hamming_v(hn, s2, true), F2, 2);
    v.require(!bad.ok() && !bad.witness.empty(), "n=" + std::to_string(n) + " perturbed data passed");
    info += "n=" + std::to_string(n) + " reps " + std::to_string(good.reps_c) + "+" + std::to_string(good.reps_d) +
            ", perturbed: " + bad.witness + "; ";
  }
  if (v.pass) v.detail = info;
  return v;
}

Verdict c10_adjunction() {
  Verdict v;
  auto s2 = groupoid(cyclic_group(2));
  auto h2 = share(from_association_scheme(hamming(2)));
  auto pts = share(discrete(FinCat::from_data(CategoryData{2, {{0, 0}, {1, 1}}, {0, 1}, {{0, 0, 0}, {1, 1, 1}}})));
  auto z2 = share(discrete(group_category(cyclic_group(2))));
  const std::vector<std::pair<std::string, SchemoidMorphism>> maps = {
      {"discrete-2 -> point", to_terminal(pts)},
      {"Z/2 -> point", to_terminal(z2)},
      {"S~(Z/2) -> point", to_terminal(s2)},
      {"v", hamming_v(h2, s2)},
      {"id S~(Z/2)", identity_morphism(s2)},
      {"id Z/2", identity_morphism(z2)},
      {"id discrete-2", identity_morphism(pts)},
  };
  std::size_t triples = 0;
  for (const Field& k : {F2, F3})
    for (const auto& [name, u] : maps) {
      const auto ms = enumerate_functor_reps(u.source, k, 2);
      const auto fs = enumerate_functor_reps(u.target, k, 2);
      for (const auto& m : ms)
        for (const auto& f : fs) {
          ++triples;
          const auto d = adjunction_check(u, m, f);
          v.require(d.ok(), name + " over " + k.name() + ": " + std::to_string(d.restrict_to_m) + "/" +
                                std::to_string(d.f_to_ran) + ", " + std::to_string(d.lan_to_f) + "/" +
                                std::to_string(d.m_to_restrict));
        }
    }
  if (v.pass) v.detail = std::to_string(triples) + " (M, F) pairs";
  return v;
}

Verdict c11_sierpinski() {
  Verdict v;
  const auto p = open_set_schemoid(FiniteSpace{2, {0, 0b01, 0b11}});
  auto s = share(p.schemoid);
  ObjId empty = 0;
  for (ObjId x = 0; x < p.objects.size(); ++x)
    if (p.objects[x] == 0) empty = x;
  std::size_t total = 0, vanishing = 0;
  for (const Field& k : {F2, F3})
    for (const auto& r : enumerate_functor_reps(s, k, 2)) {
      ++total;
      if (r.dims[empty] != 0) continue;
      ++vanishing;
      v.require(r.total_dim() == 0, "a rep vanishing at the empty set is non-zero elsewhere");
    }
  if (v.pass) v.detail = std::to_string(total) + " reps, " + std::to_string(vanishing) + " vanish at the empty set";
  return v;
}

std::string run_capture(const std::string& cmd, int& code) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    code = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  code = pclose(pipe);
  return out;
}

Verdict c12_determinism() {
  Verdict v;
  const std::string bin = SCHEMOID_CLI_PATH;
  const std::string d = std::string(SCHEMOID_DATA_DIR) + "/";
  const std::vector<std::string> commands = {
      "construct hamming 2",
      "--json validate " + d + "h22.json",
      "--json constants " + d + "h22.json",
      "--json algebra bose-mesner " + d + "h22.json",
      "--json algebra bose-mesner --field F3 " + d + "h22.json",
      "--json tame " + d + "p_two_points.json",
      "--json tame " + d + "sZ2.json",
      "quotient " + d + "sZ2.json",
      "--json algebra sr-compare " + d + "edge.json",
      "--json algebra center " + d + "h22.json",
      "--json rep cohomology --id --schemoid " + d + "sZ2.json --field F2 --max 5",
      "--json rep cohomology --id --schemoid " + d + "sZ2.json --max 3",
      "--json rep morita-check --hamming 2 --field F2 --bound 2",
      "--json rep morita-check --hamming 3 --field F2 --bound 2",
      "--json rep morita-check --hamming 2 --field F2 --bound 2 --perturb",
      "--json rep enumerate --schemoid " + d + "open_sierpinski.json --field F2 --bound 2",
  };
  for (const auto& c : commands) {
    int c1 = 0, c2 = 0;
    const std::string a = run_capture("'" + bin + "' " + c + " 2>&1", c1);
    const std::string b = run_capture("'" + bin + "' " + c + " 2>&1", c2);
    v.require(!a.empty() && a == b && c1 == c2, "differs: " + c);
  }
  if (v.pass) v.detail = std::to_string(commands.size()) + " commands run twice";
  return v;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Verdict()> check;
};

// Criteria whose stated values contradict a direct count; see the detail line.
const std::set<int> kKnownFailures = {1, 2};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "H(2,2) structure constants", c1_constants},
      {2, "Bose-Mesner relation T1^2 = 2T0 + T2", c2_bm_relation},
      {3, "schemoid validation battery", c3_validation},
      {4, "tameness and quotients of groupoids", c4_tameness},
      {5, "Bose-Mesner rank and Stanley-Reisner isomorphism", c5_sr_rank},
      {6, "pullback squares commute", c6_pullbacks},
      {7, "center dimensions", c7_centers},
      {8, "cohomology of Z/2", c8_cohomology},
      {9, "Morita witnesses for Hamming schemes", c9_morita},
      {10, "Kan adjunction dimensions", c10_adjunction},
      {11, "open-set degeneracy on the Sierpinski space", c11_sierpinski},
      {12, "CLI determinism", c12_determinism},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool known = kKnownFailures.count(c.id) > 0;
    if (!v.pass && !known) ++unexpected;
    if (secs > 60) ++unexpected;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (v.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title << " (" << secs << " s)";
    if (!v.pass && known) line << " [known]";
    if (!v.detail.empty()) line << ": " << v.detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << (unexpected ? "unexpected failures: " + std::to_string(unexpected) : std::string("no unexpected failures"))
            << std::endl;
  return unexpected ? 1 : 0;
}
