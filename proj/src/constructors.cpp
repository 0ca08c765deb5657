#include "schemoid/constructors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "schemoid/error.hpp"

namespace schemoid {

// ---------------------------------------------------------------------------
// Groups

std::uint32_t check_group(const GroupTable& g) {
  const std::size_t n = g.order();
  if (n == 0) throw ValidationError("group table is empty");
  for (const auto& row : g.mul) {
    if (row.size() != n) throw ValidationError("group table is not square");
    for (auto v : row)
      if (v >= n) throw ValidationError("group table entry out of range");
  }
  std::optional<std::uint32_t> unit;
  for (std::uint32_t e = 0; e < n && !unit; ++e) {
    bool ok = true;
    for (std::uint32_t a = 0; a < n && ok; ++a) ok = g.mul[e][a] == a && g.mul[a][e] == a;
    if (ok) unit = e;
  }
  if (!unit) throw ValidationError("group table has no unit");
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]])
          throw ValidationError("group table is not associative at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");
  for (std::uint32_t a = 0; a < n; ++a) {
    bool inv = false;
    for (std::uint32_t b = 0; b < n && !inv; ++b) inv = g.mul[a][b] == *unit;
    if (!inv) throw ValidationError("element " + std::to_string(a) + " has no inverse");
  }
  return *unit;
}

GroupTable cyclic_group(std::size_t n) {
  GroupTable g;
  g.mul.assign(n, std::vector<std::uint32_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.mul[a][b] = static_cast<std::uint32_t>((a + b) % n);
  return g;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t na = a.order(), nb = b.order();
  GroupTable g;
  g.mul.assign(na * nb, std::vector<std::uint32_t>(na * nb));
  for (std::size_t x = 0; x < na * nb; ++x)
    for (std::size_t y = 0; y < na * nb; ++y)
      g.mul[x][y] = static_cast<std::uint32_t>(a.mul[x / nb][y / nb] * nb + b.mul[x % nb][y % nb]);
  return g;
}

GroupTable dihedral_group(std::size_t n) {
  GroupTable g;
  g.mul.assign(2 * n, std::vector<std::uint32_t>(2 * n));
  auto r = [&](std::size_t i) { return static_cast<std::uint32_t>(i % n); };
  auto s = [&](std::size_t i) { return static_cast<std::uint32_t>(n + i % n); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g.mul[i][j] = r(i + j);
      g.mul[i][n + j] = s(j + n - i);
      g.mul[n + i][j] = s(i + j);
      g.mul[n + i][n + j] = r(j + n - i);
    }
  return g;
}

GroupTable symmetric_group(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  GroupTable g;
  g.mul.assign(perms.size(), std::vector<std::uint32_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<std::uint32_t> c(n);
      for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      g.mul[a][b] = index.at(c);
    }
  return g;
}

GroupTable quaternion_group() {
  // Element 2u + s is (-1)^s times the unit u in {1, i, j, k}.
  static const int unit_mul[4][4][2] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  GroupTable g;
  g.mul.assign(8, std::vector<std::uint32_t>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const auto& e = unit_mul[a / 2][b / 2];
      g.mul[a][b] = static_cast<std::uint32_t>(2 * e[0] + ((a % 2 + b % 2 + e[1]) % 2));
    }
  return g;
}

std::vector<std::pair<std::string, GroupTable>> small_groups() {
  const GroupTable z2 = cyclic_group(2);
  return {
      {"1", cyclic_group(1)},
      {"Z2", z2},
      {"Z3", cyclic_group(3)},
      {"Z4", cyclic_group(4)},
      {"Z2xZ2", direct_product(z2, z2)},
      {"Z5", cyclic_group(5)},
      {"Z6", cyclic_group(6)},
      {"S3", symmetric_group(3)},
      {"Z7", cyclic_group(7)},
      {"Z8", cyclic_group(8)},
      {"Z4xZ2", direct_product(cyclic_group(4), z2)},
      {"Z2xZ2xZ2", direct_product(direct_product(z2, z2), z2)},
      {"D4", dihedral_group(4)},
      {"Q8", quaternion_group()},
  };
}

FinCat group_category(const GroupTable& g) { return monoid_category(g.mul, check_group(g)); }

// ---------------------------------------------------------------------------
// Association schemes

std::size_t AssociationScheme::num_classes() const {
  std::uint32_t mx = 0;
  bool any = false;
  for (const auto& row : relation)
    for (auto v : row) {
      mx = std::max(mx, v);
      any = true;
    }
  return any ? mx + 1 : 0;
}

SchemeReport validate_association_scheme(const AssociationScheme& a) {
  SchemeReport rep;
  auto fail = [&](std::string m) {
    rep.ok = false;
    rep.failures.push_back(std::move(m));
  };
  const std::size_t n = a.points;
  if (a.relation.size() != n) {
    fail("relation matrix has " + std::to_string(a.relation.size()) + " rows for " +
         std::to_string(n) + " points");
    return rep;
  }
  for (const auto& row : a.relation)
    if (row.size() != n) {
      fail("relation matrix is not square");
      return rep;
    }
  if (n == 0) return rep;
  const std::size_t r = a.num_classes();
  std::vector<std::uint64_t> size(r, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) ++size[a.relation[x][y]];
  for (std::size_t e = 0; e < r; ++e)
    if (size[e] == 0) fail("class " + std::to_string(e) + " is empty");
  if (!rep.ok) return rep;

  const std::uint32_t d = a.relation[0][0];
  for (std::size_t x = 0; x < n; ++x)
    if (a.relation[x][x] != d)
      fail("diagonal is not one class: (" + std::to_string(x) + "," + std::to_string(x) +
           ") is in class " + std::to_string(a.relation[x][x]));
  if (size[d] != n)
    fail("class " + std::to_string(d) + " contains the diagonal and an off-diagonal pair");

  std::vector<std::int64_t> transpose(r, -1);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto e = a.relation[x][y], t = a.relation[y][x];
      if (transpose[e] == -1)
        transpose[e] = t;
      else if (transpose[e] != t)
        fail("transpose of class " + std::to_string(e) + " is not a class: witness (" +
             std::to_string(x) + "," + std::to_string(y) + ")");
    }
  if (!rep.ok) return rep;

  // p^g_{ef}(x, z) = #{y : (x,y) in e, (y,z) in f}; must depend only on g.
  std::vector<std::vector<std::vector<std::int64_t>>> p(
      r, std::vector<std::vector<std::int64_t>>(r, std::vector<std::int64_t>(r, -1)));
  std::vector<std::uint64_t> cnt(r * r);
  for (std::size_t x = 0; x < n && rep.ok; ++x)
    for (std::size_t z = 0; z < n && rep.ok; ++z) {
      std::fill(cnt.begin(), cnt.end(), 0);
      for (std::size_t y = 0; y < n; ++y) ++cnt[a.relation[x][y] * r + a.relation[y][z]];
      const auto g = a.relation[x][z];
      for (std::size_t e = 0; e < r && rep.ok; ++e)
        for (std::size_t f = 0; f < r; ++f) {
          auto& slot = p[e][f][g];
          const auto c = static_cast<std::int64_t>(cnt[e * r + f]);
          if (slot == -1) {
            slot = c;
          } else if (slot != c) {
            fail("intersection number p^" + std::to_string(g) + "_{" + std::to_string(e) + "," +
                 std::to_string(f) + "} is not constant: pair (" + std::to_string(x) + "," +
                 std::to_string(z) + ") gives " + std::to_string(c) + ", an earlier pair gave " +
                 std::to_string(slot));
            break;
          }
        }
    }
  if (!rep.ok) return rep;
  rep.intersection.assign(r, std::vector<std::vector<std::uint64_t>>(r, std::vector<std::uint64_t>(r, 0)));
  for (std::size_t e = 0; e < r; ++e)
    for (std::size_t f = 0; f < r; ++f)
      for (std::size_t g = 0; g < r; ++g) rep.intersection[e][f][g] = static_cast<std::uint64_t>(p[e][f][g]);
  return rep;
}

AssociationScheme hamming(std::size_t n) {
  if (n < 1 || n > 10) throw GuardExceeded("hamming(n) needs 1 <= n <= 10, got " + std::to_string(n));
  AssociationScheme a;
  a.points = std::size_t{1} << n;
  a.relation.assign(a.points, std::vector<std::uint32_t>(a.points));
  for (std::size_t x = 0; x < a.points; ++x)
    for (std::size_t y = 0; y < a.points; ++y)
      a.relation[x][y] = static_cast<std::uint32_t>(std::popcount(x ^ y));
  for (std::size_t i = 0; i <= n; ++i) a.labels.push_back("T" + std::to_string(i));
  return a;
}

AssociationScheme group_case(const GroupTable& g, const std::vector<std::uint32_t>& subgroup) {
  const std::uint32_t e = check_group(g);
  std::set<std::uint32_t> h(subgroup.begin(), subgroup.end());
  for (auto x : h)
    if (x >= g.order()) throw ValidationError("subgroup element out of range");
  if (!h.count(e)) throw ValidationError("subgroup does not contain the unit");
  for (auto x : h)
    for (auto y : h)
      if (!h.count(g.mul[x][y]))
        throw ValidationError("subset is not closed: " + std::to_string(x) + "*" +
                              std::to_string(y) + " = " + std::to_string(g.mul[x][y]));
  std::map<std::set<std::uint32_t>, std::uint32_t> coset_id;
  std::vector<std::uint32_t> coset_of(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    std::set<std::uint32_t> c;
    for (auto y : h) c.insert(g.mul[x][y]);
    auto [it, fresh] = coset_id.emplace(c, static_cast<std::uint32_t>(coset_id.size()));
    coset_of[x] = it->second;
  }
  const std::size_t n = coset_id.size();
  // Representative element of each coset, to act on cosets by left multiplication.
  std::vector<std::uint32_t> rep(n);
  for (std::uint32_t x = g.order(); x-- > 0;) rep[coset_of[x]] = x;
  AssociationScheme a;
  a.points = n;
  const std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
  a.relation.assign(n, std::vector<std::uint32_t>(n, unset));
  std::uint32_t next = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (a.relation[x][y] != unset) continue;
      for (std::uint32_t s = 0; s < g.order(); ++s)
        a.relation[coset_of[g.mul[s][rep[x]]]][coset_of[g.mul[s][rep[y]]]] = next;
      a.labels.push_back("R" + std::to_string(next));
      ++next;
    }
  return a;
}

// ---------------------------------------------------------------------------
// Schemoids

Schemoid discrete(const FinCat& c) {
  std::vector<std::vector<MorId>> blocks(c.num_morphisms());
  for (MorId m = 0; m < c.num_morphisms(); ++m) blocks[m] = {m};
  return Schemoid::make(c, std::move(blocks));
}

Schemoid from_association_scheme(const AssociationScheme& a) {
  SchemeReport rep = validate_association_scheme(a);
  if (!rep.ok) throw ValidationError("not an association scheme: " + rep.failures.front());
  const std::size_t n = a.points;
  std::vector<Arrow> arrows(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      arrows[x * n + y] = {static_cast<ObjId>(y), static_cast<ObjId>(x)};
  std::vector<MorId> ids(n);
  for (std::size_t x = 0; x < n; ++x) ids[x] = static_cast<MorId>(x * n + x);
  FinCat cat = FinCat::from_rule(
      n, std::move(arrows), std::move(ids),
      [n](MorId g, MorId f) { return static_cast<MorId>((g / n) * n + f % n); }, false);
  std::vector<std::vector<MorId>> blocks(a.num_classes());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) blocks[a.relation[x][y]].push_back(static_cast<MorId>(x * n + y));
  Schemoid s = Schemoid::make(std::move(cat), std::move(blocks));
  if (a.labels.size() == s.num_blocks()) s.set_block_labels(a.labels);
  return s;
}

Schemoid from_groupoid(const FinCat& h) {
  const std::size_t m = h.num_morphisms();
  std::vector<MorId> inverse(m);
  for (MorId f = 0; f < m; ++f) {
    bool found = false;
    for (MorId g : h.hom(h.tgt(f), h.src(f)))
      if (h.compose_unchecked(g, f) == h.identity(h.src(f)) &&
          h.compose_unchecked(f, g) == h.identity(h.tgt(f))) {
        inverse[f] = g;
        found = true;
        break;
      }
    if (!found)
      throw ValidationError("morphism " + std::to_string(f) + " is not invertible");
  }
  // Morphism index of the pair (k, l): l → k.
  std::vector<MorId> pair_index(m * m, std::numeric_limits<MorId>::max());
  std::vector<Arrow> arrows;
  std::vector<std::pair<MorId, MorId>> pairs;
  for (MorId k = 0; k < m; ++k)
    for (MorId l = 0; l < m; ++l)
      if (h.tgt(k) == h.tgt(l)) {
        pair_index[k * m + l] = static_cast<MorId>(arrows.size());
        arrows.push_back({l, k});
        pairs.push_back({k, l});
      }
  std::vector<MorId> ids(m);
  for (MorId k = 0; k < m; ++k) ids[k] = pair_index[k * m + k];
  FinCat cat = FinCat::from_rule(
      m, std::move(arrows), std::move(ids),
      [&](MorId g, MorId f) { return pair_index[pairs[g].first * m + pairs[f].second]; }, false);
  std::vector<std::vector<MorId>> blocks(m);
  for (MorId i = 0; i < pairs.size(); ++i) {
    const auto [k, l] = pairs[i];
    blocks[h.compose_unchecked(inverse[k], l)].push_back(i);
  }
  std::vector<std::string> labels;
  for (MorId f = 0; f < m; ++f) labels.push_back("G" + std::to_string(f));
  Schemoid s = Schemoid::make(std::move(cat), std::move(blocks));
  s.set_block_labels(std::move(labels));
  return s;
}

namespace {

// Index of the arrow i → j in truncated_len(n).
MorId len_arrow(std::size_t n, std::size_t i, std::size_t j) {
  const std::size_t len = j - i;
  // Arrows of length l number n + 1 - l.
  const std::size_t offset = len * (n + 1) - len * (len - 1) / 2;
  return static_cast<MorId>(offset + i);
}

}  // namespace

Schemoid truncated_len(std::size_t n) {
  std::vector<Arrow> arrows;
  std::vector<std::vector<MorId>> blocks(n + 1);
  std::vector<std::string> labels;
  for (std::size_t len = 0; len <= n; ++len) {
    labels.push_back("L" + std::to_string(len));
    for (std::size_t i = 0; i + len <= n; ++i) {
      blocks[len].push_back(static_cast<MorId>(arrows.size()));
      arrows.push_back({static_cast<ObjId>(i), static_cast<ObjId>(i + len)});
    }
  }
  std::vector<MorId> ids(n + 1);
  for (std::size_t i = 0; i <= n; ++i) ids[i] = static_cast<MorId>(i);
  const auto copy = arrows;
  FinCat cat = FinCat::from_rule(
      n + 1, std::move(arrows), std::move(ids),
      [&](MorId g, MorId f) { return len_arrow(n, copy[f].src, copy[g].tgt); }, false);
  Schemoid s = Schemoid::make(std::move(cat), std::move(blocks));
  s.set_block_labels(std::move(labels));
  return s;
}

std::string subset_name(Subset s) {
  std::string r = "{";
  bool first = true;
  for (unsigned i = 0; i < 64; ++i)
    if (s >> i & 1) {
      r += (first ? "" : ",") + std::to_string(i + 1);
      first = false;
    }
  return r + "}";
}

namespace {

bool subset_less(Subset a, Subset b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  // Lexicographic on increasing element lists: the first differing element
  // decides; the set holding the smaller one comes first.
  const Subset diff = a ^ b;
  if (!diff) return false;
  const Subset low = diff & (~diff + 1);
  return (a & low) != 0;
}

}  // namespace

PowersetSchemoid powerset_difference(std::vector<Subset> family, std::size_t ground) {
  if (ground > 63) throw GuardExceeded("powerset_difference supports at most 63 points");
  for (Subset u : family)
    if (ground < 64 && (u >> ground) != 0)
      throw StructuralError("subset " + subset_name(u) + " is not inside the ground set");
  std::sort(family.begin(), family.end(), subset_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  const std::size_t n = family.size();
  std::vector<Arrow> arrows;
  std::vector<MorId> pair_index(n * n, std::numeric_limits<MorId>::max());
  std::vector<Subset> diff_of;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if ((family[u] & ~family[v]) == 0) {
        pair_index[u * n + v] = static_cast<MorId>(arrows.size());
        arrows.push_back({static_cast<ObjId>(u), static_cast<ObjId>(v)});
        diff_of.push_back(family[v] & ~family[u]);
      }
  std::vector<MorId> ids(n);
  for (std::size_t u = 0; u < n; ++u) ids[u] = pair_index[u * n + u];
  const auto copy = arrows;
  FinCat cat = FinCat::from_rule(
      n, std::move(arrows), std::move(ids),
      [&](MorId g, MorId f) { return pair_index[copy[f].src * n + copy[g].tgt]; }, false);

  std::vector<Subset> diffs = diff_of;
  std::sort(diffs.begin(), diffs.end(), subset_less);
  diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
  std::map<Subset, BlockId> block_id;
  for (BlockId b = 0; b < diffs.size(); ++b) block_id[diffs[b]] = b;
  std::vector<std::vector<MorId>> blocks(diffs.size());
  for (MorId m = 0; m < diff_of.size(); ++m) blocks[block_id.at(diff_of[m])].push_back(m);

  SchemoidValidation v = validate_schemoid(std::move(cat), std::move(blocks));
  if (!v.ok()) {
    const AxiomWitness& w = *v.violation;
    throw ValidationError("family does not give a schemoid: blocks (" + subset_name(diffs[w.sigma]) +
                          "~, " + subset_name(diffs[w.tau]) + "~, " + subset_name(diffs[w.mu]) +
                          "~): " + w.describe());
  }
  Schemoid s = *v.schemoid;
  std::vector<std::string> obj_labels, block_labels;
  for (Subset u : family) obj_labels.push_back(subset_name(u));
  for (Subset d : diffs) block_labels.push_back(subset_name(d) + "~");
  s.set_object_labels(std::move(obj_labels)).set_block_labels(std::move(block_labels));
  return {std::move(s), std::move(family), std::move(diffs), ground};
}

std::vector<Subset> full_powerset(std::size_t ground) {
  if (ground > 20) throw GuardExceeded("full_powerset limited to 20 points");
  std::vector<Subset> r;
  for (Subset s = 0; s < (Subset{1} << ground); ++s) r.push_back(s);
  return r;
}

void check_complex(const SimplicialComplex& k) {
  if (k.vertices > 63) throw GuardExceeded("simplicial complexes are limited to 63 vertices");
  std::set<Subset> faces(k.faces.begin(), k.faces.end());
  for (Subset f : faces) {
    if (f == 0) throw ValidationError("the empty set is implicit and must not be listed as a face");
    if ((f >> k.vertices) != 0)
      throw ValidationError("face " + subset_name(f) + " uses a vertex beyond " +
                            std::to_string(k.vertices));
    for (Subset rest = f; rest; rest &= rest - 1) {
      const Subset sub = f & ~(rest & (~rest + 1));
      if (sub && !faces.count(sub))
        throw ValidationError("not downward closed: face " + subset_name(f) + " lacks its face " +
                              subset_name(sub));
    }
  }
}

SimplicialComplex closure(std::size_t vertices, const std::vector<Subset>& generators) {
  std::set<Subset> faces;
  for (Subset g : generators)
    for (Subset s = g; s; s = (s - 1) & g) faces.insert(s);
  SimplicialComplex k{vertices, {faces.begin(), faces.end()}};
  std::sort(k.faces.begin(), k.faces.end(), subset_less);
  return k;
}

std::vector<SimplicialComplex> all_complexes(std::size_t n) {
  if (n > 4) throw GuardExceeded("all_complexes enumerates at most 4 vertices");
  std::vector<Subset> nonempty;
  for (Subset s = 1; s < (Subset{1} << n); ++s) nonempty.push_back(s);
  std::sort(nonempty.begin(), nonempty.end(), subset_less);
  std::vector<SimplicialComplex> out;
  const std::uint64_t total = std::uint64_t{1} << nonempty.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::set<Subset> fam;
    for (std::size_t i = 0; i < nonempty.size(); ++i)
      if (mask >> i & 1) fam.insert(nonempty[i]);
    bool closed = true;
    for (Subset f : fam) {
      for (Subset rest = f; rest && closed; rest &= rest - 1) {
        const Subset sub = f & ~(rest & (~rest + 1));
        if (sub && !fam.count(sub)) closed = false;
      }
      if (!closed) break;
    }
    if (!closed) continue;
    SimplicialComplex k{n, {fam.begin(), fam.end()}};
    std::sort(k.faces.begin(), k.faces.end(), subset_less);
    out.push_back(std::move(k));
  }
  return out;
}

PowersetSchemoid simplicial_schemoid(const SimplicialComplex& k) {
  check_complex(k);
  std::vector<Subset> family = k.faces;
  family.push_back(0);
  return powerset_difference(std::move(family), k.vertices);
}

void check_topology(const FiniteSpace& x) {
  if (x.points > 63) throw GuardExceeded("finite spaces are limited to 63 points");
  const Subset all = x.points == 64 ? ~Subset{0} : (Subset{1} << x.points) - 1;
  std::set<Subset> opens(x.opens.begin(), x.opens.end());
  for (Subset u : opens)
    if (u & ~all) throw ValidationError("open set " + subset_name(u) + " leaves the space");
  if (!opens.count(0)) throw ValidationError("the empty set is not open");
  if (!opens.count(all)) throw ValidationError("the whole space is not open");
  for (Subset u : opens)
    for (Subset v : opens) {
      if (!opens.count(u | v))
        throw ValidationError("union of " + subset_name(u) + " and " + subset_name(v) + " is not open");
      if (!opens.count(u & v))
        throw ValidationError("intersection of " + subset_name(u) + " and " + subset_name(v) +
                              " is not open");
    }
}

PowersetSchemoid open_set_schemoid(const FiniteSpace& x) {
  check_topology(x);
  return powerset_difference(x.opens, x.points);
}

// ---------------------------------------------------------------------------
// Morphisms

namespace {

ObjId object_of_subset(const PowersetSchemoid& p, Subset u) {
  auto it = std::find(p.objects.begin(), p.objects.end(), u);
  if (it == p.objects.end()) throw StructuralError("subset " + subset_name(u) + " is not an object");
  return static_cast<ObjId>(it - p.objects.begin());
}

MorId inclusion(const PowersetSchemoid& p, ObjId u, ObjId v) {
  auto h = p.schemoid.cat().hom(u, v);
  if (h.empty()) throw StructuralError("no inclusion between the given objects");
  return h.front();
}

// Functor between powerset schemoids induced by a map on objects (inclusions
// are determined by their endpoints).
Functor functor_from_objects(const PowersetSchemoid& src, const PowersetSchemoid& tgt,
                             const std::function<Subset(Subset)>& on_subsets) {
  Functor f;
  for (Subset u : src.objects) f.obj.push_back(object_of_subset(tgt, on_subsets(u)));
  const FinCat& c = src.schemoid.cat();
  for (MorId m = 0; m < c.num_morphisms(); ++m)
    f.mor.push_back(inclusion(tgt, f.obj[c.src(m)], f.obj[c.tgt(m)]));
  return f;
}

}  // namespace

SchemoidMorphism height_morphism(const PowersetSchemoid& p) {
  auto target = std::make_shared<const Schemoid>(truncated_len(p.ground));
  const FinCat& c = p.schemoid.cat();
  Functor f;
  for (Subset u : p.objects) f.obj.push_back(static_cast<ObjId>(std::popcount(u)));
  for (MorId m = 0; m < c.num_morphisms(); ++m)
    f.mor.push_back(len_arrow(p.ground, f.obj[c.src(m)], f.obj[c.tgt(m)]));
  return validate_morphism(std::make_shared<const Schemoid>(p.schemoid), target, std::move(f));
}

SchemoidMorphism indicator_morphism(const PowersetSchemoid& p) {
  const std::size_t n = p.ground;
  if (n == 0) throw PreconditionError("indicator_morphism needs at least one vertex");
  if (n > 12) throw GuardExceeded("indicator_morphism limited to 12 vertices");
  auto target = std::make_shared<const Schemoid>(power_schemoid(truncated_len(1), n));
  const FinCat& c = p.schemoid.cat();
  Functor f;
  for (Subset u : p.objects) {
    ObjId idx = 0;
    for (std::size_t i = 0; i < n; ++i) idx = idx * 2 + static_cast<ObjId>(u >> i & 1);
    f.obj.push_back(idx);
  }
  for (MorId m = 0; m < c.num_morphisms(); ++m) {
    const Subset u = p.objects[c.src(m)], v = p.objects[c.tgt(m)];
    MorId idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      // truncated_len(1): id0 = 0, id1 = 1, the arrow 0 → 1 = 2.
      const MorId comp = (u >> i & 1) ? 1 : ((v >> i & 1) ? 2 : 0);
      idx = idx * 3 + comp;
    }
    f.mor.push_back(idx);
  }
  return validate_morphism(std::make_shared<const Schemoid>(p.schemoid), target, std::move(f));
}

bool non_degenerate(const SimplicialComplex& k, const std::vector<std::uint32_t>& f) {
  for (Subset face : k.faces) {
    Subset image = 0;
    for (std::size_t i = 0; i < k.vertices; ++i)
      if (face >> i & 1) image |= Subset{1} << f[i];
    if (std::popcount(image) != std::popcount(face)) return false;
  }
  return true;
}

SimplicialMapResult simplicial_map_morphism(const SimplicialComplex& k, const SimplicialComplex& l,
                                            const std::vector<std::uint32_t>& f) {
  check_complex(k);
  check_complex(l);
  if (f.size() != k.vertices) throw StructuralError("vertex map has the wrong length");
  for (auto v : f)
    if (v >= l.vertices) throw StructuralError("vertex map leaves the target vertex set");
  SimplicialMapResult res;
  const std::set<Subset> lfaces(l.faces.begin(), l.faces.end());
  auto image = [&](Subset s) {
    Subset r = 0;
    for (std::size_t i = 0; i < k.vertices; ++i)
      if (s >> i & 1) r |= Subset{1} << f[i];
    return r;
  };
  for (Subset face : k.faces)
    if (!lfaces.count(image(face))) {
      res.rejection = "not simplicial: face " + subset_name(face) + " maps to " +
                      subset_name(image(face)) + " which is not a face";
      return res;
    }

  // Components of the 1-skeleton over the vertices that are faces of K.
  std::vector<std::uint32_t> comp(k.vertices);
  std::iota(comp.begin(), comp.end(), 0u);
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
    return comp[x] == x ? x : comp[x] = find(comp[x]);
  };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (Subset face : k.faces)
    if (std::popcount(face) == 2) {
      const auto a = static_cast<std::uint32_t>(std::countr_zero(face));
      const auto b = static_cast<std::uint32_t>(63 - std::countl_zero(face));
      edges.push_back({a, b});
      comp[find(a)] = find(b);
    }
  std::map<std::uint32_t, std::vector<std::uint32_t>> members;
  for (Subset face : k.faces)
    if (std::popcount(face) == 1) {
      const auto v = static_cast<std::uint32_t>(std::countr_zero(face));
      members[find(v)].push_back(v);
    }
  for (const auto& [root, verts] : members) {
    bool constant = true;
    for (auto v : verts) constant = constant && f[v] == f[verts.front()];
    if (constant) continue;
    for (auto [a, b] : edges)
      if (find(a) == root && f[a] == f[b]) {
        res.rejection = "degenerate non-constant component: vertices " + std::to_string(a + 1) +
                        " and " + std::to_string(b + 1) + " span an edge but both map to " +
                        std::to_string(f[a] + 1);
        return res;
      }
  }

  PowersetSchemoid pk = simplicial_schemoid(k), pl = simplicial_schemoid(l);
  Functor u = functor_from_objects(pk, pl, image);
  try {
    res.morphism = validate_morphism(std::make_shared<const Schemoid>(pk.schemoid),
                                     std::make_shared<const Schemoid>(pl.schemoid), std::move(u));
  } catch (const ValidationError& e) {
    res.rejection = std::string("P(f) is not a schemoid morphism: ") + e.what();
  }
  return res;
}

SchemoidMorphism continuous_map_morphism(const FiniteSpace& x, const FiniteSpace& y,
                                         const std::vector<std::uint32_t>& f) {
  check_topology(x);
  check_topology(y);
  if (f.size() != x.points) throw StructuralError("point map has the wrong length");
  for (auto v : f)
    if (v >= y.points) throw StructuralError("point map leaves the target space");
  auto preimage = [&](Subset u) {
    Subset r = 0;
    for (std::size_t i = 0; i < x.points; ++i)
      if (u >> f[i] & 1) r |= Subset{1} << i;
    return r;
  };
  const std::set<Subset> xopens(x.opens.begin(), x.opens.end());
  for (Subset u : y.opens)
    if (!xopens.count(preimage(u)))
      throw ValidationError("not continuous: the preimage of the open set " + subset_name(u) +
                            " is " + subset_name(preimage(u)) + ", which is not open");
  PowersetSchemoid py = open_set_schemoid(y), px = open_set_schemoid(x);
  Functor u = functor_from_objects(py, px, preimage);
  return validate_morphism(std::make_shared<const Schemoid>(py.schemoid),
                           std::make_shared<const Schemoid>(px.schemoid), std::move(u));
}

SchemoidMorphism hamming_u(SchemoidPtr sz2, SchemoidPtr hn) {
  const std::size_t n_words = hn->cat().num_objects();
  if (sz2->cat().num_objects() != 2) throw StructuralError("hamming_u: source is not S~(Z/2)");
  const FinCat& c = sz2->cat();
  Functor f;
  f.obj = {0, 1};
  for (MorId m = 0; m < c.num_morphisms(); ++m)
    f.mor.push_back(static_cast<MorId>(f.obj[c.tgt(m)] * n_words + f.obj[c.src(m)]));
  return validate_morphism(std::move(sz2), std::move(hn), std::move(f));
}

SchemoidMorphism hamming_v(SchemoidPtr hn, SchemoidPtr sz2, bool swapped) {
  const FinCat& c = hn->cat();
  const FinCat& d = sz2->cat();
  Functor f;
  for (ObjId w = 0; w < c.num_objects(); ++w) f.obj.push_back((std::popcount(w) + (swapped ? 1 : 0)) % 2);
  for (MorId m = 0; m < c.num_morphisms(); ++m)
    f.mor.push_back(d.hom(f.obj[c.src(m)], f.obj[c.tgt(m)]).at(0));
  return validate_morphism(std::move(hn), std::move(sz2), std::move(f));
}

}  // namespace schemoid
