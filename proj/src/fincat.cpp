#include "schemoid/fincat.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "schemoid/error.hpp"

namespace schemoid {

namespace {

constexpr MorId kNone = std::numeric_limits<MorId>::max();
// Dense composition tables beyond this many composable pairs are refused.
constexpr std::size_t kMaxComposablePairs = 50'000'000;

const char* kind_name(LawKind k) {
  switch (k) {
    case LawKind::Identity: return "identity";
    case LawKind::Endpoints: return "endpoints";
    case LawKind::Closure: return "closure";
    case LawKind::Associativity: return "associativity";
  }
  return "?";
}

std::string mor_str(MorId m) { return "m" + std::to_string(m); }

// Shared in/out indexing used by both the raw validator and FinCat.
struct Index {
  std::vector<std::vector<MorId>> in, out;
  std::vector<std::uint32_t> in_pos;
  std::vector<std::size_t> offset;
  std::size_t pairs = 0;

  Index(std::size_t objects, const std::vector<Arrow>& arrows) : in(objects), out(objects) {
    in_pos.resize(arrows.size());
    for (MorId m = 0; m < arrows.size(); ++m) {
      in_pos[m] = static_cast<std::uint32_t>(in[arrows[m].tgt].size());
      in[arrows[m].tgt].push_back(m);
      out[arrows[m].src].push_back(m);
    }
    offset.resize(arrows.size());
    for (MorId g = 0; g < arrows.size(); ++g) {
      offset[g] = pairs;
      pairs += in[arrows[g].src].size();
    }
    if (pairs > kMaxComposablePairs)
      throw GuardExceeded("category has " + std::to_string(pairs) +
                          " composable pairs; the limit is " + std::to_string(kMaxComposablePairs));
  }
};

// Law checks shared by validate_category and check_laws. `comp` returns kNone
// for a composable pair with no listed composite.
template <class Comp>
void check_laws_impl(std::size_t objects, const std::vector<Arrow>& arrows,
                     const std::vector<MorId>& identity, const Index& idx, Comp comp,
                     std::vector<LawViolation>& out) {
  auto add = [&](LawKind k, std::string msg) { out.push_back({k, std::move(msg)}); };
  for (ObjId x = 0; x < objects; ++x) {
    const Arrow& a = arrows[identity[x]];
    if (a.src != x || a.tgt != x)
      add(LawKind::Identity, "identity of object " + std::to_string(x) + " is " +
                                 mor_str(identity[x]) + " with endpoints " + std::to_string(a.src) +
                                 "->" + std::to_string(a.tgt));
  }
  for (MorId g = 0; g < arrows.size(); ++g)
    for (MorId f : idx.in[arrows[g].src]) {
      const MorId h = comp(g, f);
      if (h == kNone) {
        add(LawKind::Closure, "composable pair (" + mor_str(g) + ", " + mor_str(f) +
                                  ") has no composite");
        continue;
      }
      if (arrows[h].src != arrows[f].src || arrows[h].tgt != arrows[g].tgt)
        add(LawKind::Endpoints, mor_str(g) + " o " + mor_str(f) + " = " + mor_str(h) +
                                    " has the wrong endpoints");
    }
  for (MorId f = 0; f < arrows.size(); ++f) {
    const MorId it = identity[arrows[f].tgt], is = identity[arrows[f].src];
    if (arrows[it].src == arrows[f].tgt) {
      const MorId l = comp(it, f);
      if (l != kNone && l != f)
        add(LawKind::Identity, "id o " + mor_str(f) + " = " + mor_str(l));
    }
    if (arrows[is].tgt == arrows[f].src) {
      const MorId r = comp(f, is);
      if (r != kNone && r != f)
        add(LawKind::Identity, mor_str(f) + " o id = " + mor_str(r));
    }
  }
  for (MorId f = 0; f < arrows.size(); ++f)
    for (MorId g : idx.out[arrows[f].tgt]) {
      const MorId gf = comp(g, f);
      if (gf == kNone || arrows[gf].tgt != arrows[g].tgt) continue;
      for (MorId h : idx.out[arrows[g].tgt]) {
        const MorId hg = comp(h, g);
        if (hg == kNone || arrows[hg].src != arrows[f].tgt) continue;
        const MorId left = comp(hg, f), right = comp(h, gf);
        if (left != right)
          add(LawKind::Associativity, "(" + mor_str(h) + " o " + mor_str(g) + ") o " + mor_str(f) +
                                          " = " + (left == kNone ? "none" : mor_str(left)) +
                                          " but " + mor_str(h) + " o (" + mor_str(g) + " o " +
                                          mor_str(f) + ") = " +
                                          (right == kNone ? "none" : mor_str(right)));
      }
    }
}

}  // namespace

std::string CategoryReport::summary() const {
  std::ostringstream os;
  for (const auto& s : structural) os << "structural: " << s << '\n';
  for (const auto& v : violations) os << kind_name(v.kind) << ": " << v.message << '\n';
  return os.str();
}

CategoryReport validate_category(const CategoryData& data) {
  CategoryReport rep;
  const std::size_t n = data.objects, m = data.morphisms.size();
  for (MorId i = 0; i < m; ++i)
    if (data.morphisms[i].src >= n || data.morphisms[i].tgt >= n)
      rep.structural.push_back("morphism " + std::to_string(i) + " has an endpoint out of range");
  if (data.identity.size() != n)
    rep.structural.push_back("identity table has " + std::to_string(data.identity.size()) +
                             " entries for " + std::to_string(n) + " objects");
  for (std::size_t x = 0; x < data.identity.size(); ++x)
    if (data.identity[x] >= m)
      rep.structural.push_back("identity of object " + std::to_string(x) + " is out of range");
  for (const auto& e : data.compose)
    if (e[0] >= m || e[1] >= m || e[2] >= m)
      rep.structural.push_back("compose entry [" + std::to_string(e[0]) + "," +
                               std::to_string(e[1]) + "," + std::to_string(e[2]) +
                               "] is out of range");
  if (!rep.structural.empty()) return rep;

  Index idx(n, data.morphisms);
  std::vector<MorId> table(idx.pairs, kNone);
  for (const auto& e : data.compose) {
    const MorId g = e[0], f = e[1];
    if (data.morphisms[g].src != data.morphisms[f].tgt) {
      rep.violations.push_back({LawKind::Closure, "compose lists the non-composable pair (" +
                                                      mor_str(g) + ", " + mor_str(f) + ")"});
      continue;
    }
    MorId& slot = table[idx.offset[g] + idx.in_pos[f]];
    if (slot != kNone && slot != e[2]) {
      rep.structural.push_back("compose lists (" + mor_str(g) + ", " + mor_str(f) +
                               ") twice with different results");
      continue;
    }
    slot = e[2];
  }
  if (!rep.structural.empty()) return rep;
  check_laws_impl(
      n, data.morphisms, data.identity, idx,
      [&](MorId g, MorId f) { return table[idx.offset[g] + idx.in_pos[f]]; }, rep.violations);
  return rep;
}

void FinCat::index_arrows() {
  Index idx(n_objects_, arrows_);
  in_ = std::move(idx.in);
  out_ = std::move(idx.out);
  in_pos_ = std::move(idx.in_pos);
  offset_ = std::move(idx.offset);
  table_.assign(idx.pairs, kNone);
}

FinCat FinCat::from_data(const CategoryData& data) {
  CategoryReport rep = validate_category(data);
  if (!rep.structural.empty()) throw StructuralError("invalid category tables:\n" + rep.summary());
  if (!rep.violations.empty()) throw ValidationError("category laws fail:\n" + rep.summary());
  FinCat c;
  c.n_objects_ = data.objects;
  c.arrows_ = data.morphisms;
  c.identity_ = data.identity;
  c.index_arrows();
  for (const auto& e : data.compose) c.table_[c.offset_[e[0]] + c.in_pos_[e[1]]] = e[2];
  return c;
}

FinCat FinCat::from_rule(std::size_t objects, std::vector<Arrow> morphisms,
                         std::vector<MorId> identity,
                         const std::function<MorId(MorId, MorId)>& rule, bool check) {
  FinCat c;
  c.n_objects_ = objects;
  c.arrows_ = std::move(morphisms);
  c.identity_ = std::move(identity);
  for (const Arrow& a : c.arrows_)
    if (a.src >= objects || a.tgt >= objects)
      throw StructuralError("morphism endpoint out of range");
  if (c.identity_.size() != objects) throw StructuralError("identity table has the wrong length");
  for (MorId i : c.identity_)
    if (i >= c.arrows_.size()) throw StructuralError("identity out of range");
  c.index_arrows();
  for (MorId g = 0; g < c.arrows_.size(); ++g)
    for (MorId f : c.in_[c.arrows_[g].src]) {
      const MorId h = rule(g, f);
      if (h >= c.arrows_.size()) throw StructuralError("composition rule returned out-of-range morphism");
      c.table_[c.offset_[g] + c.in_pos_[f]] = h;
    }
  if (check) {
    CategoryReport rep = check_laws(c);
    if (!rep.ok()) throw ValidationError("category laws fail:\n" + rep.summary());
  }
  return c;
}

MorId FinCat::compose(MorId g, MorId f) const {
  if (g >= arrows_.size() || f >= arrows_.size())
    throw StructuralError("compose: morphism index out of range");
  if (src(g) != tgt(f))
    throw PreconditionError("compose: " + mor_str(g) + " and " + mor_str(f) +
                            " are not composable");
  return compose_unchecked(g, f);
}

std::vector<MorId> FinCat::hom(ObjId x, ObjId y) const {
  std::vector<MorId> r;
  for (MorId m : out_[x])
    if (arrows_[m].tgt == y) r.push_back(m);
  return r;
}

CategoryData FinCat::data() const {
  CategoryData d;
  d.objects = n_objects_;
  d.morphisms = arrows_;
  d.identity = identity_;
  for (MorId g = 0; g < arrows_.size(); ++g)
    for (MorId f : in_[arrows_[g].src]) d.compose.push_back({g, f, compose_unchecked(g, f)});
  return d;
}

CategoryReport check_laws(const FinCat& c) {
  CategoryReport rep;
  std::vector<Arrow> arrows(c.num_morphisms());
  for (MorId m = 0; m < arrows.size(); ++m) arrows[m] = c.arrow(m);
  std::vector<MorId> ids(c.num_objects());
  for (ObjId x = 0; x < ids.size(); ++x) ids[x] = c.identity(x);
  Index idx(c.num_objects(), arrows);
  check_laws_impl(
      c.num_objects(), arrows, ids, idx,
      [&](MorId g, MorId f) { return c.compose_unchecked(g, f); }, rep.violations);
  return rep;
}

FinCat terminal_category() {
  return FinCat::from_rule(1, {{0, 0}}, {0}, [](MorId, MorId) { return 0u; });
}

FinCat interval_category() {
  return FinCat::from_rule(2, {{0, 0}, {1, 1}, {0, 1}}, {0, 1}, [](MorId g, MorId f) {
    if (g == 2) return MorId{2};
    if (f == 2) return MorId{2};
    return g;
  });
}

FinCat monoid_category(const std::vector<std::vector<std::uint32_t>>& table, std::uint32_t unit) {
  const std::size_t n = table.size();
  for (const auto& row : table)
    if (row.size() != n) throw StructuralError("monoid table is not square");
  if (unit >= n) throw StructuralError("monoid unit out of range");
  for (const auto& row : table)
    for (auto v : row)
      if (v >= n) throw StructuralError("monoid table entry out of range");
  return FinCat::from_rule(1, std::vector<Arrow>(n, Arrow{0, 0}), {unit},
                           [&](MorId g, MorId f) { return table[g][f]; });
}

FinCat opposite(const FinCat& c) {
  std::vector<Arrow> arrows(c.num_morphisms());
  for (MorId m = 0; m < arrows.size(); ++m) arrows[m] = {c.tgt(m), c.src(m)};
  std::vector<MorId> ids(c.num_objects());
  for (ObjId x = 0; x < ids.size(); ++x) ids[x] = c.identity(x);
  return FinCat::from_rule(
      c.num_objects(), std::move(arrows), std::move(ids),
      [&](MorId g, MorId f) { return c.compose_unchecked(f, g); }, false);
}

FinCat product_category(const FinCat& c, const FinCat& d) {
  const std::size_t nd = d.num_objects(), md = d.num_morphisms();
  std::vector<Arrow> arrows;
  arrows.reserve(c.num_morphisms() * md);
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    for (MorId g = 0; g < md; ++g)
      arrows.push_back({static_cast<ObjId>(c.src(f) * nd + d.src(g)),
                        static_cast<ObjId>(c.tgt(f) * nd + d.tgt(g))});
  std::vector<MorId> ids(c.num_objects() * nd);
  for (ObjId x = 0; x < c.num_objects(); ++x)
    for (ObjId y = 0; y < nd; ++y) ids[x * nd + y] = static_cast<MorId>(c.identity(x) * md + d.identity(y));
  return FinCat::from_rule(
      c.num_objects() * nd, std::move(arrows), std::move(ids),
      [&](MorId a, MorId b) {
        return static_cast<MorId>(c.compose_unchecked(a / md, b / md) * md +
                                  d.compose_unchecked(a % md, b % md));
      },
      false);
}

std::optional<std::string> functor_defect(const FinCat& c, const FinCat& d, const Functor& f) {
  if (f.obj.size() != c.num_objects() || f.mor.size() != c.num_morphisms())
    return "map tables have the wrong length";
  for (ObjId x = 0; x < c.num_objects(); ++x)
    if (f.obj[x] >= d.num_objects()) return "object " + std::to_string(x) + " maps out of range";
  for (MorId m = 0; m < c.num_morphisms(); ++m) {
    if (f.mor[m] >= d.num_morphisms()) return "morphism " + std::to_string(m) + " maps out of range";
    if (d.src(f.mor[m]) != f.obj[c.src(m)] || d.tgt(f.mor[m]) != f.obj[c.tgt(m)])
      return "morphism " + std::to_string(m) + " is not sent between the images of its endpoints";
  }
  for (ObjId x = 0; x < c.num_objects(); ++x)
    if (f.mor[c.identity(x)] != d.identity(f.obj[x]))
      return "identity of object " + std::to_string(x) + " is not preserved";
  for (MorId g = 0; g < c.num_morphisms(); ++g)
    for (MorId h : c.into(c.src(g)))
      if (f.mor[c.compose_unchecked(g, h)] != d.compose_unchecked(f.mor[g], f.mor[h]))
        return "composition of (" + std::to_string(g) + ", " + std::to_string(h) +
               ") is not preserved";
  return std::nullopt;
}

Functor identity_functor(const FinCat& c) {
  Functor f;
  f.obj.resize(c.num_objects());
  f.mor.resize(c.num_morphisms());
  for (ObjId x = 0; x < f.obj.size(); ++x) f.obj[x] = x;
  for (MorId m = 0; m < f.mor.size(); ++m) f.mor[m] = m;
  return f;
}

Functor compose_functors(const Functor& g, const Functor& f) {
  Functor h;
  h.obj.reserve(f.obj.size());
  h.mor.reserve(f.mor.size());
  for (ObjId x : f.obj) h.obj.push_back(g.obj.at(x));
  for (MorId m : f.mor) h.mor.push_back(g.mor.at(m));
  return h;
}

Functor projection_first(const FinCat& c, const FinCat& d) {
  Functor p;
  for (ObjId x = 0; x < c.num_objects() * d.num_objects(); ++x)
    p.obj.push_back(static_cast<ObjId>(x / d.num_objects()));
  for (MorId m = 0; m < c.num_morphisms() * d.num_morphisms(); ++m)
    p.mor.push_back(static_cast<MorId>(m / d.num_morphisms()));
  return p;
}

Functor projection_second(const FinCat& c, const FinCat& d) {
  Functor p;
  for (ObjId x = 0; x < c.num_objects() * d.num_objects(); ++x)
    p.obj.push_back(static_cast<ObjId>(x % d.num_objects()));
  for (MorId m = 0; m < c.num_morphisms() * d.num_morphisms(); ++m)
    p.mor.push_back(static_cast<MorId>(m % d.num_morphisms()));
  return p;
}

namespace {

class IsoSearch {
public:
  IsoSearch(const FinCat& c, const FinCat& d, const std::vector<std::uint32_t>* cc,
            const std::vector<std::uint32_t>* cd)
      : c_(c), d_(d), cc_(cc), cd_(cd) {
    const std::size_t m = c.num_morphisms();
    factorizations_.resize(m);
    for (MorId g = 0; g < m; ++g)
      for (MorId f : c.into(c.src(g))) factorizations_[c.compose_unchecked(g, f)].push_back({g, f});
    obj_.assign(c.num_objects(), kNone);
    obj_used_.assign(d.num_objects(), false);
    mor_.assign(m, kNone);
    mor_used_.assign(d.num_morphisms(), false);
    if (cc_) {
      std::uint32_t mx = 0;
      for (auto v : *cc_) mx = std::max(mx, v + 1);
      for (auto v : *cd_) mx = std::max(mx, v + 1);
      colour_fwd_.assign(mx, kNone);
      colour_bwd_.assign(mx, kNone);
      colour_refs_.assign(mx, 0);
    }
  }

  std::optional<Functor> run() {
    if (c_.num_objects() != d_.num_objects() || c_.num_morphisms() != d_.num_morphisms())
      return std::nullopt;
    if (!assign_object(0)) return std::nullopt;
    return Functor{std::vector<ObjId>(obj_.begin(), obj_.end()),
                   std::vector<MorId>(mor_.begin(), mor_.end())};
  }

private:
  std::size_t homs(const FinCat& k, ObjId x, ObjId y) const { return k.hom(x, y).size(); }

  bool assign_object(ObjId x) {
    if (x == c_.num_objects()) {
      order_.clear();
      for (ObjId a = 0; a < c_.num_objects(); ++a)
        for (ObjId b = 0; b < c_.num_objects(); ++b)
          for (MorId m : c_.hom(a, b)) order_.push_back(m);
      return assign_morphism(0);
    }
    for (ObjId y = 0; y < d_.num_objects(); ++y) {
      if (obj_used_[y]) continue;
      bool ok = homs(c_, x, x) == homs(d_, y, y);
      for (ObjId z = 0; ok && z < x; ++z)
        ok = homs(c_, x, z) == homs(d_, y, obj_[z]) && homs(c_, z, x) == homs(d_, obj_[z], y);
      if (!ok) continue;
      obj_[x] = y;
      obj_used_[y] = true;
      if (assign_object(x + 1)) return true;
      obj_used_[y] = false;
      obj_[x] = kNone;
    }
    return false;
  }

  bool colour_bind(MorId m, MorId n) {
    if (!cc_) return true;
    const auto a = (*cc_)[m], b = (*cd_)[n];
    if (colour_fwd_[a] == kNone && colour_bwd_[b] == kNone) {
      colour_fwd_[a] = b;
      colour_bwd_[b] = a;
    } else if (colour_fwd_[a] != b || colour_bwd_[b] != a) {
      return false;
    }
    ++colour_refs_[a];
    return true;
  }

  void colour_unbind(MorId m) {
    if (!cc_) return;
    const auto a = (*cc_)[m];
    if (--colour_refs_[a] == 0) {
      colour_bwd_[colour_fwd_[a]] = kNone;
      colour_fwd_[a] = kNone;
    }
  }

  bool consistent(MorId m) const {
    auto known = [&](MorId k) { return mor_[k] != kNone; };
    for (MorId f : c_.into(c_.src(m)))
      if (known(f)) {
        const MorId h = c_.compose_unchecked(m, f);
        if (known(h) && d_.compose_unchecked(mor_[m], mor_[f]) != mor_[h]) return false;
      }
    for (MorId g : c_.out_of(c_.tgt(m)))
      if (known(g)) {
        const MorId h = c_.compose_unchecked(g, m);
        if (known(h) && d_.compose_unchecked(mor_[g], mor_[m]) != mor_[h]) return false;
      }
    for (auto [g, f] : factorizations_[m])
      if (known(g) && known(f) && d_.compose_unchecked(mor_[g], mor_[f]) != mor_[m]) return false;
    return true;
  }

  bool assign_morphism(std::size_t i) {
    if (i == order_.size()) return true;
    const MorId m = order_[i];
    std::vector<MorId> candidates;
    if (c_.is_identity(m))
      candidates.push_back(d_.identity(obj_[c_.src(m)]));
    else
      for (MorId n : d_.hom(obj_[c_.src(m)], obj_[c_.tgt(m)]))
        if (!d_.is_identity(n)) candidates.push_back(n);
    for (MorId n : candidates) {
      if (mor_used_[n]) continue;
      if (!colour_bind(m, n)) continue;
      mor_[m] = n;
      mor_used_[n] = true;
      if (consistent(m) && assign_morphism(i + 1)) return true;
      mor_used_[n] = false;
      mor_[m] = kNone;
      colour_unbind(m);
    }
    return false;
  }

  const FinCat& c_;
  const FinCat& d_;
  const std::vector<std::uint32_t>* cc_;
  const std::vector<std::uint32_t>* cd_;
  std::vector<std::vector<std::pair<MorId, MorId>>> factorizations_;
  std::vector<ObjId> obj_;
  std::vector<bool> obj_used_;
  std::vector<MorId> mor_;
  std::vector<bool> mor_used_;
  std::vector<MorId> order_;
  std::vector<std::uint32_t> colour_fwd_, colour_bwd_, colour_refs_;
};

}  // namespace

std::optional<Functor> isomorphism_search(const FinCat& c, const FinCat& d,
                                          const std::vector<std::uint32_t>* colour_c,
                                          const std::vector<std::uint32_t>* colour_d,
                                          std::size_t max_objects) {
  if ((colour_c == nullptr) != (colour_d == nullptr))
    throw StructuralError("isomorphism_search: colourings must be given for both sides");
  if (colour_c && (colour_c->size() != c.num_morphisms() || colour_d->size() != d.num_morphisms()))
    throw StructuralError("isomorphism_search: colouring length mismatch");
  const std::size_t n = std::max(c.num_objects(), d.num_objects());
  if (n > max_objects)
    throw GuardExceeded("isomorphism search refused: " + std::to_string(n) +
                        " objects exceeds the bound of " + std::to_string(max_objects));
  return IsoSearch(c, d, colour_c, colour_d).run();
}

}  // namespace schemoid
