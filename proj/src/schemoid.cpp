#include "schemoid/schemoid.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "schemoid/error.hpp"

namespace schemoid {

namespace {

constexpr BlockId kNoBlock = std::numeric_limits<BlockId>::max();

std::string join_ids(const std::vector<BlockId>& v, const Schemoid& s) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + s.block_name(v[i]);
  return out;
}

}  // namespace

std::string AxiomWitness::describe() const {
  std::ostringstream os;
  os << "blocks (sigma=" << sigma << ", tau=" << tau << ", mu=" << mu << "): morphism " << f
     << " has " << count_f << " factorizations but morphism " << g << " has " << count_g;
  return os.str();
}

SchemoidValidation validate_schemoid(FinCat cat, std::vector<std::vector<MorId>> blocks) {
  const std::size_t m = cat.num_morphisms();
  std::vector<BlockId> block_of(m, kNoBlock);
  for (BlockId b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw StructuralError("block " + std::to_string(b) + " is empty");
    for (MorId f : blocks[b]) {
      if (f >= m)
        throw StructuralError("block " + std::to_string(b) + " names morphism " +
                              std::to_string(f) + " which does not exist");
      if (block_of[f] != kNoBlock)
        throw StructuralError("morphism " + std::to_string(f) + " lies in blocks " +
                              std::to_string(block_of[f]) + " and " + std::to_string(b));
      block_of[f] = b;
    }
  }
  for (MorId f = 0; f < m; ++f)
    if (block_of[f] == kNoBlock)
      throw StructuralError("morphism " + std::to_string(f) + " is not covered by any block");

  // One record per composable pair, sorted so each (sigma, tau, mu) group is
  // contiguous and each target h forms a run inside it.
  struct Rec {
    BlockId sigma, tau, mu;
    MorId h;
    auto key() const { return std::tie(sigma, tau, mu, h); }
  };
  std::vector<Rec> recs;
  recs.reserve(cat.composable_pairs());
  for (MorId s = 0; s < m; ++s)
    for (MorId t : cat.into(cat.src(s))) {
      const MorId h = cat.compose_unchecked(s, t);
      recs.push_back({block_of[s], block_of[t], block_of[h], h});
    }
  std::sort(recs.begin(), recs.end(), [](const Rec& a, const Rec& b) { return a.key() < b.key(); });

  SchemoidValidation out;
  std::vector<Constant> constants;
  std::vector<std::uint8_t> seen(m, 0);
  for (std::size_t i = 0; i < recs.size();) {
    std::size_t j = i;
    const Rec& head = recs[i];
    // Runs of equal h inside the group.
    std::vector<std::pair<MorId, std::uint64_t>> counts;
    while (j < recs.size() && recs[j].sigma == head.sigma && recs[j].tau == head.tau &&
           recs[j].mu == head.mu) {
      std::size_t k = j;
      while (k < recs.size() && recs[k].key() == recs[j].key()) ++k;
      counts.push_back({recs[j].h, k - j});
      j = k;
    }
    const auto& mu_members = blocks[head.mu];
    std::optional<AxiomWitness> w;
    for (const auto& [h, c] : counts)
      if (c != counts.front().second) {
        w = AxiomWitness{head.sigma, head.tau, head.mu, counts.front().first, h,
                         counts.front().second, c};
        break;
      }
    if (!w && counts.size() != mu_members.size()) {
      for (const auto& [h, c] : counts) seen[h] = 1;
      for (MorId g : mu_members)
        if (!seen[g]) {
          w = AxiomWitness{head.sigma, head.tau, head.mu, counts.front().first, g,
                           counts.front().second, 0};
          break;
        }
      for (const auto& [h, c] : counts) seen[h] = 0;
    }
    if (w) {
      out.violation = w;
      return out;
    }
    constants.push_back({head.sigma, head.tau, head.mu, counts.front().second});
    i = j;
  }

  auto s = std::shared_ptr<Schemoid>(new Schemoid());
  s->cat_ = std::move(cat);
  s->blocks_ = std::move(blocks);
  s->block_of_ = std::move(block_of);
  s->constants_ = std::move(constants);
  for (const auto& c : s->constants_) s->lookup_[{c.sigma, c.tau, c.mu}] = c.value;
  const FinCat& k = s->cat_;
  s->class_of_.assign(k.num_objects(), 0);
  std::map<BlockId, std::uint32_t> class_by_block;
  for (ObjId x = 0; x < k.num_objects(); ++x) {
    const BlockId b = s->block_of_[k.identity(x)];
    auto [it, fresh] = class_by_block.emplace(b, static_cast<std::uint32_t>(s->class_members_.size()));
    if (fresh) s->class_members_.emplace_back();
    s->class_of_[x] = it->second;
    s->class_members_[it->second].push_back(x);
  }
  out.schemoid = std::move(s);
  return out;
}

Schemoid Schemoid::make(FinCat cat, std::vector<std::vector<MorId>> blocks) {
  SchemoidValidation v = validate_schemoid(std::move(cat), std::move(blocks));
  if (!v.ok()) throw ValidationError("schemoid axiom fails: " + v.violation->describe());
  return *v.schemoid;
}

std::uint64_t Schemoid::constant(BlockId sigma, BlockId tau, BlockId mu) const {
  auto it = lookup_.find({sigma, tau, mu});
  return it == lookup_.end() ? 0 : it->second;
}

Schemoid& Schemoid::set_object_labels(std::vector<std::string> l) {
  if (!l.empty() && l.size() != cat_.num_objects())
    throw StructuralError("object label count does not match object count");
  object_labels_ = std::move(l);
  return *this;
}

Schemoid& Schemoid::set_block_labels(std::vector<std::string> l) {
  if (!l.empty() && l.size() != blocks_.size())
    throw StructuralError("block label count does not match block count");
  block_labels_ = std::move(l);
  return *this;
}

std::string Schemoid::block_name(BlockId b) const {
  return block_labels_.empty() ? "B" + std::to_string(b) : block_labels_[b];
}

std::string Schemoid::object_name(ObjId x) const {
  return object_labels_.empty() ? std::to_string(x) : object_labels_[x];
}

std::uint64_t factorization_count(const Schemoid& s, BlockId sigma, BlockId tau, MorId h) {
  const FinCat& c = s.cat();
  std::uint64_t n = 0;
  for (MorId a : s.block(sigma))
    for (MorId b : s.block(tau))
      if (c.composable(a, b) && c.compose_unchecked(a, b) == h) ++n;
  return n;
}

std::string TiiiFailure::describe(const Schemoid& s) const {
  std::string r = "T(iii) fails for (" + s.block_name(sigma) + ", " + s.block_name(tau) + "): ";
  if (no_composable_pair) return r + "no f in the first and g in the second with s(g) = t(f)";
  if (products.empty()) return r + "no product block";
  return r + "product blocks are not unique: " + join_ids(products, s);
}

TamenessReport tameness_report(const Schemoid& s) {
  TamenessReport rep;
  const FinCat& c = s.cat();
  const std::size_t nb = s.num_blocks();

  rep.unital = true;
  for (BlockId b = 0; b < nb && rep.unital; ++b) {
    const auto& mem = s.block(b);
    const bool meets = std::any_of(mem.begin(), mem.end(), [&](MorId f) { return c.is_identity(f); });
    if (!meets) continue;
    for (MorId f : mem)
      if (!c.is_identity(f)) {
        rep.unital = false;
        rep.unital_witness = "block " + s.block_name(b) + " contains an identity and the non-identity morphism " +
                             std::to_string(f);
        break;
      }
  }

  // Endpoint classes of each block; T(ii) asks for a single class each side.
  std::vector<std::uint32_t> src_class(nb), tgt_class(nb);
  rep.tii_holds = true;
  for (BlockId b = 0; b < nb; ++b) {
    const auto& mem = s.block(b);
    src_class[b] = s.identity_class(c.src(mem.front()));
    tgt_class[b] = s.identity_class(c.tgt(mem.front()));
    for (MorId f : mem)
      if (s.identity_class(c.src(f)) != src_class[b] || s.identity_class(c.tgt(f)) != tgt_class[b]) {
        if (rep.tii_holds)
          rep.tii_witness = "block " + s.block_name(b) + " has endpoints in different identity classes";
        rep.tii_holds = false;
        break;
      }
  }

  if (rep.tii_holds) {
    std::vector<std::set<ObjId>> srcs(nb), tgts(nb);
    for (BlockId b = 0; b < nb; ++b)
      for (MorId f : s.block(b)) {
        srcs[b].insert(c.src(f));
        tgts[b].insert(c.tgt(f));
      }
    std::map<std::pair<BlockId, BlockId>, std::vector<BlockId>> products;
    for (const Constant& k : s.constants()) products[{k.sigma, k.tau}].push_back(k.mu);
    rep.tiii_holds = true;
    for (BlockId sigma = 0; sigma < nb; ++sigma)
      for (BlockId tau = 0; tau < nb; ++tau) {
        if (tgt_class[sigma] != src_class[tau]) continue;
        bool meet = false;
        for (ObjId y : tgts[sigma])
          if (srcs[tau].count(y)) {
            meet = true;
            break;
          }
        auto it = products.find({tau, sigma});
        std::vector<BlockId> mus = it == products.end() ? std::vector<BlockId>{} : it->second;
        if (!meet || mus.size() != 1) {
          rep.tiii_holds = false;
          rep.tiii_failures.push_back({sigma, tau, !meet, mus});
        } else {
          rep.product[{tau, sigma}] = mus.front();
        }
      }
  }
  rep.tame = rep.unital && rep.tiii_holds;
  if (!rep.tame) rep.product.clear();
  return rep;
}

Quotient quotient_category(const Schemoid& s) {
  Quotient q;
  q.report = tameness_report(s);
  if (!q.report.tame) {
    std::string why = !q.report.unital ? "not unital: " + q.report.unital_witness
                                       : q.report.tiii_failures.front().describe(s);
    throw PreconditionError("quotient category needs a tame schemoid; " + why);
  }
  const FinCat& c = s.cat();
  const std::size_t nb = s.num_blocks();
  std::vector<Arrow> arrows(nb);
  for (BlockId b = 0; b < nb; ++b) {
    const MorId f = s.block(b).front();
    arrows[b] = {s.identity_class(c.src(f)), s.identity_class(c.tgt(f))};
  }
  std::vector<MorId> ids(s.num_identity_classes());
  for (std::uint32_t k = 0; k < ids.size(); ++k)
    ids[k] = s.block_of(c.identity(s.class_members(k).front()));
  const auto& prod = q.report.product;
  try {
    const std::size_t nobj = ids.size();
    q.category = FinCat::from_rule(nobj, std::move(arrows), std::move(ids),
                                   [&](MorId tau, MorId sigma) { return prod.at({tau, sigma}); });
  } catch (const std::exception& e) {
    throw InvariantViolation(std::string("quotient of a tame schemoid is not a category: ") + e.what());
  }
  q.object_of.resize(c.num_objects());
  for (ObjId x = 0; x < c.num_objects(); ++x) q.object_of[x] = s.identity_class(x);
  return q;
}

SchemoidMorphism validate_morphism(SchemoidPtr source, SchemoidPtr target, Functor u) {
  if (!source || !target) throw StructuralError("validate_morphism: null schemoid");
  if (auto d = functor_defect(source->cat(), target->cat(), u))
    throw ValidationError("not a functor: " + *d);
  SchemoidMorphism m{source, target, std::move(u), {}};
  m.block_map.resize(source->num_blocks());
  for (BlockId b = 0; b < source->num_blocks(); ++b) {
    const auto& mem = source->block(b);
    const BlockId t = target->block_of(m.functor.mor[mem.front()]);
    for (MorId f : mem)
      if (target->block_of(m.functor.mor[f]) != t)
        throw ValidationError("block " + source->block_name(b) + " is sent into two blocks: morphism " +
                              std::to_string(mem.front()) + " lands in " + target->block_name(t) +
                              " and morphism " + std::to_string(f) + " lands in " +
                              target->block_name(target->block_of(m.functor.mor[f])));
    m.block_map[b] = t;
  }
  return m;
}

SchemoidMorphism identity_morphism(SchemoidPtr s) {
  Functor id = identity_functor(s->cat());
  return validate_morphism(s, s, std::move(id));
}

SchemoidMorphism compose_morphisms(const SchemoidMorphism& g, const SchemoidMorphism& f) {
  if (f.target->cat().num_objects() != g.source->cat().num_objects() ||
      f.target->cat().num_morphisms() != g.source->cat().num_morphisms())
    throw StructuralError("compose_morphisms: target of the first is not the source of the second");
  SchemoidMorphism h{f.source, g.target, compose_functors(g.functor, f.functor), {}};
  for (BlockId b : f.block_map) h.block_map.push_back(g.block_map.at(b));
  return h;
}

Functor quotient_functor(const SchemoidMorphism& u, const Quotient& qc, const Quotient& qd) {
  Functor f;
  const Schemoid& s = *u.source;
  f.obj.resize(qc.category.num_objects());
  for (std::uint32_t k = 0; k < f.obj.size(); ++k)
    f.obj[k] = qd.object_of[u.functor.obj[s.class_members(k).front()]];
  f.mor = u.block_map;
  if (auto d = functor_defect(qc.category, qd.category, f))
    throw InvariantViolation("induced quotient map is not a functor: " + *d);
  return f;
}

Schemoid product_schemoid(const Schemoid& a, const Schemoid& b) {
  FinCat cat = product_category(a.cat(), b.cat());
  const std::size_t mb = b.cat().num_morphisms();
  std::vector<std::vector<MorId>> blocks;
  std::vector<std::string> labels;
  for (BlockId x = 0; x < a.num_blocks(); ++x)
    for (BlockId y = 0; y < b.num_blocks(); ++y) {
      std::vector<MorId> mem;
      for (MorId f : a.block(x))
        for (MorId g : b.block(y)) mem.push_back(static_cast<MorId>(f * mb + g));
      std::sort(mem.begin(), mem.end());
      blocks.push_back(std::move(mem));
      labels.push_back("(" + a.block_name(x) + "," + b.block_name(y) + ")");
    }
  std::vector<std::string> objs;
  for (ObjId x = 0; x < a.cat().num_objects(); ++x)
    for (ObjId y = 0; y < b.cat().num_objects(); ++y)
      objs.push_back("(" + a.object_name(x) + "," + b.object_name(y) + ")");
  Schemoid s = Schemoid::make(std::move(cat), std::move(blocks));
  s.set_block_labels(std::move(labels)).set_object_labels(std::move(objs));
  return s;
}

Schemoid opposite_schemoid(const Schemoid& s) {
  Schemoid o = Schemoid::make(opposite(s.cat()), s.blocks());
  o.set_block_labels(s.block_labels()).set_object_labels(s.object_labels());
  return o;
}

Schemoid power_schemoid(const Schemoid& s, std::size_t n) {
  if (n == 0) throw StructuralError("power_schemoid needs n >= 1");
  Schemoid p = s;
  for (std::size_t i = 1; i < n; ++i) p = product_schemoid(p, s);
  return p;
}

Schemoid interval_schemoid() {
  Schemoid s = Schemoid::make(interval_category(), {{0}, {1}, {2}});
  s.set_block_labels({"id0", "id1", "u"});
  return s;
}

std::pair<SchemoidMorphism, SchemoidMorphism> check_homotopy(SchemoidPtr s,
                                                             const SchemoidMorphism& h) {
  const FinCat& c = s->cat();
  const FinCat& src = h.source->cat();
  if (src.num_objects() != 2 * c.num_objects() || src.num_morphisms() != 3 * c.num_morphisms())
    throw StructuralError("check_homotopy: source of H is not S x I");
  auto eps = [&](std::uint32_t i) {
    Functor e;
    for (ObjId x = 0; x < c.num_objects(); ++x) e.obj.push_back(x * 2 + i);
    for (MorId f = 0; f < c.num_morphisms(); ++f) e.mor.push_back(f * 3 + i);
    return validate_morphism(s, h.source, std::move(e));
  };
  return {compose_morphisms(h, eps(0)), compose_morphisms(h, eps(1))};
}

std::optional<Functor> schemoid_isomorphic_bruteforce(const Schemoid& a, const Schemoid& b,
                                                      std::size_t max_objects) {
  if (a.num_blocks() != b.num_blocks()) {
    const std::size_t n = std::max(a.cat().num_objects(), b.cat().num_objects());
    if (n > max_objects)
      throw GuardExceeded("isomorphism search refused: " + std::to_string(n) +
                          " objects exceeds the bound of " + std::to_string(max_objects));
    return std::nullopt;
  }
  return isomorphism_search(a.cat(), b.cat(), &a.block_of(), &b.block_of(), max_objects);
}

}  // namespace schemoid
