#include "schemoid/repcat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "schemoid/error.hpp"

namespace schemoid {

namespace {

bool same_schemoid(const Schemoid& a, const Schemoid& b) {
  return &a == &b || (a.cat() == b.cat() && a.blocks() == b.blocks());
}

void require_same(const FunctorRep& m, const FunctorRep& n, const char* what) {
  if (!m.schemoid || !n.schemoid) throw StructuralError(std::string(what) + ": rep without a schemoid");
  if (!same_schemoid(*m.schemoid, *n.schemoid))
    throw PreconditionError(std::string(what) + ": reps live on different schemoids");
  if (m.field != n.field) throw PreconditionError(std::string(what) + ": reps are over different fields");
}

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

Matrix normalized(const Field& k, Matrix m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (auto& v : m.row(r)) v = k.normalize(v);
  return m;
}

// Sparse rows collected into a dense matrix.
struct Equations {
  std::size_t vars;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;

  void add_row(std::vector<std::pair<std::size_t, Scalar>> r) { rows.push_back(std::move(r)); }
  Matrix matrix(const Field& k) const {
    Matrix m(rows.size(), vars);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& [c, v] : rows[i]) m(i, c) = k.add(m(i, c), v);
    return m;
  }
};

// Hom space solver shared by lc_hom and nat_hom.
HomSpace hom_space(const FunctorRep& m, const FunctorRep& n, bool locally_constant) {
  require_same(m, n, "hom");
  const Schemoid& s = *m.schemoid;
  const FinCat& c = s.cat();
  const Field& k = m.field;
  const std::size_t nobj = c.num_objects();

  // Variable block of each object; locally constant components share one.
  std::vector<std::size_t> offset(nobj);
  std::vector<std::size_t> owner(nobj);
  std::size_t vars = 0;
  std::vector<std::size_t> class_offset(s.num_identity_classes(), SIZE_MAX);
  for (ObjId x = 0; x < nobj; ++x) {
    if (locally_constant) {
      const auto cl = s.identity_class(x);
      const ObjId rep = s.class_members(cl).front();
      if (m.dims[x] != m.dims[rep] || n.dims[x] != n.dims[rep])
        throw PreconditionError("hom: dimensions differ on identity class of object " + s.object_name(x));
      if (class_offset[cl] == SIZE_MAX) {
        class_offset[cl] = vars;
        vars += m.dims[x] * n.dims[x];
      }
      offset[x] = class_offset[cl];
      owner[x] = rep;
    } else {
      offset[x] = vars;
      owner[x] = x;
      vars += m.dims[x] * n.dims[x];
    }
  }
  auto var = [&](ObjId x, std::size_t r, std::size_t col) { return offset[x] + r * m.dims[x] + col; };

  Equations eq{vars, {}};
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    if (c.is_identity(f)) continue;
    const ObjId x = c.src(f), y = c.tgt(f);
    const Matrix& nf = n.mats[f];
    const Matrix& mf = m.mats[f];
    // (N(f) eta_x - eta_y M(f))(r, col) = 0
    for (std::size_t r = 0; r < n.dims[y]; ++r)
      for (std::size_t col = 0; col < m.dims[x]; ++col) {
        std::vector<std::pair<std::size_t, Scalar>> row;
        for (std::size_t t = 0; t < n.dims[x]; ++t)
          if (sgn(nf(r, t))) row.emplace_back(var(x, t, col), nf(r, t));
        for (std::size_t t = 0; t < m.dims[y]; ++t)
          if (sgn(mf(t, col))) row.emplace_back(var(y, r, t), k.neg(mf(t, col)));
        if (!row.empty()) eq.add_row(std::move(row));
      }
  }
  HomSpace out;
  if (vars == 0) return out;
  Matrix ns = nullspace(k, eq.matrix(k));
  out.dimension = ns.cols();
  for (std::size_t j = 0; j < ns.cols(); ++j) {
    Components comp(nobj);
    for (ObjId x = 0; x < nobj; ++x) {
      Matrix e(n.dims[x], m.dims[x]);
      for (std::size_t r = 0; r < n.dims[x]; ++r)
        for (std::size_t col = 0; col < m.dims[x]; ++col) e(r, col) = ns(var(x, r, col), j);
      comp[x] = std::move(e);
    }
    out.basis.push_back(std::move(comp));
  }
  return out;
}

Vec flatten(const Components& c) {
  Vec v;
  for (const Matrix& m : c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (const auto& x : m.row(r)) v.push_back(x);
  return v;
}

Matrix as_columns(const std::vector<Vec>& vs, std::size_t len) {
  Matrix m(len, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < len; ++i) m(i, j) = vs[j][i];
  return m;
}

Vec column_vec(const Matrix& m, std::size_t c) {
  Vec v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, c);
  return v;
}

// Unique X with a X = b for a of full column rank.
Matrix solve_exact(const Field& k, const Matrix& a, const Matrix& b, const char* what) {
  if (a.cols() == 0) return Matrix(0, b.cols());
  auto x = solve(k, a, b);
  if (!x) throw InvariantViolation(std::string(what) + ": induced map does not preserve the subspace");
  return *x;
}

// Unique X with X l = b for l of full row rank.
Matrix solve_right(const Field& k, const Matrix& l, const Matrix& b, const char* what) {
  return transpose(solve_exact(k, transpose(l), transpose(b), what));
}

void recheck(const FunctorRep& r, const char* what) {
  if (auto d = rep_defect(r)) throw InvariantViolation(std::string(what) + " produced an invalid rep: " + *d);
}

}  // namespace

// ---------------------------------------------------------------------------
// FunctorRep

FunctorRep FunctorRep::from_blocks(SchemoidPtr s, Field k, std::vector<std::size_t> dims,
                                   const std::map<BlockId, Matrix>& block_mats) {
  if (!s) throw StructuralError("from_blocks: null schemoid");
  const FinCat& c = s->cat();
  if (dims.size() != c.num_objects())
    throw StructuralError("rep has " + std::to_string(dims.size()) + " dimensions for " +
                          std::to_string(c.num_objects()) + " objects");
  for (const auto& [b, m] : block_mats)
    if (b >= s->num_blocks()) throw StructuralError("rep names block " + std::to_string(b) + " which does not exist");
  FunctorRep r{s, k, std::move(dims), std::vector<Matrix>(c.num_morphisms())};
  for (BlockId b = 0; b < s->num_blocks(); ++b) {
    auto it = block_mats.find(b);
    std::optional<Matrix> given;
    if (it != block_mats.end()) {
      given = normalized(k, it->second);
    } else if (!std::any_of(s->block(b).begin(), s->block(b).end(), [&](MorId f) { return c.is_identity(f); })) {
      throw StructuralError("rep gives no matrix for block " + s->block_name(b));
    }
    for (MorId f : s->block(b)) {
      const std::size_t rows = r.dims[c.tgt(f)], cols = r.dims[c.src(f)];
      Matrix m = given ? *given : Matrix::identity(rows);
      if (m.rows() != rows || m.cols() != cols)
        throw ValidationError("block " + s->block_name(b) + ": morphism " + std::to_string(f) + " needs a " +
                              std::to_string(rows) + "x" + std::to_string(cols) + " matrix, got " + shape(m));
      r.mats[f] = std::move(m);
    }
  }
  return r;
}

FunctorRep FunctorRep::constant(SchemoidPtr s, Field k, std::size_t d) {
  const FinCat& c = s->cat();
  return FunctorRep{s, k, std::vector<std::size_t>(c.num_objects(), d),
                    std::vector<Matrix>(c.num_morphisms(), Matrix::identity(d))};
}

FunctorRep FunctorRep::zero(SchemoidPtr s, Field k) { return constant(std::move(s), k, 0); }

std::size_t FunctorRep::total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

std::optional<std::string> rep_defect(const FunctorRep& m) {
  if (!m.schemoid) throw StructuralError("rep without a schemoid");
  const Schemoid& s = *m.schemoid;
  const FinCat& c = s.cat();
  if (m.dims.size() != c.num_objects() || m.mats.size() != c.num_morphisms())
    throw StructuralError("rep does not match the schemoid size");
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    if (m.mats[f].rows() != m.dims[c.tgt(f)] || m.mats[f].cols() != m.dims[c.src(f)])
      throw StructuralError("matrix of morphism " + std::to_string(f) + " is " + shape(m.mats[f]) + ", expected " +
                            std::to_string(m.dims[c.tgt(f)]) + "x" + std::to_string(m.dims[c.src(f)]));
  for (BlockId b = 0; b < s.num_blocks(); ++b) {
    const MorId first = s.block(b).front();
    for (MorId f : s.block(b))
      if (m.mats[f] != m.mats[first])
        return "not constant on block " + s.block_name(b) + ": morphisms " + std::to_string(first) + " and " +
               std::to_string(f) + " have different matrices";
  }
  for (ObjId x = 0; x < c.num_objects(); ++x)
    if (!m.mats[c.identity(x)].is_identity())
      return "identity of object " + s.object_name(x) + " is not sent to an identity matrix";
  for (MorId g = 0; g < c.num_morphisms(); ++g)
    for (MorId f : c.into(c.src(g))) {
      const MorId gf = c.compose_unchecked(g, f);
      if (multiply(m.field, m.mats[g], m.mats[f]) != m.mats[gf])
        return "not functorial: M(" + std::to_string(g) + ") M(" + std::to_string(f) + ") != M(" +
               std::to_string(gf) + ") (blocks " + s.block_name(s.block_of(g)) + ", " +
               s.block_name(s.block_of(f)) + ", " + s.block_name(s.block_of(gf)) + ")";
    }
  return std::nullopt;
}

void validate_functor_rep(const FunctorRep& m) {
  if (auto d = rep_defect(m)) throw ValidationError(*d);
}

HomSpace lc_hom(const FunctorRep& m, const FunctorRep& n) { return hom_space(m, n, true); }
HomSpace nat_hom(const FunctorRep& m, const FunctorRep& n) { return hom_space(m, n, false); }

std::optional<std::string> lc_nat_defect(const FunctorRep& m, const FunctorRep& n, const Components& eta) {
  require_same(m, n, "lc_nat_defect");
  const Schemoid& s = *m.schemoid;
  const FinCat& c = s.cat();
  if (eta.size() != c.num_objects()) return "wrong number of components";
  for (ObjId x = 0; x < c.num_objects(); ++x)
    if (eta[x].rows() != n.dims[x] || eta[x].cols() != m.dims[x])
      return "component at " + s.object_name(x) + " has shape " + shape(eta[x]);
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    if (multiply(m.field, n.mats[f], eta[c.src(f)]) != multiply(m.field, eta[c.tgt(f)], m.mats[f]))
      return "naturality fails on morphism " + std::to_string(f);
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    const ObjId rep = s.class_members(s.identity_class(x)).front();
    if (eta[x] != eta[rep])
      return "not locally constant: components at " + s.object_name(rep) + " and " + s.object_name(x) + " differ";
  }
  return std::nullopt;
}

std::optional<Components> rep_isomorphism(const FunctorRep& m, const FunctorRep& n) {
  require_same(m, n, "rep_isomorphism");
  if (m.dims != n.dims) return std::nullopt;
  const Field& k = m.field;
  HomSpace h = lc_hom(m, n);
  const std::size_t nobj = m.dims.size();
  auto combine = [&](const std::vector<Scalar>& coeff) {
    Components c(nobj);
    for (ObjId x = 0; x < nobj; ++x) {
      Matrix acc(n.dims[x], m.dims[x]);
      for (std::size_t j = 0; j < coeff.size(); ++j)
        if (sgn(coeff[j])) acc = add(k, acc, scale(k, coeff[j], h.basis[j][x]));
      c[x] = std::move(acc);
    }
    return c;
  };
  auto invertible = [&](const Components& c) {
    return std::all_of(c.begin(), c.end(), [&](const Matrix& e) { return e.rows() == 0 || inverse(k, e).has_value(); });
  };
  const std::size_t d = h.dimension;
  if (k.is_prime()) {
    std::uint64_t total = 1;
    bool small = true;
    for (std::size_t i = 0; i < d && small; ++i) {
      total *= k.characteristic();
      small = total <= 4096;
    }
    if (small) {
      for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<Scalar> coeff(d);
        for (std::size_t i = 0, rest = code; i < d; ++i, rest /= k.characteristic())
          coeff[i] = static_cast<unsigned long>(rest % k.characteristic());
        Components c = combine(coeff);
        if (invertible(c)) return c;
      }
      return std::nullopt;
    }
  }
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> dist(-3, 3);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Scalar> coeff(d);
    for (auto& x : coeff) x = k.from_int(dist(rng));
    Components c = combine(coeff);
    if (invertible(c)) return c;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Modules

std::optional<std::string> module_defect(const AlgModule& m) {
  if (!m.algebra) return "module without an algebra";
  const FDAlgebra& a = *m.algebra;
  const Field& k = a.field();
  if (m.actions.size() != a.dim()) return "wrong number of action matrices";
  for (const Matrix& x : m.actions)
    if (x.rows() != m.dim || x.cols() != m.dim) return "action matrix has shape " + shape(x);
  Matrix unit(m.dim, m.dim);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (sgn(a.unit()[i])) unit = add(k, unit, scale(k, a.unit()[i], m.actions[i]));
  if (!unit.is_identity()) return "the unit does not act as the identity";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Matrix rhs(m.dim, m.dim);
      for (const auto& t : a.product(i, j)) rhs = add(k, rhs, scale(k, t.coeff, m.actions[t.index]));
      if (multiply(k, m.actions[i], m.actions[j]) != rhs)
        return "action of " + a.labels()[i] + " " + a.labels()[j] + " is not the product of the actions";
    }
  return std::nullopt;
}

AlgModule free_module(std::shared_ptr<const FDAlgebra> a, std::size_t r) {
  AlgModule m{a, r * a->dim(), {}};
  for (std::size_t i = 0; i < a->dim(); ++i) {
    Matrix l = a->left_mult(i);
    Matrix acc(0, 0);
    for (std::size_t j = 0; j < r; ++j) acc = direct_sum(acc, l);
    m.actions.push_back(std::move(acc));
  }
  return m;
}

AlgModule mitchell(const FunctorRep& m) {
  const Schemoid& s = *m.schemoid;
  const FinCat& c = s.cat();
  auto algebra = std::make_shared<const FDAlgebra>(quotient_category_algebra(s, m.field));
  const std::size_t nc = s.num_identity_classes();
  std::vector<std::size_t> offset(nc + 1, 0);
  for (std::size_t k = 0; k < nc; ++k) offset[k + 1] = offset[k] + m.dims[s.class_members(k).front()];
  AlgModule out{algebra, offset[nc], {}};
  for (BlockId b = 0; b < s.num_blocks(); ++b) {
    const MorId f = s.block(b).front();
    const auto from = s.identity_class(c.src(f)), to = s.identity_class(c.tgt(f));
    Matrix act(out.dim, out.dim);
    act.set_block(offset[to], offset[from], m.mats[f]);
    out.actions.push_back(std::move(act));
  }
  return out;
}

FunctorRep mitchell_inverse(SchemoidPtr s, const AlgModule& x) {
  const FinCat& c = s->cat();
  if (!x.algebra || x.algebra->dim() != s->num_blocks())
    throw PreconditionError("mitchell_inverse: module is not over the quotient category algebra");
  const Field& k = x.algebra->field();
  const std::size_t nc = s->num_identity_classes();
  std::vector<Matrix> basis(nc);
  for (std::size_t cl = 0; cl < nc; ++cl) {
    const BlockId idb = s->block_of(c.identity(s->class_members(cl).front()));
    basis[cl] = column_basis(k, x.actions[idb]);
  }
  FunctorRep r{s, k, std::vector<std::size_t>(c.num_objects()), std::vector<Matrix>(c.num_morphisms())};
  for (ObjId o = 0; o < c.num_objects(); ++o) r.dims[o] = basis[s->identity_class(o)].cols();
  for (BlockId b = 0; b < s->num_blocks(); ++b) {
    const MorId f0 = s->block(b).front();
    const auto from = s->identity_class(c.src(f0)), to = s->identity_class(c.tgt(f0));
    Matrix m = solve_exact(k, basis[to], multiply(k, x.actions[b], basis[from]), "mitchell_inverse");
    for (MorId f : s->block(b)) r.mats[f] = m;
  }
  recheck(r, "mitchell_inverse");
  return r;
}

// ---------------------------------------------------------------------------
// Restriction and Kan extensions

FunctorRep restrict(const SchemoidMorphism& u, const FunctorRep& f) {
  if (!same_schemoid(*u.target, *f.schemoid)) throw PreconditionError("restrict: rep is not on the target");
  const FinCat& c = u.source->cat();
  FunctorRep r{u.source, f.field, std::vector<std::size_t>(c.num_objects()), std::vector<Matrix>(c.num_morphisms())};
  for (ObjId x = 0; x < c.num_objects(); ++x) r.dims[x] = f.dims[u.functor.obj[x]];
  for (MorId m = 0; m < c.num_morphisms(); ++m) r.mats[m] = f.mats[u.functor.mor[m]];
  recheck(r, "restrict");
  return r;
}

namespace {

// Summands (c, alpha) of the product or sum indexed by one class a of the
// target: alpha ranges over [D](a, [u c]) for the end, [D]([u c], a) for
// the coend.
struct Summands {
  std::vector<std::pair<ObjId, BlockId>> index;
  std::map<std::pair<ObjId, BlockId>, std::size_t> offset;
  std::size_t dim = 0;
};

struct KanSetup {
  const Schemoid& src;
  const Schemoid& tgt;
  Quotient q;
  std::vector<std::uint32_t> uclass;  // [u c] for each source object

  KanSetup(const SchemoidMorphism& u)
      : src(*u.source), tgt(*u.target), q(quotient_category(*u.target)) {
    for (ObjId c = 0; c < src.cat().num_objects(); ++c) uclass.push_back(tgt.identity_class(u.functor.obj[c]));
  }
  BlockId compose(BlockId g, BlockId f) const { return q.category.compose(g, f); }
  Summands summands(std::uint32_t a, bool end, const FunctorRep& m) const {
    Summands s;
    for (ObjId c = 0; c < src.cat().num_objects(); ++c)
      for (MorId alpha : end ? q.category.hom(a, uclass[c]) : q.category.hom(uclass[c], a)) {
        s.offset[{c, alpha}] = s.dim;
        s.index.push_back({c, alpha});
        s.dim += m.dims[c];
      }
    return s;
  }
};

void place(Matrix& target, std::size_t r0, std::size_t c0, const Matrix& m, const Field& k, bool negate = false) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      target(r0 + r, c0 + c) = k.add(target(r0 + r, c0 + c), negate ? k.neg(m(r, c)) : m(r, c));
}

FunctorRep assemble_on_target(const SchemoidMorphism& u, const Field& k, const std::vector<std::size_t>& class_dim,
                              const std::function<Matrix(BlockId)>& block_action) {
  const Schemoid& d = *u.target;
  const FinCat& dc = d.cat();
  FunctorRep r{u.target, k, std::vector<std::size_t>(dc.num_objects()), std::vector<Matrix>(dc.num_morphisms())};
  for (ObjId x = 0; x < dc.num_objects(); ++x) r.dims[x] = class_dim[d.identity_class(x)];
  for (BlockId b = 0; b < d.num_blocks(); ++b) {
    Matrix m = block_action(b);
    for (MorId f : d.block(b)) r.mats[f] = m;
  }
  return r;
}

}  // namespace

FunctorRep kan_right(const SchemoidMorphism& u, const FunctorRep& m) {
  if (!same_schemoid(*u.source, *m.schemoid)) throw PreconditionError("kan_right: rep is not on the source");
  KanSetup ks(u);
  const Field& k = m.field;
  const FinCat& c = ks.src.cat();
  const std::size_t nc = ks.tgt.num_identity_classes();
  std::vector<Summands> prod(nc);
  std::vector<Matrix> end_basis(nc);
  std::vector<std::size_t> class_dim(nc);
  for (std::uint32_t a = 0; a < nc; ++a) {
    prod[a] = ks.summands(a, true, m);
    const Summands& p = prod[a];
    std::vector<Matrix> rel;
    // Naturality: M(f) x_{c, alpha} = x_{c', [u f] alpha}.
    for (MorId f = 0; f < c.num_morphisms(); ++f) {
      if (c.is_identity(f)) continue;
      const ObjId s = c.src(f), t = c.tgt(f);
      const BlockId beta = u.block_map[ks.src.block_of(f)];
      for (MorId alpha : ks.q.category.hom(a, ks.uclass[s])) {
        Matrix r(m.dims[t], p.dim);
        place(r, 0, p.offset.at({s, alpha}), m.mats[f], k);
        place(r, 0, p.offset.at({t, ks.compose(beta, alpha)}), Matrix::identity(m.dims[t]), k, true);
        rel.push_back(std::move(r));
      }
    }
    // Local constancy: x_{c, alpha} = x_{c', alpha} when id_c ~ id_c'.
    for (ObjId s = 0; s < c.num_objects(); ++s) {
      const ObjId rep = ks.src.class_members(ks.src.identity_class(s)).front();
      if (rep == s) continue;
      for (MorId alpha : ks.q.category.hom(a, ks.uclass[s])) {
        Matrix r(m.dims[s], p.dim);
        place(r, 0, p.offset.at({s, alpha}), Matrix::identity(m.dims[s]), k);
        place(r, 0, p.offset.at({rep, alpha}), Matrix::identity(m.dims[s]), k, true);
        rel.push_back(std::move(r));
      }
    }
    Matrix all(0, p.dim);
    for (const Matrix& r : rel) all = vstack(all, r);
    end_basis[a] = p.dim ? nullspace(k, all) : Matrix(0, 0);
    class_dim[a] = end_basis[a].cols();
  }
  FunctorRep r = assemble_on_target(u, k, class_dim, [&](BlockId beta) {
    const Arrow ar = ks.q.category.arrow(beta);
    const Summands &from = prod[ar.src], &to = prod[ar.tgt];
    // y_{c, alpha'} = x_{c, alpha' beta}
    Matrix t(to.dim, from.dim);
    for (const auto& [c0, alpha] : to.index)
      place(t, to.offset.at({c0, alpha}), from.offset.at({c0, ks.compose(alpha, beta)}),
            Matrix::identity(m.dims[c0]), k);
    if (class_dim[ar.src] == 0 || class_dim[ar.tgt] == 0)
      return Matrix(class_dim[ar.tgt], class_dim[ar.src]);
    return solve_exact(k, end_basis[ar.tgt], multiply(k, t, end_basis[ar.src]), "kan_right");
  });
  recheck(r, "kan_right");
  return r;
}

FunctorRep kan_left(const SchemoidMorphism& u, const FunctorRep& m) {
  if (!same_schemoid(*u.source, *m.schemoid)) throw PreconditionError("kan_left: rep is not on the source");
  KanSetup ks(u);
  const Field& k = m.field;
  const FinCat& c = ks.src.cat();
  const std::size_t nc = ks.tgt.num_identity_classes();
  std::vector<Summands> sum(nc);
  std::vector<Matrix> quotient_map(nc);
  std::vector<std::size_t> class_dim(nc);
  for (std::uint32_t a = 0; a < nc; ++a) {
    sum[a] = ks.summands(a, false, m);
    const Summands& p = sum[a];
    Matrix rel(p.dim, 0);
    // (c', alpha, M(f) x) ~ (c, alpha [u f], x) for f: c → c'.
    for (MorId f = 0; f < c.num_morphisms(); ++f) {
      if (c.is_identity(f)) continue;
      const ObjId s = c.src(f), t = c.tgt(f);
      const BlockId beta = u.block_map[ks.src.block_of(f)];
      for (MorId alpha : ks.q.category.hom(ks.uclass[t], a)) {
        Matrix r(p.dim, m.dims[s]);
        place(r, p.offset.at({t, alpha}), 0, m.mats[f], k);
        place(r, p.offset.at({s, ks.compose(alpha, beta)}), 0, Matrix::identity(m.dims[s]), k, true);
        rel = hstack(rel, r);
      }
    }
    for (ObjId s = 0; s < c.num_objects(); ++s) {
      const ObjId rep = ks.src.class_members(ks.src.identity_class(s)).front();
      if (rep == s) continue;
      for (MorId alpha : ks.q.category.hom(ks.uclass[s], a)) {
        Matrix r(p.dim, m.dims[s]);
        place(r, p.offset.at({s, alpha}), 0, Matrix::identity(m.dims[s]), k);
        place(r, p.offset.at({rep, alpha}), 0, Matrix::identity(m.dims[s]), k, true);
        rel = hstack(rel, r);
      }
    }
    quotient_map[a] = rel.cols() ? left_nullspace(k, rel) : Matrix::identity(p.dim);
    class_dim[a] = quotient_map[a].rows();
  }
  FunctorRep r = assemble_on_target(u, k, class_dim, [&](BlockId beta) {
    const Arrow ar = ks.q.category.arrow(beta);
    const Summands &from = sum[ar.src], &to = sum[ar.tgt];
    // (c, alpha, x) ↦ (c, beta alpha, x)
    Matrix t(to.dim, from.dim);
    for (const auto& [c0, alpha] : from.index)
      place(t, to.offset.at({c0, ks.compose(beta, alpha)}), from.offset.at({c0, alpha}),
            Matrix::identity(m.dims[c0]), k);
    if (class_dim[ar.src] == 0 || class_dim[ar.tgt] == 0)
      return Matrix(class_dim[ar.tgt], class_dim[ar.src]);
    return solve_right(k, quotient_map[ar.src], multiply(k, quotient_map[ar.tgt], t), "kan_left");
  });
  recheck(r, "kan_left");
  return r;
}

AdjunctionDims adjunction_check(const SchemoidMorphism& u, const FunctorRep& m, const FunctorRep& f) {
  const FunctorRep uf = restrict(u, f);
  AdjunctionDims d;
  d.restrict_to_m = lc_hom(uf, m).dimension;
  d.f_to_ran = lc_hom(f, kan_right(u, m)).dimension;
  d.lan_to_f = lc_hom(kan_left(u, m), f).dimension;
  d.m_to_restrict = lc_hom(m, uf).dimension;
  return d;
}

// ---------------------------------------------------------------------------
// Resolutions and Ext

namespace {

// Greedy generators of the submodule spanned by the columns of `w`, inside
// an ambient module with the given actions.
std::vector<Vec> greedy_generators(const Field& k, const std::vector<Matrix>& actions, const Matrix& w) {
  const std::size_t n = w.rows();
  const std::size_t target = rank(k, w);
  std::vector<Vec> gens, span;
  std::size_t have = 0;
  for (std::size_t j = 0; j < w.cols() && have < target; ++j) {
    Vec v = column_vec(w, j);
    std::vector<Vec> trial = span;
    trial.push_back(v);
    if (span_dimension(k, trial, n) == have) continue;
    gens.push_back(v);
    for (const Matrix& a : actions) span.push_back(column_vec(multiply(k, a, as_columns({v}, n)), 0));
    Matrix basis = column_basis(k, as_columns(span, n));
    span.clear();
    for (std::size_t c = 0; c < basis.cols(); ++c) span.push_back(column_vec(basis, c));
    have = span.size();
  }
  if (have != target) throw InvariantViolation("generator search did not reach the whole submodule");
  return gens;
}

// Map A^r → ambient sending the j-th free generator to gens[j].
Matrix free_cover(const Field& k, const std::vector<Matrix>& actions, const std::vector<Vec>& gens,
                  std::size_t ambient, std::size_t d) {
  Matrix m(ambient, gens.size() * d);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const Matrix g = as_columns({gens[j]}, ambient);
    for (std::size_t i = 0; i < d; ++i) m.set_block(0, j * d + i, multiply(k, actions[i], g));
  }
  return m;
}

bool same_algebra(const FDAlgebra& a, const FDAlgebra& b) {
  if (&a == &b) return true;
  if (a.field() != b.field() || a.dim() != b.dim() || a.labels() != b.labels()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.product(i, j) != b.product(i, j)) return false;
  return true;
}

}  // namespace

Resolution projective_resolution(const AlgModule& m, std::size_t length) {
  if (auto d = module_defect(m)) throw PreconditionError("projective_resolution: " + *d);
  const FDAlgebra& a = *m.algebra;
  const Field& k = a.field();
  const std::size_t d = a.dim();
  Resolution res{m.algebra, {}, {}, {}, {}};

  std::vector<Vec> gens = m.dim ? greedy_generators(k, m.actions, Matrix::identity(m.dim)) : std::vector<Vec>{};
  res.generators.push_back(gens);
  res.ranks.push_back(gens.size());
  res.augmentation = free_cover(k, m.actions, gens, m.dim, d);
  if (rank(k, res.augmentation) != m.dim) throw InvariantViolation("augmentation is not surjective");

  Matrix prev = res.augmentation;  // map out of P_i
  for (std::size_t i = 0; i < length; ++i) {
    const std::size_t ri = res.ranks.back();
    const std::size_t dim_pi = ri * d;
    const AlgModule pi = free_module(m.algebra, ri);
    Matrix kernel = dim_pi ? nullspace(k, prev) : Matrix(0, 0);
    std::vector<Vec> next = kernel.cols() ? greedy_generators(k, pi.actions, kernel) : std::vector<Vec>{};
    Matrix diff = free_cover(k, pi.actions, next, dim_pi, d);
    if (!multiply(k, prev, diff).is_zero()) throw InvariantViolation("d^2 != 0 in the resolution");
    if (rank(k, diff) != kernel.cols()) throw InvariantViolation("resolution is not exact at degree " + std::to_string(i));
    res.generators.push_back(next);
    res.ranks.push_back(next.size());
    res.differentials.push_back(diff);
    prev = std::move(diff);
  }
  return res;
}

std::size_t module_hom_dim(const AlgModule& m, const AlgModule& n) {
  if (!same_algebra(*m.algebra, *n.algebra)) throw PreconditionError("modules over different algebras");
  const Field& k = m.algebra->field();
  const std::size_t vars = n.dim * m.dim;
  if (vars == 0) return 0;
  // phi rho_M(e) = rho_N(e) phi, phi is n.dim x m.dim, variable r*m.dim + c.
  Equations eq{vars, {}};
  for (std::size_t e = 0; e < m.actions.size(); ++e) {
    const Matrix &am = m.actions[e], &an = n.actions[e];
    for (std::size_t r = 0; r < n.dim; ++r)
      for (std::size_t c = 0; c < m.dim; ++c) {
        std::vector<std::pair<std::size_t, Scalar>> row;
        for (std::size_t t = 0; t < m.dim; ++t)
          if (sgn(am(t, c))) row.emplace_back(r * m.dim + t, am(t, c));
        for (std::size_t t = 0; t < n.dim; ++t)
          if (sgn(an(r, t))) row.emplace_back(t * m.dim + c, k.neg(an(r, t)));
        if (!row.empty()) eq.add_row(std::move(row));
      }
  }
  return vars - rank(k, eq.matrix(k));
}

std::vector<std::size_t> ext_dims(const AlgModule& m, const AlgModule& n, std::size_t n_max) {
  if (!same_algebra(*m.algebra, *n.algebra)) throw PreconditionError("modules over different algebras");
  if (auto d = module_defect(n)) throw PreconditionError("ext_dims: " + *d);
  const Field& k = m.algebra->field();
  const std::size_t d = m.algebra->dim();
  const Resolution res = projective_resolution(m, n_max + 1);
  // delta^i: N^{r_i} → N^{r_{i+1}}, block (j, l) = sum_e w_j[l*d + e] rho_N(e_e).
  std::vector<std::size_t> delta_rank(n_max + 1);
  for (std::size_t i = 0; i <= n_max; ++i) {
    const auto& gens = res.generators[i + 1];
    Matrix delta(gens.size() * n.dim, res.ranks[i] * n.dim);
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (std::size_t l = 0; l < res.ranks[i]; ++l) {
        Matrix blk(n.dim, n.dim);
        for (std::size_t e = 0; e < d; ++e) {
          const Scalar& w = gens[j][l * d + e];
          if (sgn(w)) blk = add(k, blk, scale(k, w, n.actions[e]));
        }
        delta.set_block(j * n.dim, l * n.dim, blk);
      }
    delta_rank[i] = delta.empty() ? 0 : rank(k, delta);
  }
  std::vector<std::size_t> out(n_max + 1);
  for (std::size_t i = 0; i <= n_max; ++i)
    out[i] = res.ranks[i] * n.dim - delta_rank[i] - (i ? delta_rank[i - 1] : 0);
  if (out[0] != module_hom_dim(m, n)) throw InvariantViolation("Ext^0 differs from Hom");
  return out;
}

std::vector<std::size_t> schemoid_cohomology(const SchemoidMorphism& u, const FunctorRep& m, std::size_t n_max) {
  const FunctorRep ran = kan_right(u, m);
  const FunctorRep one = FunctorRep::constant(u.target, m.field, 1);
  return ext_dims(mitchell(one), mitchell(ran), n_max);
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<FunctorRep> enumerate_functor_reps(SchemoidPtr s, Field k, std::size_t dim_bound,
                                               const EnumerationGuard& guard) {
  if (!k.is_prime()) throw PreconditionError("enumeration needs a prime field");
  const std::uint32_t p = k.characteristic();
  if (p > guard.max_prime)
    throw GuardExceeded("enumeration refused: p = " + std::to_string(p) + " exceeds " + std::to_string(guard.max_prime));
  const FinCat& c = s->cat();
  const std::size_t nobj = c.num_objects(), nb = s->num_blocks();

  // Objects forced to share a dimension.
  std::vector<ObjId> parent(nobj);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<ObjId(ObjId)> find = [&](ObjId x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](ObjId a, ObjId b) { parent[find(a)] = find(b); };
  std::vector<bool> fixed(nb, false);
  for (BlockId b = 0; b < nb; ++b) {
    const auto& mem = s->block(b);
    for (MorId f : mem) {
      unite(c.src(f), c.src(mem.front()));
      unite(c.tgt(f), c.tgt(mem.front()));
      if (c.is_identity(f)) fixed[b] = true;
    }
    if (fixed[b])
      for (MorId f : mem) unite(c.src(f), c.tgt(f));
  }
  std::vector<std::size_t> cls(nobj);
  std::vector<ObjId> roots;
  for (ObjId x = 0; x < nobj; ++x) {
    auto it = std::find(roots.begin(), roots.end(), find(x));
    cls[x] = static_cast<std::size_t>(it - roots.begin());
    if (it == roots.end()) roots.push_back(find(x));
  }
  const std::size_t ncls = roots.size();
  std::uint64_t assignments = 1;
  for (std::size_t i = 0; i < ncls; ++i) {
    assignments *= dim_bound + 1;
    if (assignments > guard.max_dim_assignments)
      throw GuardExceeded("enumeration refused: more than " + std::to_string(guard.max_dim_assignments) +
                          " dimension vectors");
  }

  // Constraint M(sigma) M(tau) = M(mu), checked once the last of the three is set.
  std::vector<BlockId> free_blocks;
  std::vector<std::size_t> position(nb, 0);
  for (BlockId b = 0; b < nb; ++b)
    if (!fixed[b]) {
      position[b] = free_blocks.size() + 1;
      free_blocks.push_back(b);
    }
  std::vector<std::vector<Constant>> trigger(free_blocks.size() + 1);
  for (const Constant& q : s->constants()) {
    if (q.value == 0) continue;
    trigger[std::max({position[q.sigma], position[q.tau], position[q.mu]})].push_back(q);
  }

  std::vector<FunctorRep> out;
  std::uint64_t candidates = 0;
  std::vector<std::size_t> dimv(ncls, 0);
  for (std::uint64_t code = 0; code < assignments; ++code) {
    for (std::size_t i = 0, rest = code; i < ncls; ++i, rest /= dim_bound + 1)
      dimv[ncls - 1 - i] = rest % (dim_bound + 1);
    std::vector<std::size_t> dims(nobj);
    for (ObjId x = 0; x < nobj; ++x) dims[x] = dimv[cls[x]];

    std::vector<Matrix> bm(nb);
    for (BlockId b = 0; b < nb; ++b) {
      const MorId f = s->block(b).front();
      bm[b] = fixed[b] ? Matrix::identity(dims[c.src(f)]) : Matrix(dims[c.tgt(f)], dims[c.src(f)]);
    }
    auto satisfied = [&](std::size_t level) {
      for (const Constant& q : trigger[level])
        if (multiply(k, bm[q.sigma], bm[q.tau]) != bm[q.mu]) return false;
      return true;
    };
    if (!satisfied(0)) continue;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == free_blocks.size()) {
        std::map<BlockId, Matrix> given;
        for (BlockId b = 0; b < nb; ++b) given.emplace(b, bm[b]);
        out.push_back(FunctorRep::from_blocks(s, k, dims, given));
        return;
      }
      Matrix& m = bm[free_blocks[i]];
      const std::size_t entries = m.rows() * m.cols();
      std::vector<std::uint32_t> digits(entries, 0);
      while (true) {
        if (++candidates > guard.max_candidates)
          throw GuardExceeded("enumeration refused: more than " + std::to_string(guard.max_candidates) +
                              " candidate matrices");
        for (std::size_t e = 0; e < entries; ++e) m(e / m.cols(), e % m.cols()) = digits[e];
        if (satisfied(i + 1)) rec(i + 1);
        // Row-major odometer, last entry fastest.
        std::size_t e = entries;
        while (e > 0 && ++digits[e - 1] == p) digits[--e] = 0;
        if (e == 0) break;
      }
    };
    rec(0);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Morita witnesses

MoritaReport morita_witness_check(const SchemoidMorphism& u, const SchemoidMorphism& v, Field k, std::size_t dim_bound) {
  MoritaReport rep;
  auto fail = [&](const std::string& w) {
    if (rep.witness.empty()) rep.witness = w;
  };
  const FinCat& dcat = u.source->cat();
  if (!same_schemoid(*u.target, *v.source) || !same_schemoid(*v.target, *u.source))
    throw PreconditionError("morita_witness_check: u and v are not opposite morphisms");

  // Clause 1.
  rep.clause1 = true;
  for (ObjId x = 0; x < dcat.num_objects() && rep.clause1; ++x)
    if (v.functor.obj[u.functor.obj[x]] != x) {
      rep.clause1 = false;
      fail("clause 1: v(u(" + u.source->object_name(x) + ")) = " +
           u.source->object_name(v.functor.obj[u.functor.obj[x]]));
    }
  for (MorId f = 0; f < dcat.num_morphisms() && rep.clause1; ++f)
    if (v.functor.mor[u.functor.mor[f]] != f) {
      rep.clause1 = false;
      fail("clause 1: v(u(morphism " + std::to_string(f) + ")) = morphism " +
           std::to_string(v.functor.mor[u.functor.mor[f]]));
    }

  const auto reps_d = enumerate_functor_reps(u.source, k, dim_bound);
  const auto reps_c = enumerate_functor_reps(v.source, k, dim_bound);
  rep.reps_d = reps_d.size();
  rep.reps_c = reps_c.size();

  // Clause 2.
  rep.clause2 = true;
  for (std::size_t i = 0; i < reps_d.size() && rep.clause2; ++i)
    if (restrict(u, restrict(v, reps_d[i])) != reps_d[i]) {
      rep.clause2 = false;
      fail("clause 2: u*v* changes enumerated rep " + std::to_string(i) + " of the source of u");
    }

  // Clause 3.
  rep.clause3 = true;
  for (std::size_t i = 0; i < reps_c.size() && rep.clause3; ++i) {
    const FunctorRep& m = reps_c[i];
    const FunctorRep vum = restrict(v, restrict(u, m));
    if (vum.dims != m.dims) {
      rep.clause3 = false;
      fail("clause 3: v*u*M and M differ in dimension for enumerated rep " + std::to_string(i));
      break;
    }
    Components ids;
    for (std::size_t d : m.dims) ids.push_back(Matrix::identity(d));
    if (auto d = lc_nat_defect(vum, m, ids)) {
      rep.clause3 = false;
      fail("clause 3: identities are not a transformation v*u*M → M for enumerated rep " + std::to_string(i) + ": " + *d);
    }
  }

  // Clause 4.
  rep.clause4 = true;
  auto carries = [&](const SchemoidMorphism& w, const std::vector<FunctorRep>& reps, const char* name) {
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = 0; j < reps.size(); ++j) {
        const HomSpace h = lc_hom(reps[i], reps[j]);
        const FunctorRep wi = restrict(w, reps[i]), wj = restrict(w, reps[j]);
        for (const Components& eta : h.basis) {
          Components pulled;
          for (ObjId x = 0; x < w.source->cat().num_objects(); ++x) pulled.push_back(eta[w.functor.obj[x]]);
          if (auto d = lc_nat_defect(wi, wj, pulled)) {
            fail(std::string("clause 4: ") + name + " breaks a transformation between enumerated reps " +
                 std::to_string(i) + " and " + std::to_string(j) + ": " + *d);
            return false;
          }
        }
      }
    return true;
  };
  rep.clause4 = carries(u, reps_c, "u*") && carries(v, reps_d, "v*");
  return rep;
}

// ---------------------------------------------------------------------------
// Bimodules

BimoduleResult bimodule_functors(SchemoidPtr c1, SchemoidPtr c2, const FunctorRep& u, const FunctorRep& f,
                                 const FunctorRep& g) {
  const FinCat &a = c1->cat(), &b = c2->cat();
  const std::size_t n2 = b.num_objects(), m2 = b.num_morphisms();
  const FinCat& pc = u.schemoid->cat();
  if (pc.num_objects() != a.num_objects() * n2 || pc.num_morphisms() != a.num_morphisms() * m2)
    throw StructuralError("bimodule is not on a product of the two schemoids");
  if (!same_schemoid(*f.schemoid, *c1) || !same_schemoid(*g.schemoid, *c2))
    throw StructuralError("bimodule_functors: F must live on C1 and G on C2");
  const Field& k = u.field;
  auto uo = [&](ObjId x, ObjId y) { return u.dims[x * n2 + y]; };
  auto um = [&](MorId phi, MorId psi) -> const Matrix& { return u.mats[phi * m2 + psi]; };

  // F ⊗_{C1} U on C2.
  std::vector<std::size_t> tdim(n2);
  std::vector<std::vector<std::size_t>> off(n2);
  std::vector<Matrix> qmap(n2);
  for (ObjId y = 0; y < n2; ++y) {
    off[y].resize(a.num_objects() + 1, 0);
    for (ObjId d = 0; d < a.num_objects(); ++d) off[y][d + 1] = off[y][d] + f.dims[d] * uo(d, y);
    const std::size_t total = off[y].back();
    Matrix rel(total, 0);
    for (MorId phi = 0; phi < a.num_morphisms(); ++phi) {
      if (a.is_identity(phi)) continue;
      const ObjId d = a.src(phi), d2 = a.tgt(phi);
      // F(phi) x ⊗ y - x ⊗ U(phi, id) y, for x in F(d), y in U(d', a).
      const Matrix left = kronecker(k, f.mats[phi], Matrix::identity(uo(d2, y)));
      const Matrix right = kronecker(k, Matrix::identity(f.dims[d]), um(phi, b.identity(y)));
      Matrix r(total, left.cols());
      place(r, off[y][d2], 0, left, k);
      place(r, off[y][d], 0, right, k, true);
      rel = hstack(rel, r);
    }
    for (ObjId d = 0; d < a.num_objects(); ++d) {
      const ObjId rep = c1->class_members(c1->identity_class(d)).front();
      if (rep == d) continue;
      const std::size_t sz = f.dims[d] * uo(d, y);
      Matrix r(total, sz);
      place(r, off[y][d], 0, Matrix::identity(sz), k);
      place(r, off[y][rep], 0, Matrix::identity(sz), k, true);
      rel = hstack(rel, r);
    }
    qmap[y] = rel.cols() ? left_nullspace(k, rel) : Matrix::identity(total);
    tdim[y] = qmap[y].rows();
  }
  FunctorRep tensor{c2, k, tdim, std::vector<Matrix>(m2)};
  for (MorId psi = 0; psi < m2; ++psi) {
    const ObjId y = b.src(psi), y2 = b.tgt(psi);
    Matrix t(off[y2].back(), off[y].back());
    for (ObjId d = 0; d < a.num_objects(); ++d)
      place(t, off[y2][d], off[y][d], kronecker(k, Matrix::identity(f.dims[d]), um(a.identity(d), psi)), k);
    tensor.mats[psi] = (tdim[y] == 0 || tdim[y2] == 0)
                           ? Matrix(tdim[y2], tdim[y])
                           : solve_right(k, qmap[y], multiply(k, qmap[y2], t), "tensor");
  }
  recheck(tensor, "bimodule tensor");

  // hom_U(G) on C1.
  std::vector<HomSpace> homs;
  std::vector<FunctorRep> slices;
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    FunctorRep slice{c2, k, std::vector<std::size_t>(n2), std::vector<Matrix>(m2)};
    for (ObjId y = 0; y < n2; ++y) slice.dims[y] = uo(x, y);
    for (MorId psi = 0; psi < m2; ++psi) slice.mats[psi] = um(a.identity(x), psi);
    homs.push_back(lc_hom(slice, g));
    slices.push_back(std::move(slice));
  }
  FunctorRep hom{c1, k, std::vector<std::size_t>(a.num_objects()), std::vector<Matrix>(a.num_morphisms())};
  for (ObjId x = 0; x < a.num_objects(); ++x) hom.dims[x] = homs[x].dimension;
  for (MorId phi = 0; phi < a.num_morphisms(); ++phi) {
    const ObjId x = a.src(phi), x2 = a.tgt(phi);
    if (hom.dims[x] == 0 || hom.dims[x2] == 0) {
      hom.mats[phi] = Matrix(hom.dims[x2], hom.dims[x]);
      continue;
    }
    // eta ↦ eta ∘ U(phi, -)
    std::vector<Vec> images;
    for (const Components& eta : homs[x].basis) {
      Components img;
      for (ObjId y = 0; y < n2; ++y) img.push_back(multiply(k, eta[y], um(phi, b.identity(y))));
      images.push_back(flatten(img));
    }
    std::vector<Vec> target;
    for (const Components& eta : homs[x2].basis) target.push_back(flatten(eta));
    const std::size_t len = target.front().size();
    hom.mats[phi] = solve_exact(k, as_columns(target, len), as_columns(images, len), "hom_U");
  }
  recheck(hom, "bimodule hom");

  BimoduleResult res{tensor, hom, 0, 0};
  res.tensor_to_g = lc_hom(res.tensor, g).dimension;
  res.f_to_hom = lc_hom(f, res.hom).dimension;
  return res;
}

FunctorRep regular_bimodule(SchemoidPtr s, SchemoidPtr product, Field k) {
  const Quotient q = quotient_category(*s);
  const FinCat& c = s->cat();
  const FinCat& pc = product->cat();
  const std::size_t n = c.num_objects(), m = c.num_morphisms();
  if (pc.num_objects() != n * n || pc.num_morphisms() != m * m)
    throw StructuralError("regular_bimodule: product does not match the schemoid");
  FunctorRep u{product, k, std::vector<std::size_t>(n * n), std::vector<Matrix>(m * m)};
  auto hom = [&](ObjId x, ObjId y) { return q.category.hom(s->identity_class(x), s->identity_class(y)); };
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) u.dims[x * n + y] = hom(x, y).size();
  for (MorId phi = 0; phi < m; ++phi)
    for (MorId psi = 0; psi < m; ++psi) {
      // In the opposite factor phi runs t(phi) → s(phi).
      const ObjId x = c.tgt(phi), x2 = c.src(phi), y = c.src(psi), y2 = c.tgt(psi);
      const auto from = hom(x, y), to = hom(x2, y2);
      Matrix mat(to.size(), from.size());
      for (std::size_t j = 0; j < from.size(); ++j) {
        const MorId img = q.category.compose(s->block_of(psi), q.category.compose(from[j], s->block_of(phi)));
        mat(static_cast<std::size_t>(std::find(to.begin(), to.end(), img) - to.begin()), j) = 1;
      }
      u.mats[phi * m + psi] = std::move(mat);
    }
  recheck(u, "regular_bimodule");
  return u;
}

}  // namespace schemoid
