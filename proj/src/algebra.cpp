#include "schemoid/algebra.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "schemoid/error.hpp"

namespace schemoid {

namespace {

// Merge duplicate indices, normalise, drop zeros.
std::vector<Term> canonical(const Field& k, std::vector<Term> terms) {
  std::map<std::uint32_t, Scalar> acc;
  for (auto& t : terms) {
    auto [it, fresh] = acc.emplace(t.index, k.zero());
    it->second = k.add(it->second, k.normalize(t.coeff));
  }
  std::vector<Term> out;
  for (auto& [i, c] : acc)
    if (sgn(c) != 0) out.push_back({i, c});
  return out;
}

Vec column_of(const Matrix& m, std::size_t c) {
  Vec v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, c);
  return v;
}

Vec apply(const Field& k, const Matrix& m, const Vec& v) {
  Vec out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Scalar s = 0;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(v[c]) && sgn(m(r, c))) s = k.add(s, k.mul(m(r, c), v[c]));
    out[r] = s;
  }
  return out;
}

}  // namespace

FDAlgebra::FDAlgebra(Field k, std::vector<std::string> labels,
                     std::vector<std::vector<Term>> products, std::optional<Vec> unit)
    : field_(k), labels_(std::move(labels)), tensor_(std::move(products)) {
  const std::size_t d = labels_.size();
  if (tensor_.size() != d * d)
    throw StructuralError("structure tensor has " + std::to_string(tensor_.size()) +
                          " entries for dimension " + std::to_string(d));
  for (auto& t : tensor_) {
    for (const auto& term : t)
      if (term.index >= d) throw StructuralError("structure tensor index out of range");
    t = canonical(field_, std::move(t));
  }
  if (unit) {
    if (unit->size() != d) throw StructuralError("unit has the wrong length");
    unit_ = *unit;
    for (auto& c : unit_) c = field_.normalize(c);
    for (std::size_t j = 0; j < d; ++j) {
      const Vec e = basis_vector(j);
      if (multiply(unit_, e) != e || multiply(e, unit_) != e)
        throw ValidationError("the supplied unit is not a unit (fails on " + labels_[j] + ")");
    }
    return;
  }
  // Unknown u: u e_j = e_j and e_j u = e_j for every j.
  Matrix a(2 * d * d, d), b(2 * d * d, 1);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      for (const auto& t : product(i, j)) a(j * d + t.index, i) = field_.add(a(j * d + t.index, i), t.coeff);
      for (const auto& t : product(j, i))
        a(d * d + j * d + t.index, i) = field_.add(a(d * d + j * d + t.index, i), t.coeff);
    }
    b(j * d + j, 0) = 1;
    b(d * d + j * d + j, 0) = 1;
  }
  auto x = solve(field_, a, b);
  if (!x) throw ValidationError("algebra has no unit");
  unit_ = column_of(*x, 0);
}

Vec FDAlgebra::basis_vector(std::size_t i) const {
  Vec v(dim());
  v[i] = 1;
  return v;
}

Vec FDAlgebra::multiply(const Vec& a, const Vec& b) const {
  const std::size_t d = dim();
  Vec out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(b[j]) == 0) continue;
      const Scalar ab = field_.mul(a[i], b[j]);
      for (const auto& t : product(i, j)) out[t.index] = field_.add(out[t.index], field_.mul(ab, t.coeff));
    }
  }
  return out;
}

Matrix FDAlgebra::left_mult(std::size_t i) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& t : product(i, j)) m(t.index, j) = t.coeff;
  return m;
}

Matrix FDAlgebra::right_mult(std::size_t i) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& t : product(j, i)) m(t.index, j) = t.coeff;
  return m;
}

bool FDAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (product(i, j) != product(j, i)) return false;
  return true;
}

std::optional<std::string> associativity_defect(const FDAlgebra& a) {
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec ij(d);
      for (const auto& t : a.product(i, j)) ij[t.index] = t.coeff;
      for (std::size_t l = 0; l < d; ++l) {
        Vec jl(d);
        for (const auto& t : a.product(j, l)) jl[t.index] = t.coeff;
        if (a.multiply(ij, a.basis_vector(l)) != a.multiply(a.basis_vector(i), jl))
          return "(" + a.labels()[i] + " " + a.labels()[j] + ") " + a.labels()[l] + " != " +
                 a.labels()[i] + " (" + a.labels()[j] + " " + a.labels()[l] + ")";
      }
    }
  return std::nullopt;
}

FDAlgebra category_algebra(const FinCat& c, const Field& k, std::vector<std::string> labels) {
  const std::size_t m = c.num_morphisms();
  if (labels.empty())
    for (MorId f = 0; f < m; ++f) labels.push_back("m" + std::to_string(f));
  std::vector<std::vector<Term>> prods(m * m);
  for (MorId g = 0; g < m; ++g)
    for (MorId f : c.into(c.src(g))) prods[g * m + f].push_back({c.compose_unchecked(g, f), 1});
  Vec unit(m);
  for (ObjId x = 0; x < c.num_objects(); ++x) unit[c.identity(x)] = 1;
  return FDAlgebra(k, std::move(labels), std::move(prods), std::move(unit));
}

namespace {

std::vector<std::string> block_labels(const Schemoid& s) {
  std::vector<std::string> l;
  for (BlockId b = 0; b < s.num_blocks(); ++b) l.push_back(s.block_name(b));
  return l;
}

std::optional<Vec> identity_block_sum(const Schemoid& s) {
  Vec u(s.num_blocks());
  const FinCat& c = s.cat();
  for (BlockId b = 0; b < s.num_blocks(); ++b) {
    const auto& mem = s.block(b);
    const auto ids = std::count_if(mem.begin(), mem.end(), [&](MorId f) { return c.is_identity(f); });
    if (ids == 0) continue;
    if (static_cast<std::size_t>(ids) != mem.size()) return std::nullopt;
    u[b] = 1;
  }
  return u;
}

}  // namespace

FDAlgebra bose_mesner(const Schemoid& s, const Field& k) {
  const std::size_t nb = s.num_blocks();
  std::vector<std::vector<Term>> prods(nb * nb);
  for (const Constant& c : s.constants())
    prods[c.sigma * nb + c.tau].push_back({c.mu, Scalar(static_cast<unsigned long>(c.value))});
  return FDAlgebra(k, block_labels(s), std::move(prods), identity_block_sum(s));
}

std::optional<std::string> bose_mesner_relation_defect(const Schemoid& s) {
  const FinCat& c = s.cat();
  // Coefficient of each morphism h in (sum sigma)(sum tau), expanded directly.
  std::map<std::tuple<BlockId, BlockId, MorId>, std::uint64_t> expanded;
  for (MorId a = 0; a < c.num_morphisms(); ++a)
    for (MorId b : c.into(c.src(a))) ++expanded[{s.block_of(a), s.block_of(b), c.compose_unchecked(a, b)}];
  for (const auto& [key, count] : expanded) {
    const auto [sigma, tau, h] = key;
    const std::uint64_t p = s.constant(sigma, tau, s.block_of(h));
    if (p != count)
      return "coefficient of morphism " + std::to_string(h) + " in " + s.block_name(sigma) + "*" +
             s.block_name(tau) + " is " + std::to_string(count) + " but the structure constant is " +
             std::to_string(p);
  }
  for (const Constant& k : s.constants())
    for (MorId h : s.block(k.mu))
      if (!expanded.count({k.sigma, k.tau, h}))
        return "morphism " + std::to_string(h) + " of " + s.block_name(k.mu) + " is missing from " +
               s.block_name(k.sigma) + "*" + s.block_name(k.tau);
  return std::nullopt;
}

FDAlgebra quotient_linear_algebra(const Schemoid& s, const Field& k) {
  TamenessReport rep = tameness_report(s);
  if (!rep.unital)
    throw PreconditionError("quotient linear algebra needs a unital schemoid: " + rep.unital_witness);
  const FinCat& c = s.cat();
  const std::size_t nb = s.num_blocks();
  std::vector<std::vector<Term>> prods(nb * nb);
  for (const Constant& q : s.constants()) {
    const MorId a = s.block(q.sigma).front(), b = s.block(q.tau).front();
    if (s.identity_class(c.src(a)) != s.identity_class(c.tgt(b))) continue;
    prods[q.sigma * nb + q.tau].push_back({q.mu, Scalar(static_cast<unsigned long>(q.value))});
  }
  return FDAlgebra(k, block_labels(s), std::move(prods), identity_block_sum(s));
}

FDAlgebra quotient_category_algebra(const Schemoid& s, const Field& k) {
  Quotient q = quotient_category(s);
  return category_algebra(q.category, k, block_labels(s));
}

std::optional<std::string> algebra_map_defect(const FDAlgebra& src, const FDAlgebra& tgt,
                                              const AlgebraMap& f) {
  const Field& k = tgt.field();
  if (f.matrix.rows() != tgt.dim() || f.matrix.cols() != src.dim())
    return "map matrix has the wrong shape";
  if (apply(k, f.matrix, src.unit()) != tgt.unit()) return "unit is not preserved";
  std::vector<Vec> img(src.dim());
  for (std::size_t i = 0; i < src.dim(); ++i) img[i] = column_of(f.matrix, i);
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = 0; j < src.dim(); ++j) {
      Vec ij(src.dim());
      for (const auto& t : src.product(i, j)) ij[t.index] = t.coeff;
      if (apply(k, f.matrix, ij) != tgt.multiply(img[i], img[j]))
        return "f(" + src.labels()[i] + " " + src.labels()[j] + ") != f(" + src.labels()[i] +
               ") f(" + src.labels()[j] + ")";
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Stanley-Reisner

namespace {

std::string monomial_name(Subset s) {
  if (!s) return "1";
  std::string r;
  for (unsigned i = 0; i < 64; ++i)
    if (s >> i & 1) r += "x" + std::to_string(i + 1);
  return r;
}

FDAlgebra sr_algebra(const std::vector<Subset>& monomials, const Field& f) {
  const std::size_t d = monomials.size();
  std::map<Subset, std::uint32_t> index;
  for (std::uint32_t i = 0; i < d; ++i) index[monomials[i]] = i;
  std::vector<std::vector<Term>> prods(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (monomials[i] & monomials[j]) continue;  // x_v^2 = 0
      auto it = index.find(monomials[i] | monomials[j]);
      if (it != index.end()) prods[i * d + j].push_back({it->second, 1});  // non-faces vanish
    }
  std::vector<std::string> labels;
  for (Subset m : monomials) labels.push_back(monomial_name(m));
  Vec unit(d);
  unit[index.at(0)] = 1;
  return FDAlgebra(f, std::move(labels), std::move(prods), std::move(unit));
}

}  // namespace

SrComparison stanley_reisner_mod_squares(const SimplicialComplex& k, const Field& f) {
  PowersetSchemoid p = simplicial_schemoid(k);
  std::vector<Subset> monomials = p.objects;  // empty face first, then faces by (size, lex)
  FDAlgebra sr = sr_algebra(monomials, f);
  FDAlgebra bm = bose_mesner(p.schemoid, f);
  Matrix alpha(bm.dim(), sr.dim());
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    auto it = std::find(p.differences.begin(), p.differences.end(), monomials[i]);
    if (it == p.differences.end())
      throw InvariantViolation("face " + subset_name(monomials[i]) + " has no difference block");
    alpha(static_cast<std::size_t>(it - p.differences.begin()), i) = 1;
  }
  SrComparison out{std::move(sr), std::move(bm), std::move(monomials), {std::move(alpha)}, false, {}};
  if (out.alpha.matrix.rows() != out.alpha.matrix.cols() || !inverse(f, out.alpha.matrix)) {
    out.defect = "alpha is not bijective";
  } else if (auto d = algebra_map_defect(out.sr, out.bm, out.alpha)) {
    out.defect = *d;
  } else {
    out.alpha_is_iso = true;
  }
  return out;
}

SrPullbacks sr_pullbacks(const SimplicialComplex& k, const SimplicialComplex& l,
                         const std::vector<std::uint32_t>& phi, const Field& f) {
  SimplicialMapResult m = simplicial_map_morphism(k, l, phi);
  if (!m.ok()) throw PreconditionError("sr_pullbacks: " + m.rejection);
  if (!non_degenerate(k, phi))
    throw PreconditionError("sr_pullbacks needs a map that is injective on every face");
  SrComparison ck = stanley_reisner_mod_squares(k, f);
  SrComparison cl = stanley_reisner_mod_squares(l, f);

  auto sr_index = [](const SrComparison& c, Subset s) {
    return static_cast<std::size_t>(std::find(c.monomials.begin(), c.monomials.end(), s) - c.monomials.begin());
  };
  auto image = [&](Subset s) {
    Subset r = 0;
    for (std::size_t i = 0; i < k.vertices; ++i)
      if (s >> i & 1) r |= Subset{1} << phi[i];
    return r;
  };

  // phi*(y_tau) = prod_{j in tau} sum_{i in phi^{-1}(j)} x_i, computed in SR(K).
  Matrix phi_star(ck.sr.dim(), cl.sr.dim());
  for (std::size_t c = 0; c < cl.monomials.size(); ++c) {
    Vec acc = ck.sr.basis_vector(sr_index(ck, 0));
    const Subset tau = cl.monomials[c];
    for (unsigned j = 0; j < 64; ++j) {
      if (!(tau >> j & 1)) continue;
      Vec gen(ck.sr.dim());
      for (std::size_t i = 0; i < k.vertices; ++i)
        if (phi[i] == j) {
          const std::size_t idx = sr_index(ck, Subset{1} << i);
          if (idx < gen.size()) gen[idx] = f.add(gen[idx], f.one());
        }
      acc = ck.sr.multiply(acc, gen);
    }
    for (std::size_t r = 0; r < acc.size(); ++r) phi_star(r, c) = acc[r];
  }

  // P(phi)*(tau~) = sum of sigma~ over faces sigma (with the empty face) that
  // phi carries bijectively onto tau.
  PowersetSchemoid pk = simplicial_schemoid(k), pl = simplicial_schemoid(l);
  Matrix pphi(pk.schemoid.num_blocks(), pl.schemoid.num_blocks());
  for (std::size_t c = 0; c < pl.differences.size(); ++c)
    for (std::size_t r = 0; r < pk.differences.size(); ++r) {
      const Subset sigma = pk.differences[r];
      if (image(sigma) == pl.differences[c] && std::popcount(sigma) == std::popcount(pl.differences[c]))
        pphi(r, c) = 1;
    }

  SrPullbacks out{{std::move(phi_star)}, {std::move(pphi)}, false, false, false};
  out.phi_star_multiplicative = !algebra_map_defect(cl.sr, ck.sr, out.phi_star).has_value();
  out.pphi_star_multiplicative = !algebra_map_defect(cl.bm, ck.bm, out.pphi_star).has_value();
  out.commutes = multiply(f, ck.alpha.matrix, out.phi_star.matrix) ==
                 multiply(f, out.pphi_star.matrix, cl.alpha.matrix);
  return out;
}

// ---------------------------------------------------------------------------
// Center, Hochschild cohomology

CenterResult center(const FDAlgebra& a) {
  const std::size_t d = a.dim();
  const Field& k = a.field();
  // Column c: coordinates of e_c e_i - e_i e_c, stacked over i.
  Matrix m(d * d, d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t i = 0; i < d; ++i) {
      for (const auto& t : a.product(c, i)) m(i * d + t.index, c) = k.add(m(i * d + t.index, c), t.coeff);
      for (const auto& t : a.product(i, c)) m(i * d + t.index, c) = k.sub(m(i * d + t.index, c), t.coeff);
    }
  Matrix ns = nullspace(k, m);
  CenterResult r{ns.cols(), {}};
  for (std::size_t j = 0; j < ns.cols(); ++j) r.basis.push_back(column_of(ns, j));
  return r;
}

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// Matrix of the Hochschild coboundary C^n → C^{n+1}, C^n = Hom(A^{⊗n}, A).
// Column (J, b) is the cochain sending e_J to e_b; row (I, out).
Matrix hochschild_coboundary(const FDAlgebra& a, std::size_t n) {
  const Field& k = a.field();
  const std::size_t d = a.dim();
  const std::size_t dn = ipow(d, n), dn1 = dn * d;
  Matrix m(dn1 * d, dn * d);
  auto add = [&](std::size_t row, std::size_t col, const Scalar& v) { m(row, col) = k.add(m(row, col), v); };
  const Scalar minus_one = k.from_int(-1);
  std::vector<std::size_t> digits(n + 1);
  for (std::size_t I = 0; I < dn1; ++I) {
    for (std::size_t p = 0, rest = I; p <= n; ++p) {
      digits[n - p] = rest % d;
      rest /= d;
    }
    // a_1 f(a_2, ..., a_{n+1})
    {
      const std::size_t J = I % dn;
      for (std::size_t b = 0; b < d; ++b)
        for (const auto& t : a.product(digits[0], b)) add(I * d + t.index, J * d + b, t.coeff);
    }
    // sum_i (-1)^i f(..., a_i a_{i+1}, ...)
    for (std::size_t i = 1; i <= n; ++i) {
      const Scalar sign = i % 2 ? minus_one : k.one();
      for (const auto& t : a.product(digits[i - 1], digits[i])) {
        std::size_t J = 0;
        for (std::size_t p = 0; p <= n; ++p) {
          if (p == i) continue;
          J = J * d + (p == i - 1 ? t.index : digits[p]);
        }
        const Scalar v = k.mul(sign, t.coeff);
        for (std::size_t b = 0; b < d; ++b) add(I * d + b, J * d + b, v);
      }
    }
    // (-1)^{n+1} f(a_1, ..., a_n) a_{n+1}
    {
      const Scalar sign = (n + 1) % 2 ? minus_one : k.one();
      const std::size_t J = I / d;
      for (std::size_t b = 0; b < d; ++b)
        for (const auto& t : a.product(b, digits[n])) add(I * d + t.index, J * d + b, k.mul(sign, t.coeff));
    }
  }
  return m;
}

}  // namespace

std::vector<std::size_t> hochschild_cohomology(const FDAlgebra& a, std::size_t n_max,
                                               std::size_t max_dim, std::size_t max_cells) {
  const std::size_t d = a.dim();
  if (d > max_dim)
    throw GuardExceeded("Hochschild cohomology refused: dimension " + std::to_string(d) +
                        " exceeds " + std::to_string(max_dim));
  if (d == 0) return std::vector<std::size_t>(n_max + 1, 0);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const double cells = static_cast<double>(ipow(d, n + 2)) * static_cast<double>(ipow(d, n + 1));
    if (cells > static_cast<double>(max_cells))
      throw GuardExceeded("Hochschild cohomology refused: the degree " + std::to_string(n) +
                          " coboundary would have " + std::to_string(static_cast<std::uint64_t>(cells)) +
                          " entries (limit " + std::to_string(max_cells) + ")");
  }
  std::vector<std::size_t> ranks(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) ranks[n] = rank(a.field(), hochschild_coboundary(a, n));
  std::vector<std::size_t> hh(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n)
    hh[n] = ipow(d, n + 1) - ranks[n] - (n ? ranks[n - 1] : 0);
  if (hh[0] != center(a).dimension)
    throw InvariantViolation("HH^0 differs from the dimension of the center");
  return hh;
}

std::size_t span_dimension(const Field& k, const std::vector<Vec>& vs, std::size_t dim) {
  if (vs.empty()) return 0;
  Matrix m(dim, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = vs[j][i];
  return rank(k, m);
}

namespace {

std::vector<Vec> span_basis(const Field& k, const std::vector<Vec>& vs, std::size_t dim) {
  if (vs.empty()) return {};
  Matrix m(dim, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = vs[j][i];
  Matrix b = column_basis(k, m);
  std::vector<Vec> out;
  for (std::size_t j = 0; j < b.cols(); ++j) out.push_back(column_of(b, j));
  return out;
}

Scalar trace(const Field& k, const Matrix& m) {
  Scalar t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t = k.add(t, m(i, i));
  return t;
}

// Number of vectors over F_p of length d, or 0 when it exceeds `limit`.
std::uint64_t space_size(std::uint32_t p, std::size_t d, std::uint64_t limit) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    n *= p;
    if (n > limit) return 0;
  }
  return n;
}

Vec vector_from_code(std::uint64_t code, std::uint32_t p, std::size_t d) {
  Vec v(d);
  for (std::size_t i = 0; i < d; ++i) {
    v[i] = static_cast<unsigned long>(code % p);
    code /= p;
  }
  return v;
}

}  // namespace

AlgebraInvariants algebra_invariants(const FDAlgebra& a) {
  const Field& k = a.field();
  const std::size_t d = a.dim();
  AlgebraInvariants inv;
  inv.dim = d;
  inv.commutative = a.is_commutative();
  inv.center_dim = center(a).dimension;

  // Trace form t(x, y) = Tr(L_{xy}); its radical is a canonical ideal.
  std::vector<Scalar> tr_basis(d);
  for (std::size_t i = 0; i < d; ++i) tr_basis[i] = trace(k, a.left_mult(i));
  Matrix form(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Scalar s = 0;
      for (const auto& t : a.product(i, j)) s = k.add(s, k.mul(t.coeff, tr_basis[t.index]));
      form(i, j) = s;
    }
  std::vector<Vec> radical;
  if (d) {
    Matrix ns = nullspace(k, form);
    for (std::size_t j = 0; j < ns.cols(); ++j) radical.push_back(column_of(ns, j));
  }
  std::vector<Vec> power = radical;
  for (std::size_t step = 0; step <= d + 1; ++step) {
    inv.radical_powers.push_back(power.size());
    if (power.empty()) break;
    std::vector<Vec> next;
    for (const auto& x : power)
      for (const auto& y : radical) next.push_back(a.multiply(x, y));
    next = span_basis(k, next, d);
    if (next.size() == power.size()) break;
    power = std::move(next);
  }

  if (k.is_prime()) {
    if (const std::uint64_t n = space_size(k.characteristic(), d, 1u << 14)) {
      std::uint64_t count = 0;
      for (std::uint64_t code = 0; code < n; ++code) {
        Vec v = vector_from_code(code, k.characteristic(), d);
        if (a.multiply(v, v) == v) ++count;
      }
      inv.idempotents = count;
    }
  }
  return inv;
}

namespace {

std::string describe_difference(const AlgebraInvariants& x, const AlgebraInvariants& y) {
  if (x.dim != y.dim) return "dimensions differ";
  if (x.commutative != y.commutative) return "one is commutative and the other is not";
  if (x.center_dim != y.center_dim) return "center dimensions differ";
  if (x.radical_powers != y.radical_powers) return "trace-form radical filtrations differ";
  if (x.idempotents != y.idempotents) return "idempotent counts differ";
  return "invariants agree";
}

// Exhaustive search over all linear maps F_p^d → F_p^d.
std::optional<AlgebraMap> all_linear_maps(const FDAlgebra& a, const FDAlgebra& b) {
  const Field& k = a.field();
  const std::uint32_t p = k.characteristic();
  const std::size_t d = a.dim();
  const std::uint64_t cols = space_size(p, d, ~std::uint64_t{0});
  std::vector<std::uint64_t> code(d, 0);
  // Column-by-column backtracking with pruning on products of assigned columns.
  std::vector<Vec> img(d);
  std::function<bool(std::size_t)> rec = [&](std::size_t j) -> bool {
    if (j == d) {
      Matrix m(d, d);
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t r = 0; r < d; ++r) m(r, c) = img[c][r];
      if (!inverse(k, m)) return false;
      AlgebraMap f{m};
      if (algebra_map_defect(a, b, f)) return false;
      return true;
    }
    for (std::uint64_t c = 0; c < cols; ++c) {
      img[j] = vector_from_code(c, p, d);
      bool ok = true;
      for (std::size_t i = 0; i <= j && ok; ++i)
        for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
          const auto& prod = a.product(x, y);
          bool known = std::all_of(prod.begin(), prod.end(), [&](const Term& t) { return t.index <= j; });
          if (!known) continue;
          Vec lhs(d);
          for (const auto& t : prod)
            for (std::size_t r = 0; r < d; ++r) lhs[r] = k.add(lhs[r], k.mul(t.coeff, img[t.index][r]));
          if (lhs != b.multiply(img[x], img[y])) {
            ok = false;
            break;
          }
        }
      if (ok && rec(j + 1)) return true;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  Matrix m(d, d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < d; ++r) m(r, c) = img[c][r];
  return AlgebraMap{m};
}

std::optional<AlgebraMap> basis_permutations(const FDAlgebra& a, const FDAlgebra& b) {
  const std::size_t d = a.dim();
  std::vector<std::uint32_t> pi(d, 0);
  std::vector<bool> used(d, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t j) -> bool {
    if (j == d) {
      Matrix m(d, d);
      for (std::size_t c = 0; c < d; ++c) m(pi[c], c) = 1;
      return !algebra_map_defect(a, b, AlgebraMap{m}).has_value();
    }
    for (std::uint32_t c = 0; c < d; ++c) {
      if (used[c]) continue;
      pi[j] = c;
      bool ok = true;
      for (std::size_t i = 0; i <= j && ok; ++i)
        for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
          const auto& pa = a.product(x, y);
          if (!std::all_of(pa.begin(), pa.end(), [&](const Term& t) { return t.index <= j; })) continue;
          std::vector<Term> mapped;
          for (const auto& t : pa) mapped.push_back({pi[t.index], t.coeff});
          std::sort(mapped.begin(), mapped.end(), [](const Term& u, const Term& v) { return u.index < v.index; });
          if (mapped != b.product(pi[x], pi[y])) {
            ok = false;
            break;
          }
        }
      if (!ok) continue;
      used[c] = true;
      if (rec(j + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (d > 9 || !rec(0)) return std::nullopt;
  Matrix m(d, d);
  for (std::size_t c = 0; c < d; ++c) m(pi[c], c) = 1;
  return AlgebraMap{m};
}

}  // namespace

IsoResult algebra_iso_bruteforce(const FDAlgebra& a, const FDAlgebra& b) {
  if (a.field() != b.field()) throw PreconditionError("algebras are over different fields");
  const AlgebraInvariants ia = algebra_invariants(a), ib = algebra_invariants(b);
  if (!(ia == ib)) return {IsoVerdict::NotIsomorphic, std::nullopt, describe_difference(ia, ib)};
  const Field& k = a.field();
  const std::size_t d = a.dim();
  if (k.is_prime() && space_size(k.characteristic(), d * d, 1u << 20)) {
    if (auto w = all_linear_maps(a, b)) return {IsoVerdict::Isomorphic, w, "exhaustive search found a map"};
    return {IsoVerdict::NotIsomorphic, std::nullopt, "no linear bijection is multiplicative"};
  }
  if (auto w = basis_permutations(a, b))
    return {IsoVerdict::Isomorphic, w, "basis permutation is multiplicative"};
  return {IsoVerdict::Undetermined, std::nullopt,
          "invariants agree and no basis permutation is an isomorphism"};
}

}  // namespace schemoid
