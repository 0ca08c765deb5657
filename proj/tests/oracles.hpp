#pragma once

// Brute-force reference computations. Nothing here calls the library's
// linear algebra; values are counted or eliminated directly.

#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "schemoid/algebra.hpp"
#include "schemoid/repcat.hpp"

namespace oracle {

using schemoid::Scalar;

inline Scalar reduce(const Scalar& v, std::uint32_t p) {
  if (p == 0) return v;
  mpz_class num = v.get_num() % p, den = v.get_den() % p;
  if (num < 0) num += p;
  // Fermat inverse of the denominator.
  mpz_class inv = 1, base = den, e = p - 2;
  while (e > 0) {
    if (e % 2 == 1) inv = inv * base % p;
    base = base * base % p;
    e /= 2;
  }
  return Scalar(mpz_class(num * inv % p));
}

/// Rank by plain Gaussian elimination (p = 0 means the rationals).
inline std::size_t rank(std::vector<std::vector<Scalar>> m, std::uint32_t p) {
  std::size_t r = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (auto& row : m)
    for (auto& x : row) x = reduce(x, p);
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Scalar f = m[i][c] / m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = reduce(m[i][j] - f * m[r][j], p);
    }
    ++r;
  }
  return r;
}

inline std::vector<std::vector<Scalar>> random_matrix(std::mt19937& rng, std::size_t r, std::size_t c,
                                                      std::uint32_t p, int density_percent = 60) {
  std::uniform_int_distribution<int> coin(0, 99);
  std::uniform_int_distribution<long> val(p ? 0 : -4, p ? static_cast<long>(p) - 1 : 4);
  std::vector<std::vector<Scalar>> m(r, std::vector<Scalar>(c));
  for (auto& row : m)
    for (auto& x : row)
      if (coin(rng) < density_percent) x = val(rng);
  return m;
}

/// p^g_{ef} of H(n,2), counted over middle words for one pair at distance g.
inline std::uint64_t hamming_intersection(unsigned n, unsigned e, unsigned f, unsigned g) {
  const std::uint32_t x = 0, z = (1u << g) - 1;
  std::uint64_t count = 0;
  for (std::uint32_t y = 0; y < (1u << n); ++y)
    if (static_cast<unsigned>(std::popcount(x ^ y)) == e && static_cast<unsigned>(std::popcount(y ^ z)) == f) ++count;
  return count;
}

/// H^i(Z/n; k) with trivial coefficients from the periodic resolution
/// (t - 1, N alternating): 1 in degree 0, then 1 iff char k divides n.
inline std::vector<std::size_t> cyclic_group_cohomology(std::size_t n, std::uint32_t p, std::size_t max) {
  std::vector<std::size_t> out(max + 1, 0);
  out[0] = 1;
  const bool divides = p != 0 && n % p == 0;
  for (std::size_t i = 1; i <= max; ++i) out[i] = divides ? 1 : 0;
  return out;
}

inline std::vector<Scalar> decode(std::uint64_t code, std::uint32_t p, std::size_t len) {
  std::vector<Scalar> v(len);
  for (std::size_t i = 0; i < len; ++i, code /= p) v[i] = static_cast<unsigned long>(code % p);
  return v;
}

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Product of basis vectors straight from the structure tensor, reduced mod p.
inline std::vector<Scalar> mult(const schemoid::FDAlgebra& a, const std::vector<Scalar>& x,
                                const std::vector<Scalar>& y, std::uint32_t p) {
  std::vector<Scalar> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (x[i] == 0 || y[j] == 0) continue;
      for (const auto& t : a.product(i, j)) out[t.index] += x[i] * y[j] * t.coeff;
    }
  for (auto& v : out) v = reduce(v, p);
  return out;
}

/// Number of central elements of an algebra over F_p (so the center has
/// dimension log_p of this).
inline std::uint64_t count_central(const schemoid::FDAlgebra& a) {
  const std::uint32_t p = a.field().characteristic();
  const std::size_t d = a.dim();
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < ipow(p, d); ++code) {
    const auto z = decode(code, p, d);
    bool central = true;
    for (std::size_t i = 0; i < d && central; ++i) {
      std::vector<Scalar> e(d);
      e[i] = 1;
      central = mult(a, z, e, p) == mult(a, e, z, p);
    }
    count += central;
  }
  return count;
}

/// Number of derivations D: A → A over F_p, by enumerating every matrix.
inline std::uint64_t count_derivations(const schemoid::FDAlgebra& a) {
  const std::uint32_t p = a.field().characteristic();
  const std::size_t d = a.dim();
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < ipow(p, d * d); ++code) {
    const auto entries = decode(code, p, d * d);
    auto apply = [&](const std::vector<Scalar>& x) {
      std::vector<Scalar> out(d);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) out[r] += entries[r * d + c] * x[c];
      for (auto& v : out) v = reduce(v, p);
      return out;
    };
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i)
      for (std::size_t j = 0; j < d && ok; ++j) {
        std::vector<Scalar> ei(d), ej(d);
        ei[i] = 1;
        ej[j] = 1;
        auto lhs = apply(mult(a, ei, ej, p));
        auto r1 = mult(a, apply(ei), ej, p), r2 = mult(a, ei, apply(ej), p);
        for (std::size_t k = 0; k < d; ++k) r1[k] = reduce(r1[k] + r2[k], p);
        ok = lhs == r1;
      }
    count += ok;
  }
  return count;
}

inline std::size_t log_p(std::uint64_t n, std::uint32_t p) {
  std::size_t e = 0;
  while (n > 1) {
    n /= p;
    ++e;
  }
  return e;
}

/// Number of locally constant natural transformations over F_p, by
/// enumerating one component per identity class.
inline std::uint64_t count_lc_transformations(const schemoid::FunctorRep& m, const schemoid::FunctorRep& n) {
  const auto& s = *m.schemoid;
  const auto& c = s.cat();
  const std::uint32_t p = m.field.characteristic();
  const std::size_t classes = s.num_identity_classes();
  std::vector<std::size_t> size(classes);
  std::size_t total = 0;
  for (std::size_t k = 0; k < classes; ++k) {
    const auto x = s.class_members(k).front();
    size[k] = m.dims[x] * n.dims[x];
    total += size[k];
  }
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < ipow(p, total); ++code) {
    const auto v = decode(code, p, total);
    std::vector<std::size_t> offset(classes + 1, 0);
    for (std::size_t k = 0; k < classes; ++k) offset[k + 1] = offset[k] + size[k];
    auto comp = [&](schemoid::ObjId x, std::size_t r, std::size_t col) -> const Scalar& {
      return v[offset[s.identity_class(x)] + r * m.dims[x] + col];
    };
    bool ok = true;
    for (schemoid::MorId f = 0; f < c.num_morphisms() && ok; ++f) {
      const auto x = c.src(f), y = c.tgt(f);
      for (std::size_t r = 0; r < n.dims[y] && ok; ++r)
        for (std::size_t col = 0; col < m.dims[x] && ok; ++col) {
          Scalar lhs = 0, rhs = 0;
          for (std::size_t t = 0; t < n.dims[x]; ++t) lhs += n.mats[f](r, t) * comp(x, t, col);
          for (std::size_t t = 0; t < m.dims[y]; ++t) rhs += comp(y, r, t) * m.mats[f](t, col);
          ok = reduce(lhs - rhs, p) == 0;
        }
    }
    count += ok;
  }
  return count;
}

}  // namespace oracle
