#include "schemoid/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "schemoid/error.hpp"
#include "schemoid/kernels.hpp"

namespace schemoid {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const Field& k, const std::vector<std::vector<long>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw StructuralError("ragged matrix rows");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = k.from_int(rows[r][c]);
  }
  return m;
}

Matrix Matrix::column(std::size_t c) const { return block(0, c, rows_, 1); }

Matrix Matrix::columns(const std::vector<std::size_t>& which) const {
  Matrix m(rows_, which.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < which.size(); ++j) m(r, j) = (*this)(r, which[j]);
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

bool Matrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

bool operator<(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(),
                                      b.data_.end());
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix multiply(const Field& k, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw StructuralError("matrix shape mismatch in product: " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
  Matrix c(a.rows(), b.cols());
  if (k.is_prime()) {
    const std::uint64_t p = k.characteristic();
    std::vector<std::uint64_t> acc(b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t l = 0; l < a.cols(); ++l) {
        const std::uint64_t x = k.residue(a(i, l));
        if (!x) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) acc[j] = (acc[j] + x * k.residue(b(l, j))) % p;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = static_cast<unsigned long>(acc[j]);
    }
    return c;
  }
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Scalar& x = a(i, l);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(l, j))) c(i, j) += x * b(l, j);
    }
  return c;
}

Matrix add(const Field& k, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw StructuralError("shape mismatch in sum");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = k.add(a(i, j), b(i, j));
  return c;
}

Matrix subtract(const Field& k, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw StructuralError("shape mismatch in difference");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = k.sub(a(i, j), b(i, j));
  return c;
}

Matrix scale(const Field& k, const Scalar& s, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = k.mul(s, a(i, j));
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw StructuralError("hstack row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw StructuralError("vstack column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

Matrix kronecker(const Field& k, const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          m(i * b.rows() + r, j * b.cols() + c) = k.mul(a(i, j), b(r, c));
    }
  return m;
}

namespace {

RowEchelon rref_prime(const Field& k, const Matrix& a) {
  const std::uint32_t p = k.characteristic();
  const std::size_t nr = a.rows(), nc = a.cols();
  std::vector<std::uint32_t> buf(nr * nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) buf[i * nc + j] = k.residue(a(i, j));
  auto row = [&](std::size_t i) { return std::span<std::uint32_t>(buf.data() + i * nc, nc); };

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && buf[piv * nc + c] == 0) ++piv;
    if (piv == nr) continue;
    if (piv != r) std::swap_ranges(row(piv).begin(), row(piv).end(), row(r).begin());
    const std::uint32_t inv = k.residue(k.inv(Scalar(buf[r * nc + c])));
    kernels::scale_mod(row(r).subspan(c), inv, p);
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r) continue;
      const std::uint32_t f = buf[i * nc + c];
      if (f == 0) continue;
      kernels::axpy_mod(row(i).subspan(c), row(r).subspan(c), p - f, p);
    }
    pivots.push_back(c);
    ++r;
  }
  RowEchelon out{Matrix(nr, nc), std::move(pivots)};
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out.reduced(i, j) = buf[i * nc + j];
  return out;
}

RowEchelon rref_rational(const Matrix& a) {
  Matrix m = a;
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && sgn(m(piv, c)) == 0) ++piv;
    if (piv == nr) continue;
    if (piv != r)
      for (std::size_t j = 0; j < nc; ++j) std::swap(m(piv, j), m(r, j));
    const Scalar inv = 1 / m(r, c);
    for (std::size_t j = c; j < nc; ++j)
      if (sgn(m(r, j))) m(r, j) *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < nc; ++j)
        if (sgn(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

RowEchelon rref(const Field& k, const Matrix& a) {
  return k.is_prime() ? rref_prime(k, a) : rref_rational(a);
}

std::size_t rank(const Field& k, const Matrix& a) {
  if (a.empty()) return 0;
  return rref(k, a).pivots.size();
}

Matrix nullspace(const Field& k, const Matrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) return Matrix::identity(n);
  RowEchelon e = rref(k, a);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix basis(n, free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    basis(free[j], j) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      basis(e.pivots[i], j) = k.neg(e.reduced(i, free[j]));
  }
  return basis;
}

Matrix left_nullspace(const Field& k, const Matrix& a) { return transpose(nullspace(k, transpose(a))); }

Matrix column_basis(const Field& k, const Matrix& a) {
  if (a.empty()) return Matrix(a.rows(), 0);
  return a.columns(rref(k, a).pivots);
}

std::optional<Matrix> solve(const Field& k, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw StructuralError("solve: row mismatch");
  const std::size_t n = a.cols();
  RowEchelon e = rref(k, hstack(a, b));
  Matrix x(n, b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= n) return std::nullopt;  // pivot in the augmented part
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = e.reduced(i, n + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Field& k, const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(k, a) != a.rows()) return std::nullopt;
  return solve(k, a, Matrix::identity(a.rows()));
}

}  // namespace schemoid
