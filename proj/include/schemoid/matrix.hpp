#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schemoid/field.hpp"

namespace schemoid {

/// Dense row-major matrix of exact scalars. Arithmetic goes through a Field so
/// the same type serves Q and F_p.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Builds from nested integer rows; every row must have the same length.
  static Matrix from_rows(const Field& k, const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Matrix column(std::size_t c) const;
  Matrix columns(const std::vector<std::size_t>& which) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  bool is_zero() const;
  bool is_identity() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  friend bool operator<(const Matrix& a, const Matrix& b);

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix multiply(const Field& k, const Matrix& a, const Matrix& b);
Matrix add(const Field& k, const Matrix& a, const Matrix& b);
Matrix subtract(const Field& k, const Matrix& a, const Matrix& b);
Matrix scale(const Field& k, const Scalar& s, const Matrix& a);
Matrix transpose(const Matrix& a);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
/// Block-diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);
/// Kronecker product.
Matrix kronecker(const Field& k, const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;                   ///< reduced row echelon form
  std::vector<std::size_t> pivots;  ///< pivot column of each non-zero row
};

/// Gauss-Jordan elimination. Over F_p the row operations run on the
/// dispatched SIMD kernels.
RowEchelon rref(const Field& k, const Matrix& a);
std::size_t rank(const Field& k, const Matrix& a);
/// Columns form a basis of {x : a x = 0}; shape a.cols() x nullity.
Matrix nullspace(const Field& k, const Matrix& a);
/// Rows form a basis of {y : y a = 0}; shape co-nullity x a.rows().
Matrix left_nullspace(const Field& k, const Matrix& a);
/// A subset of the columns of a forming a basis of its column space.
Matrix column_basis(const Field& k, const Matrix& a);
/// Some x with a x = b, or nullopt if the system is inconsistent.
std::optional<Matrix> solve(const Field& k, const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Field& k, const Matrix& a);

}  // namespace schemoid
