#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsw/scalar.hpp"

namespace qsw {

using Vec = std::vector<Scalar>;

/// Sparse row entry.
struct Entry {
  int col;
  Scalar value;
  friend bool operator==(const Entry&, const Entry&) = default;
};
/// Sparse vector: entries sorted by column with no stored zeros.
using SparseRow = std::vector<Entry>;

/// Location and values of the first entry where two matrices differ.
struct Witness {
  int row = 0;
  int col = 0;
  Scalar lhs;
  Scalar rhs;
  std::string str() const;
};

/// Row-compressed sparse matrix over the coefficient field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);

  static Matrix identity(int n);
  static Matrix diagonal(const Vec& d);
  /// Matrix unit E_{i,j} (0-based) of size n x n.
  static Matrix unit(int n, int i, int j);
  static Matrix from_dense(const std::vector<Vec>& rows);
  /// Columns given as dense vectors.
  static Matrix from_columns(const std::vector<Vec>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const SparseRow& row(int i) const { return data_[static_cast<std::size_t>(i)]; }
  std::size_t nnz() const;

  Scalar at(int i, int j) const;
  void set(int i, int j, const Scalar& v);
  void add_to(int i, int j, const Scalar& v);
  /// Replaces row i; entries must be sorted and nonzero.
  void set_row(int i, SparseRow r);

  Matrix transpose() const;
  Matrix scaled(const Scalar& c) const;
  Vec apply(const Vec& v) const;
  /// Maps every entry into the field described by p.
  Matrix specialized(const ParamSpec& p) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_diagonal() const;
  bool is_upper_triangular() const;
  Vec diagonal_entries() const;

  Matrix operator-() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, const Matrix& a) { return a.scaled(c); }
  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// First differing entry in row-major order, or nothing when equal.
  std::optional<Witness> first_difference(const Matrix& other) const;
  std::vector<Vec> to_dense() const;
  /// Power k >= 0 of a square matrix.
  Matrix pow(int k) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<SparseRow> data_;
};

/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);
/// a*b - b*a.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Sparse row helpers.
SparseRow sparse_from_dense(const Vec& v);
Vec dense_from_sparse(const SparseRow& r, int n);
/// a + c*b.
SparseRow axpy(const SparseRow& a, const Scalar& c, const SparseRow& b);

bool is_zero_vec(const Vec& v);

}  // namespace qsw
