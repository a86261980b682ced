#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qsw/matrix.hpp"

namespace qsw {

/// Incremental Gaussian elimination on sparse rows. Each accepted row is
/// reduced against earlier pivots and normalized so its leading entry is 1;
/// pivots are taken in insertion order, leading column first.
class RowReducer {
 public:
  explicit RowReducer(int ncols) : ncols_(ncols) {}

  /// Returns true when the row is independent of those already added.
  bool add(SparseRow row);
  /// Reduces a row against the current pivots without inserting it.
  SparseRow reduce(SparseRow row) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }

  /// Reduced row echelon form, sorted by pivot column.
  std::vector<SparseRow> rref() const;
  std::vector<int> pivots() const;
  /// Basis of the null space {x : row . x = 0 for all rows}, one vector per
  /// free column, in increasing free-column order.
  std::vector<SparseRow> kernel() const;

 private:
  int ncols_;
  std::vector<SparseRow> rows_;
  std::map<int, std::size_t> pivot_row_;
};

struct RrefResult {
  Matrix rref;
  int rank = 0;
  std::vector<int> pivots;
};

/// A subspace of K^d stored by its reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient) {}
  static Subspace full(int ambient);
  static Subspace span(int ambient, const std::vector<Vec>& vectors);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Adds v to the span; returns true when the dimension grew.
  bool insert(const Vec& v);
  /// v minus its projection along the echelon basis (zero iff v is contained).
  Vec remainder(const Vec& v) const;
  bool contains(const Vec& v) const;
  /// Coordinates of a contained vector relative to basis().
  Vec coordinates(const Vec& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  int ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<int> pivots_;
};

RrefResult rref(const Matrix& m);
int rank(const Matrix& m);
Subspace kernel_basis(const Matrix& m);
/// Some solution of m x = v, or nothing when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& v);
/// Inverse of a square matrix; throws NoSolution when singular.
Matrix inverse(const Matrix& m);
/// Column space of m.
Subspace image(const Matrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
bool is_direct(const Subspace& a, const Subspace& b);

/// Smallest subspace containing the seeds and stable under every operator.
Subspace span_closure(const std::vector<Matrix>& ops, const std::vector<Vec>& seeds);

/// Linear maps X : src -> dst with X g_src = g_dst X for each generator pair.
/// When labels are supplied, X is restricted to entries X[i][j] whose
/// destination and source labels agree.
struct IntertwinerSpace {
  std::vector<Matrix> basis;
  int unknowns = 0;
  bool blocked = false;
  int dimension() const { return static_cast<int>(basis.size()); }
};
IntertwinerSpace intertwiner_space(const std::vector<Matrix>& src, const std::vector<Matrix>& dst,
                                   const std::vector<int>* src_labels = nullptr,
                                   const std::vector<int>* dst_labels = nullptr);

/// Matrices commuting with every generator. With blocks given (one label per
/// basis index), unknowns are restricted to block-diagonal entries after
/// checking that the labels are compatible with the generators; labels whose
/// diagonal-generator values coincide force the unblocked system.
IntertwinerSpace commutant(const std::vector<Matrix>& gens, const std::vector<int>* blocks = nullptr);

/// Monic minimal polynomial of a square matrix, coefficients c_0..c_d
/// (c_d = 1), from the first linear dependency among I, A, A^2, ...
std::vector<Scalar> minimal_polynomial(const Matrix& a);
/// Evaluates sum c_i A^i.
Matrix evaluate_polynomial(const std::vector<Scalar>& coeffs, const Matrix& a);

}  // namespace qsw
