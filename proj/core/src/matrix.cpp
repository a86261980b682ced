#include "qsw/matrix.hpp"

#include <algorithm>

#include "qsw/error.hpp"

namespace qsw {

std::string Witness::str() const {
  return "entry (" + std::to_string(row) + "," + std::to_string(col) + "): " + lhs.str() + " != " + rhs.str();
}

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows)) {
  if (rows < 0 || cols < 0) raise(ErrorCode::DimensionMismatch, "negative matrix dimension");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.data_[static_cast<std::size_t>(i)].push_back({i, Scalar(1)});
  return m;
}

Matrix Matrix::diagonal(const Vec& d) {
  const int n = static_cast<int>(d.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    if (!d[static_cast<std::size_t>(i)].is_zero()) m.data_[static_cast<std::size_t>(i)].push_back({i, d[static_cast<std::size_t>(i)]});
  return m;
}

Matrix Matrix::unit(int n, int i, int j) {
  Matrix m(n, n);
  m.set(i, j, Scalar(1));
  return m;
}

Matrix Matrix::from_dense(const std::vector<Vec>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
      raise(ErrorCode::DimensionMismatch, "ragged dense matrix");
    m.data_[static_cast<std::size_t>(i)] = sparse_from_dense(rows[static_cast<std::size_t>(i)]);
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (static_cast<int>(cols[j].size()) != rows) raise(ErrorCode::DimensionMismatch, "column length mismatch");
    for (int i = 0; i < rows; ++i)
      if (!cols[j][static_cast<std::size_t>(i)].is_zero())
        m.data_[static_cast<std::size_t>(i)].push_back({static_cast<int>(j), cols[j][static_cast<std::size_t>(i)]});
  }
  return m;
}

std::size_t Matrix::nnz() const {
  std::size_t t = 0;
  for (const auto& r : data_) t += r.size();
  return t;
}

Scalar Matrix::at(int i, int j) const {
  const auto& r = row(i);
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, int c) { return e.col < c; });
  if (it != r.end() && it->col == j) return it->value;
  return Scalar(0);
}

void Matrix::set(int i, int j, const Scalar& v) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) raise(ErrorCode::IndexOutOfRange, "matrix index out of range");
  auto& r = data_[static_cast<std::size_t>(i)];
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, int c) { return e.col < c; });
  if (it != r.end() && it->col == j) {
    if (v.is_zero()) {
      r.erase(it);
    } else {
      it->value = v;
    }
  } else if (!v.is_zero()) {
    r.insert(it, {j, v});
  }
}

void Matrix::add_to(int i, int j, const Scalar& v) {
  if (v.is_zero()) return;
  set(i, j, at(i, j) + v);
}

void Matrix::set_row(int i, SparseRow r) { data_[static_cast<std::size_t>(i)] = std::move(r); }

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (const auto& e : row(i)) t.data_[static_cast<std::size_t>(e.col)].push_back({i, e.value});
  return t;
}

Matrix Matrix::scaled(const Scalar& c) const {
  if (c.is_zero()) return Matrix(rows_, cols_);
  Matrix m = *this;
  if (c.is_one()) return m;
  for (auto& r : m.data_)
    for (auto& e : r) e.value *= c;
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) raise(ErrorCode::DimensionMismatch, "vector length mismatch");
  Vec out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    Scalar acc;
    for (const auto& e : row(i)) {
      const Scalar& x = v[static_cast<std::size_t>(e.col)];
      if (!x.is_zero()) acc += e.value * x;
    }
    out[static_cast<std::size_t>(i)] = std::move(acc);
  }
  return out;
}

Matrix Matrix::specialized(const ParamSpec& p) const {
  Matrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    SparseRow r;
    for (const auto& e : row(i)) {
      Scalar v = p.specialize(e.value);
      if (!v.is_zero()) r.push_back({e.col, std::move(v)});
    }
    m.data_[static_cast<std::size_t>(i)] = std::move(r);
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& r : data_)
    if (!r.empty()) return false;
  return true;
}

bool Matrix::is_identity() const { return square() && *this == identity(rows_); }

bool Matrix::is_diagonal() const {
  for (int i = 0; i < rows_; ++i)
    for (const auto& e : row(i))
      if (e.col != i) return false;
  return true;
}

bool Matrix::is_upper_triangular() const {
  for (int i = 0; i < rows_; ++i)
    for (const auto& e : row(i))
      if (e.col < i) return false;
  return true;
}

Vec Matrix::diagonal_entries() const {
  Vec d;
  for (int i = 0; i < std::min(rows_, cols_); ++i) d.push_back(at(i, i));
  return d;
}

Matrix Matrix::operator-() const { return scaled(Scalar(-1)); }

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) raise(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  Matrix m(a.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i) m.data_[static_cast<std::size_t>(i)] = axpy(a.row(i), Scalar(1), b.row(i));
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) raise(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
  Matrix m(a.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i) m.data_[static_cast<std::size_t>(i)] = axpy(a.row(i), Scalar(-1), b.row(i));
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) raise(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix m(a.rows_, b.cols_);
  std::vector<Scalar> acc(static_cast<std::size_t>(b.cols_));
  std::vector<char> touched(static_cast<std::size_t>(b.cols_), 0);
  std::vector<int> cols;
  for (int i = 0; i < a.rows_; ++i) {
    cols.clear();
    for (const auto& ea : a.row(i)) {
      for (const auto& eb : b.row(ea.col)) {
        auto c = static_cast<std::size_t>(eb.col);
        if (!touched[c]) {
          touched[c] = 1;
          cols.push_back(eb.col);
          acc[c] = ea.value * eb.value;
        } else {
          acc[c] += ea.value * eb.value;
        }
      }
    }
    std::sort(cols.begin(), cols.end());
    SparseRow r;
    for (int c : cols) {
      auto cc = static_cast<std::size_t>(c);
      if (!acc[cc].is_zero()) r.push_back({c, std::move(acc[cc])});
      acc[cc] = Scalar();
      touched[cc] = 0;
    }
    m.data_[static_cast<std::size_t>(i)] = std::move(r);
  }
  return m;
}

std::optional<Witness> Matrix::first_difference(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) raise(ErrorCode::DimensionMismatch, "comparing matrices of different shapes");
  for (int i = 0; i < rows_; ++i) {
    if (row(i) == other.row(i)) continue;
    const auto& x = row(i);
    const auto& y = other.row(i);
    std::size_t p = 0;
    std::size_t q = 0;
    while (p < x.size() || q < y.size()) {
      int cx = p < x.size() ? x[p].col : cols_;
      int cy = q < y.size() ? y[q].col : cols_;
      int c = std::min(cx, cy);
      Scalar vx = cx == c ? x[p++].value : Scalar(0);
      Scalar vy = cy == c ? y[q++].value : Scalar(0);
      if (vx != vy) return Witness{i, c, vx, vy};
    }
  }
  return std::nullopt;
}

std::vector<Vec> Matrix::to_dense() const {
  std::vector<Vec> out(static_cast<std::size_t>(rows_), Vec(static_cast<std::size_t>(cols_)));
  for (int i = 0; i < rows_; ++i)
    for (const auto& e : row(i)) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(e.col)] = e.value;
  return out;
}

Matrix Matrix::pow(int k) const {
  if (!square()) raise(ErrorCode::DimensionMismatch, "power of a non-square matrix");
  if (k < 0) raise(ErrorCode::InvalidArgument, "negative matrix power");
  Matrix out = identity(rows_);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < b.rows(); ++k) {
      SparseRow r;
      for (const auto& ea : a.row(i))
        for (const auto& eb : b.row(k)) r.push_back({ea.col * b.cols() + eb.col, ea.value * eb.value});
      m.set_row(i * b.rows() + k, std::move(r));
    }
  }
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

SparseRow sparse_from_dense(const Vec& v) {
  SparseRow r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r.push_back({static_cast<int>(i), v[i]});
  return r;
}

Vec dense_from_sparse(const SparseRow& r, int n) {
  Vec v(static_cast<std::size_t>(n));
  for (const auto& e : r) v[static_cast<std::size_t>(e.col)] = e.value;
  return v;
}

SparseRow axpy(const SparseRow& a, const Scalar& c, const SparseRow& b) {
  if (c.is_zero() || b.empty()) return a;
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t p = 0;
  std::size_t q = 0;
  while (p < a.size() || q < b.size()) {
    if (q == b.size() || (p < a.size() && a[p].col < b[q].col)) {
      out.push_back(a[p++]);
    } else if (p == a.size() || b[q].col < a[p].col) {
      out.push_back({b[q].col, c * b[q].value});
      ++q;
    } else {
      Scalar v = a[p].value + c * b[q].value;
      if (!v.is_zero()) out.push_back({a[p].col, std::move(v)});
      ++p;
      ++q;
    }
  }
  return out;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace qsw
