#include "qsw/linalg.hpp"

#include <algorithm>
#include <set>

#include "qsw/error.hpp"

namespace qsw {

// ---------------------------------------------------------------- RowReducer

SparseRow RowReducer::reduce(SparseRow row) const {
  std::size_t start = 0;
  while (start < row.size()) {
    // Find the first entry whose column is a pivot.
    std::size_t k = start;
    auto it = pivot_row_.end();
    for (; k < row.size(); ++k) {
      it = pivot_row_.find(row[k].col);
      if (it != pivot_row_.end()) break;
    }
    if (k == row.size()) break;
    Scalar c = -row[k].value;
    int col = row[k].col;
    row = axpy(row, c, rows_[it->second]);
    // Entries before col are untouched since pivot rows start at their pivot.
    start = static_cast<std::size_t>(std::lower_bound(row.begin(), row.end(), col,
                                                      [](const Entry& e, int c2) { return e.col < c2; }) -
                                     row.begin());
  }
  return row;
}

bool RowReducer::add(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  // Normalize at the leading (smallest) column, which is not a pivot.
  Scalar inv = row.front().value.inverse();
  if (!inv.is_one())
    for (auto& e : row) e.value *= inv;
  pivot_row_[row.front().col] = rows_.size();
  rows_.push_back(std::move(row));
  return true;
}

std::vector<int> RowReducer::pivots() const {
  std::vector<int> p;
  for (const auto& [col, idx] : pivot_row_) p.push_back(col);
  return p;
}

std::vector<SparseRow> RowReducer::rref() const {
  // Process pivots from the right so each row is cleared against fully
  // reduced rows.
  std::map<int, SparseRow> done;
  for (auto it = pivot_row_.rbegin(); it != pivot_row_.rend(); ++it) {
    SparseRow row = rows_[it->second];
    for (std::size_t k = 1; k < row.size();) {
      auto d = done.find(row[k].col);
      if (d == done.end()) {
        ++k;
        continue;
      }
      int col = row[k].col;
      row = axpy(row, -row[k].value, d->second);
      k = static_cast<std::size_t>(std::lower_bound(row.begin(), row.end(), col,
                                                    [](const Entry& e, int c2) { return e.col < c2; }) -
                                   row.begin());
    }
    done.emplace(it->first, std::move(row));
  }
  std::vector<SparseRow> out;
  for (auto& [col, row] : done) out.push_back(std::move(row));
  return out;
}

std::vector<SparseRow> RowReducer::kernel() const {
  std::vector<SparseRow> rr = rref();
  std::vector<char> is_pivot(static_cast<std::size_t>(ncols_), 0);
  for (const auto& r : rr) is_pivot[static_cast<std::size_t>(r.front().col)] = 1;
  // Column f of the rref, as (pivot column, value) pairs.
  std::map<int, std::vector<std::pair<int, Scalar>>> by_free;
  for (const auto& r : rr)
    for (std::size_t k = 1; k < r.size(); ++k) by_free[r[k].col].push_back({r.front().col, r[k].value});
  std::vector<SparseRow> out;
  for (int f = 0; f < ncols_; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    SparseRow v;
    auto it = by_free.find(f);
    if (it != by_free.end())
      for (const auto& [p, val] : it->second) v.push_back({p, -val});
    v.push_back({f, Scalar(1)});
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::full(int ambient) {
  Subspace s(ambient);
  for (int i = 0; i < ambient; ++i) {
    Vec v(static_cast<std::size_t>(ambient));
    v[static_cast<std::size_t>(i)] = Scalar(1);
    s.basis_.push_back(std::move(v));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Vec Subspace::remainder(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) raise(ErrorCode::DimensionMismatch, "vector length differs from ambient dimension");
  Vec w = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar c = w[static_cast<std::size_t>(pivots_[k])];
    if (c.is_zero()) continue;
    const Vec& b = basis_[k];
    for (std::size_t i = static_cast<std::size_t>(pivots_[k]); i < w.size(); ++i)
      if (!b[i].is_zero()) w[i] -= c * b[i];
  }
  return w;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(remainder(v)); }

Vec Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) raise(ErrorCode::NoSolution, "vector is not in the subspace");
  Vec c;
  for (int p : pivots_) c.push_back(v[static_cast<std::size_t>(p)]);
  return c;
}

bool Subspace::insert(const Vec& v) {
  Vec w = remainder(v);
  std::size_t lead = 0;
  while (lead < w.size() && w[lead].is_zero()) ++lead;
  if (lead == w.size()) return false;
  Scalar inv = w[lead].inverse();
  for (std::size_t i = lead; i < w.size(); ++i)
    if (!w[i].is_zero()) w[i] *= inv;
  // Clear the new pivot column from existing basis vectors.
  for (auto& b : basis_) {
    const Scalar c = b[lead];
    if (c.is_zero()) continue;
    for (std::size_t i = lead; i < b.size(); ++i)
      if (!w[i].is_zero()) b[i] -= c * w[i];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), static_cast<int>(lead));
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, static_cast<int>(lead));
  basis_.insert(basis_.begin() + idx, std::move(w));
  return true;
}

// ---------------------------------------------------------------- matrix ops

RrefResult rref(const Matrix& m) {
  RowReducer red(m.cols());
  for (int i = 0; i < m.rows(); ++i) red.add(m.row(i));
  RrefResult out;
  out.rank = red.rank();
  out.pivots = red.pivots();
  out.rref = Matrix(m.rows(), m.cols());
  auto rows = red.rref();
  for (std::size_t i = 0; i < rows.size(); ++i) out.rref.set_row(static_cast<int>(i), std::move(rows[i]));
  return out;
}

int rank(const Matrix& m) {
  RowReducer red(m.cols());
  for (int i = 0; i < m.rows(); ++i) red.add(m.row(i));
  return red.rank();
}

Subspace kernel_basis(const Matrix& m) {
  RowReducer red(m.cols());
  for (int i = 0; i < m.rows(); ++i) red.add(m.row(i));
  Subspace s(m.cols());
  for (const auto& k : red.kernel()) s.insert(dense_from_sparse(k, m.cols()));
  return s;
}

std::optional<Vec> solve(const Matrix& m, const Vec& v) {
  if (static_cast<int>(v.size()) != m.rows()) raise(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  // Augmented column m.cols() carries the right-hand side.
  RowReducer red(m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    SparseRow r = m.row(i);
    if (!v[static_cast<std::size_t>(i)].is_zero()) r.push_back({m.cols(), v[static_cast<std::size_t>(i)]});
    red.add(std::move(r));
  }
  Vec x(static_cast<std::size_t>(m.cols()));
  for (const auto& r : red.rref()) {
    if (r.front().col == m.cols()) return std::nullopt;
    if (r.back().col == m.cols()) x[static_cast<std::size_t>(r.front().col)] = r.back().value;
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  if (!m.square()) raise(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const int n = m.rows();
  RowReducer red(2 * n);
  for (int i = 0; i < n; ++i) {
    SparseRow r = m.row(i);
    r.push_back({n + i, Scalar(1)});
    red.add(std::move(r));
  }
  auto rows = red.rref();
  Matrix inv(n, n);
  for (const auto& r : rows) {
    if (r.front().col >= n) raise(ErrorCode::NoSolution, "matrix is singular");
    SparseRow out;
    for (std::size_t k = 1; k < r.size(); ++k) {
      if (r[k].col < n) raise(ErrorCode::NoSolution, "matrix is singular");
      out.push_back({r[k].col - n, r[k].value});
    }
    inv.set_row(r.front().col, std::move(out));
  }
  if (static_cast<int>(rows.size()) != n) raise(ErrorCode::NoSolution, "matrix is singular");
  return inv;
}

Subspace image(const Matrix& m) {
  Matrix t = m.transpose();
  Subspace s(m.rows());
  for (int i = 0; i < t.rows(); ++i) s.insert(dense_from_sparse(t.row(i), m.rows()));
  return s;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) raise(ErrorCode::DimensionMismatch, "subspaces of different ambient spaces");
  Subspace s = a;
  for (const auto& v : b.basis()) s.insert(v);
  return s;
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) raise(ErrorCode::DimensionMismatch, "subspaces of different ambient spaces");
  if (a.is_zero() || b.is_zero()) return Subspace(a.ambient_dim());
  // Solve sum x_i a_i - sum y_j b_j = 0; the a-part of each solution lies in both.
  const int d = a.ambient_dim();
  const int na = a.dim();
  std::vector<Vec> cols;
  for (const auto& v : a.basis()) cols.push_back(v);
  for (const auto& v : b.basis()) {
    Vec w = v;
    for (auto& x : w) x = -x;
    cols.push_back(std::move(w));
  }
  Subspace k = kernel_basis(Matrix::from_columns(cols, d));
  Subspace out(d);
  for (const auto& sol : k.basis()) {
    Vec v(static_cast<std::size_t>(d));
    for (int i = 0; i < na; ++i) {
      const Scalar& c = sol[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      for (int t = 0; t < d; ++t) v[static_cast<std::size_t>(t)] += c * a.basis()[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
    }
    out.insert(v);
  }
  return out;
}

bool is_direct(const Subspace& a, const Subspace& b) { return subspace_sum(a, b).dim() == a.dim() + b.dim(); }

Subspace span_closure(const std::vector<Matrix>& ops, const std::vector<Vec>& seeds) {
  if (seeds.empty() && ops.empty()) return Subspace(0);
  const int d = seeds.empty() ? ops.front().cols() : static_cast<int>(seeds.front().size());
  for (const auto& op : ops)
    if (op.rows() != d || op.cols() != d) raise(ErrorCode::DimensionMismatch, "operator size differs from seed length");
  Subspace s(d);
  std::vector<Vec> work;
  for (const auto& v : seeds) {
    if (static_cast<int>(v.size()) != d) raise(ErrorCode::DimensionMismatch, "seed length mismatch");
    if (s.insert(v)) work.push_back(v);
  }
  while (!work.empty()) {
    Vec v = std::move(work.back());
    work.pop_back();
    for (const auto& op : ops) {
      Vec w = op.apply(v);
      if (s.insert(w)) work.push_back(std::move(w));
    }
  }
  return s;
}

// ---------------------------------------------------------------- intertwiners

namespace {

// Columns of a matrix as sparse (row, value) lists.
std::vector<SparseRow> columns_of(const Matrix& m) {
  Matrix t = m.transpose();
  std::vector<SparseRow> out;
  for (int j = 0; j < t.rows(); ++j) out.push_back(t.row(j));
  return out;
}

}  // namespace

IntertwinerSpace intertwiner_space(const std::vector<Matrix>& src, const std::vector<Matrix>& dst,
                                   const std::vector<int>* src_labels, const std::vector<int>* dst_labels) {
  if (src.size() != dst.size()) raise(ErrorCode::DimensionMismatch, "generator lists differ in length");
  if (src.empty()) raise(ErrorCode::InvalidArgument, "no generators");
  const int ds = src.front().rows();
  const int dd = dst.front().rows();
  for (std::size_t g = 0; g < src.size(); ++g) {
    if (!src[g].square() || src[g].rows() != ds || !dst[g].square() || dst[g].rows() != dd)
      raise(ErrorCode::DimensionMismatch, "generators must be square of a common size");
  }
  const bool blocked = src_labels != nullptr && dst_labels != nullptr;
  if (blocked && (static_cast<int>(src_labels->size()) != ds || static_cast<int>(dst_labels->size()) != dd))
    raise(ErrorCode::DimensionMismatch, "label count differs from dimension");

  // Unknown index for each allowed entry X[i][j].
  std::vector<std::vector<int>> var(static_cast<std::size_t>(dd), std::vector<int>(static_cast<std::size_t>(ds), -1));
  std::vector<std::pair<int, int>> var_pos;
  for (int i = 0; i < dd; ++i)
    for (int j = 0; j < ds; ++j)
      if (!blocked || (*dst_labels)[static_cast<std::size_t>(i)] == (*src_labels)[static_cast<std::size_t>(j)]) {
        var[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(var_pos.size());
        var_pos.push_back({i, j});
      }
  const int nvars = static_cast<int>(var_pos.size());

  RowReducer red(nvars);
  for (std::size_t g = 0; g < src.size(); ++g) {
    // (X g_src - g_dst X)[i][j] = sum_k X[i][k] gs[k][j] - sum_k gd[i][k] X[k][j].
    std::map<std::pair<int, int>, std::map<int, Scalar>> eqs;
    for (int v = 0; v < nvars; ++v) {
      auto [i, k] = var_pos[static_cast<std::size_t>(v)];
      for (const auto& e : src[g].row(k)) eqs[{i, e.col}][v] += e.value;
    }
    std::vector<SparseRow> dcols = columns_of(dst[g]);
    for (int v = 0; v < nvars; ++v) {
      auto [k, j] = var_pos[static_cast<std::size_t>(v)];
      for (const auto& e : dcols[static_cast<std::size_t>(k)]) eqs[{e.col, j}][v] -= e.value;
    }
    for (auto& [pos, coeffs] : eqs) {
      SparseRow r;
      for (auto& [v, c] : coeffs)
        if (!c.is_zero()) r.push_back({v, std::move(c)});
      if (!r.empty()) red.add(std::move(r));
    }
  }
  IntertwinerSpace out;
  out.unknowns = nvars;
  out.blocked = blocked;
  for (const auto& k : red.kernel()) {
    Matrix x(dd, ds);
    for (const auto& e : k) {
      auto [i, j] = var_pos[static_cast<std::size_t>(e.col)];
      x.set(i, j, e.value);
    }
    out.basis.push_back(std::move(x));
  }
  return out;
}

IntertwinerSpace commutant(const std::vector<Matrix>& gens, const std::vector<int>* blocks) {
  if (blocks == nullptr) return intertwiner_space(gens, gens);
  const int d = gens.front().rows();
  if (static_cast<int>(blocks->size()) != d) raise(ErrorCode::DimensionMismatch, "block label count differs from dimension");
  auto label = [&](int i) { return (*blocks)[static_cast<std::size_t>(i)]; };
  // Diagonal generators must be constant on each block; the others must send
  // each block into a single block.
  std::map<int, std::vector<Scalar>> signature;
  for (const auto& g : gens) {
    if (g.is_diagonal()) {
      std::map<int, Scalar> value;
      for (int i = 0; i < d; ++i) {
        Scalar v = g.at(i, i);
        auto [it, fresh] = value.emplace(label(i), v);
        if (!fresh && it->second != v)
          raise(ErrorCode::BlockInconsistent, "diagonal generator is not scalar on block " + std::to_string(label(i)));
      }
      for (auto& [l, v] : value) signature[l].push_back(v);
    } else {
      std::map<int, int> target;
      for (int i = 0; i < d; ++i)
        for (const auto& e : g.row(i)) {
          auto [it, fresh] = target.emplace(label(e.col), label(i));
          if (!fresh && it->second != label(i))
            raise(ErrorCode::BlockInconsistent, "generator does not map block " + std::to_string(label(e.col)) + " into a single block");
        }
    }
  }
  // Distinct labels must be told apart by the diagonal generators.
  std::set<std::vector<std::string>> seen;
  for (const auto& [l, vals] : signature) {
    std::vector<std::string> key;
    for (const auto& v : vals) key.push_back(v.str());
    if (!seen.insert(key).second) return intertwiner_space(gens, gens);
  }
  if (signature.empty()) return intertwiner_space(gens, gens);
  return intertwiner_space(gens, gens, blocks, blocks);
}

// ---------------------------------------------------------------- polynomials

std::vector<Scalar> minimal_polynomial(const Matrix& a) {
  if (!a.square()) raise(ErrorCode::DimensionMismatch, "minimal polynomial of a non-square matrix");
  const int n = a.rows();
  auto flatten = [n](const Matrix& m) {
    SparseRow v;
    for (int i = 0; i < n; ++i)
      for (const auto& e : m.row(i)) v.push_back({i * n + e.col, e.value});
    return v;
  };
  // Track combinations: reduce powers against earlier ones, recording the
  // coefficients in extra columns.
  const int cols = n * n;
  std::vector<SparseRow> powers;
  Matrix p = Matrix::identity(n);
  for (int deg = 0; deg <= n; ++deg) {
    powers.push_back(flatten(p));
    RowReducer red(cols + deg + 1);
    for (int k = 0; k <= deg; ++k) {
      SparseRow r = powers[static_cast<std::size_t>(k)];
      r.push_back({cols + k, Scalar(1)});
      red.add(std::move(r));
    }
    for (const auto& r : red.rref()) {
      if (r.front().col < cols) continue;
      // A row with no matrix part gives a relation sum c_k A^k = 0.
      std::vector<Scalar> c(static_cast<std::size_t>(deg + 1));
      for (const auto& e : r) c[static_cast<std::size_t>(e.col - cols)] = e.value;
      Scalar lead = c.back();
      if (lead.is_zero()) continue;
      for (auto& x : c) x /= lead;
      return c;
    }
    p = p * a;
  }
  raise(ErrorCode::PreconditionViolated, "no annihilating polynomial found up to degree n");
}

Matrix evaluate_polynomial(const std::vector<Scalar>& coeffs, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  Matrix p = Matrix::identity(a.rows());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_zero()) out = out + p.scaled(coeffs[k]);
    if (k + 1 < coeffs.size()) p = p * a;
  }
  return out;
}

}  // namespace qsw
