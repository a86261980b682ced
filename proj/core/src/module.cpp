#include "qsw/module.hpp"

#include <functional>

#include "qsw/error.hpp"

namespace qsw {

std::vector<Matrix> WeightModule::generators() const {
  std::vector<Matrix> g;
  g.insert(g.end(), e.begin(), e.end());
  g.insert(g.end(), f.begin(), f.end());
  g.insert(g.end(), a.begin(), a.end());
  g.insert(g.end(), b.begin(), b.end());
  return g;
}

TorusCharacter WeightModule::shift_or_counit() const { return shift ? *shift : TorusCharacter::counit(n); }

TorusCharacter WeightModule::character_of(int idx) const {
  if (!tags) raise(ErrorCode::TorusNotSemisimple, "module has no weight tags");
  return shift_or_counit() * hat_character(tag(idx), param);
}

bool RelationReport::all_passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

const RelationResult* RelationReport::find(const std::string& name) const {
  for (const auto& r : results)
    if (r.name == name) return &r;
  return nullptr;
}

std::string RelationReport::first_failure() const {
  for (const auto& r : results)
    if (!r.passed) return r.name + ": " + r.witness;
  return "";
}

namespace {

// Accumulates pass/fail for one named relation family.
class Family {
 public:
  explicit Family(std::string name) { res_.name = std::move(name); }

  void expect_equal(const Matrix& lhs, const Matrix& rhs, const std::string& where) {
    if (!res_.passed) return;
    if (auto w = lhs.first_difference(rhs)) {
      res_.passed = false;
      res_.witness = where + " " + w->str();
    }
  }
  void fail(const std::string& why) {
    if (!res_.passed) return;
    res_.passed = false;
    res_.witness = why;
  }
  RelationResult result() const { return res_; }

 private:
  RelationResult res_;
};

std::string idx(const char* name, int i) { return std::string(name) + "=" + std::to_string(i); }

}  // namespace

RelationReport check_relations(const WeightModule& m) {
  const int n = m.n;
  const int d = m.dim();
  const ParamSpec& p = m.param;
  const Matrix id = Matrix::identity(d);
  RelationReport rep;
  auto in = [n](int i, int j) { return inner(Weight::epsilon(n, i), Weight::alpha(n, j)); };

  Family inv("torus_inverse");
  Family comm("torus_commute");
  for (int i = 1; i <= n; ++i) {
    inv.expect_equal(m.A(i) * m.A_inv(i), id, idx("a", i));
    inv.expect_equal(m.A_inv(i) * m.A(i), id, idx("a", i));
    inv.expect_equal(m.B(i) * m.B_inv(i), id, idx("b", i));
    inv.expect_equal(m.B_inv(i) * m.B(i), id, idx("b", i));
  }
  std::vector<const Matrix*> torus;
  for (int i = 1; i <= n; ++i) torus.push_back(&m.A(i));
  for (int i = 1; i <= n; ++i) torus.push_back(&m.B(i));
  for (std::size_t x = 0; x < torus.size(); ++x)
    for (std::size_t y = x + 1; y < torus.size(); ++y)
      comm.expect_equal(*torus[x] * *torus[y], *torus[y] * *torus[x], "pair " + std::to_string(x) + "," + std::to_string(y));
  rep.results.push_back(inv.result());
  rep.results.push_back(comm.result());

  Family aconj("a_conjugation");
  Family bconj("b_conjugation");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < n; ++j) {
      int k = in(i, j);
      std::string where = idx("i", i) + " " + idx("j", j);
      aconj.expect_equal(m.A(i) * m.E(j), p.rs_power(k, 0) * (m.E(j) * m.A(i)), where + " e");
      aconj.expect_equal(m.A(i) * m.F(j), p.rs_power(-k, 0) * (m.F(j) * m.A(i)), where + " f");
      bconj.expect_equal(m.B(i) * m.E(j), p.rs_power(0, k) * (m.E(j) * m.B(i)), where + " e");
      bconj.expect_equal(m.B(i) * m.F(j), p.rs_power(0, -k) * (m.F(j) * m.B(i)), where + " f");
    }
  rep.results.push_back(aconj.result());
  rep.results.push_back(bconj.result());

  const Scalar inv_rs = (p.r() - p.s()).inverse();
  Family ef("ef_commutator");
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      Matrix lhs = commutator(m.E(i), m.F(j));
      Matrix rhs = i == j ? inv_rs * (m.omega(i) - m.omega_prime(i)) : Matrix(d, d);
      ef.expect_equal(lhs, rhs, idx("i", i) + " " + idx("j", j));
    }
  rep.results.push_back(ef.result());

  Family distant("distant_commute");
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      distant.expect_equal(m.E(i) * m.E(j), m.E(j) * m.E(i), "e " + idx("i", i) + " " + idx("j", j));
      distant.expect_equal(m.F(i) * m.F(j), m.F(j) * m.F(i), "f " + idx("i", i) + " " + idx("j", j));
    }
  rep.results.push_back(distant.result());

  const Scalar r = p.r();
  const Scalar s = p.s();
  const Scalar ri = p.rs_power(-1, 0);
  const Scalar si = p.rs_power(0, -1);
  const Matrix zero(d, d);
  Family serre_e("serre_e");
  Family serre_f("serre_f");
  for (int i = 1; i + 1 < n; ++i) {
    const Matrix& x = m.E(i);
    const Matrix& y = m.E(i + 1);
    serre_e.expect_equal(x * x * y - (r + s) * (x * y * x) + (r * s) * (y * x * x), zero, idx("i", i) + " first");
    serre_e.expect_equal(x * y * y - (r + s) * (y * x * y) + (r * s) * (y * y * x), zero, idx("i", i) + " second");
    const Matrix& u = m.F(i);
    const Matrix& v = m.F(i + 1);
    serre_f.expect_equal(u * u * v - (ri + si) * (u * v * u) + (ri * si) * (v * u * u), zero, idx("i", i) + " first");
    serre_f.expect_equal(u * v * v - (ri + si) * (v * u * v) + (ri * si) * (v * v * u), zero, idx("i", i) + " second");
  }
  rep.results.push_back(serre_e.result());
  rep.results.push_back(serre_f.result());

  // Forms in terms of omega_j = a_j b_{j+1} and omega'_j = a_{j+1} b_j.
  std::vector<Matrix> w, wp, wi, wpi;
  for (int j = 1; j < n; ++j) {
    w.push_back(m.omega(j));
    wp.push_back(m.omega_prime(j));
    wi.push_back(m.omega_inv(j));
    wpi.push_back(m.omega_prime_inv(j));
  }
  Family wcomm("omega_commute");
  for (int j = 0; j + 1 < n; ++j) {
    wcomm.expect_equal(w[static_cast<std::size_t>(j)] * wi[static_cast<std::size_t>(j)], id, idx("j", j + 1));
    wcomm.expect_equal(wp[static_cast<std::size_t>(j)] * wpi[static_cast<std::size_t>(j)], id, idx("j", j + 1) + " prime");
  }
  std::vector<const Matrix*> all;
  for (auto& x : w) all.push_back(&x);
  for (auto& x : wp) all.push_back(&x);
  for (std::size_t x = 0; x < all.size(); ++x)
    for (std::size_t y = x + 1; y < all.size(); ++y)
      wcomm.expect_equal(*all[x] * *all[y], *all[y] * *all[x], "pair " + std::to_string(x) + "," + std::to_string(y));
  rep.results.push_back(wcomm.result());

  Family wconj("omega_conjugation");
  Family wpconj("omega_prime_conjugation");
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      int x = in(i, j);
      int y = in(i + 1, j);
      const Matrix& om = w[static_cast<std::size_t>(i - 1)];
      const Matrix& omp = wp[static_cast<std::size_t>(i - 1)];
      std::string where = idx("i", i) + " " + idx("j", j);
      wconj.expect_equal(om * m.E(j), p.rs_power(x, y) * (m.E(j) * om), where + " e");
      wconj.expect_equal(om * m.F(j), p.rs_power(-x, -y) * (m.F(j) * om), where + " f");
      wpconj.expect_equal(omp * m.E(j), p.rs_power(y, x) * (m.E(j) * omp), where + " e");
      wpconj.expect_equal(omp * m.F(j), p.rs_power(-y, -x) * (m.F(j) * omp), where + " f");
    }
  rep.results.push_back(wconj.result());
  rep.results.push_back(wpconj.result());

  Family wef("omega_commutator");
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      Matrix rhs = i == j ? inv_rs * (w[static_cast<std::size_t>(i - 1)] - wp[static_cast<std::size_t>(i - 1)]) : Matrix(d, d);
      wef.expect_equal(commutator(m.E(i), m.F(j)), rhs, idx("i", i) + " " + idx("j", j));
    }
  rep.results.push_back(wef.result());

  if (m.tags) {
    Family tagf("weight_tags");
    for (int k = 0; k < d; ++k) {
      TorusCharacter chi = m.character_of(k);
      for (int i = 1; i <= n; ++i) {
        if (m.A(i).row(k).size() > 1 || m.A(i).at(k, k) != chi.a[static_cast<std::size_t>(i - 1)] ||
            m.B(i).row(k).size() > 1 || m.B(i).at(k, k) != chi.b[static_cast<std::size_t>(i - 1)])
          tagf.fail("torus action on basis vector " + m.labels[static_cast<std::size_t>(k)] + " disagrees with tag " +
                    m.tag(k).str());
      }
    }
    for (int j = 1; j < n; ++j) {
      Weight al = Weight::alpha(n, j);
      for (int row = 0; row < d; ++row) {
        for (const auto& en : m.E(j).row(row))
          if (m.tag(row) != m.tag(en.col) + al)
            tagf.fail(idx("e", j) + " maps tag " + m.tag(en.col).str() + " to " + m.tag(row).str());
        for (const auto& en : m.F(j).row(row))
          if (m.tag(row) != m.tag(en.col) - al)
            tagf.fail(idx("f", j) + " maps tag " + m.tag(en.col).str() + " to " + m.tag(row).str());
      }
    }
    rep.results.push_back(tagf.result());
  }
  return rep;
}

void validate(const WeightModule& m) {
  auto rep = check_relations(m);
  if (!rep.all_passed()) raise(ErrorCode::PreconditionViolated, "relation failed: " + rep.first_failure());
}

WeightModule module_from_tags(int n, const ParamSpec& p, std::vector<std::string> labels, std::vector<Weight> tags,
                              std::vector<Matrix> e, std::vector<Matrix> f, std::optional<TorusCharacter> shift) {
  if (n < 1) raise(ErrorCode::InvalidRank, "rank must be positive");
  if (labels.size() != tags.size()) raise(ErrorCode::DimensionMismatch, "label and tag counts differ");
  if (shift && shift->is_counit()) shift.reset();
  WeightModule m;
  m.n = n;
  m.param = p;
  m.labels = std::move(labels);
  m.e = std::move(e);
  m.f = std::move(f);
  const TorusCharacter chi = shift ? *shift : TorusCharacter::counit(n);
  for (int i = 1; i <= n; ++i) {
    Vec da, db, dai, dbi;
    for (const auto& t : tags) {
      if (t.rank() != n) raise(ErrorCode::RankMismatch, "weight tag of wrong rank");
      Scalar va = chi.a[static_cast<std::size_t>(i - 1)] * p.rs_power(t[i], 0);
      Scalar vb = chi.b[static_cast<std::size_t>(i - 1)] * p.rs_power(0, t[i]);
      dai.push_back(va.inverse());
      dbi.push_back(vb.inverse());
      da.push_back(std::move(va));
      db.push_back(std::move(vb));
    }
    m.a.push_back(Matrix::diagonal(da));
    m.b.push_back(Matrix::diagonal(db));
    m.a_inv.push_back(Matrix::diagonal(dai));
    m.b_inv.push_back(Matrix::diagonal(dbi));
  }
  m.tags = std::move(tags);
  m.shift = std::move(shift);
  return m;
}

WeightModule natural_module(int n, const ParamSpec& p) {
  if (n < 2) raise(ErrorCode::InvalidRank, "natural module needs n >= 2, got " + std::to_string(n));
  std::vector<std::string> labels;
  std::vector<Weight> tags;
  for (int j = 1; j <= n; ++j) {
    labels.push_back("v" + std::to_string(j));
    tags.push_back(Weight::epsilon(n, j));
  }
  std::vector<Matrix> e, f;
  for (int j = 1; j < n; ++j) {
    e.push_back(Matrix::unit(n, j - 1, j));
    f.push_back(Matrix::unit(n, j, j - 1));
  }
  WeightModule m = module_from_tags(n, p, std::move(labels), std::move(tags), std::move(e), std::move(f));
  validate(m);
  return m;
}

WeightModule one_dim_module(int n, const TorusCharacter& chi, const ParamSpec& p) {
  if (chi.rank() != n) raise(ErrorCode::RankMismatch, "character rank differs from n");
  if (!chi.admits_one_dim())
    raise(ErrorCode::NotOneDimensionalCharacter, "character " + chi.str() + " has omega_j != omega'_j");
  for (std::size_t i = 0; i < chi.a.size(); ++i)
    if (chi.a[i].is_zero() || chi.b[i].is_zero()) raise(ErrorCode::InvalidArgument, "character values must be nonzero");
  std::vector<Matrix> e(static_cast<std::size_t>(n - 1), Matrix(1, 1));
  std::vector<Matrix> f(static_cast<std::size_t>(n - 1), Matrix(1, 1));
  WeightModule m = module_from_tags(n, p, {"v"}, {Weight::zero(n)}, std::move(e), std::move(f), chi);
  validate(m);
  return m;
}

WeightModule jordan_module(int n, int size, const Scalar& xi, const Scalar& xi_prime, const ParamSpec& p) {
  if (n < 1) raise(ErrorCode::InvalidRank, "rank must be positive");
  if (size < 2) raise(ErrorCode::InvalidArgument, "Jordan block size must be at least 2");
  if (xi.is_zero() || xi_prime.is_zero()) raise(ErrorCode::InvalidArgument, "eigenvalues must be nonzero");
  auto block = [size](const Scalar& x) {
    Matrix j = Matrix::identity(size).scaled(x);
    for (int k = 0; k + 1 < size; ++k) j.set(k, k + 1, Scalar(1));
    return j;
  };
  // (x + N)^{-1} = sum_k (-1)^k x^{-k-1} N^k.
  auto block_inv = [size](const Scalar& x) {
    Matrix j(size, size);
    for (int row = 0; row < size; ++row)
      for (int col = row; col < size; ++col) {
        int k = col - row;
        Scalar v = x.pow(-k - 1);
        j.set(row, col, k % 2 == 0 ? v : -v);
      }
    return j;
  };
  WeightModule m;
  m.n = n;
  m.param = p;
  for (int k = 1; k <= size; ++k) m.labels.push_back("u" + std::to_string(k));
  m.e.assign(static_cast<std::size_t>(n - 1), Matrix(size, size));
  m.f.assign(static_cast<std::size_t>(n - 1), Matrix(size, size));
  m.a.assign(static_cast<std::size_t>(n), block(xi));
  m.b.assign(static_cast<std::size_t>(n), block(xi_prime));
  m.a_inv.assign(static_cast<std::size_t>(n), block_inv(xi));
  m.b_inv.assign(static_cast<std::size_t>(n), block_inv(xi_prime));
  validate(m);
  return m;
}

WeightModule tensor(const WeightModule& x, const WeightModule& y, bool check) {
  if (x.n != y.n) raise(ErrorCode::RankMismatch, "tensor factors have ranks " + std::to_string(x.n) + " and " + std::to_string(y.n));
  if (!(x.param == y.param)) raise(ErrorCode::ParamMismatch, "tensor factors use different parameters");
  const int n = x.n;
  const Matrix ix = Matrix::identity(x.dim());
  const Matrix iy = Matrix::identity(y.dim());
  WeightModule m;
  m.n = n;
  m.param = x.param;
  for (const auto& l1 : x.labels)
    for (const auto& l2 : y.labels) m.labels.push_back(l1 + "⊗" + l2);
  for (int j = 1; j < n; ++j) {
    m.e.push_back(kron(x.E(j), iy) + kron(x.omega(j), y.E(j)));
    m.f.push_back(kron(ix, y.F(j)) + kron(x.F(j), y.omega_prime(j)));
  }
  for (int i = 1; i <= n; ++i) {
    m.a.push_back(kron(x.A(i), y.A(i)));
    m.b.push_back(kron(x.B(i), y.B(i)));
    m.a_inv.push_back(kron(x.A_inv(i), y.A_inv(i)));
    m.b_inv.push_back(kron(x.B_inv(i), y.B_inv(i)));
  }
  if (x.tags && y.tags) {
    std::vector<Weight> t;
    for (const auto& w1 : *x.tags)
      for (const auto& w2 : *y.tags) t.push_back(w1 + w2);
    m.tags = std::move(t);
    if (x.shift || y.shift) {
      TorusCharacter chi = x.shift_or_counit() * y.shift_or_counit();
      if (!chi.is_counit()) m.shift = chi;
    }
  }
  if (check) validate(m);
  return m;
}

WeightModule tensor_power(const WeightModule& m, int k) {
  if (k < 1) raise(ErrorCode::InvalidArgument, "tensor power must be at least 1");
  WeightModule out = m;
  for (int i = 1; i < k; ++i) out = tensor(out, m, i + 1 == k);
  return out;
}

int tensor_index(int n, const std::vector<int>& indices) {
  int idx = 0;
  for (int i : indices) {
    if (i < 1 || i > n) raise(ErrorCode::IndexOutOfRange, "tensor factor index " + std::to_string(i));
    idx = idx * n + (i - 1);
  }
  return idx;
}

Vec basis_vector(int dim, int idx) {
  Vec v(static_cast<std::size_t>(dim));
  v[static_cast<std::size_t>(idx)] = Scalar(1);
  return v;
}

}  // namespace qsw
