#include "qsw/sl2.hpp"

#include "qsw/error.hpp"

namespace qsw {

namespace {

Vec inverses(const Vec& d) {
  Vec out;
  for (const auto& x : d) out.push_back(x.inverse());
  return out;
}

Sl2Module from_diagonals(const ParamSpec& p, Matrix e, Matrix f, const Vec& w, const Vec& wp) {
  Sl2Module m;
  m.param = p;
  m.e = std::move(e);
  m.f = std::move(f);
  m.w = Matrix::diagonal(w);
  m.wp = Matrix::diagonal(wp);
  m.w_inv = Matrix::diagonal(inverses(w));
  m.wp_inv = Matrix::diagonal(inverses(wp));
  return m;
}

// Keeps columns 0..last.
Matrix columns_upto(const Matrix& x, int last) {
  Vec mask(static_cast<std::size_t>(x.cols()));
  for (int j = 0; j < x.cols(); ++j) mask[static_cast<std::size_t>(j)] = Scalar(j <= last ? 1 : 0);
  return x * Matrix::diagonal(mask);
}

RelationResult compare(const std::string& name, const Matrix& lhs, const Matrix& rhs, int last_col) {
  RelationResult r;
  r.name = name;
  if (last_col < 0) return r;
  if (auto w = columns_upto(lhs, last_col).first_difference(columns_upto(rhs, last_col))) {
    r.passed = false;
    r.witness = w->str();
  }
  return r;
}

}  // namespace

Sl2Module sl2_verma_truncated(const Scalar& phi, const Scalar& phi_prime, int depth, const ParamSpec& p) {
  if (depth < 1) raise(ErrorCode::InvalidDepth, "depth must be at least 1");
  if (phi.is_zero() || phi_prime.is_zero()) raise(ErrorCode::InvalidArgument, "phi and phi' must be nonzero");
  const int d = depth + 1;
  Matrix e(d, d), f(d, d);
  Vec w, wp;
  const Scalar inv = (p.r() - p.s()).inverse();
  for (int j = 0; j < d; ++j) {
    if (j + 1 < d) f.set(j + 1, j, Scalar(1));
    if (j > 0) e.set(j - 1, j, qint(j, p) * (phi * p.rs_power(1 - j, 0) - phi_prime * p.rs_power(0, 1 - j)) * inv);
    w.push_back(phi * p.rs_power(-j, j));
    wp.push_back(phi_prime * p.rs_power(j, -j));
  }
  Sl2Module m = from_diagonals(p, std::move(e), std::move(f), w, wp);
  m.depth = depth;
  return m;
}

Sl2Module sl2_simple(const Scalar& phi, int ell, const ParamSpec& p) {
  if (ell < 0) raise(ErrorCode::InvalidArgument, "ell must be nonnegative");
  if (phi.is_zero()) raise(ErrorCode::InvalidArgument, "phi must be nonzero");
  const int d = ell + 1;
  Matrix e(d, d), f(d, d);
  Vec w, wp;
  for (int j = 0; j < d; ++j) {
    if (j + 1 < d) f.set(j + 1, j, Scalar(1));
    if (j > 0) e.set(j - 1, j, phi * p.rs_power(-ell, 0) * qint(j, p) * qint(ell + 1 - j, p));
    w.push_back(phi * p.rs_power(-j, j));
    wp.push_back(phi * p.rs_power(-ell + j, ell - j));
  }
  return from_diagonals(p, std::move(e), std::move(f), w, wp);
}

Sl2Module sl2_restrict(const WeightModule& m, int i) {
  if (i < 1 || i >= m.n) raise(ErrorCode::IndexOutOfRange, "no simple root " + std::to_string(i));
  Sl2Module s;
  s.param = m.param;
  s.e = m.E(i);
  s.f = m.F(i);
  s.w = m.omega(i);
  s.wp = m.omega_prime(i);
  s.w_inv = m.omega_inv(i);
  s.wp_inv = m.omega_prime_inv(i);
  return s;
}

RelationReport check_sl2_relations(const Sl2Module& m) {
  const ParamSpec& p = m.param;
  const int d = m.dim();
  const int all = d - 1;
  const int below = m.depth ? *m.depth - 1 : all;
  const Matrix id = Matrix::identity(d);
  RelationReport rep;
  RelationResult inv = compare("omega_inverse", m.w * m.w_inv, id, all);
  if (inv.passed) inv = compare("omega_inverse", m.wp * m.wp_inv, id, all);
  rep.results.push_back(inv);
  rep.results.push_back(compare("omega_commute", m.w * m.wp, m.wp * m.w, all));
  RelationResult conj = compare("omega_conjugation", m.w * m.e, p.rs_power(1, -1) * (m.e * m.w), all);
  if (conj.passed) conj = compare("omega_conjugation", m.w * m.f, p.rs_power(-1, 1) * (m.f * m.w), all);
  rep.results.push_back(conj);
  RelationResult pconj = compare("omega_prime_conjugation", m.wp * m.e, p.rs_power(-1, 1) * (m.e * m.wp), all);
  if (pconj.passed) pconj = compare("omega_prime_conjugation", m.wp * m.f, p.rs_power(1, -1) * (m.f * m.wp), all);
  rep.results.push_back(pconj);
  rep.results.push_back(
      compare("omega_commutator", commutator(m.e, m.f), (p.r() - p.s()).inverse() * (m.w - m.wp), below));
  return rep;
}

Subspace sl2_singular_vectors(const Sl2Module& m) { return kernel_basis(m.e); }

RelationReport commutation_identity_check(const Sl2Module& m, int k_max) {
  if (k_max < 1) raise(ErrorCode::InvalidArgument, "k_max must be at least 1");
  const ParamSpec& p = m.param;
  const int d = m.dim();
  const Scalar inv = (p.r() - p.s()).inverse();
  RelationReport rep;
  Matrix fk = Matrix::identity(d);
  Matrix ek = Matrix::identity(d);
  for (int k = 1; k <= k_max; ++k) {
    Matrix fk1 = fk;
    Matrix ek1 = ek;
    fk = fk * m.f;
    ek = ek * m.e;
    const int last = m.depth ? *m.depth - k : d - 1;
    const std::string tag = "[k=" + std::to_string(k) + "]";
    Matrix lhs1 = m.e * fk;
    Matrix rhs1 = fk * m.e + (qint(k, p) * inv) * (fk1 * (p.rs_power(1 - k, 0) * m.w - p.rs_power(0, 1 - k) * m.wp));
    rep.results.push_back(compare("e_past_f_power" + tag, lhs1, rhs1, last));
    Matrix lhs2 = ek * m.f;
    Matrix rhs2 = m.f * ek + (qint(k, p) * inv) * (ek1 * (p.rs_power(0, 1 - k) * m.w - p.rs_power(1 - k, 0) * m.wp));
    rep.results.push_back(compare("e_power_past_f" + tag, lhs2, rhs2, last));
  }
  return rep;
}

RelationReport commutation_identity_check(const WeightModule& m, int i, int k_max) {
  return commutation_identity_check(sl2_restrict(m, i), k_max);
}

}  // namespace qsw
