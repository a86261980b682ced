#include "qsw/rmatrix.hpp"

#include "qsw/analysis.hpp"
#include "qsw/error.hpp"
#include "qsw/parallel.hpp"

namespace qsw {

Matrix r_vv(int n, const ParamSpec& p) {
  if (n < 2) raise(ErrorCode::InvalidRank, "R-matrix needs n >= 2");
  const int d = n * n;
  Matrix r(d, d);
  auto at = [n](int a, int b) { return (a - 1) * n + (b - 1); };
  const Scalar sinv = p.rs_power(0, -1);
  const Scalar mix = Scalar(1) - p.rs_power(1, -1);
  for (int i = 1; i <= n; ++i) {
    r.set(at(i, i), at(i, i), Scalar(1));
    for (int j = i + 1; j <= n; ++j) {
      r.set(at(j, i), at(i, j), p.r());
      r.set(at(i, j), at(j, i), sinv);
      r.set(at(j, i), at(j, i), mix);
    }
  }
  return r;
}

Matrix place_on_factors(const Matrix& r, int n, int k, int i) {
  if (k < 2 || i < 1 || i >= k) raise(ErrorCode::IndexOutOfRange, "factor position " + std::to_string(i) + " for k = " + std::to_string(k));
  int left = 1, right = 1;
  for (int t = 1; t < i; ++t) left *= n;
  for (int t = i + 2; t <= k; ++t) right *= n;
  return kron(kron(Matrix::identity(left), r), Matrix::identity(right));
}

ROperator r_i(int n, int k, int i, const ParamSpec& p, bool check) {
  ROperator op{n, k, i, place_on_factors(r_vv(n, p), n, k, i)};
  if (check) {
    auto m = tensor_power(natural_module(n, p), k);
    if (auto w = commutation_failure(op.matrix, m))
      raise(ErrorCode::PreconditionViolated, "R_" + std::to_string(i) + " does not commute: " + *w);
  }
  return op;
}

RelationReport braid_check(const Matrix& r, int n, int k) {
  if (k < 2) raise(ErrorCode::InvalidArgument, "braid check needs k >= 2");
  std::vector<Matrix> ri;
  for (int i = 1; i < k; ++i) ri.push_back(place_on_factors(r, n, k, i));
  struct Job {
    int i, j;
  };
  std::vector<Job> jobs;
  for (int i = 1; i < k; ++i)
    for (int j = i + 1; j < k; ++j) jobs.push_back({i, j});
  std::vector<RelationResult> results(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t t) {
    const auto [i, j] = jobs[t];
    const Matrix& a = ri[static_cast<std::size_t>(i - 1)];
    const Matrix& b = ri[static_cast<std::size_t>(j - 1)];
    RelationResult& res = results[t];
    std::optional<Witness> w;
    if (j == i + 1) {
      res.name = "braid[i=" + std::to_string(i) + "]";
      w = (a * b * a).first_difference(b * a * b);
    } else {
      res.name = "far_commute[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]";
      w = (a * b).first_difference(b * a);
    }
    if (w) {
      res.passed = false;
      res.witness = w->str();
    }
  });
  RelationReport rep;
  rep.results = std::move(results);
  return rep;
}

RelationReport braid_check(int n, int k, const ParamSpec& p) { return braid_check(r_vv(n, p), n, k); }

RelationReport intertwining_check(int n, int k, const ParamSpec& p) {
  auto m = tensor_power(natural_module(n, p), k);
  RelationReport rep;
  for (int i = 1; i < k; ++i) {
    RelationResult res;
    res.name = "r_intertwines[i=" + std::to_string(i) + "]";
    if (auto w = commutation_failure(place_on_factors(r_vv(n, p), n, k, i), m)) {
      res.passed = false;
      res.witness = *w;
    }
    rep.results.push_back(res);
  }
  return rep;
}

namespace {

Scalar eval_poly(const std::vector<Scalar>& c, const Scalar& t) {
  Scalar acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

// Divides a monic polynomial by (t - root).
std::vector<Scalar> deflate(const std::vector<Scalar>& c, const Scalar& root) {
  const std::size_t d = c.size() - 1;
  std::vector<Scalar> q(d);
  Scalar carry = c[d];
  for (std::size_t i = d; i-- > 0;) {
    q[i] = carry;
    carry = c[i] + carry * root;
  }
  return q;
}

std::string term_str(const Scalar& c, int power) {
  std::string mono = power == 0 ? "" : power == 1 ? "t" : "t^" + std::to_string(power);
  if (power == 0) return c.str();
  if (c.is_one()) return mono;
  if ((-c).is_one()) return "-" + mono;
  std::string cs = c.str();
  bool compound = cs.find_first_of("+-", 1) != std::string::npos;
  return (compound ? "(" + cs + ")" : cs) + "*" + mono;
}

std::string expanded_str(const std::vector<Scalar>& c) {
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    std::string t = term_str(c[i], static_cast<int>(i));
    if (out.empty()) {
      out = t;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out.empty() ? "0" : out;
}

std::string linear_factor(const Scalar& root) {
  Scalar neg = -root;
  std::string s = neg.str();
  if (neg.is_zero()) return "t";
  if (s[0] == '-') return "(t - " + s.substr(1) + ")";
  return "(t + " + s + ")";
}

}  // namespace

MinpolyReport minpoly_report(const Matrix& x, const ParamSpec& p) {
  MinpolyReport rep;
  rep.coefficients = minimal_polynomial(x);
  rep.degree = static_cast<int>(rep.coefficients.size()) - 1;
  rep.expanded = expanded_str(rep.coefficients);
  const Scalar r = p.r(), s = p.s();
  std::vector<Scalar> cands = {Scalar(1), Scalar(-1), r / s, -(r / s), s / r, -(s / r), r, -r, s, -s};
  std::vector<Scalar> rest = rep.coefficients;
  for (const auto& c : cands) {
    while (rest.size() > 1 && eval_poly(rest, c).is_zero()) {
      rep.roots.push_back(c);
      rep.factored += linear_factor(c);
      rest = deflate(rest, c);
    }
  }
  if (rest.size() > 1) rep.factored += "(" + expanded_str(rest) + ")";
  return rep;
}

MinpolyReport quadratic_and_minpoly(int n, const ParamSpec& p) {
  Matrix r = r_vv(n, p);
  MinpolyReport rep = minpoly_report(r, p);
  const Scalar q = p.rs_power(1, -1);
  Matrix rhs = (Scalar(1) - q) * r + q * Matrix::identity(r.rows());
  auto w = (r * r).first_difference(rhs);
  rep.quadratic_holds = !w.has_value();
  if (w) rep.quadratic_witness = w->str();
  return rep;
}

Subspace rs_symmetric(int n, const ParamSpec& p) {
  std::vector<Vec> vs;
  const int d = n * n;
  for (int i = 1; i <= n; ++i) {
    vs.push_back(basis_vector(d, tensor_index(n, {i, i})));
    for (int j = i + 1; j <= n; ++j) {
      Vec v = basis_vector(d, tensor_index(n, {i, j}));
      v[static_cast<std::size_t>(tensor_index(n, {j, i}))] = p.s();
      vs.push_back(v);
    }
  }
  return Subspace::span(d, vs);
}

Subspace rs_antisymmetric(int n, const ParamSpec& p) {
  std::vector<Vec> vs;
  const int d = n * n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Vec v = basis_vector(d, tensor_index(n, {i, j}));
      v[static_cast<std::size_t>(tensor_index(n, {j, i}))] = -p.r();
      vs.push_back(v);
    }
  return Subspace::span(d, vs);
}

Projectors rs_projectors(int n, const ParamSpec& p) {
  if (p.s_equals_minus_r()) raise(ErrorCode::DegenerateParameters, "projectors need s != -r");
  Matrix r = r_vv(n, p);
  const Matrix id = Matrix::identity(n * n);
  const Scalar inv = (p.s() + p.r()).inverse();
  Projectors out;
  out.p1 = inv * (p.s() * r + p.r() * id);
  out.p2 = inv * (p.s() * id - p.s() * r);
  out.sym = image(out.p1);
  out.wedge = image(out.p2);
  return out;
}

Matrix r_from_definition_n2(const ParamSpec& p, bool with_theta) {
  const int n = 2;
  auto v = natural_module(n, p);
  Matrix flip(4, 4);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      Scalar twist = torus_pairing(Weight::epsilon(n, a), Weight::epsilon(n, b), p).inverse();
      flip.set(tensor_index(n, {b, a}), tensor_index(n, {a, b}), twist);
    }
  if (!with_theta) return flip;
  Matrix theta = Matrix::identity(4) + (p.s() - p.r()) * kron(v.F(1), v.E(1));
  return theta * flip;
}

NonGenericLayers nongeneric_layers(const ParamSpec& p) {
  if (!p.s_equals_minus_r()) raise(ErrorCode::InvalidArgument, "layers fixture needs s = -r");
  auto vv = tensor_power(natural_module(2, p), 2);
  NonGenericLayers out;
  out.total = vv.dim();
  Vec wedge = basis_vector(4, tensor_index(2, {1, 2}));
  wedge[static_cast<std::size_t>(tensor_index(2, {2, 1}))] = -p.r();
  auto w = submodule(vv, wedge);
  out.wedge_dim = w.space.dim();
  auto top = submodule(vv, basis_vector(4, tensor_index(2, {1, 1})));
  out.generated_by_top = top.space.dim();
  out.wedge_inside_top = top.space.contains(wedge);
  auto wd = weight_decomposition(vv);
  out.top_weight_space_is_line = wd.find(Weight({2, 0}))->space.dim() == 1;
  Vec plus = basis_vector(4, tensor_index(2, {1, 2}));
  plus[static_cast<std::size_t>(tensor_index(2, {2, 1}))] = p.r();
  Subspace all = top.space;
  all.insert(plus);
  all.insert(basis_vector(4, tensor_index(2, {2, 2})));
  out.top_quotient_dim = all.dim() - top.space.dim();
  // The quotient layer must be stable modulo the two-dimensional submodule.
  for (const auto& g : vv.generators())
    for (const auto& x : all.basis())
      if (!all.contains(g.apply(x))) out.top_quotient_dim = -1;
  return out;
}

}  // namespace qsw
