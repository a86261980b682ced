#include "qsw/analysis.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "qsw/error.hpp"
#include "qsw/parallel.hpp"

namespace qsw {

namespace {

Matrix stack(const std::vector<Matrix>& ms, int cols) {
  int rows = 0;
  for (const auto& m : ms) rows += m.rows();
  Matrix out(rows, cols);
  int off = 0;
  for (const auto& m : ms) {
    for (int i = 0; i < m.rows(); ++i) out.set_row(off + i, m.row(i));
    off += m.rows();
  }
  return out;
}

// Basis indices grouped by tag, weights in weight_before order.
std::vector<std::pair<Weight, std::vector<int>>> tag_groups(const WeightModule& m) {
  std::map<Weight, std::vector<int>> g;
  for (int k = 0; k < m.dim(); ++k) g[m.tag(k)].push_back(k);
  std::vector<std::pair<Weight, std::vector<int>>> out(g.begin(), g.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return weight_before(x.first, y.first); });
  return out;
}

void require_tags(const WeightModule& m) {
  if (m.tags) return;
  if (weight_decomposition(m).generalized_only) raise(ErrorCode::TorusNotSemisimple, "torus does not act semisimply");
  raise(ErrorCode::InvalidArgument, "module carries no weight tags");
}

Matrix restrict_op(const Matrix& op, const std::vector<Vec>& basis, const std::function<Vec(const Vec&)>& coords) {
  const int k = static_cast<int>(basis.size());
  Matrix out(k, k);
  for (int c = 0; c < k; ++c) {
    Vec img = op.apply(basis[static_cast<std::size_t>(c)]);
    if (is_zero_vec(img)) continue;
    Vec co = coords(img);
    for (int r = 0; r < k; ++r)
      if (!co[static_cast<std::size_t>(r)].is_zero()) out.set(r, c, co[static_cast<std::size_t>(r)]);
  }
  return out;
}

}  // namespace

const WeightSpace* WeightDecomposition::find(const Weight& w) const {
  for (const auto& s : spaces)
    if (s.weight && *s.weight == w) return &s;
  return nullptr;
}

WeightDecomposition weight_decomposition(const WeightModule& m) {
  WeightDecomposition out;
  const int d = m.dim();
  if (m.tags) {
    for (const auto& [w, idx] : tag_groups(m)) {
      std::vector<Vec> vs;
      for (int k : idx) vs.push_back(basis_vector(d, k));
      out.spaces.push_back({m.character_of(idx.front()), w, Subspace::span(d, vs)});
    }
    return out;
  }
  std::vector<const Matrix*> torus;
  for (const auto& x : m.a) torus.push_back(&x);
  for (const auto& x : m.b) torus.push_back(&x);
  for (const auto* x : torus)
    if (!x->is_upper_triangular())
      raise(ErrorCode::InvalidArgument, "untagged module needs triangular torus matrices");
  std::vector<TorusCharacter> chars;
  for (int k = 0; k < d; ++k) {
    TorusCharacter c;
    for (const auto& x : m.a) c.a.push_back(x.at(k, k));
    for (const auto& x : m.b) c.b.push_back(x.at(k, k));
    if (std::find(chars.begin(), chars.end(), c) == chars.end()) chars.push_back(c);
  }
  const Matrix id = Matrix::identity(d);
  int total = 0;
  std::vector<WeightSpace> eigen, general;
  for (const auto& c : chars) {
    std::vector<Matrix> lin, gen;
    for (int i = 0; i < m.n; ++i) {
      Matrix da = m.a[static_cast<std::size_t>(i)] - c.a[static_cast<std::size_t>(i)] * id;
      Matrix db = m.b[static_cast<std::size_t>(i)] - c.b[static_cast<std::size_t>(i)] * id;
      gen.push_back(da.pow(d));
      gen.push_back(db.pow(d));
      lin.push_back(std::move(da));
      lin.push_back(std::move(db));
    }
    Subspace ev = kernel_basis(stack(lin, d));
    total += ev.dim();
    eigen.push_back({c, std::nullopt, ev});
    general.push_back({c, std::nullopt, kernel_basis(stack(gen, d))});
  }
  out.generalized_only = total < d;
  out.spaces = out.generalized_only ? general : eigen;
  return out;
}

std::vector<WeightedSubspace> singular_vectors(const WeightModule& m) {
  require_tags(m);
  const int d = m.dim();
  std::vector<WeightedSubspace> out;
  for (const auto& [w, idx] : tag_groups(m)) {
    std::map<int, int> local;
    for (std::size_t k = 0; k < idx.size(); ++k) local[idx[k]] = static_cast<int>(k);
    std::vector<SparseRow> rows;
    for (const auto& ej : m.e)
      for (int r = 0; r < d; ++r) {
        SparseRow row;
        for (const auto& en : ej.row(r)) {
          auto it = local.find(en.col);
          if (it != local.end()) row.push_back({it->second, en.value});
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
    Matrix sys(static_cast<int>(rows.size()), static_cast<int>(idx.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) sys.set_row(static_cast<int>(r), rows[r]);
    Subspace ker = kernel_basis(sys);
    if (ker.is_zero()) continue;
    std::vector<Vec> vs;
    for (const auto& kv : ker.basis()) {
      Vec v(static_cast<std::size_t>(d));
      for (std::size_t k = 0; k < idx.size(); ++k) v[static_cast<std::size_t>(idx[k])] = kv[k];
      vs.push_back(std::move(v));
    }
    out.push_back({w, Subspace::span(d, vs)});
  }
  return out;
}

int singular_dimension(const std::vector<WeightedSubspace>& sv) {
  int t = 0;
  for (const auto& s : sv) t += s.space.dim();
  return t;
}

Submodule submodule(const WeightModule& m, const Vec& v) { return submodule(m, std::vector<Vec>{v}); }

Submodule submodule(const WeightModule& m, const std::vector<Vec>& seeds) {
  const int d = m.dim();
  bool any = false;
  for (const auto& s : seeds) {
    if (static_cast<int>(s.size()) != d) raise(ErrorCode::DimensionMismatch, "seed has wrong length");
    any = any || !is_zero_vec(s);
  }
  if (!any) raise(ErrorCode::ZeroVector, "submodule generated by the zero vector");

  Submodule out;
  if (!m.tags) {
    std::vector<Matrix> ops = m.generators();
    ops.insert(ops.end(), m.a_inv.begin(), m.a_inv.end());
    ops.insert(ops.end(), m.b_inv.begin(), m.b_inv.end());
    out.space = span_closure(ops, seeds);
    out.basis = out.space.basis();
    auto coords = [&](const Vec& x) { return out.space.coordinates(x); };
    WeightModule r;
    r.n = m.n;
    r.param = m.param;
    for (int p : out.space.pivots()) r.labels.push_back(m.labels[static_cast<std::size_t>(p)]);
    for (const auto& x : m.e) r.e.push_back(restrict_op(x, out.basis, coords));
    for (const auto& x : m.f) r.f.push_back(restrict_op(x, out.basis, coords));
    for (const auto& x : m.a) r.a.push_back(restrict_op(x, out.basis, coords));
    for (const auto& x : m.b) r.b.push_back(restrict_op(x, out.basis, coords));
    for (const auto& x : m.a_inv) r.a_inv.push_back(restrict_op(x, out.basis, coords));
    for (const auto& x : m.b_inv) r.b_inv.push_back(restrict_op(x, out.basis, coords));
    out.module = std::move(r);
    return out;
  }

  // Tagged: grow one subspace per weight so the basis is weight-adapted.
  std::map<Weight, std::vector<int>> groups;
  for (int k = 0; k < d; ++k) groups[m.tag(k)].push_back(k);
  std::map<Weight, Subspace> spaces;
  std::deque<std::pair<Weight, Vec>> work;
  for (const auto& s : seeds)
    for (const auto& [w, idx] : groups) {
      Vec c(static_cast<std::size_t>(d));
      bool nz = false;
      for (int k : idx) {
        c[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(k)];
        nz = nz || !s[static_cast<std::size_t>(k)].is_zero();
      }
      if (nz) work.emplace_back(w, std::move(c));
    }
  while (!work.empty()) {
    auto [w, v] = std::move(work.front());
    work.pop_front();
    auto it = spaces.try_emplace(w, Subspace(d)).first;
    if (!it->second.insert(v)) continue;
    for (int j = 1; j < m.n; ++j) {
      Vec up = m.E(j).apply(v);
      if (!is_zero_vec(up)) work.emplace_back(w + Weight::alpha(m.n, j), std::move(up));
      Vec down = m.F(j).apply(v);
      if (!is_zero_vec(down)) work.emplace_back(w - Weight::alpha(m.n, j), std::move(down));
    }
  }
  std::vector<Weight> order;
  for (const auto& [w, s] : spaces) order.push_back(w);
  std::sort(order.begin(), order.end(), weight_before);
  std::map<Weight, int> offset;
  std::vector<std::string> labels;
  std::vector<Weight> tags;
  out.space = Subspace(d);
  for (const auto& w : order) {
    offset[w] = static_cast<int>(out.basis.size());
    const Subspace& s = spaces.at(w);
    for (std::size_t k = 0; k < s.basis().size(); ++k) {
      out.basis.push_back(s.basis()[k]);
      out.space.insert(s.basis()[k]);
      labels.push_back(m.labels[static_cast<std::size_t>(s.pivots()[k])]);
      tags.push_back(w);
    }
  }
  const int k = static_cast<int>(out.basis.size());
  auto restrict_shift = [&](const Matrix& op, const Weight& delta) {
    Matrix res(k, k);
    for (int c = 0; c < k; ++c) {
      Vec img = op.apply(out.basis[static_cast<std::size_t>(c)]);
      if (is_zero_vec(img)) continue;
      Weight target = tags[static_cast<std::size_t>(c)] + delta;
      auto sp = spaces.find(target);
      if (sp == spaces.end()) raise(ErrorCode::PreconditionViolated, "closure missed weight " + target.str());
      Vec co = sp->second.coordinates(img);
      int off = offset.at(target);
      for (std::size_t r = 0; r < co.size(); ++r)
        if (!co[r].is_zero()) res.set(off + static_cast<int>(r), c, co[r]);
    }
    return res;
  };
  std::vector<Matrix> e, f;
  for (int j = 1; j < m.n; ++j) {
    e.push_back(restrict_shift(m.E(j), Weight::alpha(m.n, j)));
    f.push_back(restrict_shift(m.F(j), -Weight::alpha(m.n, j)));
  }
  out.module = module_from_tags(m.n, m.param, std::move(labels), std::move(tags), std::move(e), std::move(f), m.shift);
  return out;
}

bool is_cyclic(const WeightModule& m, const Vec& v) {
  if (is_zero_vec(v)) return false;
  return span_closure(m.generators(), {v}).dim() == m.dim();
}

SimplicityResult simplicity_check(const WeightModule& m) {
  auto sv = singular_vectors(m);
  int sd = singular_dimension(sv);
  if (sd != 1) return {false, "singular space has dimension " + std::to_string(sd)};
  const Vec& v = sv.front().space.basis().front();
  if (submodule(m, v).space.dim() != m.dim()) return {false, "singular vector does not generate"};
  for (int j = 1; j < m.n; ++j)
    if (!m.E(j).pow(m.dim()).is_zero()) return {false, "e_" + std::to_string(j) + " not nilpotent"};
  return {true, ""};
}

std::vector<int> DecompositionReport::dimensions() const {
  std::vector<int> d;
  for (const auto& s : summands) d.push_back(s.dimension());
  return d;
}

DecompositionReport decompose(const WeightModule& m, std::optional<std::uint64_t> shuffle_seed) {
  require_tags(m);
  if (!m.param.is_generic())
    raise(ErrorCode::DegenerateParameters, "complete reducibility needs generic parameters (s = -r given)");
  struct Candidate {
    Weight w;
    Vec v;
  };
  std::vector<Candidate> cands;
  for (const auto& ws : singular_vectors(m))
    for (const auto& v : ws.space.basis()) cands.push_back({ws.weight, v});
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    std::shuffle(cands.begin(), cands.end(), rng);
  }
  std::vector<Submodule> subs(cands.size());
  parallel_for(cands.size(), [&](std::size_t i) { subs[i] = submodule(m, cands[i].v); });

  DecompositionReport rep;
  Subspace running(m.dim());
  for (std::size_t i = 0; i < cands.size(); ++i) {
    Subspace trial = subspace_sum(running, subs[i].space);
    if (trial.dim() != running.dim() + subs[i].space.dim()) continue;
    running = std::move(trial);
    Summand s;
    s.space = subs[i].space;
    s.basis = subs[i].basis;
    s.highest_vector = cands[i].v;
    s.highest_weight = cands[i].w;
    s.shift = m.shift_or_counit();
    s.simple = simplicity_check(subs[i].module).simple;
    s.module = std::move(subs[i].module);
    rep.multiplicities[s.highest_weight] += 1;
    rep.summands.push_back(std::move(s));
  }
  rep.complete = running.dim() == m.dim();
  return rep;
}

HighestWeightData highest_weight_data(const WeightModule& s) {
  auto sv = singular_vectors(s);
  if (singular_dimension(sv) != 1)
    raise(ErrorCode::NotHighestWeight, "singular space has dimension " + std::to_string(singular_dimension(sv)));
  HighestWeightData out;
  out.vector = sv.front().space.basis().front();
  const Weight top = sv.front().weight;
  const int n = s.n;
  for (int i = 1; i < n; ++i) {
    Vec u = out.vector;
    int len = 0;
    for (;;) {
      u = s.F(i).apply(u);
      if (is_zero_vec(u)) break;
      if (++len > s.dim()) raise(ErrorCode::PreconditionViolated, "f_" + std::to_string(i) + " is not nilpotent");
    }
    out.string_lengths.push_back(len);
  }
  std::vector<int> lam(static_cast<std::size_t>(n), 0);
  for (int i = n - 1; i >= 1; --i) lam[static_cast<std::size_t>(i - 1)] = lam[static_cast<std::size_t>(i)] + out.string_lengths[static_cast<std::size_t>(i - 1)];
  Weight diff = top - Weight(lam);
  for (int i = 2; i <= n; ++i)
    if (diff[i] != diff[1])
      raise(ErrorCode::PreconditionViolated, "top weight " + top.str() + " disagrees with string lengths");
  out.chi = s.shift_or_counit();
  out.lambda = top;
  return out;
}

WeightModule simple_module(int n, const Weight& lam, const ParamSpec& p) {
  if (lam.rank() != n) raise(ErrorCode::RankMismatch, "weight rank differs from n");
  if (!is_dominant(lam)) raise(ErrorCode::NotDominant, lam.str() + " is not dominant");
  const int c = lam[n];
  const Weight mu = lam - Weight::constant(n, c);
  WeightModule base;
  if (mu.total() == 0) {
    base = one_dim_module(n, TorusCharacter::counit(n), p);
  } else {
    WeightModule big = tensor_power(natural_module(n, p), mu.total());
    const WeightedSubspace* hit = nullptr;
    auto sv = singular_vectors(big);
    for (const auto& ws : sv)
      if (ws.weight == mu) hit = &ws;
    if (!hit) raise(ErrorCode::SingularVectorNotFound, "no singular vector of weight " + mu.str());
    base = submodule(big, hit->space.basis().front()).module;
  }
  if (c == 0) return base;
  WeightModule t = tensor(one_dim_module(n, hat_character(Weight::constant(n, c), p), p), base, false);
  std::vector<Weight> tags;
  for (const auto& w : *t.tags) tags.push_back(w + Weight::constant(n, c));
  WeightModule out = module_from_tags(n, p, base.labels, std::move(tags), t.e, t.f);
  validate(out);
  return out;
}

Matrix shift_iso(const TorusCharacter& chi, const WeightModule& m) {
  if (!chi.admits_one_dim()) raise(ErrorCode::NotOneDimensionalCharacter, "character " + chi.str() + " violates omega = omega'");
  if (chi.rank() != m.n) raise(ErrorCode::RankMismatch, "character rank differs from module rank");
  if (!m.tags) raise(ErrorCode::TorusNotSemisimple, "module carries no weight tags");
  const int n = m.n;
  Vec gens;
  for (int i = 1; i < n; ++i) gens.push_back(chi.omega(i));
  gens.push_back(chi.a[static_cast<std::size_t>(n - 1)]);
  Vec diag;
  for (int k = 0; k < m.dim(); ++k) {
    auto coords = to_alpha_coords(m.tag(k));
    Scalar v(1);
    for (int i = 0; i < n; ++i) v = v * gens[static_cast<std::size_t>(i)].pow(-coords[static_cast<std::size_t>(i)]);
    diag.push_back(v);
  }
  return Matrix::diagonal(diag);
}

std::optional<std::string> intertwining_failure(const Matrix& x, const WeightModule& src, const WeightModule& dst) {
  auto gs = src.generators();
  auto gd = dst.generators();
  if (gs.size() != gd.size()) return "generator counts differ";
  for (std::size_t i = 0; i < gs.size(); ++i)
    if (auto w = (x * gs[i]).first_difference(gd[i] * x)) return "generator " + std::to_string(i) + " " + w->str();
  return std::nullopt;
}

std::optional<std::string> commutation_failure(const Matrix& x, const WeightModule& m) {
  return intertwining_failure(x, m, m);
}

std::string to_string(IsoStatus s) {
  switch (s) {
    case IsoStatus::Found: return "found";
    case IsoStatus::NotIsomorphic: return "not_isomorphic";
    case IsoStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

bool invertible(const Matrix& x, const ParamSpec& p) {
  const int d = x.rows();
  if (p.is_symbolic()) {
    try {
      if (rank(x.specialized(ParamSpec::specialized(2, 3))) == d) return true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DivisionByZero) throw;
    }
  }
  return rank(x) == d;
}

std::vector<std::string> character_keys(const WeightModule& m) {
  std::vector<std::string> keys;
  for (int k = 0; k < m.dim(); ++k) keys.push_back(m.character_of(k).str());
  return keys;
}

}  // namespace

IsoResult iso_check(const WeightModule& m, const WeightModule& n, std::uint64_t seed) {
  if (m.n != n.n) raise(ErrorCode::RankMismatch, "modules have different ranks");
  if (!(m.param == n.param)) raise(ErrorCode::ParamMismatch, "modules use different parameters");
  IsoResult res;
  if (m.dim() != n.dim()) {
    res.status = IsoStatus::NotIsomorphic;
    res.certificate = "dimensions " + std::to_string(m.dim()) + " and " + std::to_string(n.dim()) + " differ";
    return res;
  }
  std::vector<int> src_labels, dst_labels;
  bool labelled = m.tags && n.tags;
  if (labelled) {
    auto km = character_keys(m);
    auto kn = character_keys(n);
    auto sm = km, sn = kn;
    std::sort(sm.begin(), sm.end());
    std::sort(sn.begin(), sn.end());
    if (sm != sn) {
      res.status = IsoStatus::NotIsomorphic;
      res.certificate = "weight multisets differ";
      return res;
    }
    std::map<std::string, int> ids;
    for (const auto& k : sm) ids.try_emplace(k, static_cast<int>(ids.size()));
    for (const auto& k : km) src_labels.push_back(ids.at(k));
    for (const auto& k : kn) dst_labels.push_back(ids.at(k));
  }
  auto space = intertwiner_space(m.generators(), n.generators(), labelled ? &src_labels : nullptr,
                                 labelled ? &dst_labels : nullptr);
  res.intertwiner_dimension = space.dimension();
  if (space.basis.empty()) {
    res.status = IsoStatus::NotIsomorphic;
    res.certificate = "no nonzero intertwiner";
    return res;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  const int attempts = space.basis.size() == 1 ? 1 : kIsoAttempts;
  for (int t = 0; t < attempts; ++t) {
    Matrix x(m.dim(), m.dim());
    if (t == 0) {
      for (const auto& b : space.basis) x = x + b;
    } else {
      for (const auto& b : space.basis) {
        int c = coef(rng);
        if (c != 0) x = x + Scalar(c) * b;
      }
    }
    if (invertible(x, m.param)) {
      res.status = IsoStatus::Found;
      res.map = std::move(x);
      return res;
    }
  }
  res.status = IsoStatus::Inconclusive;
  res.certificate = "no invertible intertwiner among " + std::to_string(attempts) + " combinations";
  return res;
}

CasimirResult casimir(const WeightModule& m) {
  auto rep = decompose(m);
  if (!rep.complete) raise(ErrorCode::PreconditionViolated, "module is not completely reducible");
  const ParamSpec& p = m.param;
  CasimirResult out;
  const int d = m.dim();
  std::vector<Vec> cols;
  std::vector<GScalar> exps;
  for (const auto& s : rep.summands) {
    GScalar g = g_exponent(s.highest_weight);
    out.summand_exponents.push_back(g);
    out.spectrum[g] += s.dimension();
    for (const auto& v : s.basis) {
      cols.push_back(v);
      exps.push_back(g);
    }
  }
  out.lowest = *std::min_element(exps.begin(), exps.end());
  Matrix basis = Matrix::from_columns(cols, d);
  Matrix basis_inv = inverse(basis);
  try {
    Vec xd;
    for (int k = 0; k < d; ++k) xd.push_back(materialize(g_exponent(m.tag(k)), p));
    out.xi = Matrix::diagonal(xd);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::HalfPowerUnavailable) throw;
  }
  try {
    Vec dd;
    for (const auto& g : exps) dd.push_back(materialize(g, p));
    out.omega_xi = basis * Matrix::diagonal(dd) * basis_inv;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::HalfPowerUnavailable) throw;
  }
  bool integral = true;
  Vec nd;
  for (const auto& g : exps) {
    long diff = g.twice_exponent() - out.lowest.twice_exponent();
    if (diff % 2 != 0) {
      integral = false;
      break;
    }
    int k = static_cast<int>(diff / 2);
    nd.push_back(p.rs_power(k, -k));
  }
  if (integral) out.omega_xi_normalized = basis * Matrix::diagonal(nd) * basis_inv;
  return out;
}

SpecializationReport specialization_check(const WeightModule& m) {
  const ParamSpec& p = m.param;
  if (p.is_symbolic()) raise(ErrorCode::InvalidSpecialization, "specialization check needs numeric parameters");
  SpecializationReport rep;
  rep.balanced = (p.r() * p.s()).is_one();
  const Matrix id = Matrix::identity(m.dim());
  for (int i = 1; i <= m.n; ++i)
    if (auto w = (m.B(i) * m.A(i)).first_difference(id))
      rep.failures.push_back("b_" + std::to_string(i) + " a_" + std::to_string(i) + " " + w->str());
  rep.passed = rep.failures.empty();
  return rep;
}

}  // namespace qsw
