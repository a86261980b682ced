#include "qsw_cli/suite.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "qsw/analysis.hpp"
#include "qsw/error.hpp"
#include "qsw/hecke.hpp"
#include "qsw/rmatrix.hpp"
#include "qsw/sl2.hpp"

namespace qsw::cli {

namespace {

class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (!cond && failure_.empty()) failure_ = what;
  }
  void relations(const RelationReport& rep, const std::string& where) {
    expect(rep.all_passed(), where + ": " + rep.first_failure());
  }
  bool ok() const { return failure_.empty(); }
  std::string detail() const { return ok() ? std::to_string(checks_) + " checks passed" : failure_; }

 private:
  int checks_ = 0;
  std::string failure_;
};

std::string nk(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

const ParamSpec kSym = ParamSpec::symbolic();

Vec wedge12(int n, const ParamSpec& p) {
  Vec v = basis_vector(n * n, tensor_index(n, {1, 2}));
  v[static_cast<std::size_t>(tensor_index(n, {2, 1}))] = -p.r();
  return v;
}

void defining_relations(Checker& c, std::uint64_t) {
  for (int n = 2; n <= 4; ++n) c.relations(check_relations(natural_module(n, kSym)), "natural n=" + std::to_string(n));
  for (auto [n, k] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}})
    c.relations(check_relations(tensor_power(natural_module(n, kSym), k)), nk(n, k));
}

void power_identities(Checker& c, std::uint64_t) {
  for (int n : {2, 3}) {
    auto m = tensor_power(natural_module(n, kSym), 3);
    for (int i = 1; i < n; ++i) c.relations(commutation_identity_check(m, i, 5), nk(n, 3) + " i=" + std::to_string(i));
  }
  auto verma = sl2_verma_truncated(parse_scalar("r^2*s"), parse_scalar("s^3"), 8, kSym);
  c.relations(commutation_identity_check(verma, 5), "truncated depth 8");
}

void rank_one_family(Checker& c, std::uint64_t) {
  const Scalar phi = parse_scalar("r*s^2");
  for (int ell = 0; ell <= 5; ++ell) {
    auto l = sl2_simple(phi, ell, kSym);
    std::string where = "ell=" + std::to_string(ell);
    c.relations(check_sl2_relations(l), where);
    c.expect(l.dim() == ell + 1, where + " dimension");
    c.expect(sl2_singular_vectors(l) == Subspace::span(ell + 1, {basis_vector(ell + 1, 0)}), where + " singular line");
    auto v = sl2_verma_truncated(phi, phi * kSym.rs_power(-ell, ell), ell + 2, kSym);
    c.relations(check_sl2_relations(v), where + " truncated");
    c.expect(is_zero_vec(v.e.apply(basis_vector(v.dim(), ell + 1))), where + " e v_{ell+1} != 0");
  }
}

void rmatrix_checks(Checker& c, std::uint64_t) {
  for (auto [n, k] : {std::pair{2, 3}, {2, 4}, {3, 3}}) {
    c.relations(braid_check(n, k, kSym), nk(n, k) + " braid");
    c.relations(intertwining_check(n, k, kSym), nk(n, k) + " intertwining");
  }
  for (int n : {2, 3}) {
    auto rep = quadratic_and_minpoly(n, kSym);
    c.expect(rep.quadratic_holds, "quadratic relation n=" + std::to_string(n) + " " + rep.quadratic_witness);
    c.expect(rep.factored == "(t - 1)(t + r/s)", "minimal polynomial n=" + std::to_string(n) + " is " + rep.factored);
    c.expect(rep.degree == 2, "minimal polynomial degree");
  }
}

void two_factor_split(Checker& c, std::uint64_t) {
  for (int n : {2, 3}) {
    auto vv = tensor_power(natural_module(n, kSym), 2);
    auto rep = decompose(vv);
    std::string where = "n=" + std::to_string(n);
    c.expect(rep.complete && rep.summands.size() == 2, where + " two summands");
    if (rep.summands.size() != 2) continue;
    c.expect(rep.summands[0].dimension() == n * (n + 1) / 2, where + " symmetric dimension");
    c.expect(rep.summands[1].dimension() == n * (n - 1) / 2, where + " antisymmetric dimension");
    c.expect(Subspace::span(n * n, {rep.summands[0].highest_vector}) == Subspace::span(n * n, {basis_vector(n * n, 0)}),
             where + " top vector of S^2");
    c.expect(Subspace::span(n * n, {rep.summands[1].highest_vector}) == Subspace::span(n * n, {wedge12(n, kSym)}),
             where + " top vector of wedge");
    for (const auto& s : rep.summands) c.expect(s.simple, where + " summand simple");
    auto pr = rs_projectors(n, kSym);
    const Matrix id = Matrix::identity(n * n);
    c.expect(pr.p1 + pr.p2 == id, where + " p1 + p2 = 1");
    c.expect((pr.p1 * pr.p2).is_zero() && (pr.p2 * pr.p1).is_zero(), where + " p1 p2 = 0");
    c.expect(pr.p1 * pr.p1 == pr.p1 && pr.p2 * pr.p2 == pr.p2, where + " idempotent");
    c.expect(pr.sym == rep.summands[0].space && pr.wedge == rep.summands[1].space, where + " projector images");
  }
}

const std::vector<std::pair<int, int>>& decomposed_cases() {
  static const std::vector<std::pair<int, int>> cases = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}};
  return cases;
}

void complete_reducibility(Checker& c, std::uint64_t) {
  for (auto [n, k] : decomposed_cases()) {
    auto m = tensor_power(natural_module(n, kSym), k);
    auto rep = decompose(m);
    c.expect(rep.complete, nk(n, k) + " incomplete");
    int sq = 0;
    for (const auto& [w, mult] : rep.multiplicities) sq += mult * mult;
    int cd = commutant(m.generators()).dimension();
    c.expect(sq == cd, nk(n, k) + " sum of squared multiplicities " + std::to_string(sq) + " vs commutant " +
                           std::to_string(cd));
    for (const auto& s : rep.summands) c.expect(s.simple, nk(n, k) + " non-simple summand");
    if (n == 2 && k == 3) {
      auto dims = rep.dimensions();
      std::sort(dims.begin(), dims.end());
      c.expect(dims == std::vector<int>({2, 2, 4}), "n=2 k=3 summand dimensions");
      for (const auto& ws : singular_vectors(m))
        c.expect(ws.space.dim() == rep.multiplicities[ws.weight], "singular kernel rank at " + ws.weight.str());
    }
  }
}

void casimir_checks(Checker& c, std::uint64_t) {
  for (auto [n, k] : decomposed_cases()) {
    auto m = tensor_power(natural_module(n, kSym), k);
    auto cas = casimir(m);
    c.expect(cas.omega_xi_normalized.has_value(), nk(n, k) + " normalized operator");
    if (cas.omega_xi_normalized)
      c.expect(!commutation_failure(*cas.omega_xi_normalized, m).has_value(), nk(n, k) + " normalized commutes");
    if (cas.omega_xi) c.expect(!commutation_failure(*cas.omega_xi, m).has_value(), nk(n, k) + " commutes");
    // Exponents 1/2 <lam + 2 rho, lam> are recorded as integers 2e.
    for (const auto& g : cas.summand_exponents)
      c.expect(g.twice_exponent() % 2 == (n * k) % 2, nk(n, k) + " exponent parity");
  }
  auto v = casimir(natural_module(2, kSym));
  c.expect(v.summand_exponents.size() == 1 && v.summand_exponents[0].exponent_str() == "1", "exponent on V");
  c.expect(v.omega_xi && *v.omega_xi == parse_scalar("r/s") * Matrix::identity(2), "operator on V");
  for (int n = 1; n <= 3; ++n) {
    auto ws = dominant_weights(n, 6);
    for (const auto& lam : ws)
      for (const auto& mu : ws)
        if (lam != mu && dominance_leq(mu, lam))
          c.expect(g_exponent(lam) != g_exponent(mu), "g separates " + lam.str() + " > " + mu.str());
  }
}

void jordan_fixture(Checker& c, std::uint64_t) {
  auto j = jordan_module(2, 2, parse_scalar("r"), parse_scalar("s"), kSym);
  c.relations(check_relations(j), "jordan relations");
  bool raised = false;
  try {
    decompose(j);
  } catch (const Error& e) {
    raised = e.code() == ErrorCode::TorusNotSemisimple;
  }
  c.expect(raised, "decompose did not raise TorusNotSemisimple");
}

void hecke_checks(Checker& c, std::uint64_t seed) {
  for (int k = 1; k <= 4; ++k) {
    auto perms = Permutation::all(k);
    std::map<Permutation, int> col;
    for (const auto& s : perms) col.emplace(s, static_cast<int>(col.size()));
    RowReducer red(static_cast<int>(perms.size()));
    for (const auto& s : perms) {
      const HeckeElement t = t_sigma(s, kSym);
      SparseRow row;
      for (const auto& [x, v] : t.terms()) row.push_back({col.at(x), v});
      std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
      red.add(row);
    }
    c.expect(red.rank() == static_cast<int>(perms.size()), "span dimension k=" + std::to_string(k));
  }
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 100; ++trial) {
    int k = 2 + static_cast<int>(rng() % 4);
    auto perms = Permutation::all(k);
    const Permutation sigma = perms[rng() % perms.size()];
    std::vector<int> word;
    Permutation cur = sigma;
    while (!cur.is_identity()) {
      Permutation inv = cur.inverse();
      std::vector<int> desc;
      for (int i = 1; i < k; ++i)
        if (inv(i) > inv(i + 1)) desc.push_back(i);
      int pick = desc[rng() % desc.size()];
      word.push_back(pick);
      cur = cur.simple_times(pick);
    }
    c.expect(word_product(k, word, kSym) == t_sigma(sigma, kSym), "reduced word independence at " + sigma.str());
  }
  const Scalar q = parse_scalar("s/r");
  for (int k = 2; k <= 4; ++k)
    for (int i = 1; i < k; ++i) {
      HeckeElement t = parse_scalar("1/r") * HeckeElement::generator(k, i, kSym);
      c.expect((t * t - (q - Scalar(1)) * t - q * HeckeElement::unit(k, kSym)).is_zero(), "normalized quadratic");
    }
}

void schur_weyl(Checker& c, std::uint64_t) {
  for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {3, 3}, {4, 3}}) {
    auto r = schur_weyl_check(n, k, kSym);
    c.expect(r.centralizer_dim == r.k_factorial && r.hecke_image_dim == r.k_factorial,
             nk(n, k) + " centralizer " + std::to_string(r.centralizer_dim) + " image " +
                 std::to_string(r.hecke_image_dim));
    c.expect(r.isomorphic, nk(n, k) + " isomorphic");
  }
  auto r = schur_weyl_check(2, 3, kSym);
  c.expect(r.surjective && !r.isomorphic, "n=2 k=3 surjective but not injective");
  auto rep = decompose(tensor_power(natural_module(2, kSym), 3));
  int sq = 0;
  for (const auto& [w, mult] : rep.multiplicities) sq += mult * mult;
  c.expect(r.centralizer_dim == 5 && sq == 5, "n=2 k=3 centralizer " + std::to_string(r.centralizer_dim));
}

void cyclicity(Checker& c, std::uint64_t) {
  for (int k = 1; k <= 3; ++k)
    for (int n = std::max(2, k); n <= 4; ++n) {
      auto m = tensor_power(natural_module(n, kSym), k);
      std::vector<int> idx;
      for (int i = 1; i <= k; ++i) idx.push_back(i);
      c.expect(is_cyclic(m, basis_vector(m.dim(), tensor_index(n, idx))), nk(n, k) + " not cyclic");
    }
}

void tensor_commutativity(Checker& c, std::uint64_t) {
  auto v = natural_module(2, kSym);
  auto vv = tensor(v, v);
  auto sym = submodule(vv, basis_vector(4, 0)).module;
  auto wedge = submodule(vv, wedge12(2, kSym)).module;
  std::vector<TorusCharacter> chars = {
      hat_character(Weight({1, 1}), kSym),
      TorusCharacter{{Scalar(3), Scalar(3)}, {Scalar(5), Scalar(5)}},
      hat_character(Weight({-2, -2}), kSym) * TorusCharacter{{Scalar(-1), Scalar(-1)}, {Scalar(2), Scalar(2)}}};
  std::vector<std::pair<std::string, WeightModule>> mods = {{"V", v}, {"S2", sym}, {"L2", wedge}};
  for (std::size_t t = 0; t < chars.size(); ++t)
    for (const auto& [name, m] : mods) {
      auto l = one_dim_module(2, chars[t], kSym);
      auto fail = intertwining_failure(shift_iso(chars[t], m), tensor(l, m), tensor(m, l));
      c.expect(!fail.has_value(), "character " + std::to_string(t) + " on " + name + ": " + fail.value_or(""));
    }
  auto iso = iso_check(tensor(v, sym), tensor(sym, v));
  c.expect(iso.status == IsoStatus::Found, "V (x) S2 vs S2 (x) V: " + to_string(iso.status));
}

void specialization(Checker& c, std::uint64_t) {
  auto half = ParamSpec::specialized(2, Rational(1, 2));
  auto a = specialization_check(natural_module(2, half));
  c.expect(a.passed, "b a = 1 on V");
  auto b = specialization_check(simple_module(2, Weight({2, 0}), half));
  c.expect(b.passed, "b a = 1 on L(2,0)");
  for (const auto& p : {half, kSym})
    for (int sign : {1, -1}) {
      TorusCharacter chi{{Scalar(sign), Scalar(sign)}, {Scalar(1), Scalar(1)}};
      for (const auto& lam : {Weight({1, 0}), Weight({2, 0}), Weight({1, 1}), Weight({3, 1})}) {
        auto m = tensor(one_dim_module(2, chi, p), simple_module(2, lam, p));
        c.relations(check_relations(m), "twisted L" + lam.str());
        c.expect(simplicity_check(m).simple, "twisted L" + lam.str() + " simple");
        c.expect(chi.omega(1) == Scalar(sign), "omega value");
      }
    }
}

struct Criterion {
  const char* name;
  std::function<void(Checker&, std::uint64_t)> fn;
};

const std::vector<Criterion>& table() {
  static const std::vector<Criterion> t = {
      {"defining_relations", defining_relations},
      {"commutation_identities", power_identities},
      {"rank_one_family", rank_one_family},
      {"r_matrix", rmatrix_checks},
      {"two_factor_decomposition", two_factor_split},
      {"complete_reducibility", complete_reducibility},
      {"casimir", casimir_checks},
      {"non_semisimple_fixture", jordan_fixture},
      {"hecke_algebra", hecke_checks},
      {"schur_weyl", schur_weyl},
      {"cyclicity", cyclicity},
      {"tensor_commutativity", tensor_commutativity},
      {"specialization", specialization},
  };
  return t;
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) raise(ErrorCode::IndexOutOfRange, "no criterion " + std::to_string(id));
  const Criterion& e = table()[static_cast<std::size_t>(id - 1)];
  CriterionResult res;
  res.id = id;
  res.name = e.name;
  Checker c;
  auto start = std::chrono::steady_clock::now();
  try {
    e.fn(c, seed);
    res.passed = c.ok();
    res.detail = c.detail();
  } catch (const std::exception& ex) {
    res.passed = false;
    res.detail = std::string("exception: ") + ex.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::vector<CriterionResult> run_criteria(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

}  // namespace qsw::cli
