#include "qsw_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "qsw/analysis.hpp"
#include "qsw/error.hpp"
#include "qsw/hecke.hpp"
#include "qsw/rmatrix.hpp"
#include "qsw_cli/suite.hpp"

namespace qsw::cli {

ParamSpec make_param(const RunConfig& cfg) {
  if (cfg.r.has_value() != cfg.s.has_value()) raise(ErrorCode::InvalidParams, "--r and --s must be given together");
  if (!cfg.r) return ParamSpec::symbolic();
  if (cfg.symbolic) raise(ErrorCode::InvalidParams, "--symbolic conflicts with --r/--s");
  Rational r = parse_rational(*cfg.r);
  Rational s = parse_rational(*cfg.s);
  if (r != 0 && r == -s) return ParamSpec::nongeneric(r, s);
  return ParamSpec::specialized(r, s);
}

Weight parse_weight(const std::string& text) {
  std::vector<int> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      c.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      raise(ErrorCode::ParseError, "bad weight coordinate '" + item + "'");
    }
  }
  if (c.empty()) raise(ErrorCode::ParseError, "empty weight");
  return Weight(c);
}

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) raise(ErrorCode::InvalidArgument, msg);
}

Json header(const RunConfig& cfg, const ParamSpec& p) {
  return Json{{"command", cfg.command}, {"n", cfg.n}, {"k", cfg.k}, {"params", to_json(p)}};
}

Json relation_entry(const std::string& name, const WeightModule& m, bool verbose) {
  auto rep = check_relations(m);
  Json j{{"module", name}, {"dim", m.dim()}, {"passed", rep.all_passed()}, {"relations", to_json(rep)}};
  if (!rep.all_passed()) j["witness"] = rep.first_failure();
  if (verbose) j["document"] = to_json(m);
  return j;
}

Outcome cmd_relations(const RunConfig& cfg, const ParamSpec& p) {
  Outcome o;
  o.report = header(cfg, p);
  Json mods = Json::array();
  if (cfg.module_path) {
    std::ifstream in(*cfg.module_path);
    if (!in) raise(ErrorCode::InvalidArgument, "cannot read " + *cfg.module_path);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const Json::exception& e) {
      raise(ErrorCode::ParseError, e.what());
    }
    mods.push_back(relation_entry(*cfg.module_path, module_from_json(doc), cfg.verbose));
  } else {
    require(cfg.n >= 2 && cfg.k >= 1, "relations needs n >= 2 and k >= 1");
    auto v = natural_module(cfg.n, p);
    mods.push_back(relation_entry("natural", v, cfg.verbose));
    for (int k = 2; k <= cfg.k; ++k) mods.push_back(relation_entry("tensor_power_" + std::to_string(k), tensor_power(v, k), cfg.verbose));
    mods.push_back(relation_entry("jordan", jordan_module(cfg.n, 2, p.r(), p.s(), p), cfg.verbose));
  }
  bool ok = true;
  for (const auto& m : mods) ok = ok && m["passed"].get<bool>();
  o.report["modules"] = mods;
  o.report["ok"] = ok;
  o.code = ok ? kOk : kCheckFailed;
  return o;
}

Outcome cmd_decompose(const RunConfig& cfg, const ParamSpec& p) {
  require(cfg.n >= 2 && cfg.k >= 1, "decompose needs n >= 2 and k >= 1");
  auto m = tensor_power(natural_module(cfg.n, p), cfg.k);
  auto rep = decompose(m);
  Outcome o;
  o.report = header(cfg, p);
  Json summands = Json::array(), dims = Json::array(), mult = Json::array();
  bool simple = true;
  for (const auto& s : rep.summands) {
    Json j{{"highest_weight", to_json(s.highest_weight)}, {"dimension", s.dimension()}, {"simple", s.simple},
           {"highest_vector", to_json(s.highest_vector)}};
    if (cfg.verbose) {
      Json basis = Json::array();
      for (const auto& v : s.basis) basis.push_back(to_json(v));
      j["basis"] = basis;
    }
    summands.push_back(j);
    dims.push_back(s.dimension());
    simple = simple && s.simple;
  }
  int sq = 0;
  for (const auto& [w, c] : rep.multiplicities) {
    mult.push_back(Json{{"weight", to_json(w)}, {"count", c}});
    sq += c * c;
  }
  std::vector<int> blocks;
  std::map<Weight, int> ids;
  for (const auto& t : *m.tags) blocks.push_back(ids.try_emplace(t, static_cast<int>(ids.size())).first->second);
  int cd = commutant(m.generators(), &blocks).dimension();
  o.report["complete"] = rep.complete;
  o.report["summand_dims"] = dims;
  o.report["summands"] = summands;
  o.report["multiplicities"] = mult;
  o.report["sum_squared_multiplicities"] = sq;
  o.report["commutant_dim"] = cd;
  bool ok = rep.complete && simple && sq == cd;
  o.report["ok"] = ok;
  o.code = ok ? kOk : kCheckFailed;
  return o;
}

Outcome cmd_casimir(const RunConfig& cfg, const ParamSpec& p) {
  require(cfg.n >= 2 && cfg.k >= 1, "casimir needs n >= 2 and k >= 1");
  auto m = tensor_power(natural_module(cfg.n, p), cfg.k);
  auto c = casimir(m);
  Outcome o;
  o.report = header(cfg, p);
  Json spec = Json::array();
  for (const auto& [g, mult] : c.spectrum) spec.push_back(Json{{"exponent", g.exponent_str()}, {"multiplicity", mult}});
  o.report["spectrum"] = spec;
  o.report["operator_available"] = c.omega_xi.has_value();
  bool commutes = true;
  std::string witness;
  for (const auto* x : {c.omega_xi ? &*c.omega_xi : nullptr, c.omega_xi_normalized ? &*c.omega_xi_normalized : nullptr}) {
    if (!x) continue;
    if (auto w = commutation_failure(*x, m)) {
      commutes = false;
      if (witness.empty()) witness = *w;
    }
  }
  bool xi_commutes = c.xi ? !commutation_failure(*c.xi, m).has_value() : false;
  o.report["commutes"] = commutes;
  o.report["xi_alone_commutes"] = xi_commutes;
  if (!witness.empty()) o.report["witness"] = witness;
  if (cfg.verbose && c.omega_xi) o.report["omega_xi"] = to_json(*c.omega_xi);
  o.report["ok"] = commutes;
  o.code = commutes ? kOk : kCheckFailed;
  return o;
}

Outcome cmd_rmatrix(const RunConfig& cfg, const ParamSpec& p) {
  require(cfg.n >= 2, "rmatrix needs n >= 2");
  const std::vector<std::string> known = {"all", "braid", "quadratic", "minpoly", "projectors", "intertwining"};
  require(std::find(known.begin(), known.end(), cfg.check) != known.end(), "unknown --check " + cfg.check);
  const bool all = cfg.check == "all";
  const int k = std::max(cfg.k, 3);
  Outcome o;
  o.report = header(cfg, p);
  bool ok = true;
  if (all || cfg.check == "braid") {
    auto rep = braid_check(cfg.n, k, p);
    o.report["braid"] = Json{{"k", k}, {"passed", rep.all_passed()}, {"relations", to_json(rep)}};
    ok = ok && rep.all_passed();
  }
  if (all || cfg.check == "intertwining") {
    auto rep = intertwining_check(cfg.n, k, p);
    o.report["intertwining"] = Json{{"k", k}, {"passed", rep.all_passed()}, {"relations", to_json(rep)}};
    ok = ok && rep.all_passed();
  }
  if (all || cfg.check == "quadratic" || cfg.check == "minpoly") {
    auto rep = quadratic_and_minpoly(cfg.n, p);
    if (all || cfg.check == "quadratic") {
      o.report["quadratic"] = Json{{"passed", rep.quadratic_holds}};
      if (!rep.quadratic_holds) o.report["quadratic"]["witness"] = rep.quadratic_witness;
      ok = ok && rep.quadratic_holds;
    }
    if (all || cfg.check == "minpoly") {
      bool expected = rep.degree == 2;
      o.report["minpoly"] = Json{{"degree", rep.degree}, {"factored", rep.factored}, {"expanded", rep.expanded}, {"passed", expected}};
      ok = ok && expected;
    }
  }
  if (all || cfg.check == "projectors") {
    auto pr = rs_projectors(cfg.n, p);
    const Matrix id = Matrix::identity(cfg.n * cfg.n);
    bool good = pr.p1 + pr.p2 == id && (pr.p1 * pr.p2).is_zero() && pr.p1 * pr.p1 == pr.p1 && pr.p2 * pr.p2 == pr.p2;
    o.report["projectors"] = Json{{"sym_dim", pr.sym.dim()}, {"wedge_dim", pr.wedge.dim()}, {"passed", good}};
    if (cfg.verbose) {
      o.report["projectors"]["p1"] = to_json(pr.p1);
      o.report["projectors"]["p2"] = to_json(pr.p2);
    }
    ok = ok && good;
  }
  if (cfg.verbose) o.report["r_matrix"] = to_json(r_vv(cfg.n, p));
  o.report["ok"] = ok;
  o.code = ok ? kOk : kCheckFailed;
  return o;
}

Outcome cmd_hecke(const RunConfig& cfg, const ParamSpec& p) {
  require(cfg.k >= 2 && cfg.k <= 6, "hecke needs 2 <= k <= 6");
  const int k = cfg.k;
  Outcome o;
  o.report = header(cfg, p);
  Json checks = Json::object();
  auto T = [&](int i) { return HeckeElement::generator(k, i, p); };
  const HeckeElement one = HeckeElement::unit(k, p);
  bool quad = true, braid = true, normalized = true;
  const Scalar q = p.rs_power(-1, 1);
  for (int i = 1; i < k; ++i) {
    quad = quad && T(i) * T(i) == (p.s() - p.r()) * T(i) + (p.r() * p.s()) * one;
    HeckeElement t = p.rs_power(-1, 0) * T(i);
    normalized = normalized && (t * t - (q - Scalar(1)) * t - q * one).is_zero();
    if (i + 1 < k) braid = braid && T(i) * T(i + 1) * T(i) == T(i + 1) * T(i) * T(i + 1);
    for (int j = i + 2; j < k; ++j) braid = braid && T(i) * T(j) == T(j) * T(i);
  }
  checks["quadratic"] = quad;
  checks["braid"] = braid;
  checks["normalized_quadratic"] = normalized;
  std::mt19937_64 rng(cfg.seed);
  auto perms = Permutation::all(k);
  bool words = true;
  for (int trial = 0; trial < 100; ++trial) {
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
    words = words && word_product(k, word, p) == t_sigma(sigma, p);
  }
  checks["reduced_word_independence"] = words;
  bool assoc = true;
  for (int trial = 0; trial < 10; ++trial) {
    HeckeElement x[3] = {HeckeElement(k, p), HeckeElement(k, p), HeckeElement(k, p)};
    for (auto& e : x)
      for (int t = 0; t < 2; ++t) e.add(perms[rng() % perms.size()], Scalar(static_cast<long>(rng() % 5) - 2) + p.r());
    assoc = assoc && (x[0] * x[1]) * x[2] == x[0] * (x[1] * x[2]);
  }
  checks["associativity"] = assoc;
  o.report["basis_size"] = perms.size();
  o.report["checks"] = checks;
  bool ok = quad && braid && normalized && words && assoc;
  o.report["ok"] = ok;
  o.code = ok ? kOk : kCheckFailed;
  return o;
}

Outcome cmd_schur_weyl(const RunConfig& cfg, const ParamSpec& p) {
  require(cfg.n >= 2 && cfg.k >= 2, "schur-weyl needs n >= 2 and k >= 2");
  auto r = schur_weyl_check(cfg.n, cfg.k, p);
  Outcome o;
  o.report = to_json(r);
  o.report["command"] = cfg.command;
  o.report["params"] = to_json(p);
  bool ok = r.surjective && r.isomorphic == (cfg.n >= cfg.k);
  o.report["ok"] = ok;
  o.code = ok ? kOk : kCheckFailed;
  return o;
}

Outcome cmd_simple(const RunConfig& cfg, const ParamSpec& p) {
  require(cfg.lambda.has_value(), "simple needs --lambda");
  Weight lam = parse_weight(*cfg.lambda);
  auto m = simple_module(lam.rank(), lam, p);
  auto rel = check_relations(m);
  auto simple = simplicity_check(m);
  auto hw = highest_weight_data(m);
  Outcome o;
  o.report = Json{{"command", cfg.command}, {"n", lam.rank()}, {"params", to_json(p)}};
  o.report["lambda"] = to_json(lam);
  o.report["dim"] = m.dim();
  o.report["relations_passed"] = rel.all_passed();
  o.report["simple"] = simple.simple;
  o.report["highest_weight"] = to_json(hw.lambda);
  std::map<Weight, int> mult;
  for (const auto& t : *m.tags) mult[t] += 1;
  Json chars = Json::array();
  for (const auto& [w, c] : mult) chars.push_back(Json{{"weight", to_json(w)}, {"multiplicity", c}});
  o.report["character"] = chars;
  o.report["module"] = to_json(m);
  bool ok = rel.all_passed() && simple.simple && hw.lambda == lam;
  o.report["ok"] = ok;
  o.code = ok ? kOk : kCheckFailed;
  return o;
}

Outcome cmd_suite(const RunConfig& cfg) {
  Outcome o;
  o.report = Json{{"command", cfg.command}, {"seed", cfg.seed}};
  Json crit = Json::array();
  bool ok = true;
  for (const auto& r : run_criteria(cfg.seed)) {
    Json j{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
    if (cfg.verbose) j["seconds"] = r.seconds;
    crit.push_back(j);
    ok = ok && r.passed;
  }
  o.report["criteria"] = crit;
  o.report["ok"] = ok;
  o.code = ok ? kOk : kCheckFailed;
  return o;
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), rows);
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

Outcome run(const RunConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "csv") raise(ErrorCode::InvalidArgument, "--format must be json or csv");
  if (cfg.command == "suite") return cmd_suite(cfg);
  const ParamSpec p = make_param(cfg);
  if (cfg.command == "relations") return cmd_relations(cfg, p);
  if (cfg.command == "decompose") return cmd_decompose(cfg, p);
  if (cfg.command == "casimir") return cmd_casimir(cfg, p);
  if (cfg.command == "rmatrix") return cmd_rmatrix(cfg, p);
  if (cfg.command == "hecke") return cmd_hecke(cfg, p);
  if (cfg.command == "schur-weyl") return cmd_schur_weyl(cfg, p);
  if (cfg.command == "simple") return cmd_simple(cfg, p);
  raise(ErrorCode::InvalidArgument, "unknown command '" + cfg.command + "'");
}

std::string render(const Json& report, const std::string& format) {
  if (format == "csv") {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    std::string out = "key,value\n";
    for (const auto& [k, v] : rows) out += csv_field(k) + "," + csv_field(v) + "\n";
    return out;
  }
  return report.dump(2) + "\n";
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Outcome o;
  try {
    o = run(cfg);
  } catch (const Error& e) {
    err << "qsw: " << e.what() << "\n";
    return kUsage;
  }
  const std::string text = render(o.report, cfg.format);
  if (cfg.out) {
    std::ofstream f(*cfg.out, std::ios::binary);
    if (!f) {
      err << "qsw: cannot write " << *cfg.out << "\n";
      return kUsage;
    }
    f << text;
  } else {
    out << text;
  }
  return o.code;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for two-parameter quantum groups, R-matrices and Hecke algebras", "qsw"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::string r, s, lambda, outp, module;
  app.add_option("--n", cfg.n, "rank");
  app.add_option("--k", cfg.k, "number of tensor factors");
  auto* ro = app.add_option("--r", r, "value of r as p/q");
  auto* so = app.add_option("--s", s, "value of s as p/q");
  auto* sym = app.add_flag("--symbolic", cfg.symbolic, "keep r and s as indeterminates (default)");
  sym->excludes(ro)->excludes(so);
  app.add_option("--lambda", lambda, "weight as comma-separated coordinates, e.g. 2,1,0");
  app.add_option("--out", outp, "write the report to a file");
  app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.add_flag("--verbose", cfg.verbose, "include matrices in reports");
  for (const char* name : {"relations", "decompose", "casimir", "rmatrix", "hecke", "schur-weyl", "simple", "suite"}) {
    auto* sub = app.add_subcommand(name);
    sub->callback([&cfg, name] { cfg.command = name; });
    if (std::string(name) == "rmatrix") sub->add_option("--check", cfg.check, "all, braid, quadratic, minpoly, projectors, intertwining");
    if (std::string(name) == "relations") sub->add_option("--module", module, "module JSON document to check");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "qsw: " << e.what() << "\n";
    return kUsage;
  }
  if (!r.empty()) cfg.r = r;
  if (!s.empty()) cfg.s = s;
  if (!lambda.empty()) cfg.lambda = lambda;
  if (!outp.empty()) cfg.out = outp;
  if (!module.empty()) cfg.module_path = module;
  return dispatch(cfg, out, err);
}

}  // namespace qsw::cli
