#include "qsw/json_io.hpp"

#include "qsw/error.hpp"
#include "qsw/linalg.hpp"

namespace qsw {

namespace {

std::string rational_str(const Rational& q) { return q.get_str(); }

Json matrices_to_json(const std::vector<Matrix>& ms) {
  Json arr = Json::array();
  for (const auto& m : ms) arr.push_back(to_json(m));
  return arr;
}

std::vector<Matrix> matrices_from_json(const Json& j, std::size_t expected, const char* name) {
  if (!j.is_array() || j.size() != expected)
    raise(ErrorCode::ParseError, std::string("expected ") + std::to_string(expected) + " matrices for " + name);
  std::vector<Matrix> out;
  for (const auto& x : j) out.push_back(matrix_from_json(x));
  return out;
}

}  // namespace

Json to_json(const ParamSpec& p) {
  if (p.is_symbolic()) return Json{{"mode", "symbolic"}};
  return Json{{"mode", p.is_generic() ? "specialized" : "nongeneric"},
              {"r", rational_str(p.r_value())},
              {"s", rational_str(p.s_value())}};
}

ParamSpec param_from_json(const Json& j) {
  const std::string mode = j.value("mode", "symbolic");
  if (mode == "symbolic") return ParamSpec::symbolic();
  Rational r = parse_rational(j.at("r").get<std::string>());
  Rational s = parse_rational(j.at("s").get<std::string>());
  if (mode == "specialized") return ParamSpec::specialized(r, s);
  if (mode == "nongeneric") return ParamSpec::nongeneric(r, s);
  raise(ErrorCode::ParseError, "unknown parameter mode " + mode);
}

Json to_json(const Matrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (const auto& e : m.row(i)) entries.push_back(Json::array({i, e.col, e.value.str()}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from_json(const Json& j) {
  try {
    Matrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
    for (const auto& e : j.at("entries")) {
      int i = e.at(0).get<int>(), c = e.at(1).get<int>();
      if (i < 0 || c < 0 || i >= m.rows() || c >= m.cols()) raise(ErrorCode::ParseError, "matrix entry out of range");
      m.add_to(i, c, parse_scalar(e.at(2).get<std::string>()));
    }
    return m;
  } catch (const Json::exception& e) {
    raise(ErrorCode::ParseError, std::string("bad matrix document: ") + e.what());
  }
}

Json to_json(const Weight& w) { return Json(w.coords()); }

Json to_json(const TorusCharacter& chi) {
  Json a = Json::array(), b = Json::array();
  for (const auto& x : chi.a) a.push_back(x.str());
  for (const auto& x : chi.b) b.push_back(x.str());
  return Json{{"a", a}, {"b", b}};
}

Json to_json(const Vec& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(x.str());
  return arr;
}

Json to_json(const WeightModule& m) {
  Json j;
  j["rank"] = m.n;
  j["dim"] = m.dim();
  j["param"] = to_json(m.param);
  j["labels"] = m.labels;
  if (m.tags) {
    Json w = Json::array();
    for (const auto& t : *m.tags) w.push_back(to_json(t));
    j["weights"] = w;
  } else {
    j["weights"] = nullptr;
  }
  j["shift"] = m.shift ? to_json(*m.shift) : Json(nullptr);
  j["e"] = matrices_to_json(m.e);
  j["f"] = matrices_to_json(m.f);
  j["a"] = matrices_to_json(m.a);
  j["b"] = matrices_to_json(m.b);
  j["a_inv"] = matrices_to_json(m.a_inv);
  j["b_inv"] = matrices_to_json(m.b_inv);
  return j;
}

WeightModule module_from_json(const Json& j) {
  try {
    WeightModule m;
    m.n = j.at("rank").get<int>();
    if (m.n < 1) raise(ErrorCode::InvalidRank, "rank must be positive");
    m.param = param_from_json(j.at("param"));
    m.labels = j.at("labels").get<std::vector<std::string>>();
    const auto n = static_cast<std::size_t>(m.n);
    m.e = matrices_from_json(j.at("e"), n - 1, "e");
    m.f = matrices_from_json(j.at("f"), n - 1, "f");
    m.a = matrices_from_json(j.at("a"), n, "a");
    m.b = matrices_from_json(j.at("b"), n, "b");
    if (j.contains("a_inv") && !j["a_inv"].is_null()) {
      m.a_inv = matrices_from_json(j["a_inv"], n, "a_inv");
    } else {
      for (const auto& x : m.a) m.a_inv.push_back(inverse(x));
    }
    if (j.contains("b_inv") && !j["b_inv"].is_null()) {
      m.b_inv = matrices_from_json(j["b_inv"], n, "b_inv");
    } else {
      for (const auto& x : m.b) m.b_inv.push_back(inverse(x));
    }
    if (j.contains("weights") && !j["weights"].is_null()) {
      std::vector<Weight> tags;
      for (const auto& w : j["weights"]) tags.emplace_back(w.get<std::vector<int>>());
      m.tags = std::move(tags);
    }
    if (j.contains("shift") && !j["shift"].is_null()) {
      TorusCharacter chi;
      for (const auto& x : j["shift"].at("a")) chi.a.push_back(parse_scalar(x.get<std::string>()));
      for (const auto& x : j["shift"].at("b")) chi.b.push_back(parse_scalar(x.get<std::string>()));
      m.shift = chi;
    }
    const int d = m.dim();
    auto check = [d](const std::vector<Matrix>& ms) {
      for (const auto& x : ms)
        if (x.rows() != d || x.cols() != d) raise(ErrorCode::DimensionMismatch, "matrix size differs from label count");
    };
    for (const auto* ms : {&m.e, &m.f, &m.a, &m.b, &m.a_inv, &m.b_inv}) check(*ms);
    if (m.tags && static_cast<int>(m.tags->size()) != d) raise(ErrorCode::DimensionMismatch, "weight count differs from label count");
    return m;
  } catch (const Json::exception& e) {
    raise(ErrorCode::ParseError, std::string("bad module document: ") + e.what());
  }
}

Json to_json(const RelationReport& r) {
  Json j = Json::object();
  for (const auto& x : r.results) {
    Json entry{{"passed", x.passed}};
    if (!x.passed) entry["witness"] = x.witness;
    j[x.name] = entry;
  }
  return j;
}

Json to_json(const SchurWeylReport& r) {
  return Json{{"n", r.n},
              {"k", r.k},
              {"centralizer_dim", r.centralizer_dim},
              {"hecke_image_dim", r.hecke_image_dim},
              {"k_factorial", r.k_factorial},
              {"surjective", r.surjective},
              {"isomorphic", r.isomorphic},
              {"params", r.params}};
}

}  // namespace qsw
