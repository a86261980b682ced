#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qsw/error.hpp"
#include "qsw_cli/cli.hpp"

using qsw::Json;
using qsw::cli::RunConfig;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qsw");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = qsw::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, SchurWeylThreeThreeSymbolic) {
  auto r = invoke({"schur-weyl", "--n", "3", "--k", "3", "--symbolic"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["centralizer_dim"], 6);
  EXPECT_EQ(j["isomorphic"], true);
}

TEST(Cli, SchurWeylNotInjective) {
  auto r = invoke({"schur-weyl", "--n", "2", "--k", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["centralizer_dim"], 5);
  EXPECT_EQ(j["hecke_image_dim"], 5);
  EXPECT_EQ(j["isomorphic"], false);
  EXPECT_EQ(j["surjective"], true);
}

TEST(Cli, MinimalPolynomial) {
  auto r = invoke({"rmatrix", "--n", "2", "--check", "minpoly"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["minpoly"]["factored"], "(t - 1)(t + r/s)");
  EXPECT_EQ(j["minpoly"]["degree"], 2);
  EXPECT_FALSE(j.contains("braid"));
}

TEST(Cli, RMatrixAllChecks) {
  auto r = invoke({"rmatrix", "--n", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  for (const char* key : {"braid", "quadratic", "minpoly", "projectors", "intertwining"})
    EXPECT_EQ(j[key]["passed"], true) << key;
  EXPECT_EQ(j["projectors"]["sym_dim"], 3);
  EXPECT_EQ(j["projectors"]["wedge_dim"], 1);
}

TEST(Cli, DecomposeSpecialized) {
  auto r = invoke({"decompose", "--n", "2", "--k", "2", "--r", "2", "--s", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["summand_dims"], Json::array({3, 1}));
  EXPECT_EQ(j["commutant_dim"], 2);
  EXPECT_EQ(j["params"]["mode"], "specialized");
}

TEST(Cli, NongenericParamsAreRejectedByDecompose) {
  auto r = invoke({"decompose", "--n", "2", "--k", "2", "--r", "2", "--s", "-2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("DegenerateParameters"), std::string::npos) << r.err;
}

TEST(Cli, RelationsAndCasimir) {
  auto r = invoke({"relations", "--n", "3", "--k", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["modules"].size(), 3u);
  auto c = invoke({"casimir", "--n", "2", "--k", "2"});
  ASSERT_EQ(c.code, 0) << c.err;
  auto j = c.json();
  EXPECT_EQ(j["commutes"], true);
  EXPECT_EQ(j["spectrum"][0]["exponent"], "1");
  EXPECT_EQ(j["spectrum"][1]["exponent"], "3");
}

TEST(Cli, HeckeSelfTests) {
  auto r = invoke({"hecke", "--k", "4", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["basis_size"], 24);
}

TEST(Cli, SimpleModuleFromLambda) {
  auto r = invoke({"simple", "--lambda", "2,1,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["dim"], 8);
  EXPECT_EQ(j["simple"], true);
  EXPECT_EQ(j["highest_weight"], Json::array({2, 1, 0}));
}

TEST(Cli, ModuleDocumentRoundTrip) {
  auto r = invoke({"simple", "--lambda", "1,0", "--r", "2", "--s", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string path = testing::TempDir() + "qsw_module.json";
  std::ofstream(path) << r.json()["module"].dump();
  auto rel = invoke({"relations", "--module", path});
  ASSERT_EQ(rel.code, 0) << rel.err;
  EXPECT_EQ(rel.json()["modules"][0]["dim"], 2);
  std::remove(path.c_str());
}

TEST(Cli, FailingModuleExitsOneWithWitness) {
  auto r = invoke({"simple", "--lambda", "1,0", "--r", "2", "--s", "5"});
  Json doc = r.json()["module"];
  doc["e"][0]["entries"] = Json::array({Json::array({0, 1, "3"})});
  const std::string path = testing::TempDir() + "qsw_bad.json";
  std::ofstream(path) << doc.dump();
  auto rel = invoke({"relations", "--module", path});
  std::remove(path.c_str());
  ASSERT_EQ(rel.code, 1) << rel.err;
  auto j = rel.json();
  EXPECT_EQ(j["ok"], false);
  EXPECT_FALSE(j["modules"][0]["witness"].get<std::string>().empty());
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  EXPECT_EQ(invoke({"decompose", "--r", "2"}).code, 2);
  EXPECT_EQ(invoke({"decompose", "--r", "x", "--s", "3"}).code, 2);
  EXPECT_EQ(invoke({"decompose", "--r", "1", "--s", "1"}).code, 2);
  EXPECT_EQ(invoke({"simple"}).code, 2);
  EXPECT_EQ(invoke({"simple", "--lambda", "0,1"}).code, 2);
  EXPECT_EQ(invoke({"simple", "--lambda", "1,a"}).code, 2);
  EXPECT_EQ(invoke({"rmatrix", "--check", "nope"}).code, 2);
  EXPECT_EQ(invoke({"schur-weyl", "--format", "xml"}).code, 2);
  EXPECT_EQ(invoke({"relations", "--module", "/nonexistent/m.json"}).code, 2);
}

TEST(Cli, CsvIsProjectionOfJson) {
  auto j = invoke({"schur-weyl", "--n", "2", "--k", "2"});
  auto c = invoke({"schur-weyl", "--n", "2", "--k", "2", "--format", "csv"});
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(c.out.rfind("key,value\n", 0), 0u);
  EXPECT_NE(c.out.find("centralizer_dim,2\n"), std::string::npos);
  EXPECT_NE(c.out.find("params.mode,symbolic\n"), std::string::npos);
  std::size_t lines = 0;
  for (char ch : c.out) lines += ch == '\n';
  EXPECT_EQ(lines, 1 + j.json().flatten().size());
}

TEST(Cli, OutFileMatchesStdout) {
  const std::string path = testing::TempDir() + "qsw_out.json";
  auto a = invoke({"hecke", "--k", "3", "--out", path});
  ASSERT_EQ(a.code, 0);
  EXPECT_TRUE(a.out.empty());
  std::ifstream in(path);
  std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::remove(path.c_str());
  EXPECT_EQ(written, invoke({"hecke", "--k", "3"}).out);
}

TEST(Cli, DeterministicReports) {
  for (std::vector<std::string> args : {std::vector<std::string>{"decompose", "--n", "3", "--k", "2", "--verbose"},
                                        {"hecke", "--k", "4", "--seed", "11"},
                                        {"casimir", "--n", "2", "--k", "3", "--verbose"}}) {
    auto a = invoke(args);
    auto b = invoke(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}

TEST(Cli, ParamSpecFromConfig) {
  RunConfig cfg;
  EXPECT_TRUE(qsw::cli::make_param(cfg).is_symbolic());
  cfg.r = "2";
  cfg.s = "-2";
  EXPECT_FALSE(qsw::cli::make_param(cfg).is_generic());
  cfg.s = "3/4";
  auto p = qsw::cli::make_param(cfg);
  EXPECT_TRUE(p.is_generic());
  EXPECT_EQ(p.s_value(), qsw::Rational(3, 4));
  EXPECT_EQ(qsw::cli::parse_weight("2,-1,0"), qsw::Weight({2, -1, 0}));
}
