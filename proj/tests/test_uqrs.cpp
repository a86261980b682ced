#include <gtest/gtest.h>

#include <random>

#include "qsw/analysis.hpp"
#include "qsw/error.hpp"
#include "qsw/linalg.hpp"
#include "qsw/module.hpp"
#include "qsw/sl2.hpp"

using namespace qsw;

namespace {

const ParamSpec kSym = ParamSpec::symbolic();

Weight W(std::vector<int> c) { return Weight(std::move(c)); }
Scalar P(const char* t) { return parse_scalar(t); }

Vec vec_of(int dim, std::vector<std::pair<int, Scalar>> entries) {
  Vec v(static_cast<std::size_t>(dim));
  for (auto& [i, x] : entries) v[static_cast<std::size_t>(i)] = x;
  return v;
}

// v_i (x) v_j in V (x) V, 1-based.
int pair_index(int n, int i, int j) { return tensor_index(n, {i, j}); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Lambda^2 and S^2 inside V (x) V for n = 2.
Vec wedge_vector(const ParamSpec& p) {
  return vec_of(4, {{pair_index(2, 1, 2), Scalar(1)}, {pair_index(2, 2, 1), -p.r()}});
}

}  // namespace

// ---- natural module ---------------------------------------------------------

TEST(NaturalModule, MatricesForRankTwo) {
  auto v = natural_module(2, kSym);
  EXPECT_EQ(v.dim(), 2);
  EXPECT_EQ(v.A(1), Matrix::diagonal({P("r"), Scalar(1)}));
  EXPECT_EQ(v.B(1), Matrix::diagonal({P("s"), Scalar(1)}));
  EXPECT_EQ(v.E(1), Matrix::unit(2, 0, 1));
  EXPECT_EQ(v.F(1), Matrix::unit(2, 1, 0));
  EXPECT_EQ(v.omega(1), Matrix::diagonal({P("r"), P("s")}));
  EXPECT_EQ(v.omega_prime(1), Matrix::diagonal({P("s"), P("r")}));
  EXPECT_EQ(v.tag(0), Weight::epsilon(2, 1));
  EXPECT_EQ(v.tag(1), Weight::epsilon(2, 2));
}

TEST(NaturalModule, AConjugatesE) {
  for (int n = 2; n <= 5; ++n) {
    auto v = natural_module(n, kSym);
    EXPECT_EQ(v.A(1) * v.E(1), P("r") * (v.E(1) * v.A(1))) << n;
  }
}

TEST(NaturalModule, RejectsRankOne) { EXPECT_EQ(code_of([] { natural_module(1, kSym); }), ErrorCode::InvalidRank); }

// ---- relations --------------------------------------------------------------

TEST(Relations, NaturalRankThreeAllPass) {
  auto rep = check_relations(natural_module(3, kSym));
  EXPECT_TRUE(rep.all_passed()) << rep.first_failure();
  for (const char* name : {"torus_inverse", "torus_commute", "a_conjugation", "b_conjugation", "ef_commutator",
                           "distant_commute", "serre_e", "serre_f", "omega_commute", "omega_conjugation",
                           "omega_prime_conjugation", "omega_commutator", "weight_tags"})
    EXPECT_NE(rep.find(name), nullptr) << name;
}

TEST(Relations, WrongWeightShiftFailsAConjugation) {
  auto v = natural_module(3, kSym);
  v.e[0] = Matrix::unit(3, 0, 2);
  auto rep = check_relations(v);
  EXPECT_FALSE(rep.find("a_conjugation")->passed);
  EXPECT_FALSE(rep.find("a_conjugation")->witness.empty());
}

TEST(Relations, BrokenSerreDetected) {
  // Doubling e_1 on V^{(x)2} breaks the quadratic relations but not the
  // torus conjugation.
  auto m = tensor_power(natural_module(3, kSym), 2);
  m.e[0] = Scalar(2) * m.e[0];
  auto rep = check_relations(m);
  EXPECT_TRUE(rep.find("a_conjugation")->passed);
  EXPECT_FALSE(rep.find("ef_commutator")->passed);
}

TEST(Relations, JordanFixturePasses) {
  auto j = jordan_module(2, 2, P("r"), P("s"), kSym);
  EXPECT_TRUE(check_relations(j).all_passed());
  EXPECT_FALSE(j.semisimple_torus());
  EXPECT_EQ(code_of([] { jordan_module(2, 1, P("r"), P("s"), kSym); }), ErrorCode::InvalidArgument);
}

TEST(Relations, SpecializedModulesPass) {
  auto p = ParamSpec::specialized(2, 3);
  EXPECT_TRUE(check_relations(tensor_power(natural_module(3, p), 3)).all_passed());
}

// ---- tensor products --------------------------------------------------------

TEST(Tensor, ActionOnDiagonalVectors) {
  auto vv = tensor_power(natural_module(2, kSym), 2);
  Vec expected = vec_of(4, {{pair_index(2, 1, 2), Scalar(1)}, {pair_index(2, 2, 1), P("s")}});
  EXPECT_EQ(vv.E(1).apply(basis_vector(4, pair_index(2, 2, 2))), expected);
  EXPECT_EQ(vv.F(1).apply(basis_vector(4, pair_index(2, 1, 1))), expected);
}

TEST(Tensor, CounitIsUnit) {
  auto v = natural_module(3, kSym);
  auto triv = one_dim_module(3, TorusCharacter::counit(3), kSym);
  for (const auto& t : {tensor(triv, v), tensor(v, triv)}) {
    EXPECT_EQ(t.e, v.e);
    EXPECT_EQ(t.f, v.f);
    EXPECT_EQ(t.a, v.a);
    EXPECT_EQ(t.b, v.b);
    EXPECT_EQ(*t.tags, *v.tags);
  }
}

TEST(Tensor, Errors) {
  auto v2 = natural_module(2, kSym);
  auto v3 = natural_module(3, kSym);
  EXPECT_EQ(code_of([&] { tensor(v2, v3); }), ErrorCode::RankMismatch);
  auto w = natural_module(2, ParamSpec::specialized(2, 3));
  EXPECT_EQ(code_of([&] { tensor(v2, w); }), ErrorCode::ParamMismatch);
}

TEST(Tensor, IteratedCoproductClosedForm) {
  // Delta^{k-1}(e_j) = sum_i omega^{(x)(i-1)} (x) e_j (x) 1^{(x)(k-i)}, and
  // the mirrored sum for f_j.
  for (int n : {2, 3})
    for (int k = 1; k <= 3; ++k) {
      auto v = natural_module(n, kSym);
      auto m = tensor_power(v, k);
      for (int j = 1; j < n; ++j) {
        Matrix se(m.dim(), m.dim()), sf(m.dim(), m.dim());
        for (int i = 1; i <= k; ++i) {
          Matrix te = Matrix::identity(1), tf = Matrix::identity(1);
          for (int pos = 1; pos <= k; ++pos) {
            te = kron(te, pos < i ? v.omega(j) : pos == i ? v.E(j) : Matrix::identity(n));
            tf = kron(tf, pos <= k - i ? Matrix::identity(n) : pos == k - i + 1 ? v.F(j) : v.omega_prime(j));
          }
          se = se + te;
          sf = sf + tf;
        }
        EXPECT_EQ(m.E(j), se) << n << " " << k << " " << j;
        EXPECT_EQ(m.F(j), sf) << n << " " << k << " " << j;
      }
    }
}

// ---- weights ----------------------------------------------------------------

TEST(WeightDecomp, Natural) {
  auto wd = weight_decomposition(natural_module(2, kSym));
  ASSERT_FALSE(wd.generalized_only);
  ASSERT_EQ(wd.spaces.size(), 2u);
  EXPECT_EQ(wd.find(Weight::epsilon(2, 1))->space, Subspace::span(2, {basis_vector(2, 0)}));
  EXPECT_EQ(wd.find(Weight::epsilon(2, 2))->space, Subspace::span(2, {basis_vector(2, 1)}));
}

TEST(WeightDecomp, TensorSquare) {
  auto wd = weight_decomposition(tensor_power(natural_module(2, kSym), 2));
  ASSERT_EQ(wd.spaces.size(), 3u);
  EXPECT_EQ(*wd.spaces[0].weight, W({2, 0}));
  EXPECT_EQ(*wd.spaces[1].weight, W({1, 1}));
  EXPECT_EQ(*wd.spaces[2].weight, W({0, 2}));
  EXPECT_EQ(wd.spaces[1].space.dim(), 2);
}

TEST(WeightDecomp, JordanIsGeneralizedOnly) {
  auto wd = weight_decomposition(jordan_module(2, 2, P("r"), P("s"), kSym));
  EXPECT_TRUE(wd.generalized_only);
  ASSERT_EQ(wd.spaces.size(), 1u);
  EXPECT_EQ(wd.spaces[0].space.dim(), 2);
}

// ---- one-dimensional modules ------------------------------------------------

TEST(OneDim, Characters) {
  auto triv = one_dim_module(3, TorusCharacter::counit(3), kSym);
  EXPECT_EQ(triv.dim(), 1);
  EXPECT_TRUE(triv.E(1).is_zero());
  EXPECT_FALSE(triv.shift.has_value());

  auto c = one_dim_module(3, hat_character(Weight::constant(3, 2), kSym), kSym);
  EXPECT_EQ(c.A(1).at(0, 0), P("r^2"));
  EXPECT_EQ(c.B(3).at(0, 0), P("s^2"));

  TorusCharacter bad{{P("r"), Scalar(1)}, {Scalar(1), Scalar(1)}};
  EXPECT_EQ(bad.omega(1), P("r"));
  EXPECT_EQ(code_of([&] { one_dim_module(2, bad, kSym); }), ErrorCode::NotOneDimensionalCharacter);
  TorusCharacter bad2{{Scalar(1), P("s")}, {Scalar(1), Scalar(1)}};
  EXPECT_EQ(code_of([&] { one_dim_module(2, bad2, kSym); }), ErrorCode::NotOneDimensionalCharacter);
}

// ---- rank-one modules -------------------------------------------------------

TEST(Sl2, VermaTruncated) {
  Scalar phi = P("r^2"), php = P("s");
  auto m = sl2_verma_truncated(phi, php, 4, kSym);
  EXPECT_EQ(m.dim(), 5);
  EXPECT_EQ(m.e.at(0, 1), (phi - php) / (P("r") - P("s")));
  for (int j = 0; j <= 4; ++j) EXPECT_EQ(m.w.at(j, j), phi * kSym.rs_power(-j, j));
  EXPECT_TRUE(m.f.apply(basis_vector(5, 4)) == Vec(5));
  auto rep = check_sl2_relations(m);
  EXPECT_TRUE(rep.all_passed()) << rep.first_failure();
  EXPECT_EQ(code_of([&] { sl2_verma_truncated(phi, php, 0, kSym); }), ErrorCode::InvalidDepth);
}

TEST(Sl2, VermaMaximalSubmodule) {
  for (int ell = 0; ell <= 3; ++ell) {
    Scalar phi = P("r*s^2");
    auto m = sl2_verma_truncated(phi, phi * kSym.rs_power(-ell, ell), ell + 2, kSym);
    EXPECT_TRUE(m.e.apply(basis_vector(m.dim(), ell + 1)) == Vec(static_cast<std::size_t>(m.dim()))) << ell;
    for (int j = 1; j <= ell; ++j) EXPECT_FALSE(m.e.at(j - 1, j).is_zero()) << ell << " " << j;
  }
}

TEST(Sl2, Simple) {
  Scalar phi = P("3*r");
  auto l0 = sl2_simple(phi, 0, kSym);
  EXPECT_EQ(l0.dim(), 1);
  EXPECT_TRUE(l0.e.is_zero());
  EXPECT_TRUE(l0.f.is_zero());
  auto l1 = sl2_simple(phi, 1, kSym);
  EXPECT_EQ(l1.e.at(0, 1), phi * P("r^-1"));
  for (int ell = 0; ell <= 4; ++ell) {
    auto l = sl2_simple(phi, ell, kSym);
    EXPECT_EQ(l.wp.at(0, 0), phi * kSym.rs_power(-ell, ell));
    auto rep = check_sl2_relations(l);
    EXPECT_TRUE(rep.all_passed()) << ell << rep.first_failure();
    EXPECT_EQ(sl2_singular_vectors(l), Subspace::span(ell + 1, {basis_vector(ell + 1, 0)}));
  }
}

TEST(CommutationIdentity, FirstPowerIsDefiningRelation) {
  auto v = natural_module(3, kSym);
  auto rep = commutation_identity_check(v, 2, 1);
  EXPECT_TRUE(rep.all_passed());
  // With k = 1 the identity reads [e, f] = (omega - omega')/(r - s).
  auto broken = sl2_restrict(v, 1);
  broken.wp = broken.w;
  EXPECT_FALSE(commutation_identity_check(broken, 1).results[0].passed);
}

TEST(CommutationIdentity, CubeOnTensorCube) {
  auto m = tensor_power(natural_module(2, kSym), 3);
  auto rep = commutation_identity_check(m, 1, 3);
  EXPECT_TRUE(rep.all_passed()) << rep.first_failure();
  EXPECT_EQ(rep.results.size(), 6u);
  // Direct expansion of e f^3 by moving e one step at a time.
  auto s = sl2_restrict(m, 1);
  const Scalar inv = (P("r") - P("s")).inverse();
  Matrix h = inv * (s.w - s.wp);
  Matrix direct = s.f * s.f * s.f * s.e + s.f * s.f * h + s.f * h * s.f + h * s.f * s.f;
  EXPECT_EQ(s.e * s.f * s.f * s.f, direct);
}

TEST(CommutationIdentity, TruncatedVerma) {
  auto m = sl2_verma_truncated(P("r"), P("s^3"), 5, kSym);
  auto rep = commutation_identity_check(m, 2);
  EXPECT_TRUE(rep.all_passed()) << rep.first_failure();
  // By hand at j = 0: e f^2 v_0 = e v_2 = c_2 v_1 and the right side is
  // [2] f (r^{-1} omega - s^{-1} omega') v_0 / (r - s).
  Scalar lhs = m.e.at(1, 2);
  Scalar rhs = qint(2, kSym) * (P("r^-1") * P("r") - P("s^-1") * P("s^3")) / (P("r") - P("s"));
  EXPECT_EQ(lhs, rhs);
}

TEST(CommutationIdentity, HigherPowersOnSimpleModules) {
  for (int ell = 1; ell <= 4; ++ell) {
    auto rep = commutation_identity_check(sl2_simple(P("r^2*s"), ell, kSym), ell + 1);
    EXPECT_TRUE(rep.all_passed()) << ell << rep.first_failure();
  }
}

// ---- singular vectors and submodules ----------------------------------------

TEST(Singular, Natural) {
  for (int n = 2; n <= 4; ++n) {
    auto sv = singular_vectors(natural_module(n, kSym));
    ASSERT_EQ(sv.size(), 1u);
    EXPECT_EQ(sv[0].weight, Weight::epsilon(n, 1));
    EXPECT_EQ(sv[0].space, Subspace::span(n, {basis_vector(n, 0)}));
  }
}

TEST(Singular, TensorSquare) {
  auto sv = singular_vectors(tensor_power(natural_module(2, kSym), 2));
  ASSERT_EQ(sv.size(), 2u);
  EXPECT_EQ(sv[0].weight, W({2, 0}));
  EXPECT_EQ(sv[0].space, Subspace::span(4, {basis_vector(4, 0)}));
  EXPECT_EQ(sv[1].weight, W({1, 1}));
  EXPECT_EQ(sv[1].space, Subspace::span(4, {wedge_vector(kSym)}));
}

TEST(Singular, JordanRejected) {
  auto j = jordan_module(2, 2, P("r"), P("s"), kSym);
  EXPECT_EQ(code_of([&] { singular_vectors(j); }), ErrorCode::TorusNotSemisimple);
  EXPECT_EQ(code_of([&] { decompose(j); }), ErrorCode::TorusNotSemisimple);
}

TEST(Submodules, Examples) {
  auto v = natural_module(2, kSym);
  EXPECT_EQ(submodule(v, basis_vector(2, 1)).space.dim(), 2);
  auto vv = tensor_power(v, 2);
  auto wedge = submodule(vv, wedge_vector(kSym));
  EXPECT_EQ(wedge.space.dim(), 1);
  EXPECT_TRUE(check_relations(wedge.module).all_passed());
  auto sym = submodule(vv, basis_vector(4, 0));
  EXPECT_EQ(sym.space.dim(), 3);
  EXPECT_TRUE(check_relations(sym.module).all_passed());
  EXPECT_EQ(code_of([&] { submodule(vv, Vec(4)); }), ErrorCode::ZeroVector);
}

TEST(Submodules, UntaggedClosure) {
  auto j = jordan_module(2, 3, P("r"), P("s"), kSym);
  auto sub = submodule(j, basis_vector(3, 1));
  EXPECT_EQ(sub.space.dim(), 2);
  EXPECT_TRUE(check_relations(sub.module).all_passed());
}

TEST(Cyclic, Examples) {
  auto vv = tensor_power(natural_module(2, kSym), 2);
  EXPECT_TRUE(is_cyclic(vv, basis_vector(4, pair_index(2, 1, 2))));
  EXPECT_FALSE(is_cyclic(vv, Vec(4)));
  EXPECT_FALSE(is_cyclic(vv, basis_vector(4, 0)));
  auto v3 = tensor_power(natural_module(3, kSym), 3);
  EXPECT_TRUE(is_cyclic(v3, basis_vector(27, tensor_index(3, {1, 2, 3}))));
}

// ---- decomposition ----------------------------------------------------------

TEST(Decompose, TensorSquare) {
  auto rep = decompose(tensor_power(natural_module(2, kSym), 2));
  EXPECT_TRUE(rep.complete);
  EXPECT_EQ(rep.dimensions(), (std::vector<int>{3, 1}));
  EXPECT_EQ(rep.multiplicities.at(W({2, 0})), 1);
  EXPECT_EQ(rep.multiplicities.at(W({1, 1})), 1);
  for (const auto& s : rep.summands) EXPECT_TRUE(s.simple);
}

TEST(Decompose, TensorCube) {
  auto m = tensor_power(natural_module(2, kSym), 3);
  auto rep = decompose(m);
  EXPECT_TRUE(rep.complete);
  EXPECT_EQ(rep.dimensions(), (std::vector<int>{4, 2, 2}));
  EXPECT_EQ(rep.multiplicities.at(W({2, 1})), 2);
  // Brute-force count of singular vectors of weight (2,1).
  int count = 0;
  for (const auto& ws : singular_vectors(m))
    if (ws.weight == W({2, 1})) count = ws.space.dim();
  EXPECT_EQ(count, 2);
  EXPECT_EQ(commutant(m.generators()).dimension(), 1 * 1 + 2 * 2);
}

TEST(Decompose, NonGenericRejected) {
  auto p = ParamSpec::nongeneric(2, -2);
  auto vv = tensor_power(natural_module(2, p), 2);
  EXPECT_EQ(code_of([&] { decompose(vv); }), ErrorCode::DegenerateParameters);
}

// ---- highest weights and simple modules -------------------------------------

TEST(HighestWeight, Examples) {
  auto hv = highest_weight_data(natural_module(3, kSym));
  EXPECT_TRUE(hv.chi.is_counit());
  EXPECT_EQ(hv.lambda, Weight::epsilon(3, 1));

  TorusCharacter chi0 = hat_character(Weight::constant(2, -1), kSym);
  auto one = one_dim_module(2, chi0, kSym);
  auto h1 = highest_weight_data(one);
  EXPECT_EQ(h1.chi, chi0);
  EXPECT_EQ(h1.lambda, Weight::zero(2));

  auto vv = tensor_power(natural_module(2, kSym), 2);
  auto wedge = submodule(vv, wedge_vector(kSym)).module;
  auto h2 = highest_weight_data(wedge);
  EXPECT_EQ(h2.lambda, W({1, 1}));
  EXPECT_TRUE(h2.chi.is_counit());
  EXPECT_EQ(h2.string_lengths, std::vector<int>{0});

  EXPECT_EQ(code_of([&] { highest_weight_data(vv); }), ErrorCode::NotHighestWeight);
}

TEST(SimpleModule, Examples) {
  auto l1 = simple_module(3, Weight::epsilon(3, 1), kSym);
  EXPECT_EQ(iso_check(l1, natural_module(3, kSym)).status, IsoStatus::Found);
  EXPECT_EQ(simple_module(2, W({1, 1}), kSym).dim(), 1);
  auto l2 = simple_module(2, W({2, 0}), kSym);
  EXPECT_EQ(l2.dim(), 3);
  EXPECT_TRUE(simplicity_check(l2).simple);
  EXPECT_EQ(highest_weight_data(l2).lambda, W({2, 0}));
  EXPECT_EQ(code_of([] { simple_module(2, W({0, 1}), kSym); }), ErrorCode::NotDominant);
}

TEST(SimpleModule, DimensionsRankThree) {
  // Weyl dimension formula for gl_3.
  auto weyl = [](const Weight& l) {
    int a = l[1] - l[2] + 1, b = l[2] - l[3] + 1, c = l[1] - l[3] + 2;
    return a * b * c / 2;
  };
  for (const auto& lam : {W({1, 0, 0}), W({1, 1, 0}), W({2, 0, 0}), W({2, 1, 0}), W({1, 1, 1}), W({2, 1, -1}),
                          W({3, 0, 0})}) {
    auto l = simple_module(3, lam, kSym);
    EXPECT_EQ(l.dim(), weyl(lam)) << lam.str();
    EXPECT_TRUE(simplicity_check(l).simple) << lam.str();
    EXPECT_EQ(highest_weight_data(l).lambda, lam);
  }
}

// ---- isomorphisms -----------------------------------------------------------

TEST(Iso, Examples) {
  auto v = natural_module(2, kSym);
  auto self = iso_check(v, v);
  ASSERT_EQ(self.status, IsoStatus::Found);
  EXPECT_FALSE(intertwining_failure(*self.map, v, v).has_value());

  auto vv = tensor_power(v, 2);
  auto sym = submodule(vv, basis_vector(4, 0)).module;
  auto wedge = submodule(vv, wedge_vector(kSym)).module;
  auto none = iso_check(sym, wedge);
  EXPECT_EQ(none.status, IsoStatus::NotIsomorphic);
  EXPECT_NE(none.certificate.find("dimensions"), std::string::npos);

  auto left = tensor(v, sym);
  auto right = tensor(sym, v);
  auto found = iso_check(left, right);
  ASSERT_EQ(found.status, IsoStatus::Found);
  EXPECT_FALSE(intertwining_failure(*found.map, left, right).has_value());
  EXPECT_EQ(rank(*found.map), left.dim());
}

TEST(Iso, RankMismatch) {
  EXPECT_EQ(code_of([] { iso_check(natural_module(2, kSym), natural_module(3, kSym)); }), ErrorCode::RankMismatch);
}

TEST(Iso, DistinctSimplesAreNotIsomorphic) {
  std::vector<Weight> lams;
  for (const auto& w : dominant_weights(2, 3)) lams.push_back(w);
  lams.push_back(W({1, -1}));
  std::vector<WeightModule> mods;
  for (const auto& l : lams) mods.push_back(simple_module(2, l, kSym));
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = 0; j < mods.size(); ++j) {
      auto res = iso_check(mods[i], mods[j]);
      if (i == j)
        EXPECT_EQ(res.status, IsoStatus::Found);
      else
        EXPECT_EQ(res.status, IsoStatus::NotIsomorphic) << lams[i].str() << " " << lams[j].str();
    }
}

TEST(ShiftIso, Examples) {
  auto v = natural_module(2, kSym);
  EXPECT_TRUE(shift_iso(TorusCharacter::counit(2), v).is_identity());

  TorusCharacter chi = hat_character(W({2, 2}), kSym) * TorusCharacter{{Scalar(3), Scalar(3)}, {Scalar(5), Scalar(5)}};
  ASSERT_TRUE(chi.admits_one_dim());
  Matrix f = shift_iso(chi, v);
  // v_1 has alpha coordinates (1,1), so it is scaled by chi(omega_1)^{-1} chi(a_2)^{-1}.
  EXPECT_EQ(f.at(0, 0), (chi.omega(1) * chi.a[1]).inverse());
  auto l = one_dim_module(2, chi, kSym);
  auto src = tensor(l, v);
  auto dst = tensor(v, l);
  auto fail = intertwining_failure(f, src, dst);
  EXPECT_FALSE(fail.has_value()) << *fail;

  TorusCharacter bad{{P("r"), Scalar(1)}, {Scalar(1), Scalar(1)}};
  EXPECT_EQ(code_of([&] { shift_iso(bad, v); }), ErrorCode::NotOneDimensionalCharacter);
}

TEST(ShiftIso, IntertwinesOnLargerModules) {
  TorusCharacter chi = hat_character(Weight::constant(3, -1), kSym) *
                       TorusCharacter{{Scalar(2), Scalar(2), Scalar(2)}, {Scalar(7), Scalar(7), Scalar(7)}};
  for (const auto& m : {tensor_power(natural_module(3, kSym), 2), simple_module(3, W({2, 1, 0}), kSym)}) {
    auto l = one_dim_module(3, chi, kSym);
    auto fail = intertwining_failure(shift_iso(chi, m), tensor(l, m), tensor(m, l));
    EXPECT_FALSE(fail.has_value()) << *fail;
  }
}

// ---- Casimir ----------------------------------------------------------------

TEST(Casimir, Trivial) {
  auto c = casimir(one_dim_module(2, TorusCharacter::counit(2), kSym));
  EXPECT_EQ(*c.omega_xi, Matrix::identity(1));
}

TEST(Casimir, Natural) {
  auto c = casimir(natural_module(2, kSym));
  EXPECT_EQ(*c.omega_xi, P("r/s") * Matrix::identity(2));
}

TEST(Casimir, TensorSquare) {
  auto m = tensor_power(natural_module(2, kSym), 2);
  auto c = casimir(m);
  ASSERT_EQ(c.summand_exponents.size(), 2u);
  EXPECT_EQ(c.summand_exponents[0].exponent_str(), "3");
  EXPECT_EQ(c.summand_exponents[1].exponent_str(), "1");
  EXPECT_EQ(c.spectrum.at(GScalar::from_twice(6)), 3);
  EXPECT_EQ(c.spectrum.at(GScalar::from_twice(2)), 1);
  ASSERT_TRUE(c.omega_xi && c.xi);
  EXPECT_FALSE(commutation_failure(*c.omega_xi, m).has_value());
  EXPECT_TRUE(commutation_failure(*c.xi, m).has_value());
  EXPECT_EQ(c.omega_xi->apply(wedge_vector(kSym)), (P("r/s") * Matrix::identity(4)).apply(wedge_vector(kSym)));
}

TEST(Casimir, HalfPowersStayInExponentForm) {
  auto m = natural_module(3, kSym);
  auto c = casimir(m);
  EXPECT_FALSE(c.omega_xi.has_value());
  EXPECT_EQ(c.summand_exponents[0].exponent_str(), "3/2");
  ASSERT_TRUE(c.omega_xi_normalized.has_value());
  EXPECT_TRUE(c.omega_xi_normalized->is_identity());
  // At r = 4, s = 9 the square root of r/s exists.
  auto sp = casimir(natural_module(3, ParamSpec::specialized(4, 9)));
  ASSERT_TRUE(sp.omega_xi.has_value());
  EXPECT_EQ(*sp.omega_xi, Scalar(Rational(8, 27)) * Matrix::identity(3));
}

// ---- specialization ---------------------------------------------------------

TEST(Specialization, Examples) {
  auto half = ParamSpec::specialized(2, Rational(1, 2));
  auto r1 = specialization_check(natural_module(2, half));
  EXPECT_TRUE(r1.balanced);
  EXPECT_TRUE(r1.passed);
  auto r2 = specialization_check(simple_module(2, W({2, 0}), half));
  EXPECT_TRUE(r2.passed);
  auto r3 = specialization_check(natural_module(2, ParamSpec::specialized(2, 3)));
  EXPECT_FALSE(r3.balanced);
  EXPECT_FALSE(r3.passed);
  EXPECT_FALSE(r3.failures.empty());
  EXPECT_EQ(code_of([] { specialization_check(natural_module(2, kSym)); }), ErrorCode::InvalidSpecialization);
}

// ---- properties -------------------------------------------------------------

namespace {

// Random tensor words in V, L(2eps_1), L(eps_1+eps_2) and a shifted line.
std::vector<WeightModule> random_modules(int n, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<WeightModule> pool = {natural_module(n, kSym), simple_module(n, Weight::constant(n, 1), kSym),
                                    one_dim_module(n, hat_character(Weight::constant(n, -1), kSym), kSym)};
  if (n == 2) pool.push_back(simple_module(2, W({2, 0}), kSym));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<WeightModule> out;
  for (int t = 0; t < count; ++t) {
    WeightModule m = pool[pick(rng)];
    int len = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < len; ++i) m = tensor(m, pool[pick(rng)]);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

TEST(Properties, RelationsOnRandomTensorProducts) {
  for (int n : {2, 3})
    for (const auto& m : random_modules(n, 6, 11u + static_cast<unsigned>(n))) {
      auto rep = check_relations(m);
      EXPECT_TRUE(rep.all_passed()) << rep.first_failure();
    }
}

TEST(Properties, TagsAddUnderTensor) {
  auto a = natural_module(3, kSym);
  auto b = simple_module(3, W({1, 1, 0}), kSym);
  auto t = tensor(a, b);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) EXPECT_EQ(t.tag(i * b.dim() + j), a.tag(i) + b.tag(j));
}

TEST(Properties, Nilpotency) {
  for (int n : {2, 3})
    for (const auto& m : random_modules(n, 5, 3u)) {
      for (int j = 1; j < n; ++j) {
        EXPECT_TRUE(m.E(j).pow(m.dim()).is_zero());
        EXPECT_TRUE(m.F(j).pow(m.dim()).is_zero());
      }
    }
}

TEST(Properties, SingularWeightsDominant) {
  for (int n : {2, 3})
    for (const auto& m : random_modules(n, 5, 5u))
      for (const auto& ws : singular_vectors(m)) EXPECT_TRUE(is_dominant(ws.weight)) << ws.weight.str();
}

TEST(Properties, DecompositionInvariants) {
  for (int n : {2, 3})
    for (const auto& m : random_modules(n, 4, 7u)) {
      auto rep = decompose(m);
      ASSERT_TRUE(rep.complete);
      Subspace sum(m.dim());
      int total = 0;
      int sq = 0;
      for (const auto& s : rep.summands) {
        EXPECT_TRUE(s.simple);
        total += s.dimension();
        sum = subspace_sum(sum, s.space);
        EXPECT_EQ(singular_dimension(singular_vectors(s.module)), 1);
      }
      EXPECT_EQ(total, m.dim());
      EXPECT_EQ(sum.dim(), m.dim());
      for (const auto& [w, k] : rep.multiplicities) sq += k * k;
      EXPECT_EQ(commutant(m.generators()).dimension(), sq);
      for (std::uint64_t seed : {1u, 2u, 3u}) EXPECT_EQ(decompose(m, seed).multiplicities, rep.multiplicities);
    }
}

TEST(Properties, SingularVectorKillsStringEnd) {
  // e_i f_i^{k+1} v = 0 for a singular v of weight lam, k = <alpha_i, lam>.
  for (int n : {2, 3}) {
    auto m = tensor_power(natural_module(n, kSym), 3);
    for (const auto& ws : singular_vectors(m))
      for (const auto& v : ws.space.basis())
        for (int i = 1; i < n; ++i) {
          int k = inner(Weight::alpha(n, i), ws.weight);
          EXPECT_TRUE(commutation_identity_check(m, i, k + 1).all_passed());
          Vec u = m.F(i).pow(k + 1).apply(v);
          EXPECT_TRUE(is_zero_vec(m.E(i).apply(u)));
          EXPECT_TRUE(is_zero_vec(u));
        }
  }
}

TEST(Properties, CasimirCommutes) {
  for (const auto& m : random_modules(2, 4, 9u)) {
    auto c = casimir(m);
    ASSERT_TRUE(c.omega_xi_normalized.has_value());
    EXPECT_FALSE(commutation_failure(*c.omega_xi_normalized, m).has_value());
    for (const auto& [g, mult] : c.spectrum) EXPECT_GT(mult, 0);
  }
}
