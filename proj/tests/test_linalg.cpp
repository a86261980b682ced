#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "qsw/error.hpp"
#include "qsw/linalg.hpp"

using namespace qsw;

namespace {

Scalar P(const char* t) { return parse_scalar(t); }

Vec unit(int d, int i) {
  Vec v(static_cast<std::size_t>(d));
  v[static_cast<std::size_t>(i)] = Scalar(1);
  return v;
}

Matrix random_sparse(std::mt19937& rng, int rows, int cols, bool symbolic) {
  std::uniform_int_distribution<int> coin(0, 3);
  std::uniform_int_distribution<int> val(-3, 3);
  Matrix m(rows, cols);
  const char* syms[] = {"r", "s", "r - s", "1/s", "r*s"};
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (coin(rng) == 0) {
        Scalar v(val(rng));
        if (symbolic && coin(rng) == 0) v *= P(syms[coin(rng)]);
        m.set(i, j, v);
      }
  return m;
}

}  // namespace

TEST(Linalg, IdentityRank) {
  auto res = rref(Matrix::identity(3));
  EXPECT_EQ(res.rank, 3);
  EXPECT_EQ(kernel_basis(Matrix::identity(3)).dim(), 0);
}

TEST(Linalg, ZeroMatrix) {
  EXPECT_EQ(rank(Matrix(2, 2)), 0);
  EXPECT_EQ(kernel_basis(Matrix(2, 2)).dim(), 2);
}

TEST(Linalg, ProportionalSymbolicRows) {
  Matrix m = Matrix::from_dense({{P("r"), P("s")}, {P("r^2/s"), P("r")}});
  EXPECT_EQ(rank(m), 1);
  auto k = kernel_basis(m);
  ASSERT_EQ(k.dim(), 1);
  EXPECT_TRUE(is_zero_vec(m.apply(k.basis()[0])));
}

TEST(Linalg, SolveAndNoSolution) {
  Matrix m = Matrix::from_dense({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}});
  auto x = solve(m, {Scalar(3), Scalar(6)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(m.apply(*x), (Vec{Scalar(3), Scalar(6)}));
  EXPECT_FALSE(solve(m, {Scalar(1), Scalar(1)}).has_value());
  EXPECT_THROW(solve(m, {Scalar(1)}), Error);
}

TEST(Linalg, Inverse) {
  Matrix m = Matrix::from_dense({{P("r"), Scalar(1)}, {Scalar(0), P("s")}});
  EXPECT_TRUE((m * inverse(m)).is_identity());
  EXPECT_THROW(inverse(Matrix(2, 2)), Error);
}

TEST(Linalg, SpanClosure) {
  auto s = span_closure({Matrix::identity(3)}, {unit(3, 0)});
  EXPECT_EQ(s, Subspace::span(3, {unit(3, 0)}));
  Matrix shift(3, 3);
  shift.set(1, 0, Scalar(1));
  shift.set(2, 1, Scalar(1));
  shift.set(0, 2, Scalar(1));
  EXPECT_EQ(span_closure({shift}, {unit(3, 0)}).dim(), 3);
  auto e12 = span_closure({Matrix::unit(2, 0, 1)}, {unit(2, 1)});
  EXPECT_EQ(e12, Subspace::full(2));
}

TEST(Linalg, SubspaceOperations) {
  Subspace a = Subspace::span(3, {unit(3, 0), unit(3, 1)});
  EXPECT_EQ(intersection(a, a), a);
  EXPECT_TRUE(is_direct(Subspace::span(2, {unit(2, 0)}), Subspace::span(2, {unit(2, 1)})));
  Subspace diag = Subspace::span(2, {Vec{Scalar(1), Scalar(1)}});
  EXPECT_EQ(intersection(diag, Subspace::span(2, {unit(2, 0)})).dim(), 0);
  EXPECT_EQ(subspace_sum(diag, Subspace::span(2, {unit(2, 0)})), Subspace::full(2));
  EXPECT_TRUE(a.contains(Vec{Scalar(3), P("r"), Scalar(0)}));
  EXPECT_FALSE(a.contains(unit(3, 2)));
  EXPECT_EQ(a.coordinates(Vec{Scalar(3), P("r"), Scalar(0)}), (Vec{Scalar(3), P("r")}));
}

TEST(Linalg, RrefInvariants) {
  Matrix m = Matrix::from_dense({{Scalar(0), Scalar(2), Scalar(4)}, {Scalar(1), Scalar(1), Scalar(1)}, {Scalar(1), Scalar(2), Scalar(3)}});
  auto res = rref(m);
  EXPECT_EQ(res.rank, 2);
  EXPECT_EQ(res.pivots, (std::vector<int>{0, 1}));
  EXPECT_EQ(res.rref.at(0, 0), Scalar(1));
  EXPECT_EQ(res.rref.at(0, 1), Scalar(0));
  EXPECT_EQ(res.rref.at(1, 1), Scalar(1));
}

TEST(Linalg, CommutantExamples) {
  EXPECT_EQ(commutant({Matrix::identity(3)}).dimension(), 9);
  std::vector<Matrix> full = {Matrix::unit(2, 0, 1), Matrix::unit(2, 1, 0), Matrix::unit(2, 0, 0)};
  EXPECT_EQ(commutant(full).dimension(), 1);
}

TEST(Linalg, CommutantBlockChecks) {
  Matrix d = Matrix::diagonal({Scalar(2), Scalar(3), Scalar(3)});
  std::vector<int> good = {0, 1, 1};
  auto c = commutant({d}, &good);
  EXPECT_TRUE(c.blocked);
  EXPECT_EQ(c.dimension(), 5);
  std::vector<int> bad = {0, 0, 1};
  EXPECT_THROW(commutant({d}, &bad), Error);
  // Two labels with equal diagonal values fall back to the full system.
  Matrix flat = Matrix::identity(2);
  std::vector<int> split = {0, 1};
  auto f = commutant({flat}, &split);
  EXPECT_FALSE(f.blocked);
  EXPECT_EQ(f.dimension(), 4);
}

TEST(Linalg, MinimalPolynomial) {
  EXPECT_EQ(minimal_polynomial(Matrix::identity(3)), (std::vector<Scalar>{Scalar(-1), Scalar(1)}));
  Matrix j = Matrix::from_dense({{P("r"), Scalar(1)}, {Scalar(0), P("r")}});
  auto c = minimal_polynomial(j);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_TRUE(evaluate_polynomial(c, j).is_zero());
}

TEST(LinalgProperty, RankOfTransposeMatches) {
  std::mt19937 rng(21);
  for (int t = 0; t < 30; ++t) {
    Matrix m = random_sparse(rng, 4 + t % 3, 5, t % 2 == 0);
    EXPECT_EQ(rank(m), rank(m.transpose()));
    auto once = rref(m).rref;
    EXPECT_EQ(rref(once).rref, once);
    auto k = kernel_basis(m);
    EXPECT_EQ(k.dim() + rank(m), m.cols());
    for (const auto& v : k.basis()) EXPECT_TRUE(is_zero_vec(m.apply(v)));
  }
}

TEST(LinalgProperty, CommutantElementsCommute) {
  std::mt19937 rng(23);
  for (int t = 0; t < 10; ++t) {
    Matrix g = random_sparse(rng, 4, 4, t % 2 == 0);
    auto c = commutant({g});
    EXPECT_GE(c.dimension(), 1);
    for (const auto& x : c.basis) EXPECT_TRUE(commutator(x, g).is_zero());
  }
}

TEST(LinalgProperty, ClosureIgnoresOrder) {
  std::mt19937 rng(29);
  for (int t = 0; t < 10; ++t) {
    std::vector<Matrix> ops = {random_sparse(rng, 5, 5, false), random_sparse(rng, 5, 5, false)};
    std::vector<Vec> seeds = {unit(5, t % 5), unit(5, (t + 2) % 5)};
    auto a = span_closure(ops, seeds);
    std::reverse(ops.begin(), ops.end());
    std::reverse(seeds.begin(), seeds.end());
    EXPECT_EQ(span_closure(ops, seeds), a);
  }
}
