#pragma once

#include <string>
#include <vector>

#include "qsw/linalg.hpp"
#include "qsw/module.hpp"

namespace qsw {

/// R on V (x) V in the basis v_a (x) v_b (index (a-1) n + (b-1)):
///   v_i (x) v_j -> r v_j (x) v_i                                  (i < j)
///   v_j (x) v_i -> s^{-1} v_i (x) v_j + (1 - r s^{-1}) v_j (x) v_i  (i < j)
///   v_i (x) v_i -> v_i (x) v_i
Matrix r_vv(int n, const ParamSpec& p);

/// Id^{(x)(i-1)} (x) r (x) Id^{(x)(k-i-1)} for an n^2 x n^2 matrix r.
Matrix place_on_factors(const Matrix& r, int n, int k, int i);

struct ROperator {
  int n = 0;
  int k = 0;
  int i = 0;
  Matrix matrix;
};
/// R acting on factors i, i+1 of V^{(x)k}. With check set, commutation
/// with the generators of V^{(x)k} is verified (PreconditionViolated).
ROperator r_i(int n, int k, int i, const ParamSpec& p, bool check = true);

/// Braid relations R_i R_{i+1} R_i = R_{i+1} R_i R_{i+1} and R_i R_j = R_j R_i
/// for |i - j| >= 2, for a given two-factor operator.
RelationReport braid_check(const Matrix& r, int n, int k);
RelationReport braid_check(int n, int k, const ParamSpec& p);
/// R_i commutes with every generator of V^{(x)k}, for each i.
RelationReport intertwining_check(int n, int k, const ParamSpec& p);

struct MinpolyReport {
  bool quadratic_holds = false;
  std::string quadratic_witness;
  std::vector<Scalar> coefficients;
  int degree = 0;
  std::string factored;
  std::string expanded;
  std::vector<Scalar> roots;
};
/// Renders the minimal polynomial of x, factoring out linear factors whose
/// roots lie in {1, -1, +-r/s, +-s/r, +-r, +-s}.
MinpolyReport minpoly_report(const Matrix& x, const ParamSpec& p);
/// minpoly_report of r_vv plus the quadratic relation R^2 = (1 - r s^{-1}) R + r s^{-1}.
MinpolyReport quadratic_and_minpoly(int n, const ParamSpec& p);

struct Projectors {
  Matrix p1;
  Matrix p2;
  Subspace sym;
  Subspace wedge;
};
/// p1 = (s R + r)/(s + r) and p2 = (s - s R)/(s + r) with their images.
Projectors rs_projectors(int n, const ParamSpec& p);
/// Spans of {v_i v_i, v_i v_j + s v_j v_i} and {v_i v_j - r v_j v_i}, i < j.
Subspace rs_symmetric(int n, const ParamSpec& p);
Subspace rs_antisymmetric(int n, const ParamSpec& p);

/// Theta o f~ o P at n = 2, with Theta = 1 (x) 1 + (s - r) f_1 (x) e_1 and
/// f~ given by the torus pairing. Without theta only the twisted flip remains.
Matrix r_from_definition_n2(const ParamSpec& p, bool with_theta = true);

/// Submodule layers of V (x) V at n = 2, s = -r.
struct NonGenericLayers {
  int wedge_dim = 0;
  int generated_by_top = 0;
  int total = 0;
  bool wedge_inside_top = false;
  bool top_weight_space_is_line = false;
  /// dimension of the quotient spanned by v1 v2 + r v2 v1 and v2 v2
  int top_quotient_dim = 0;
  bool wedge_complemented() const { return !(wedge_inside_top && top_weight_space_is_line); }
};
NonGenericLayers nongeneric_layers(const ParamSpec& p);

}  // namespace qsw
