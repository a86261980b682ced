#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsw/matrix.hpp"
#include "qsw/weights.hpp"

namespace qsw {

/// A finite-dimensional module given by exact action matrices of the
/// generators e_j, f_j (1 <= j < n) and a_i^{+-1}, b_i^{+-1} (1 <= i <= n).
/// When weight tags are present the torus acts diagonally: a_i on a basis
/// vector tagged lam by shift(a_i) r^{lam_i}, b_i by shift(b_i) s^{lam_i}.
struct WeightModule {
  int n = 0;
  ParamSpec param;
  std::vector<std::string> labels;
  std::vector<Matrix> e;
  std::vector<Matrix> f;
  std::vector<Matrix> a;
  std::vector<Matrix> b;
  std::vector<Matrix> a_inv;
  std::vector<Matrix> b_inv;
  std::optional<std::vector<Weight>> tags;
  std::optional<TorusCharacter> shift;

  int dim() const { return static_cast<int>(labels.size()); }
  bool semisimple_torus() const { return tags.has_value(); }

  // 1-based accessors.
  const Matrix& E(int j) const { return e[static_cast<std::size_t>(j - 1)]; }
  const Matrix& F(int j) const { return f[static_cast<std::size_t>(j - 1)]; }
  const Matrix& A(int i) const { return a[static_cast<std::size_t>(i - 1)]; }
  const Matrix& B(int i) const { return b[static_cast<std::size_t>(i - 1)]; }
  const Matrix& A_inv(int i) const { return a_inv[static_cast<std::size_t>(i - 1)]; }
  const Matrix& B_inv(int i) const { return b_inv[static_cast<std::size_t>(i - 1)]; }
  Matrix omega(int j) const { return A(j) * B(j + 1); }
  Matrix omega_prime(int j) const { return A(j + 1) * B(j); }
  Matrix omega_inv(int j) const { return A_inv(j) * B_inv(j + 1); }
  Matrix omega_prime_inv(int j) const { return A_inv(j + 1) * B_inv(j); }

  /// e_1..e_{n-1}, f_1..f_{n-1}, a_1..a_n, b_1..b_n.
  std::vector<Matrix> generators() const;
  /// Full torus character of basis vector idx (0-based); requires tags.
  TorusCharacter character_of(int idx) const;
  TorusCharacter shift_or_counit() const;
  const Weight& tag(int idx) const { return (*tags)[static_cast<std::size_t>(idx)]; }
};

struct RelationResult {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct RelationReport {
  std::vector<RelationResult> results;
  bool all_passed() const;
  const RelationResult* find(const std::string& name) const;
  /// First failing relation with its witness, or "" when everything holds.
  std::string first_failure() const;
};

/// Evaluates the defining relations of U_{r,s}(gl_n) and their U_{r,s}(sl_n)
/// forms as exact matrix identities, plus consistency of weight tags.
RelationReport check_relations(const WeightModule& m);
/// Throws PreconditionViolated with the first failing relation.
void validate(const WeightModule& m);

/// Builds a module with diagonal torus from weight tags.
WeightModule module_from_tags(int n, const ParamSpec& p, std::vector<std::string> labels, std::vector<Weight> tags,
                              std::vector<Matrix> e, std::vector<Matrix> f,
                              std::optional<TorusCharacter> shift = std::nullopt);

WeightModule natural_module(int n, const ParamSpec& p);
WeightModule one_dim_module(int n, const TorusCharacter& chi, const ParamSpec& p);
/// e, f act by zero; every a_i (resp. b_i) is the m x m Jordan block with
/// eigenvalue xi (resp. xi').
WeightModule jordan_module(int n, int m, const Scalar& xi, const Scalar& xi_prime, const ParamSpec& p);

/// M (x) N with the action through the coproduct.
WeightModule tensor(const WeightModule& m, const WeightModule& n, bool check = true);
WeightModule tensor_power(const WeightModule& m, int k);

/// Index in V^{(x)k} of v_{i_1} (x) ... (x) v_{i_k} (1-based indices).
int tensor_index(int n, const std::vector<int>& indices);
Vec basis_vector(int dim, int idx);

}  // namespace qsw
