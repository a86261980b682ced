#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsw/linalg.hpp"
#include "qsw/module.hpp"

namespace qsw {

struct WeightSpace {
  TorusCharacter character;
  std::optional<Weight> weight;
  Subspace space;
};

/// Simultaneous eigenspaces of the torus. When the torus is not
/// diagonalizable, generalized_only is set and spaces holds the generalized
/// eigenspaces instead. Untagged modules need triangular torus matrices.
struct WeightDecomposition {
  bool generalized_only = false;
  std::vector<WeightSpace> spaces;
  const WeightSpace* find(const Weight& w) const;
};
WeightDecomposition weight_decomposition(const WeightModule& m);

struct WeightedSubspace {
  Weight weight;
  Subspace space;
};
/// Kernel of all e_i inside each weight space, weights in weight_before order.
std::vector<WeightedSubspace> singular_vectors(const WeightModule& m);
int singular_dimension(const std::vector<WeightedSubspace>& sv);

/// The submodule generated by the seeds with its action in the basis
/// `basis` (weight-adapted when the module carries tags).
struct Submodule {
  Subspace space;
  std::vector<Vec> basis;
  WeightModule module;
};
Submodule submodule(const WeightModule& m, const Vec& v);
Submodule submodule(const WeightModule& m, const std::vector<Vec>& seeds);
bool is_cyclic(const WeightModule& m, const Vec& v);

struct SimplicityResult {
  bool simple = false;
  std::string reason;
};
/// One singular line, which generates, and every e_i nilpotent.
SimplicityResult simplicity_check(const WeightModule& m);

struct Summand {
  Subspace space;
  std::vector<Vec> basis;
  Vec highest_vector;
  Weight highest_weight;
  TorusCharacter shift;
  WeightModule module;
  bool simple = false;
  int dimension() const { return space.dim(); }
};

struct DecompositionReport {
  std::vector<Summand> summands;
  std::map<Weight, int> multiplicities;
  bool complete = false;
  std::vector<int> dimensions() const;
};
/// Greedy selection of submodules generated by singular vectors. When a
/// seed is given the candidate order is shuffled with it.
DecompositionReport decompose(const WeightModule& m, std::optional<std::uint64_t> shuffle_seed = std::nullopt);

struct HighestWeightData {
  TorusCharacter chi;
  Weight lambda;
  Vec vector;
  std::vector<int> string_lengths;
};
HighestWeightData highest_weight_data(const WeightModule& s);

/// L(lam) for dominant lam, realized inside a tensor power of V.
WeightModule simple_module(int n, const Weight& lam, const ParamSpec& p);

/// The isomorphism L_chi (x) M -> M (x) L_chi as a diagonal matrix.
Matrix shift_iso(const TorusCharacter& chi, const WeightModule& m);

/// Empty when X g_src = g_dst X for every generator, else the first failure.
std::optional<std::string> intertwining_failure(const Matrix& x, const WeightModule& src, const WeightModule& dst);
/// Empty when x commutes with every generator of m.
std::optional<std::string> commutation_failure(const Matrix& x, const WeightModule& m);

enum class IsoStatus { Found, NotIsomorphic, Inconclusive };
std::string to_string(IsoStatus s);

struct IsoResult {
  IsoStatus status = IsoStatus::Inconclusive;
  std::optional<Matrix> map;
  std::string certificate;
  int intertwiner_dimension = 0;
};
inline constexpr int kIsoAttempts = 32;
IsoResult iso_check(const WeightModule& m, const WeightModule& n, std::uint64_t seed = 0);

struct CasimirResult {
  std::map<GScalar, int> spectrum;
  std::vector<GScalar> summand_exponents;
  std::optional<Matrix> xi;
  std::optional<Matrix> omega_xi;
  GScalar lowest;
  /// Omega Xi divided by (rs^{-1})^{lowest}; present when exponent
  /// differences are integral.
  std::optional<Matrix> omega_xi_normalized;
};
CasimirResult casimir(const WeightModule& m);

struct SpecializationReport {
  bool balanced = false;
  bool passed = false;
  std::vector<std::string> failures;
};
/// Checks b_i a_i = 1; symbolic parameters are rejected.
SpecializationReport specialization_check(const WeightModule& m);

}  // namespace qsw
