#pragma once

#include <optional>

#include "qsw/linalg.hpp"
#include "qsw/module.hpp"

namespace qsw {

/// A module for the rank-one algebra generated by e, f, omega^{+-1},
/// omega'^{+-1}. Truncated modules record their depth; relations involving f
/// are then only meaningful on columns below it.
struct Sl2Module {
  ParamSpec param;
  Matrix e, f, w, wp, w_inv, wp_inv;
  std::optional<int> depth;
  int dim() const { return e.rows(); }
};

/// Basis v_0..v_d with f v_j = v_{j+1} (f v_d = 0) and
/// e v_j = [j](phi r^{1-j} - phi' s^{1-j})/(r-s) v_{j-1}.
Sl2Module sl2_verma_truncated(const Scalar& phi, const Scalar& phi_prime, int depth, const ParamSpec& p);
/// The (ell+1)-dimensional simple module L(phi).
Sl2Module sl2_simple(const Scalar& phi, int ell, const ParamSpec& p);
/// The copy generated by e_i, f_i, omega_i, omega'_i inside a module.
Sl2Module sl2_restrict(const WeightModule& m, int i);

RelationReport check_sl2_relations(const Sl2Module& m);
Subspace sl2_singular_vectors(const Sl2Module& m);

/// Verifies, for k = 1..k_max,
///   e f^k = f^k e + [k] f^{k-1} (r^{1-k} omega - s^{1-k} omega')/(r-s)
///   e^k f = f e^k + [k] e^{k-1} (s^{1-k} omega - r^{1-k} omega')/(r-s).
/// On truncated modules only columns j <= depth - k are compared.
RelationReport commutation_identity_check(const Sl2Module& m, int k_max);
RelationReport commutation_identity_check(const WeightModule& m, int i, int k_max);

}  // namespace qsw
