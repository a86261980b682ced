#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qsw/scalar.hpp"

namespace qsw {

/// Integer vector in the weight lattice of gl_n, in epsilon coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> coords);
  static Weight zero(int n) { return Weight(std::vector<int>(static_cast<std::size_t>(n), 0)); }
  /// epsilon_i, 1-based.
  static Weight epsilon(int n, int i);
  /// alpha_j = epsilon_j - epsilon_{j+1}, 1-based.
  static Weight alpha(int n, int j);
  /// c * (epsilon_1 + ... + epsilon_n).
  static Weight constant(int n, int c) { return Weight(std::vector<int>(static_cast<std::size_t>(n), c)); }

  int rank() const { return static_cast<int>(c_.size()); }
  /// Coordinate i, 1-based.
  int operator[](int i) const { return c_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& coords() const { return c_; }
  int total() const;

  Weight operator-() const;
  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend Weight operator*(int k, const Weight& a);
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  /// "(2,1,0)".
  std::string str() const;

 private:
  std::vector<int> c_;
};

/// Order used to list weights: total degree descending, then lexicographically
/// descending.
bool weight_before(const Weight& a, const Weight& b);

int inner(const Weight& a, const Weight& b);
Weight two_rho(int n);
bool is_dominant(const Weight& w);
/// mu <= lam, i.e. lam - mu is a nonnegative combination of simple roots.
bool dominance_leq(const Weight& mu, const Weight& lam);
/// Simple reflection s_i (1-based), swapping coordinates i and i+1.
Weight reflect(const Weight& w, int i);
GScalar g_exponent(const Weight& w);

/// Coefficients in the basis alpha_1, ..., alpha_{n-1}, epsilon_n.
std::vector<int> to_alpha_coords(const Weight& w);
Weight from_alpha_coords(const std::vector<int>& c);

/// An algebra homomorphism from the torus to the field, recorded by its
/// values on a_1..a_n and b_1..b_n.
struct TorusCharacter {
  std::vector<Scalar> a;
  std::vector<Scalar> b;

  static TorusCharacter counit(int n);
  int rank() const { return static_cast<int>(a.size()); }
  /// Value on omega_j = a_j b_{j+1}, 1-based.
  Scalar omega(int j) const;
  /// Value on omega'_j = a_{j+1} b_j, 1-based.
  Scalar omega_prime(int j) const;
  bool is_counit() const;
  /// True when omega_j and omega'_j agree for every j, the condition for a
  /// one-dimensional module.
  bool admits_one_dim() const;
  TorusCharacter inverse() const;

  friend TorusCharacter operator*(const TorusCharacter& x, const TorusCharacter& y);
  friend bool operator==(const TorusCharacter&, const TorusCharacter&) = default;
  std::string str() const;
};

TorusCharacter hat_character(const Weight& w, const ParamSpec& p);

/// (omega'_mu, omega_lam), extended bimultiplicatively from the generator values.
Scalar torus_pairing(const Weight& mu, const Weight& lam, const ParamSpec& p);

/// Dominant weights of rank n with nonnegative coordinates summing to at most
/// max_total, in weight_before order.
std::vector<Weight> dominant_weights(int n, int max_total);
/// Dominant weights mu with mu <= lam, in weight_before order.
std::vector<Weight> dominant_below(const Weight& lam);

}  // namespace qsw
