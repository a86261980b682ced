#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsw/matrix.hpp"

namespace qsw {

/// A permutation of {1..k} in one-line notation. Composition is as
/// functions: (x * y)(i) = x(y(i)), so right multiplication by s_i swaps
/// positions i and i+1 and left multiplication swaps values i and i+1.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int k);
  /// The simple transposition s_i.
  static Permutation simple(int k, int i);
  /// All permutations of {1..k} in lexicographic order.
  static std::vector<Permutation> all(int k);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return w_; }
  int length() const;
  Permutation inverse() const;
  Permutation times_simple(int i) const;
  Permutation simple_times(int i) const;
  /// Lexicographically smallest reduced word j_1..j_m with
  /// this = s_{j_1} ... s_{j_m}.
  std::vector<int> reduced_word() const;
  bool is_identity() const;
  std::string str() const;

  friend Permutation operator*(const Permutation& x, const Permutation& y);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> w_;
};

Permutation from_word(int k, const std::vector<int>& word);
bool is_reduced(int k, const std::vector<int>& word);

/// An element of H_k(r,s) in the basis T_sigma; zero coefficients are never stored.
class HeckeElement {
 public:
  HeckeElement() = default;
  HeckeElement(int k, ParamSpec p) : k_(k), p_(std::move(p)) {}
  static HeckeElement unit(int k, const ParamSpec& p);
  static HeckeElement basis(const Permutation& sigma, const ParamSpec& p);
  static HeckeElement generator(int k, int i, const ParamSpec& p);

  int k() const { return k_; }
  const ParamSpec& param() const { return p_; }
  const std::map<Permutation, Scalar>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Scalar coefficient(const Permutation& sigma) const;
  void add(const Permutation& sigma, const Scalar& c);

  friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b);
  friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b);
  friend HeckeElement operator*(const Scalar& c, const HeckeElement& a);
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.k_ == b.k_ && a.c_ == b.c_; }
  std::string str() const;

 private:
  int k_ = 0;
  ParamSpec p_;
  std::map<Permutation, Scalar> c_;
};

/// Product using T_sigma T_i = T_{sigma s_i} when sigma(i) < sigma(i+1) and
/// (s - r) T_sigma + r s T_{sigma s_i} otherwise.
HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);
/// T_{j_1} ... T_{j_m} multiplied out from the generators.
HeckeElement word_product(int k, const std::vector<int>& word, const ParamSpec& p);
/// T_sigma along the canonical reduced word.
HeckeElement t_sigma(const Permutation& sigma, const ParamSpec& p);

/// T_i -> s R_i on V^{(x)k}.
class HeckeRep {
 public:
  HeckeRep(int n, int k, const ParamSpec& p);
  int n() const { return n_; }
  int k() const { return k_; }
  const Matrix& generator(int i) const { return gens_[static_cast<std::size_t>(i - 1)]; }
  Matrix image(const Permutation& sigma) const;
  Matrix image(const HeckeElement& x) const;

 private:
  int n_;
  int k_;
  ParamSpec p_;
  std::vector<Matrix> gens_;
};

struct RSigma {
  Matrix matrix;
  HeckeElement element;
};
/// The operator sending v_{i_1} (x) ... (x) v_{i_k} to
/// v_{i_sigma(1)} (x) ... (x) v_{i_sigma(k)}, for distinct indices, built
/// from r^{-1} R_j or s R_j + (r - s) depending on the order of the swapped
/// indices; element is its preimage in H_k(r,s).
RSigma r_sigma(int n, const Permutation& sigma, const std::vector<int>& target, const ParamSpec& p);

struct SchurWeylReport {
  int n = 0;
  int k = 0;
  int centralizer_dim = 0;
  int hecke_image_dim = 0;
  long k_factorial = 0;
  bool surjective = false;
  bool isomorphic = false;
  bool blocked = false;
  std::string params;
};
SchurWeylReport schur_weyl_check(int n, int k, const ParamSpec& p);

}  // namespace qsw
