#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace qsw {

using Rational = mpq_class;

/// Exponent pair of r^r * s^s.
struct Monomial {
  int r = 0;
  int s = 0;

  int degree() const { return r + s; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with r > s: higher total degree first, then
/// higher r-degree. Returns true when `a` comes strictly before `b`.
inline bool grlex_before(Monomial a, Monomial b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  return a.r > b.r;
}

/// Sparse bivariate polynomial in r, s over the rationals. Terms are kept
/// sorted by `grlex_before` with no zero coefficients, so structural equality
/// is value equality.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Poly() = default;
  explicit Poly(const Rational& c);
  explicit Poly(long c) : Poly(Rational(c)) {}

  static Poly monomial(Monomial m, const Rational& c = 1);
  static Poly var_r() { return monomial({1, 0}); }
  static Poly var_s() { return monomial({0, 1}); }
  /// Builds from unsorted, possibly duplicated terms.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Leading term under grlex. Requires a nonzero polynomial.
  const Term& leading() const { return terms_.front(); }
  int degree_r() const;
  int degree_s() const;
  int total_degree() const;
  /// Componentwise minimum exponent over all terms (the largest monomial
  /// dividing the polynomial).
  Monomial min_monomial() const;

  Poly divide_monomial(Monomial m) const;
  Poly multiply_monomial(Monomial m) const;
  Poly scaled(const Rational& c) const;

  Rational evaluate(const Rational& r, const Rational& s) const;
  /// Constant term value when `is_constant()`.
  Rational constant_value() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Rendering such as "r^2 + 2*r*s - 1/3".
  std::string str() const;

 private:
  std::vector<Term> terms_;
};

/// Exact quotient a / b. Throws InvalidArgument when b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);

/// Greatest common divisor over Q[r,s], normalized to leading coefficient 1
/// (gcd(0,0) = 0).
Poly gcd(const Poly& a, const Poly& b);

/// a scaled so that its grlex leading coefficient is 1 (zero stays zero).
Poly monic(const Poly& a);

}  // namespace qsw
