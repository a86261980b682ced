#include "qsw/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "qsw/error.hpp"

namespace qsw {

namespace {

void add_into(std::vector<Poly::Term>& out, const std::vector<Poly::Term>& a,
              const std::vector<Poly::Term>& b, bool negate_b) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_before(a[i].mono, b[j].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_before(b[j].mono, a[i].mono)) {
      out.push_back(negate_b ? Poly::Term{b[j].mono, -b[j].coeff} : b[j]);
      ++j;
    } else {
      Rational c = negate_b ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (sgn(c) != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
}

}  // namespace

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back({{0, 0}, c});
}

Poly Poly::monomial(Monomial m, const Rational& c) {
  Poly p;
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grlex_before(x.mono, y.mono); });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == Monomial{0, 0});
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono == Monomial{0, 0} && terms_[0].coeff == 1;
}

int Poly::degree_r() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.r);
  return d;
}

int Poly::degree_s() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.s);
  return d;
}

int Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

Monomial Poly::min_monomial() const {
  if (terms_.empty()) return {0, 0};
  Monomial m = terms_.front().mono;
  for (const auto& t : terms_) {
    m.r = std::min(m.r, t.mono.r);
    m.s = std::min(m.s, t.mono.s);
  }
  return m;
}

Poly Poly::divide_monomial(Monomial m) const {
  Poly p = *this;
  for (auto& t : p.terms_) {
    t.mono.r -= m.r;
    t.mono.s -= m.s;
  }
  return p;
}

Poly Poly::multiply_monomial(Monomial m) const {
  Poly p = *this;
  for (auto& t : p.terms_) {
    t.mono.r += m.r;
    t.mono.s += m.s;
  }
  return p;
}

Poly Poly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return {};
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Rational Poly::evaluate(const Rational& r, const Rational& s) const {
  Rational acc = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    Rational pr = 1;
    Rational ps = 1;
    for (int k = 0; k < t.mono.r; ++k) pr *= r;
    for (int k = 0; k < t.mono.s; ++k) ps *= s;
    acc += v * pr * ps;
  }
  return acc;
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return 0;
  return terms_.front().coeff;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  add_into(out, terms_, o.terms_, false);
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  add_into(out, terms_, o.terms_, true);
  terms_ = std::move(out);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    Poly p = a.multiply_monomial(b.terms_[0].mono);
    if (b.terms_[0].coeff != 1) {
      for (auto& t : p.terms_) t.coeff *= b.terms_[0].coeff;
    }
    return p;
  }
  if (a.terms_.size() == 1) return b * a;
  std::vector<Poly::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      terms.push_back({{x.mono.r + y.mono.r, x.mono.s + y.mono.s}, x.coeff * y.coeff});
    }
  }
  return Poly::from_terms(std::move(terms));
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = (c == 1);
    bool constant = t.mono == Monomial{0, 0};
    if (!unit || constant) {
      os << c.get_str();
      if (!constant) os << "*";
    }
    bool need_star = false;
    if (t.mono.r > 0) {
      os << "r";
      if (t.mono.r > 1) os << "^" << t.mono.r;
      need_star = true;
    }
    if (t.mono.s > 0) {
      if (need_star) os << "*";
      os << "s";
      if (t.mono.s > 1) os << "^" << t.mono.s;
    }
  }
  return os.str();
}

Poly monic(const Poly& a) {
  if (a.is_zero() || a.leading().coeff == 1) return a;
  Rational inv = 1 / a.leading().coeff;
  return a.scaled(inv);
}

Poly divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (b.is_monomial()) {
    const auto& lt = b.leading();
    Rational inv = 1 / lt.coeff;
    Poly q;
    std::vector<Poly::Term> terms;
    terms.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (t.mono.r < lt.mono.r || t.mono.s < lt.mono.s)
        raise(ErrorCode::InvalidArgument, "inexact polynomial division");
      terms.push_back({{t.mono.r - lt.mono.r, t.mono.s - lt.mono.s}, t.coeff * inv});
    }
    return Poly::from_terms(std::move(terms));
  }
  Poly rem = a;
  std::vector<Poly::Term> quotient;
  const auto& lt = b.leading();
  Rational inv = 1 / lt.coeff;
  while (!rem.is_zero()) {
    const auto& rt = rem.leading();
    if (rt.mono.r < lt.mono.r || rt.mono.s < lt.mono.s)
      raise(ErrorCode::InvalidArgument, "inexact polynomial division");
    Monomial m{rt.mono.r - lt.mono.r, rt.mono.s - lt.mono.s};
    Rational c = rt.coeff * inv;
    quotient.push_back({m, c});
    rem -= b.multiply_monomial(m).scaled(c);
  }
  return Poly::from_terms(std::move(quotient));
}

// ---------------------------------------------------------------------------
// gcd: view polynomials as elements of Q[r][s] and run a primitive PRS in s,
// with univariate Euclid over Q for the contents.

namespace {

using UPoly = std::vector<Rational>;  // coefficients in r, index = degree

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UPoly u_monic(UPoly p) {
  trim(p);
  if (p.empty() || p.back() == 1) return p;
  Rational inv = 1 / p.back();
  for (auto& c : p) c *= inv;
  return p;
}

UPoly u_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// a mod b with b nonzero; quotient written to q when requested.
UPoly u_divmod(UPoly a, const UPoly& b, UPoly* q) {
  trim(a);
  if (q) q->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  Rational inv = 1 / b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() * inv;
    if (q) (*q)[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

UPoly u_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    if (b.size() == 1) return {Rational(1)};
    UPoly rem = u_divmod(a, b, nullptr);
    a = std::move(b);
    b = u_monic(std::move(rem));
  }
  return u_monic(std::move(a));
}

using SPoly = std::vector<UPoly>;  // coefficients in s, index = degree

SPoly to_spoly(const Poly& p) {
  SPoly out(static_cast<std::size_t>(p.degree_s()) + 1);
  for (const auto& t : p.terms()) {
    auto& u = out[static_cast<std::size_t>(t.mono.s)];
    if (u.size() <= static_cast<std::size_t>(t.mono.r)) u.resize(static_cast<std::size_t>(t.mono.r) + 1, Rational(0));
    u[static_cast<std::size_t>(t.mono.r)] = t.coeff;
  }
  return out;
}

Poly from_spoly(const SPoly& p) {
  std::vector<Poly::Term> terms;
  for (std::size_t j = 0; j < p.size(); ++j) {
    for (std::size_t i = 0; i < p[j].size(); ++i) {
      if (sgn(p[j][i]) != 0) terms.push_back({{static_cast<int>(i), static_cast<int>(j)}, p[j][i]});
    }
  }
  return Poly::from_terms(std::move(terms));
}

void s_trim(SPoly& p) {
  for (auto& u : p) trim(u);
  while (!p.empty() && p.back().empty()) p.pop_back();
}

UPoly s_content(const SPoly& p) {
  UPoly g;
  for (const auto& u : p) {
    if (u.empty()) continue;
    g = g.empty() ? u_monic(u) : u_gcd(g, u);
    if (g.size() == 1) break;
  }
  return g;
}

SPoly s_primitive(SPoly p) {
  s_trim(p);
  if (p.empty()) return p;
  UPoly c = s_content(p);
  if (c.size() > 1 || c.back() != 1) {
    for (auto& u : p) {
      if (u.empty()) continue;
      UPoly q;
      u_divmod(u, c, &q);
      trim(q);
      u = std::move(q);
    }
  }
  // Normalize the leading coefficient's leading r-coefficient to 1.
  Rational inv = 1 / p.back().back();
  if (inv != 1) {
    for (auto& u : p) {
      for (auto& x : u) x *= inv;
    }
  }
  return p;
}

// Pseudo-remainder of a by b with respect to s.
SPoly s_prem(SPoly a, const SPoly& b) {
  s_trim(a);
  const UPoly& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    UPoly la = a.back();
    for (auto& u : a) u = u_mul(u, lb);
    for (std::size_t i = 0; i < b.size(); ++i) {
      UPoly t = u_mul(la, b[i]);
      auto& dst = a[i + shift];
      if (dst.size() < t.size()) dst.resize(t.size(), Rational(0));
      for (std::size_t k = 0; k < t.size(); ++k) dst[k] -= t[k];
    }
    s_trim(a);
  }
  return a;
}

Poly gcd_no_monomial_factor(const Poly& a, const Poly& b) {
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (monic(a) == monic(b)) return monic(a);
  SPoly x = to_spoly(a);
  SPoly y = to_spoly(b);
  UPoly cg = u_gcd(s_content(x), s_content(y));
  x = s_primitive(std::move(x));
  y = s_primitive(std::move(y));
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) {
      // y is a unit after primitive-part extraction.
      x = {UPoly{Rational(1)}};
      break;
    }
    SPoly rem = s_prem(x, y);
    x = std::move(y);
    y = s_primitive(std::move(rem));
  }
  SPoly result = x;
  for (auto& u : result) u = u_mul(u, cg);
  return monic(from_spoly(result));
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly(1);
  Monomial ma = a.min_monomial();
  Monomial mb = b.min_monomial();
  Monomial m{std::min(ma.r, mb.r), std::min(ma.s, mb.s)};
  Poly monomial_part = Poly::monomial(m);
  if (a.is_monomial() || b.is_monomial()) return monomial_part;
  Poly rest = gcd_no_monomial_factor(a.divide_monomial(ma), b.divide_monomial(mb));
  return rest * monomial_part;
}

}  // namespace qsw
