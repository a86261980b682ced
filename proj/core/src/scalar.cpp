#include "qsw/scalar.hpp"

#include <cctype>
#include <utility>

#include "qsw/error.hpp"

namespace qsw {

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) raise(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den.is_constant()) {
    num_ = num.scaled(1 / den.constant_value());
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num, den);
  if (!g.is_one()) {
    num = divide_exact(num, g);
    den = divide_exact(den, g);
  }
  Rational lead = den.leading().coeff;
  if (lead != 1) {
    Rational inv = 1 / lead;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFunc RatFunc::laurent_monomial(int a, int b, const Rational& c) {
  Poly num = Poly::monomial({a > 0 ? a : 0, b > 0 ? b : 0}, c);
  Poly den = Poly::monomial({a < 0 ? -a : 0, b < 0 ? -b : 0});
  return RatFunc(std::move(num), std::move(den), Canonical{});
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero");
  Rational inv = 1 / num_.leading().coeff;
  return RatFunc(den_.scaled(inv), num_.scaled(inv), Canonical{});
}

Rational RatFunc::evaluate(const Rational& r, const Rational& s) const {
  Rational d = den_.evaluate(r, s);
  if (sgn(d) == 0) raise(ErrorCode::DivisionByZero, "denominator " + den_.str() + " vanishes at specialization");
  return num_.evaluate(r, s) / d;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_, Poly(1), RatFunc::Canonical{});
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  // With g = gcd(b1, b2) only g can share factors with the new numerator.
  Poly g = gcd(a.den_, b.den_);
  Poly ad = g.is_one() ? a.den_ : divide_exact(a.den_, g);
  Poly bd = g.is_one() ? b.den_ : divide_exact(b.den_, g);
  Poly num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return {};
  Poly h = g.is_one() ? Poly(1) : gcd(num, g);
  if (!h.is_one()) {
    num = divide_exact(num, h);
    g = divide_exact(g, h);
  }
  Poly den = ad * bd * g;
  Rational lead = den.leading().coeff;
  if (lead != 1) {
    Rational inv = 1 / lead;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return RatFunc(std::move(num), std::move(den), RatFunc::Canonical{});
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_, Poly(1), RatFunc::Canonical{});
  Poly g1 = gcd(a.num_, b.den_);
  Poly g2 = gcd(b.num_, a.den_);
  Poly an = g1.is_one() ? a.num_ : divide_exact(a.num_, g1);
  Poly bd = g1.is_one() ? b.den_ : divide_exact(b.den_, g1);
  Poly bn = g2.is_one() ? b.num_ : divide_exact(b.num_, g2);
  Poly ad = g2.is_one() ? a.den_ : divide_exact(a.den_, g2);
  // Quotients of monic polynomials by monic divisors stay monic.
  return RatFunc(an * bn, ad * bd, RatFunc::Canonical{});
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  auto wrap_num = [](const Poly& p) { return p.size() > 1 ? "(" + p.str() + ")" : p.str(); };
  auto wrap_den = [](const Poly& p) {
    bool single_power = p.is_monomial() && (p.leading().mono.r == 0 || p.leading().mono.s == 0);
    return single_power ? p.str() : "(" + p.str() + ")";
  };
  return wrap_num(num_) + "/" + wrap_den(den_);
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(RatFunc f) {
  if (f.is_constant()) {
    v_ = f.num().constant_value();
  } else {
    v_ = std::move(f);
  }
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<Rational>(&v_)) return sgn(*q) == 0;
  return false;
}

bool Scalar::is_one() const {
  if (auto* q = std::get_if<Rational>(&v_)) return *q == 1;
  return false;
}

RatFunc Scalar::to_ratfunc() const {
  if (auto* q = std::get_if<Rational>(&v_)) return RatFunc(Poly(*q));
  return std::get<RatFunc>(v_);
}

Scalar Scalar::inverse() const {
  if (auto* q = std::get_if<Rational>(&v_)) {
    if (sgn(*q) == 0) raise(ErrorCode::DivisionByZero, "inverse of zero");
    return Scalar(Rational(1 / *q));
  }
  return Scalar(std::get<RatFunc>(v_).inverse());
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar result(1);
  Scalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Rational Scalar::evaluate(const Rational& r0, const Rational& s0) const {
  if (auto* q = std::get_if<Rational>(&v_)) return *q;
  return std::get<RatFunc>(v_).evaluate(r0, s0);
}

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<Rational>(&v_)) return Scalar(Rational(-*q));
  return Scalar(-std::get<RatFunc>(v_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(v_) += o.rational();
  } else {
    *this = Scalar(to_ratfunc() + o.to_ratfunc());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(v_) -= o.rational();
  } else {
    *this = Scalar(to_ratfunc() - o.to_ratfunc());
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(v_) *= o.rational();
  } else if (is_zero() || o.is_zero()) {
    v_ = Rational(0);
  } else if (o.is_one()) {
    // no-op
  } else if (is_one()) {
    *this = o;
  } else {
    *this = Scalar(to_ratfunc() * o.to_ratfunc());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) raise(ErrorCode::DivisionByZero, "division by zero scalar");
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(v_) /= o.rational();
    return *this;
  }
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

std::string Scalar::str() const {
  if (auto* q = std::get_if<Rational>(&v_)) return q->get_str();
  return std::get<RatFunc>(v_).str();
}

// ---------------------------------------------------------------- ParamSpec

namespace {

Rational rational_pow(const Rational& x, int k) {
  if (k < 0) return rational_pow(Rational(1 / x), -k);
  Rational out = 1;
  for (int i = 0; i < k; ++i) out *= x;
  return out;
}

}  // namespace

ParamSpec ParamSpec::symbolic() { return ParamSpec{}; }

ParamSpec ParamSpec::specialized(const Rational& r0, const Rational& s0) {
  if (sgn(r0) == 0 || sgn(s0) == 0) raise(ErrorCode::InvalidParams, "r and s must be nonzero");
  if (r0 == s0) raise(ErrorCode::InvalidParams, "r must differ from s");
  if (r0 == -s0) raise(ErrorCode::InvalidParams, "r/s = -1 is a root of unity");
  ParamSpec p;
  p.symbolic_ = false;
  p.r0_ = r0;
  p.s0_ = s0;
  return p;
}

ParamSpec ParamSpec::nongeneric(const Rational& r0, const Rational& s0) {
  if (sgn(r0) == 0 || sgn(s0) == 0) raise(ErrorCode::InvalidParams, "r and s must be nonzero");
  if (r0 == s0) raise(ErrorCode::InvalidParams, "r must differ from s");
  ParamSpec p;
  p.symbolic_ = false;
  p.generic_ = r0 != -s0;
  p.r0_ = r0;
  p.s0_ = s0;
  return p;
}

Scalar ParamSpec::rs_power(int a, int b) const {
  if (symbolic_) return Scalar(RatFunc::laurent_monomial(a, b));
  return Scalar(Rational(rational_pow(r0_, a) * rational_pow(s0_, b)));
}

Scalar ParamSpec::specialize(const Scalar& x) const {
  if (symbolic_ || x.is_rational()) return x;
  return Scalar(x.evaluate(r0_, s0_));
}

bool ParamSpec::s_equals_minus_r() const { return !symbolic_ && s0_ == -r0_; }

std::string ParamSpec::str() const {
  if (symbolic_) return "symbolic";
  return "r=" + r0_.get_str() + ",s=" + s0_.get_str();
}

Scalar qint(int k, const ParamSpec& p) {
  if (k < 1) raise(ErrorCode::InvalidArgument, "qint requires k >= 1, got " + std::to_string(k));
  if (p.is_symbolic()) {
    std::vector<Poly::Term> terms;
    for (int i = 0; i < k; ++i) terms.push_back({{k - 1 - i, i}, Rational(1)});
    return Scalar(RatFunc(Poly::from_terms(std::move(terms))));
  }
  Scalar acc(0);
  for (int i = 0; i < k; ++i) acc += p.rs_power(k - 1 - i, i);
  return acc;
}

// ---------------------------------------------------------------- GScalar

std::string GScalar::exponent_str() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

Scalar materialize(const GScalar& g, const ParamSpec& p) {
  long twice = g.twice_exponent();
  if (twice % 2 == 0) {
    int e = static_cast<int>(twice / 2);
    return p.rs_power(e, -e);
  }
  if (p.is_symbolic())
    raise(ErrorCode::HalfPowerUnavailable, "(r/s)^(" + g.exponent_str() + ") needs a square root of r/s");
  Rational ratio = p.r_value() / p.s_value();
  if (sgn(ratio) < 0 || mpz_perfect_square_p(ratio.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(ratio.get_den_mpz_t()) == 0)
    raise(ErrorCode::HalfPowerUnavailable, "r/s = " + ratio.get_str() + " is not a rational square");
  mpz_class num_root;
  mpz_class den_root;
  mpz_sqrt(num_root.get_mpz_t(), ratio.get_num_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), ratio.get_den_mpz_t());
  Rational root(num_root, den_root);
  root.canonicalize();
  return Scalar(rational_pow(root, static_cast<int>(twice)));
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    raise(ErrorCode::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    while (true) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = factor();
    while (true) {
      if (accept('*')) {
        v *= factor();
      } else if (accept('/')) {
        Scalar d = factor();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Scalar b = base();
    if (accept('^')) {
      bool negative = accept('-');
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      if (negative && b.is_zero()) fail("negative power of zero");
      b = b.pow(negative ? -e : e);
    }
    return b;
  }

  Scalar base() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 'r' || c == 's') {
      ++pos_;
      return Scalar(RatFunc(c == 'r' ? Poly::var_r() : Poly::var_s()));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Scalar(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return Parser(text).parse(); }

Rational parse_rational(std::string_view text) {
  Scalar v = parse_scalar(text);
  if (!v.is_rational()) raise(ErrorCode::ParseError, "expected a rational constant, got '" + std::string(text) + "'");
  return v.rational();
}

}  // namespace qsw
