#include "qsw/weights.hpp"

#include <algorithm>
#include <functional>

#include "qsw/error.hpp"

namespace qsw {

namespace {

void require_same_rank(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank())
    raise(ErrorCode::RankMismatch, "weights " + a.str() + " and " + b.str() + " have different ranks");
}

}  // namespace

Weight::Weight(std::vector<int> coords) : c_(std::move(coords)) {
  if (c_.empty()) raise(ErrorCode::InvalidRank, "weight of rank 0");
}

Weight Weight::epsilon(int n, int i) {
  if (i < 1 || i > n) raise(ErrorCode::IndexOutOfRange, "epsilon index " + std::to_string(i));
  Weight w = zero(n);
  w.c_[static_cast<std::size_t>(i - 1)] = 1;
  return w;
}

Weight Weight::alpha(int n, int j) {
  if (j < 1 || j >= n) raise(ErrorCode::IndexOutOfRange, "simple root index " + std::to_string(j));
  return epsilon(n, j) - epsilon(n, j + 1);
}

int Weight::total() const {
  int t = 0;
  for (int x : c_) t += x;
  return t;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (int& x : w.c_) x = -x;
  return w;
}

Weight operator+(const Weight& a, const Weight& b) {
  require_same_rank(a, b);
  Weight w = a;
  for (std::size_t i = 0; i < w.c_.size(); ++i) w.c_[i] += b.c_[i];
  return w;
}

Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }

Weight operator*(int k, const Weight& a) {
  Weight w = a;
  for (int& x : w.c_) x *= k;
  return w;
}

std::string Weight::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c_[i]);
  }
  return out + ")";
}

bool weight_before(const Weight& a, const Weight& b) {
  if (a.total() != b.total()) return a.total() > b.total();
  return a.coords() > b.coords();
}

int inner(const Weight& a, const Weight& b) {
  require_same_rank(a, b);
  int t = 0;
  for (int i = 1; i <= a.rank(); ++i) t += a[i] * b[i];
  return t;
}

Weight two_rho(int n) {
  if (n < 1) raise(ErrorCode::InvalidRank, "rank must be positive");
  std::vector<int> c;
  for (int j = 1; j <= n; ++j) c.push_back(n + 1 - 2 * j);
  return Weight(std::move(c));
}

bool is_dominant(const Weight& w) {
  for (int i = 1; i < w.rank(); ++i)
    if (w[i] < w[i + 1]) return false;
  return true;
}

bool dominance_leq(const Weight& mu, const Weight& lam) {
  require_same_rank(mu, lam);
  std::vector<int> c = to_alpha_coords(lam - mu);
  for (int x : c)
    if (x < 0) return false;
  return c.back() == 0;
}

Weight reflect(const Weight& w, int i) {
  if (i < 1 || i >= w.rank()) raise(ErrorCode::IndexOutOfRange, "reflection index " + std::to_string(i));
  std::vector<int> c = w.coords();
  std::swap(c[static_cast<std::size_t>(i - 1)], c[static_cast<std::size_t>(i)]);
  return Weight(std::move(c));
}

GScalar g_exponent(const Weight& w) { return GScalar::from_twice(inner(w + two_rho(w.rank()), w)); }

std::vector<int> to_alpha_coords(const Weight& w) {
  std::vector<int> c;
  int acc = 0;
  for (int x : w.coords()) {
    acc += x;
    c.push_back(acc);
  }
  return c;
}

Weight from_alpha_coords(const std::vector<int>& c) {
  std::vector<int> w;
  int prev = 0;
  for (int x : c) {
    w.push_back(x - prev);
    prev = x;
  }
  return Weight(std::move(w));
}

// ---------------------------------------------------------------- characters

TorusCharacter TorusCharacter::counit(int n) {
  return {std::vector<Scalar>(static_cast<std::size_t>(n), Scalar(1)),
          std::vector<Scalar>(static_cast<std::size_t>(n), Scalar(1))};
}

Scalar TorusCharacter::omega(int j) const {
  return a[static_cast<std::size_t>(j - 1)] * b[static_cast<std::size_t>(j)];
}

Scalar TorusCharacter::omega_prime(int j) const {
  return a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(j - 1)];
}

bool TorusCharacter::is_counit() const { return *this == counit(rank()); }

bool TorusCharacter::admits_one_dim() const {
  for (int j = 1; j < rank(); ++j)
    if (omega(j) != omega_prime(j)) return false;
  return true;
}

TorusCharacter TorusCharacter::inverse() const {
  TorusCharacter out = *this;
  for (auto& x : out.a) x = x.inverse();
  for (auto& x : out.b) x = x.inverse();
  return out;
}

TorusCharacter operator*(const TorusCharacter& x, const TorusCharacter& y) {
  if (x.rank() != y.rank()) raise(ErrorCode::RankMismatch, "characters of different ranks");
  TorusCharacter out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) {
    out.a[i] *= y.a[i];
    out.b[i] *= y.b[i];
  }
  return out;
}

std::string TorusCharacter::str() const {
  auto list = [](const std::vector<Scalar>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ", ";
      out += v[i].str();
    }
    return out + "]";
  };
  return "a=" + list(a) + " b=" + list(b);
}

TorusCharacter hat_character(const Weight& w, const ParamSpec& p) {
  TorusCharacter chi;
  for (int x : w.coords()) {
    chi.a.push_back(p.rs_power(x, 0));
    chi.b.push_back(p.rs_power(0, x));
  }
  return chi;
}

Scalar torus_pairing(const Weight& mu, const Weight& lam, const ParamSpec& p) {
  require_same_rank(mu, lam);
  const int n = mu.rank();
  std::vector<int> cm = to_alpha_coords(mu);
  std::vector<int> cl = to_alpha_coords(lam);
  // Exponents of r and s in the generator pairing (omega'_i, omega_j), where
  // index n stands for b_n in the first slot and a_n in the second.
  auto gen = [&](int i, int j) -> std::pair<int, int> {
    if (i < n && j < n) {
      Weight ai = Weight::alpha(n, i);
      return {inner(Weight::epsilon(n, j), ai), inner(Weight::epsilon(n, j + 1), ai)};
    }
    if (i == n && j == n) return {0, 0};
    if (i == n) return {0, -inner(Weight::epsilon(n, n), Weight::alpha(n, j))};
    return {inner(Weight::epsilon(n, n), Weight::alpha(n, i)), 0};
  };
  int er = 0;
  int es = 0;
  for (int i = 1; i <= n; ++i) {
    if (cm[static_cast<std::size_t>(i - 1)] == 0) continue;
    for (int j = 1; j <= n; ++j) {
      int m = cm[static_cast<std::size_t>(i - 1)] * cl[static_cast<std::size_t>(j - 1)];
      if (m == 0) continue;
      auto [gr, gs] = gen(i, j);
      er += m * gr;
      es += m * gs;
    }
  }
  return p.rs_power(er, es);
}

std::vector<Weight> dominant_weights(int n, int max_total) {
  std::vector<Weight> out;
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  std::function<void(int, int, int)> rec = [&](int pos, int cap, int left) {
    if (pos == n) {
      out.emplace_back(c);
      return;
    }
    for (int x = 0; x <= std::min(cap, left); ++x) {
      c[static_cast<std::size_t>(pos)] = x;
      rec(pos + 1, x, left - x);
    }
  };
  rec(0, max_total, max_total);
  std::sort(out.begin(), out.end(), weight_before);
  return out;
}

std::vector<Weight> dominant_below(const Weight& lam) {
  const int n = lam.rank();
  const int lo = lam[n];
  const int hi = lam[1];
  std::vector<Weight> out;
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int cap) {
    if (pos == n) {
      Weight mu(c);
      if (dominance_leq(mu, lam)) out.push_back(mu);
      return;
    }
    for (int x = lo; x <= cap; ++x) {
      c[static_cast<std::size_t>(pos)] = x;
      rec(pos + 1, x);
    }
  };
  rec(0, hi);
  std::sort(out.begin(), out.end(), weight_before);
  return out;
}

}  // namespace qsw
