#include "qsw/hecke.hpp"

#include <algorithm>
#include <numeric>

#include "qsw/analysis.hpp"
#include "qsw/error.hpp"
#include "qsw/linalg.hpp"
#include "qsw/parallel.hpp"
#include "qsw/rmatrix.hpp"

namespace qsw {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int x : w_) {
    if (x < 1 || x > size() || seen[static_cast<std::size_t>(x)])
      raise(ErrorCode::InvalidArgument, "not a permutation of 1.." + std::to_string(size()));
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> w(static_cast<std::size_t>(k));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(w);
}

Permutation Permutation::simple(int k, int i) { return identity(k).times_simple(i); }

std::vector<Permutation> Permutation::all(int k) {
  std::vector<Permutation> out;
  std::vector<int> w = identity(k).w_;
  do out.push_back(Permutation(w));
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < w_.size(); ++i)
    for (std::size_t j = i + 1; j < w_.size(); ++j)
      if (w_[i] > w_[j]) ++inv;
  return inv;
}

Permutation Permutation::inverse() const {
  std::vector<int> w(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) w[static_cast<std::size_t>(w_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(w);
}

Permutation Permutation::times_simple(int i) const {
  if (i < 1 || i >= size()) raise(ErrorCode::IndexOutOfRange, "no simple transposition s_" + std::to_string(i));
  Permutation out = *this;
  std::swap(out.w_[static_cast<std::size_t>(i - 1)], out.w_[static_cast<std::size_t>(i)]);
  return out;
}

Permutation Permutation::simple_times(int i) const {
  if (i < 1 || i >= size()) raise(ErrorCode::IndexOutOfRange, "no simple transposition s_" + std::to_string(i));
  Permutation out = *this;
  for (auto& x : out.w_) {
    if (x == i)
      x = i + 1;
    else if (x == i + 1)
      x = i;
  }
  return out;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> word;
  Permutation cur = *this;
  while (!cur.is_identity()) {
    Permutation inv = cur.inverse();
    for (int i = 1; i < size(); ++i)
      if (inv(i) > inv(i + 1)) {
        word.push_back(i);
        cur = cur.simple_times(i);
        break;
      }
  }
  return word;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string Permutation::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < w_.size(); ++i) s += (i ? "," : "") + std::to_string(w_[i]);
  return s + "]";
}

Permutation operator*(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) raise(ErrorCode::SizeMismatch, "permutations of different sizes");
  std::vector<int> w;
  for (int i = 1; i <= y.size(); ++i) w.push_back(x(y(i)));
  return Permutation(w);
}

Permutation from_word(int k, const std::vector<int>& word) {
  Permutation p = Permutation::identity(k);
  for (int j : word) p = p.times_simple(j);
  return p;
}

bool is_reduced(int k, const std::vector<int>& word) {
  return from_word(k, word).length() == static_cast<int>(word.size());
}

HeckeElement HeckeElement::unit(int k, const ParamSpec& p) { return basis(Permutation::identity(k), p); }

HeckeElement HeckeElement::basis(const Permutation& sigma, const ParamSpec& p) {
  HeckeElement h(sigma.size(), p);
  h.add(sigma, Scalar(1));
  return h;
}

HeckeElement HeckeElement::generator(int k, int i, const ParamSpec& p) {
  return basis(Permutation::simple(k, i), p);
}

Scalar HeckeElement::coefficient(const Permutation& sigma) const {
  auto it = c_.find(sigma);
  return it == c_.end() ? Scalar() : it->second;
}

void HeckeElement::add(const Permutation& sigma, const Scalar& c) {
  if (sigma.size() != k_) raise(ErrorCode::SizeMismatch, "permutation size differs from k");
  if (c.is_zero()) return;
  auto [it, fresh] = c_.try_emplace(sigma, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
  if (a.k_ != b.k_) raise(ErrorCode::SizeMismatch, "Hecke elements for different k");
  HeckeElement out = a;
  for (const auto& [s, c] : b.c_) out.add(s, c);
  return out;
}

HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) { return a + Scalar(-1) * b; }

HeckeElement operator*(const Scalar& c, const HeckeElement& a) {
  HeckeElement out(a.k_, a.p_);
  for (const auto& [s, x] : a.c_) out.add(s, c * x);
  return out;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) { return hecke_mul(a, b); }

std::string HeckeElement::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : c_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")*T" + s.str();
  }
  return out;
}

namespace {

HeckeElement times_generator(const HeckeElement& a, int i) {
  const ParamSpec& p = a.param();
  HeckeElement out(a.k(), p);
  const Scalar sr = p.s() - p.r();
  const Scalar rs = p.r() * p.s();
  for (const auto& [sigma, c] : a.terms()) {
    Permutation next = sigma.times_simple(i);
    if (sigma(i) < sigma(i + 1)) {
      out.add(next, c);
    } else {
      out.add(sigma, c * sr);
      out.add(next, c * rs);
    }
  }
  return out;
}

}  // namespace

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
  if (a.k() != b.k()) raise(ErrorCode::SizeMismatch, "Hecke elements for different k");
  HeckeElement out(a.k(), a.param());
  for (const auto& [tau, c] : b.terms()) {
    HeckeElement part = a;
    for (int j : tau.reduced_word()) part = times_generator(part, j);
    out = out + c * part;
  }
  return out;
}

HeckeElement word_product(int k, const std::vector<int>& word, const ParamSpec& p) {
  HeckeElement out = HeckeElement::unit(k, p);
  for (int j : word) out = times_generator(out, j);
  return out;
}

HeckeElement t_sigma(const Permutation& sigma, const ParamSpec& p) {
  return word_product(sigma.size(), sigma.reduced_word(), p);
}

HeckeRep::HeckeRep(int n, int k, const ParamSpec& p) : n_(n), k_(k), p_(p) {
  if (k < 2) raise(ErrorCode::InvalidArgument, "Hecke representation needs k >= 2");
  const Matrix r = r_vv(n, p);
  for (int i = 1; i < k; ++i) gens_.push_back(p.s() * place_on_factors(r, n, k, i));
}

Matrix HeckeRep::image(const Permutation& sigma) const {
  if (sigma.size() != k_) raise(ErrorCode::SizeMismatch, "permutation size differs from k");
  int dim = 1;
  for (int t = 0; t < k_; ++t) dim *= n_;
  Matrix out = Matrix::identity(dim);
  for (int j : sigma.reduced_word()) out = out * generator(j);
  return out;
}

Matrix HeckeRep::image(const HeckeElement& x) const {
  int dim = 1;
  for (int t = 0; t < k_; ++t) dim *= n_;
  Matrix out(dim, dim);
  for (const auto& [sigma, c] : x.terms()) out = out + c * image(sigma);
  return out;
}

RSigma r_sigma(int n, const Permutation& sigma, const std::vector<int>& target, const ParamSpec& p) {
  const int k = sigma.size();
  if (static_cast<int>(target.size()) != k) raise(ErrorCode::PreconditionViolated, "target length differs from k");
  std::vector<int> sorted = target;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 1 || sorted.back() > n)
    raise(ErrorCode::PreconditionViolated, "target needs distinct indices in 1.." + std::to_string(n));
  int dim = 1;
  for (int t = 0; t < k; ++t) dim *= n;
  const Matrix r = r_vv(n, p);
  RSigma out{Matrix::identity(dim), HeckeElement::unit(k, p)};
  if (k < 2) return out;
  const Matrix id = Matrix::identity(dim);
  const Scalar rinv = p.rs_power(-1, 0);
  const Scalar rsinv = p.rs_power(-1, -1);
  std::vector<int> cur = target;
  for (int j : sigma.reduced_word()) {
    Matrix rj = place_on_factors(r, n, k, j);
    HeckeElement step(k, p);
    Matrix m;
    if (cur[static_cast<std::size_t>(j - 1)] < cur[static_cast<std::size_t>(j)]) {
      m = rinv * rj;
      step.add(Permutation::simple(k, j), rsinv);
    } else {
      m = p.s() * rj + (p.r() - p.s()) * id;
      step.add(Permutation::simple(k, j), Scalar(1));
      step.add(Permutation::identity(k), p.r() - p.s());
    }
    out.matrix = m * out.matrix;
    out.element = step * out.element;
    std::swap(cur[static_cast<std::size_t>(j - 1)], cur[static_cast<std::size_t>(j)]);
  }
  return out;
}

SchurWeylReport schur_weyl_check(int n, int k, const ParamSpec& p) {
  if (k < 2) raise(ErrorCode::InvalidArgument, "Schur-Weyl check needs k >= 2");
  SchurWeylReport rep;
  rep.n = n;
  rep.k = k;
  rep.params = p.str();
  auto m = tensor_power(natural_module(n, p), k);
  std::map<Weight, int> ids;
  std::vector<int> blocks;
  for (const auto& t : *m.tags) blocks.push_back(ids.try_emplace(t, static_cast<int>(ids.size())).first->second);
  auto cent = commutant(m.generators(), &blocks);
  rep.centralizer_dim = cent.dimension();
  rep.blocked = cent.blocked;

  HeckeRep rho(n, k, p);
  auto perms = Permutation::all(k);
  std::vector<Matrix> images(perms.size());
  parallel_for(perms.size(), [&](std::size_t i) { images[i] = rho.image(perms[i]); });
  const int d = m.dim();
  RowReducer red(d * d);
  for (const auto& x : images) {
    SparseRow row;
    for (int i = 0; i < d; ++i)
      for (const auto& en : x.row(i)) row.push_back({i * d + en.col, en.value});
    red.add(std::move(row));
  }
  rep.hecke_image_dim = red.rank();
  rep.k_factorial = 1;
  for (int t = 2; t <= k; ++t) rep.k_factorial *= t;
  rep.surjective = rep.hecke_image_dim == rep.centralizer_dim;
  rep.isomorphic = rep.surjective && rep.hecke_image_dim == rep.k_factorial;
  return rep;
}

}  // namespace qsw
