#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "torex/types.hpp"

namespace torex {

struct DegreeTooHigh : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense univariate polynomial, coefficients in ascending degree order.
// Trailing zeros are trimmed so degree() is exact.
template <class S>
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly1 constant(const S& v) { return Poly1(std::vector<S>{v}); }
  static Poly1 linear(const S& a0, const S& a1) { return Poly1(std::vector<S>{a0, a1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<S>& coeffs() const { return c_; }
  S coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : S(0); }

  S operator()(const S& z) const {
    S r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * z + *it;
    return r;
  }

  template <class T>
  T eval_as(const T& z) const {
    T r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * z + static_cast<T>(*it);
    return r;
  }

  Poly1 derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<S> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * S(static_cast<int>(k));
    return Poly1(std::move(d));
  }

  // Exact antiderivative with zero constant term.
  Poly1 antiderivative() const {
    std::vector<S> d(c_.size() + 1, S(0));
    for (size_t k = 0; k < c_.size(); ++k) d[k + 1] = c_[k] / S(static_cast<int>(k + 1));
    return Poly1(std::move(d));
  }

  Poly1 operator+(const Poly1& o) const {
    std::vector<S> r(std::max(c_.size(), o.c_.size()), S(0));
    for (size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
    return Poly1(std::move(r));
  }
  Poly1 operator-(const Poly1& o) const { return *this + o * S(-1); }
  Poly1 operator*(const S& s) const {
    std::vector<S> r = c_;
    for (auto& x : r) x *= s;
    return Poly1(std::move(r));
  }
  Poly1 operator*(const Poly1& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<S> r(c_.size() + o.c_.size() - 1, S(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly1(std::move(r));
  }
  bool operator==(const Poly1& o) const { return c_ == o.c_; }

  // Euclidean remainder (exact over a field).
  Poly1 rem(const Poly1& d) const {
    Poly1 r = *this;
    while (!r.is_zero() && r.degree() >= d.degree()) {
      S f = r.c_.back() / d.c_.back();
      int shift = r.degree() - d.degree();
      std::vector<S> sub(shift + d.c_.size(), S(0));
      for (size_t k = 0; k < d.c_.size(); ++k) sub[k + shift] = d.c_[k] * f;
      r = r - Poly1(std::move(sub));
    }
    return r;
  }

  // p(a z + b): exact affine substitution.
  Poly1 compose_affine(const S& a, const S& b) const {
    Poly1 r, pw = Poly1::constant(S(1)), arg = Poly1(std::vector<S>{b, a});
    for (size_t k = 0; k < c_.size(); ++k) {
      r = r + pw * c_[k];
      pw = pw * arg;
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == S(0)) c_.pop_back();
  }
  std::vector<S> c_;
};

using UniPoly = Poly1<Rational>;
using UniPolyD = Poly1<double>;

inline UniPolyD to_double(const UniPoly& p) {
  std::vector<double> c(p.coeffs().size());
  for (size_t k = 0; k < c.size(); ++k) c[k] = to_double(p.coeffs()[k]);
  return UniPolyD(std::move(c));
}

// Sparse bivariate polynomial over exact rationals, total degree capped at 8:
// every integrand produced by the pipeline fits (affine x affine x cubic pieces).
class Poly2 {
 public:
  static constexpr int kMaxDegree = 8;
  using Key = std::pair<int, int>;

  Poly2() = default;
  static Poly2 constant(const Rational& v) {
    Poly2 p;
    p.add(0, 0, v);
    return p;
  }
  static Poly2 monomial(int i, int j, const Rational& v = Rational(1)) {
    Poly2 p;
    p.add(i, j, v);
    return p;
  }
  static Poly2 from_affine(const AffineQ& a) {
    Poly2 p;
    p.add(0, 0, a.constant);
    p.add(1, 0, a.linear[0]);
    p.add(0, 1, a.linear[1]);
    return p;
  }

  void add(int i, int j, const Rational& v) {
    if (v == 0) return;
    if (i + j > kMaxDegree) throw DegreeTooHigh("total degree above cap");
    auto key = Key{i, j};
    auto it = t_.find(key);
    if (it == t_.end()) {
      t_.emplace(key, v);
    } else {
      it->second += v;
      if (it->second == 0) t_.erase(it);
    }
  }

  const std::map<Key, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int total_degree() const {
    int d = 0;
    for (auto& [k, v] : t_) d = std::max(d, k.first + k.second);
    return d;
  }

  Rational operator()(const Vec2q& x) const {
    Rational r(0);
    for (auto& [k, v] : t_) r += v * pow_r(x[0], k.first) * pow_r(x[1], k.second);
    return r;
  }

  Poly2 operator+(const Poly2& o) const {
    Poly2 r = *this;
    for (auto& [k, v] : o.t_) r.add(k.first, k.second, v);
    return r;
  }
  Poly2 operator-(const Poly2& o) const { return *this + o * Rational(-1); }
  Poly2 operator*(const Rational& s) const {
    Poly2 r;
    if (s == 0) return r;
    r.t_ = t_;
    for (auto& [k, v] : r.t_) v *= s;
    return r;
  }
  Poly2 operator*(const Poly2& o) const {
    Poly2 r;
    for (auto& [ka, va] : t_)
      for (auto& [kb, vb] : o.t_) r.add(ka.first + kb.first, ka.second + kb.second, va * vb);
    return r;
  }
  bool operator==(const Poly2& o) const { return t_ == o.t_; }

  // p(Ax + b): exact affine substitution, used by unimodular-invariance checks.
  Poly2 compose_affine(const Mat2q& A, const Vec2q& b) const {
    Poly2 gx, gy;
    gx.add(0, 0, b[0]);
    gx.add(1, 0, A(0, 0));
    gx.add(0, 1, A(0, 1));
    gy.add(0, 0, b[1]);
    gy.add(1, 0, A(1, 0));
    gy.add(0, 1, A(1, 1));
    Poly2 r;
    for (auto& [k, v] : t_) {
      Poly2 term = Poly2::constant(v);
      for (int i = 0; i < k.first; ++i) term = term * gx;
      for (int j = 0; j < k.second; ++j) term = term * gy;
      r = r + term;
    }
    return r;
  }

  // restriction to the segment a + t*w, exact univariate in t
  UniPoly restrict_segment(const Vec2q& a, const Vec2q& w) const {
    UniPoly gx = UniPoly::linear(a[0], w[0]);
    UniPoly gy = UniPoly::linear(a[1], w[1]);
    UniPoly r;
    for (auto& [k, v] : t_) {
      UniPoly term = UniPoly::constant(v);
      for (int i = 0; i < k.first; ++i) term = term * gx;
      for (int j = 0; j < k.second; ++j) term = term * gy;
      r = r + term;
    }
    return r;
  }

 private:
  static Rational pow_r(const Rational& x, int n) {
    Rational r(1);
    for (int i = 0; i < n; ++i) r *= x;
    return r;
  }
  std::map<Key, Rational> t_;
};

// Exact piecewise polynomial on [0, c_max]; continuity across breakpoints is a
// class invariant checked by validate().
struct PiecewisePoly1 {
  std::vector<Rational> breakpoints;  // increasing, size = pieces.size() + 1
  std::vector<UniPoly> pieces;

  Rational operator()(const Rational& c) const {
    if (pieces.empty()) throw std::runtime_error("empty piecewise polynomial");
    size_t i = 0;
    while (i + 1 < pieces.size() && c > breakpoints[i + 1]) ++i;
    return pieces[i](c);
  }

  bool validate() const {
    if (breakpoints.size() != pieces.size() + 1) return false;
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i)
      if (!(breakpoints[i] < breakpoints[i + 1])) return false;
    for (size_t i = 0; i + 1 < pieces.size(); ++i)
      if (pieces[i](breakpoints[i + 1]) != pieces[i + 1](breakpoints[i + 1])) return false;
    return true;
  }
};

// Exact interpolation of a univariate polynomial of degree <= n from n+1
// samples (Vandermonde solve with the rational scalar type).
UniPoly interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values);

// Bidegree (m,n) interpolation on a tensor grid; result(i,j) multiplies s^i t^j.
Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> interpolate_bipoly(
    const std::vector<Rational>& s_nodes, const std::vector<Rational>& t_nodes,
    const Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>& values);

// Polynomial of bidegree (3,3) in the crease parameters (s,t).
struct BiPoly33 {
  Eigen::Matrix<Rational, 4, 4> c = Eigen::Matrix<Rational, 4, 4>::Zero();

  Rational operator()(const Rational& s, const Rational& t) const {
    Rational r(0), sp(1);
    for (int i = 0; i < 4; ++i) {
      Rational tp(1);
      for (int j = 0; j < 4; ++j) {
        r += c(i, j) * sp * tp;
        tp *= t;
      }
      sp *= s;
    }
    return r;
  }

  Rational d_s(const Rational& s, const Rational& t) const;
  Rational d_t(const Rational& s, const Rational& t) const;
  Rational d_ss(const Rational& s, const Rational& t) const;
  Rational d_tt(const Rational& s, const Rational& t) const;
  Rational d_st(const Rational& s, const Rational& t) const;
  Rational hessian_det(const Rational& s, const Rational& t) const {
    return d_ss(s, t) * d_tt(s, t) - d_st(s, t) * d_st(s, t);
  }
};

}  // namespace torex
