#include "torex/polynomial.hpp"

namespace torex {

namespace {

using DynMatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

DynMatQ vandermonde_inverse(const std::vector<Rational>& nodes) {
  const int n = static_cast<int>(nodes.size());
  DynMatQ V(n, n);
  for (int r = 0; r < n; ++r) {
    Rational p(1);
    for (int c = 0; c < n; ++c) {
      V(r, c) = p;
      p *= nodes[r];
    }
  }
  Eigen::FullPivLU<DynMatQ> lu(V);
  if (!lu.isInvertible()) throw std::invalid_argument("interpolation nodes must be distinct");
  return lu.inverse();
}

}  // namespace

UniPoly interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values) {
  if (nodes.size() != values.size() || nodes.empty())
    throw std::invalid_argument("interpolation needs matching node/value lists");
  DynMatQ Vi = vandermonde_inverse(nodes);
  const int n = static_cast<int>(nodes.size());
  std::vector<Rational> c(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i] += Vi(i, j) * values[j];
  return UniPoly(std::move(c));
}

Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> interpolate_bipoly(
    const std::vector<Rational>& s_nodes, const std::vector<Rational>& t_nodes,
    const Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>& values) {
  DynMatQ Vs = vandermonde_inverse(s_nodes);
  DynMatQ Vt = vandermonde_inverse(t_nodes);
  return Vs * values * Vt.transpose();
}

Rational BiPoly33::d_s(const Rational& s, const Rational& t) const {
  Rational r(0), tp(1);
  for (int j = 0; j < 4; ++j) {
    r += (c(1, j) + 2 * c(2, j) * s + 3 * c(3, j) * s * s) * tp;
    tp *= t;
  }
  return r;
}

Rational BiPoly33::d_t(const Rational& s, const Rational& t) const {
  Rational r(0), sp(1);
  for (int i = 0; i < 4; ++i) {
    r += (c(i, 1) + 2 * c(i, 2) * t + 3 * c(i, 3) * t * t) * sp;
    sp *= s;
  }
  return r;
}

Rational BiPoly33::d_ss(const Rational& s, const Rational& t) const {
  Rational r(0), tp(1);
  for (int j = 0; j < 4; ++j) {
    r += (2 * c(2, j) + 6 * c(3, j) * s) * tp;
    tp *= t;
  }
  return r;
}

Rational BiPoly33::d_tt(const Rational& s, const Rational& t) const {
  Rational r(0), sp(1);
  for (int i = 0; i < 4; ++i) {
    r += (2 * c(i, 2) + 6 * c(i, 3) * t) * sp;
    sp *= s;
  }
  return r;
}

Rational BiPoly33::d_st(const Rational& s, const Rational& t) const {
  Rational r(0);
  for (int i = 1; i < 4; ++i)
    for (int j = 1; j < 4; ++j) {
      Rational sp(1), tp(1);
      for (int k = 1; k < i; ++k) sp *= s;
      for (int k = 1; k < j; ++k) tp *= t;
      r += Rational(i) * Rational(j) * c(i, j) * sp * tp;
    }
  return r;
}

}  // namespace torex
