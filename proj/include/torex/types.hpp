#pragma once

#include <Eigen/Dense>

#include "torex/rational.hpp"

namespace torex {

template <class S>
using Vec2 = Eigen::Matrix<S, 2, 1>;
template <class S>
using Mat2 = Eigen::Matrix<S, 2, 2>;

using Vec2q = Vec2<Rational>;
using Mat2q = Mat2<Rational>;
using Vec2z = Vec2<Integer>;
using Mat2z = Mat2<Integer>;
using Vec2d = Eigen::Vector2d;
using Mat2d = Eigen::Matrix2d;

using Vec3q = Eigen::Matrix<Rational, 3, 1>;
using Mat3q = Eigen::Matrix<Rational, 3, 3>;

// Affine function a + <l, x> on the plane.
template <class S>
struct Affine {
  Vec2<S> linear = Vec2<S>::Zero();
  S constant = S(0);

  S operator()(const Vec2<S>& x) const { return linear.dot(x) + constant; }

  Affine operator+(const Affine& o) const { return {linear + o.linear, constant + o.constant}; }
  Affine operator-(const Affine& o) const { return {linear - o.linear, constant - o.constant}; }
  Affine operator*(const S& c) const { return {Vec2<S>(linear * c), constant * c}; }
  bool operator==(const Affine& o) const { return linear == o.linear && constant == o.constant; }
};

using AffineQ = Affine<Rational>;
using AffineD = Affine<double>;

// Affine function a + b z on the line (facet subproblems, interval polytopes).
template <class S>
struct Affine1 {
  S slope = S(0);
  S constant = S(0);
  S operator()(const S& z) const { return slope * z + constant; }
  bool operator==(const Affine1& o) const { return slope == o.slope && constant == o.constant; }
};

using Affine1Q = Affine1<Rational>;

inline AffineD to_double(const AffineQ& a) {
  return {Vec2d(to_double(a.linear[0]), to_double(a.linear[1])), to_double(a.constant)};
}

inline Vec2d to_double(const Vec2q& v) { return Vec2d(to_double(v[0]), to_double(v[1])); }

}  // namespace torex
