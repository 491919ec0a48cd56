#include "torex/moments.hpp"

namespace torex {

namespace {

const Integer kFactorial[] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880, 3628800, 39916800};

Rational simplex_monomial(int m, int n) {
  // int over {u,v >= 0, u+v <= 1} of u^m v^n = m! n! / (m+n+2)!
  return Rational(kFactorial[m] * kFactorial[n], kFactorial[m + n + 2]);
}

Rational triangle_integral(const Vec2q& a, const Vec2q& b, const Vec2q& c, const Poly2& f) {
  Vec2q u = b - a, v = c - a;
  Rational J = u[0] * v[1] - u[1] * v[0];  // signed; CCW fans are nonnegative
  if (J == 0) return Rational(0);
  Mat2q A;
  A.col(0) = u;
  A.col(1) = v;
  Poly2 g = f.compose_affine(A, a);
  Rational total(0);
  for (const auto& [k, coeff] : g.terms()) total += coeff * simplex_monomial(k.first, k.second);
  return total * J;
}

}  // namespace

Rational integrate_polygon(const std::vector<Vec2q>& pts, const Poly2& f) {
  Rational total(0);
  for (size_t i = 1; i + 1 < pts.size(); ++i) total += triangle_integral(pts[0], pts[i], pts[i + 1], f);
  return total;
}

Rational integrate_interior(const LabelledPolytope& P, const Poly2& f) {
  return integrate_polygon(P.vertices(), f);
}

Rational integrate_facet(const LabelledPolytope& P, int j, const Poly2& f, Measure m) {
  Rational dens = facet_nu_density(P, j, m);
  if (dens == 0) return Rational(0);
  auto [a, b] = P.facet_segment(j);
  UniPoly g = f.restrict_segment(a, b - a);
  UniPoly G = g.antiderivative();
  return dens * (G(Rational(1)) - G(Rational(0)));
}

std::vector<Vec2q> clip_polygon(const std::vector<Vec2q>& pts, const AffineQ& h) {
  std::vector<Vec2q> out;
  const size_t n = pts.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2q& cur = pts[i];
    const Vec2q& nxt = pts[(i + 1) % n];
    Rational hc = h(cur), hn = h(nxt);
    if (hc >= 0) out.push_back(cur);
    if ((hc > 0 && hn < 0) || (hc < 0 && hn > 0)) {
      Rational t = hc / (hc - hn);
      out.push_back(cur + t * (nxt - cur));
    }
  }
  return out;
}

Rational integrate_truncated(const LabelledPolytope& P, const AffineQ& h, const Poly2& f) {
  auto pts = clip_polygon(P.vertices(), h);
  if (pts.size() < 3) return Rational(0);
  return integrate_polygon(pts, f);
}

Rational integrate_facet_truncated(const LabelledPolytope& P, int j, const AffineQ& h, const Poly2& f,
                                   Measure m) {
  Rational dens = facet_nu_density(P, j, m);
  if (dens == 0) return Rational(0);
  auto [a, b] = P.facet_segment(j);
  Vec2q w = b - a;
  // h restricted to the segment is affine in t; clip [0,1] to {h >= 0}
  Rational h0 = h(a);
  Rational h1 = h.linear.dot(w);
  Rational lo(0), hi(1);
  if (h1 == 0) {
    if (h0 < 0) return Rational(0);
  } else {
    Rational r = -h0 / h1;
    if (h1 > 0)
      lo = std::max(lo, r);
    else
      hi = std::min(hi, r);
    if (lo >= hi) return Rational(0);
  }
  UniPoly g = f.restrict_segment(a, w);
  UniPoly G = g.antiderivative();
  return dens * (G(hi) - G(lo));
}

Mat3q gram_matrix(const LabelledPolytope& P) {
  const Poly2 basis[3] = {Poly2::monomial(0, 0), Poly2::monomial(1, 0), Poly2::monomial(0, 1)};
  Mat3q G;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      G(i, j) = integrate_interior(P, basis[i] * basis[j]);
      G(j, i) = G(i, j);
    }
  return G;
}

}  // namespace torex
