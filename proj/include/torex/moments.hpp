#pragma once

#include "torex/polynomial.hpp"
#include "torex/polytope.hpp"

namespace torex {

// Exact integral over a CCW polygon by fan triangulation from the first
// vertex; closed-form monomial integrals over affine images of the standard
// simplex. Degenerate (collinear) fans contribute zero.
Rational integrate_polygon(const std::vector<Vec2q>& pts, const Poly2& f);

// int_Delta f dmu, exact.
Rational integrate_interior(const LabelledPolytope& P, const Poly2& f);

// int_{F_j} f dnu, exact; DF measure vanishes on cusp facets.
Rational integrate_facet(const LabelledPolytope& P, int j, const Poly2& f, Measure m);

// Sutherland-Hodgman clip of a convex CCW polygon against {h >= 0}; exact,
// retains zero-length edges so creases through vertices evaluate by
// continuity.
std::vector<Vec2q> clip_polygon(const std::vector<Vec2q>& pts, const AffineQ& h);

// int_{Delta ^ {h >= 0}} f dmu, exact.
Rational integrate_truncated(const LabelledPolytope& P, const AffineQ& h, const Poly2& f);

// Boundary analogue: int_{F_j ^ {h >= 0}} f dnu.
Rational integrate_facet_truncated(const LabelledPolytope& P, int j, const AffineQ& h, const Poly2& f,
                                   Measure m);

// Gram matrix of the basis {1, x, y} in L^2(Delta, dmu); symmetric positive
// definite for full-dimensional polytopes.
Mat3q gram_matrix(const LabelledPolytope& P);

}  // namespace torex
