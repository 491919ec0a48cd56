#include "torex/extremal.hpp"

#include <set>

namespace torex {

AffineQ extremal_affine(const LabelledPolytope& P, Convention conv) {
  Mat3q G = gram_matrix(P);
  const Poly2 basis[3] = {Poly2::monomial(0, 0), Poly2::monomial(1, 0), Poly2::monomial(0, 1)};
  Vec3q b;
  for (int i = 0; i < 3; ++i) {
    Rational s(0);
    for (int j = 0; j < P.num_facets(); ++j) s += integrate_facet(P, j, basis[i], Measure::DF);
    b[i] = s;
  }
  if (conv == Convention::Main) b *= Rational(2);
  Eigen::FullPivLU<Mat3q> lu(G);
  if (!lu.isInvertible()) throw SingularGram("Gram matrix of {1,x,y} is singular");
  Vec3q sol = lu.solve(b);
  return AffineQ{Vec2q(sol[1], sol[2]), sol[0]};
}

Affine1Q extremal_affine(const IntervalProblem& I, Convention conv) {
  const Rational& l = I.length;
  if (l <= 0) throw std::invalid_argument("interval length must be positive");
  // Gram of {1, z} on [0, l]
  Rational g00 = l, g01 = l * l / 2, g11 = l * l * l / 3;
  Rational b0 = I.masses[0] + I.masses[1];
  Rational b1 = I.masses[1] * l;
  if (conv == Convention::Main) {
    b0 *= 2;
    b1 *= 2;
  }
  Rational det = g00 * g11 - g01 * g01;
  if (det == 0) throw SingularGram("interval Gram singular");
  Rational a = (b0 * g11 - b1 * g01) / det;
  Rational b = (b1 * g00 - b0 * g01) / det;
  return Affine1Q{b, a};
}

Rational df_invariant(const AnalysisContext& ctx, const AffineQ& f) {
  const Poly2 fp = Poly2::from_affine(f);
  Rational boundary(0);
  for (int j = 0; j < ctx.P.num_facets(); ++j) boundary += integrate_facet(ctx.P, j, fp, Measure::DF);
  Rational interior = integrate_interior(ctx.P, fp * Poly2::from_affine(ctx.s_main));
  return boundary - interior / 2;
}

Rational df_invariant(const AnalysisContext& ctx, const CreaseFunction& f) {
  const Poly2 hp = Poly2::from_affine(f.h);
  Rational boundary(0);
  for (int j = 0; j < ctx.P.num_facets(); ++j)
    boundary += integrate_facet_truncated(ctx.P, j, f.h, hp, Measure::DF);
  Rational interior = integrate_truncated(ctx.P, f.h, hp * Poly2::from_affine(ctx.s_main));
  return boundary - interior / 2;
}

CreaseFunction simple_crease(const LabelledPolytope& P, int facet_i, int facet_j, const Rational& s,
                             const Rational& t) {
  if (facet_i == facet_j) throw DegenerateCrease("crease endpoints on the same facet");
  auto [v0, v1] = P.facet_segment(facet_i);
  auto [w0, w1] = P.facet_segment(facet_j);
  Vec2q vs = v0 + s * (v1 - v0);
  Vec2q wt = w0 + t * (w1 - w0);
  if (vs == wt) throw DegenerateCrease("crease endpoints coincide");
  Vec2q d = vs - wt;
  AffineQ h;
  h.linear = Vec2q(-d[1], d[0]);
  h.constant = d[1] * vs[0] - d[0] * vs[1];
  return CreaseFunction{h};
}

bool crease_is_nonaffine(const LabelledPolytope& P, const CreaseFunction& f) {
  bool has_pos = false, has_neg = false;
  for (const auto& v : P.vertices()) {
    Rational hv = f.h(v);
    if (hv > 0) has_pos = true;
    if (hv < 0) has_neg = true;
  }
  return has_pos && has_neg;
}

PiecewisePoly1 normal_cone_family(const AnalysisContext& ctx, int facet) {
  const Facet& F = ctx.P.facet(facet);
  AffineQ label;
  label.linear = Vec2q(Rational(F.normal[0]), Rational(F.normal[1]));
  label.constant = F.offset;

  std::set<Rational> levels;
  for (const auto& v : ctx.P.vertices()) {
    Rational c = label(v);
    if (c > 0) levels.insert(c);
  }
  std::vector<Rational> bps{Rational(0)};
  bps.insert(bps.end(), levels.begin(), levels.end());
  if (bps.size() < 2) throw std::runtime_error("degenerate level profile");

  auto value_at = [&](const Rational& c) {
    AffineQ h = AffineQ{-label.linear, c - label.constant};  // h = c - L
    return df_invariant(ctx, CreaseFunction{h});
  };

  // Per chamber the profile is polynomial of degree <= 4: the test
  // configuration part is cubic and the relative correction
  // -1/2 int f_c (s - sbar) dmu contributes one more order whenever the
  // extremal function is non-constant. Five nodes recover it; a sixth node
  // certifies the bound.
  PiecewisePoly1 prof;
  prof.breakpoints = bps;
  for (size_t k = 0; k + 1 < bps.size(); ++k) {
    Rational a = bps[k], b = bps[k + 1];
    std::vector<Rational> nodes, vals;
    for (int q = 1; q <= 5; ++q) {
      Rational c = a + (b - a) * Rational(q, 6);
      nodes.push_back(c);
      vals.push_back(value_at(c));
    }
    UniPoly piece = interpolate(nodes, vals);
    Rational c6 = a + (b - a) * Rational(10, 11);
    if (piece(c6) != value_at(c6))
      throw std::logic_error("normal-cone profile piece exceeds quartic degree");
    prof.pieces.push_back(std::move(piece));
  }
  if (!prof.validate()) throw std::logic_error("normal-cone profile discontinuous");
  return prof;
}

Rational szekelyhidi_constraint(const AnalysisContext& ctx, int facet) {
  IntervalProblem I = facet_subproblem(ctx.P, facet);
  Affine1Q sF = extremal_affine(I, Convention::Main);

  auto [a, b] = ctx.P.facet_segment(facet);
  Vec2q dir = (b - a) / I.length;  // unit reference speed
  Affine1Q sRestr{ctx.s_main.linear.dot(dir), ctx.s_main(a)};

  // 1/2 int_0^l (sF - s|_F)(t) dt with dnu_ref = dt
  Rational dslope = sF.slope - sRestr.slope;
  Rational dconst = sF.constant - sRestr.constant;
  Rational integral = dconst * I.length + dslope * I.length * I.length / 2;
  Rational value = integral / 2;

  // cross-check against the second derivative of the first profile piece;
  // an inconsistency here is an internal error (CLI exit 3)
  PiecewisePoly1 prof = normal_cone_family(ctx, facet);
  Rational from_profile = prof.pieces.front().coeff(2) * 2;
  if (from_profile != value)
    throw std::logic_error("Szekelyhidi constraint disagrees with the profile second derivative");
  return value;
}

}  // namespace torex
