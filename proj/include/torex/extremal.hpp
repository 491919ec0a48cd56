#pragma once

#include "torex/moments.hpp"

namespace torex {

struct SingularGram : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateCrease : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The extremal affine function is used in two normalizations in the
// literature: Main solves  int_{bd \ F} f dnu = 1/2 int f s dmu  and feeds the
// Abreu equation; Appendix drops the 1/2 and matches the golden closed forms.
// Main == 2 * Appendix identically.
enum class Convention { Main, Appendix };

AffineQ extremal_affine(const LabelledPolytope& P, Convention conv);
Affine1Q extremal_affine(const IntervalProblem& I, Convention conv);

// Simple piecewise-linear test function max(0, h).
struct CreaseFunction {
  AffineQ h;
};

// Immutable bundle of a polytope with its cached Main-convention extremal
// function; everything downstream of the Donaldson-Futaki functional takes
// one of these. Shareable across threads.
struct AnalysisContext {
  LabelledPolytope P;
  AffineQ s_main;

  explicit AnalysisContext(LabelledPolytope poly)
      : P(std::move(poly)), s_main(extremal_affine(P, Convention::Main)) {}
};

// L_{(Delta,F)}(f) = int_{bd \ F} f dnu - 1/2 int f s dmu, exact.
Rational df_invariant(const AnalysisContext& ctx, const AffineQ& f);
Rational df_invariant(const AnalysisContext& ctx, const CreaseFunction& f);

// Crease through v_s on facet i's edge and w_t on facet j's edge, with
// h = (v_s - w_t) ^ (x - v_s): positive on the CCW boundary arc running from
// the end of edge i to the start of edge j. The DF value of max(0, h) does not
// depend on this side choice (the two sides differ by an affine function).
CreaseFunction simple_crease(const LabelledPolytope& P, int facet_i, int facet_j, const Rational& s,
                             const Rational& t);

// Whether max(0, h) fails to be affine on P, i.e. the crease line separates
// vertices strictly.
bool crease_is_nonaffine(const LabelledPolytope& P, const CreaseFunction& f);

// Deformation-to-the-normal-cone profile of facet i: c -> L(max(0, c - L_i))
// with L_i the reference primitive label, as an exact piecewise polynomial on
// [0, c_max] with breakpoints where the level line sweeps vertices. Each piece
// has degree <= 4 (certified by a spare-node identity check): cubic from the
// test-configuration part plus one order from the relative correction.
PiecewisePoly1 normal_cone_family(const AnalysisContext& ctx, int facet);

// F''(0) of the profile = 1/2 int_F (s_F - s) dnu_ref; computed from the facet
// subproblem and cross-checked exactly against the first profile piece.
Rational szekelyhidi_constraint(const AnalysisContext& ctx, int facet);

}  // namespace torex
