#pragma once

#include <optional>

#include "torex/extremal.hpp"

namespace torex {

struct NotQuadrilateral : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotTriangle : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MixedUnstable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Stability { Stable, StrictlySemistable, Unstable, Undecided };

const char* to_string(Stability s);

struct StabilityVerdict {
  Stability status = Stability::Undecided;
  std::optional<CreaseFunction> witness;  // destabilizer / zero crease when known
  std::optional<Rational> witness_value;
  std::vector<Rational> determinants;  // Hessian dets at the inspected corners
  bool boundary_of_criterion = false;  // adjacent-pair determinant hit zero
  std::string method;
};

struct WeightVector {
  std::vector<Rational> weights;  // per facet, >= 0, not all zero
};

// DF invariant of simple creases meeting the edges of facets (i, j),
// parametrized over [0,1]^2 and recovered exactly by 16-point interpolation.
// Pre: (i, j) is an opposite pair of a quadrilateral.
BiPoly33 phi_polynomial(const AnalysisContext& ctx, int facet_i, int facet_j);

// Hessian determinant of the crease family at the critical corner attached to
// a cusp facet: the pair is (previous, next) neighbour and the corner is
// (s,t) = (1,0), where the crease degenerates onto the cusp edge.
Rational corner_hessian_det(const AnalysisContext& ctx, int cusp_facet);

StabilityVerdict quadrilateral_stability(const AnalysisContext& ctx);
StabilityVerdict triangle_stability(const AnalysisContext& ctx);

// Interval case: creases max(0, c-z) and max(0, z-c) give exact cubics in the
// crease position; stability is their strict positivity on (0, length).
StabilityVerdict interval_stability(const IntervalProblem& I);

struct ScanResult {
  Rational min_value;
  int argmin_facet_i = -1, argmin_facet_j = -1;
  Rational argmin_s, argmin_t;
  StabilityVerdict verdict;  // Unstable with witness, or Undecided (positive)
};

// Exact grid scan over all edge pairs with local bisection refinement around
// the minimum; a semi-decision (Undecided means every sampled non-affine
// crease had a strictly positive invariant).
ScanResult crease_scan(const AnalysisContext& ctx, int grid_n, int refine_depth);

// Convex-cone combination of weighted verdicts; Stable if some summand is.
StabilityVerdict combine_weights(const std::vector<std::pair<WeightVector, StabilityVerdict>>& verdicts,
                                 const std::vector<Rational>& coefficients);

}  // namespace torex
