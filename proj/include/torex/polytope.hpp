#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "torex/types.hpp"

namespace torex {

struct UnboundedPolytope : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSimple : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyInterior : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotUnimodular : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One facet of a labelled polytope. The stored normal is the primitive inward
// lattice normal; the effective label is L(x) = (<normal, x> + offset) / weight
// for non-cusp facets. Cusp facets (weight 0) keep the primitive data as their
// reference label, which still enters facet subproblems and the deformation
// profile even though their boundary measure vanishes.
struct Facet {
  Vec2z normal;
  Rational offset;
  Rational weight;  // >= 0; 0 <=> cusp

  bool cusp() const { return weight == 0; }
  // reference label value <normal, x> + offset (weight-1 scaling)
  Rational reference_label(const Vec2q& x) const {
    return Rational(normal[0]) * x[0] + Rational(normal[1]) * x[1] + offset;
  }
};

enum class Measure { DF, Reference };

// Facet sub-polytope of a 2-polytope: an interval [0, length] in the reference
// arclength parameter with point masses at the endpoints (0 = cusp endpoint).
struct IntervalProblem {
  Rational length;
  std::array<Rational, 2> masses;  // at t = 0 and t = length
};

// Compact convex simple polygon with labelled facets. Immutable after
// construction; all member queries are pure.
class LabelledPolytope {
 public:
  // Validates and canonicalizes: primitive normals (scaling folded into the
  // weight), vertices in counterclockwise order starting at the lexicographic
  // minimum. Throws UnboundedPolytope / NotSimple / EmptyInterior.
  explicit LabelledPolytope(std::vector<Facet> facets);

  int dimension() const { return 2; }
  const std::vector<Facet>& facets() const { return facets_; }
  const Facet& facet(int j) const { return facets_.at(j); }
  int num_facets() const { return static_cast<int>(facets_.size()); }

  // CCW vertex cycle; edge k runs vertex(k) -> vertex(k+1 mod n) and lies on
  // facet edge_facet(k).
  const std::vector<Vec2q>& vertices() const { return vertices_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const Vec2q& vertex(int k) const { return vertices_.at(k); }
  int edge_facet(int k) const { return edge_facet_.at(k); }
  int facet_edge(int j) const { return facet_edge_.at(j); }  // inverse map

  // Both endpoints of facet j's edge, in CCW traversal order.
  std::pair<Vec2q, Vec2q> facet_segment(int j) const;
  // Facet indices adjacent to facet j, ordered (at segment start, at end).
  std::pair<int, int> facet_neighbours(int j) const;

  std::vector<int> cusp_facets() const;
  Vec2q centroid() const;

  bool is_triangle() const { return num_vertices() == 3; }
  bool is_quadrilateral() const { return num_vertices() == 4; }
  // Opposite-edge pairs of a quadrilateral, as facet indices.
  std::array<std::array<int, 2>, 2> opposite_pairs() const;
  bool is_parallelogram() const;

 private:
  std::vector<Facet> facets_;
  std::vector<Vec2q> vertices_;
  std::vector<int> edge_facet_;
  std::vector<int> facet_edge_;
};

// JSON schema: { "dimension": 2, "facets": [ { "normal": [i, i],
// "offset": "p/q"|int, "weight": "p/q"|int } ] }. Weight 0 marks a cusp facet.
LabelledPolytope parse_polytope(const std::string& json_text);
std::string serialize_polytope(const LabelledPolytope& P);

// Density c with  int_{F_j} f dnu = c * int_0^1 f(v0 + t w) dt  along the full
// edge vector w; DF measure is 0 on cusps, Reference uses weight 1.
Rational facet_nu_density(const LabelledPolytope& P, int j, Measure m);
Rational facet_nu_mass(const LabelledPolytope& P, int j, Measure m);

struct DelzantResult {
  bool delzant = false;
  std::string witness;  // failing vertex/facet description when labelled-only
};
DelzantResult delzant_check(const LabelledPolytope& P);

// Interval sub-problem of facet i: reference arclength parametrization, masses
// weight_j / |d l_j / dt| at the endpoints, zero across cusp neighbours.
IntervalProblem facet_subproblem(const LabelledPolytope& P, int i);

// x -> Mx + t with integer unimodular M. Normals map by (M^-1)^T; weights are
// untouched; every downstream verdict is invariant (tested).
LabelledPolytope unimodular_transform(const LabelledPolytope& P, const Mat2z& M, const Vec2q& t);

Integer det(const Mat2z& M);

}  // namespace torex
