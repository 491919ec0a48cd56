#include "torex/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

namespace torex {

namespace {

Integer gcd_z(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// angle-free CCW comparator around a center: quadrant index then cross product
int half_of(const Vec2q& d) { return (d[1] > 0 || (d[1] == 0 && d[0] > 0)) ? 0 : 1; }

Rational cross(const Vec2q& a, const Vec2q& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace

Integer det(const Mat2z& M) { return M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0); }

LabelledPolytope::LabelledPolytope(std::vector<Facet> facets) : facets_(std::move(facets)) {
  const int d = static_cast<int>(facets_.size());

  for (auto& f : facets_) {
    if (f.normal[0] == 0 && f.normal[1] == 0) throw MalformedDocument("zero normal");
    if (f.weight < 0) throw MalformedDocument("negative weight");
    Integer g = gcd_z(f.normal[0], f.normal[1]);
    if (g > 1) {
      f.normal[0] /= g;
      f.normal[1] /= g;
      f.offset /= Rational(g);
      if (!f.cusp()) f.weight /= Rational(g);
    }
  }

  // anti-parallel facets with incompatible offsets cut out the empty set; this
  // must be reported as emptiness, not unboundedness
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (facets_[i].normal[0] == -facets_[j].normal[0] && facets_[i].normal[1] == -facets_[j].normal[1] &&
          facets_[i].offset + facets_[j].offset < 0)
        throw EmptyInterior("anti-parallel facets with inconsistent offsets");
    }
  }
  if (d < 3) throw UnboundedPolytope("fewer than 3 facets");

  // boundedness <=> the normals do not all lie in a closed half plane. If they
  // do, a witness direction can be taken among the normals and their 90-degree
  // rotations, so checking those candidates is exact and complete.
  {
    auto in_half_plane = [&](const Vec2q& u) {
      for (auto& f : facets_) {
        Rational s = Rational(f.normal[0]) * u[0] + Rational(f.normal[1]) * u[1];
        if (s < 0) return false;
      }
      return true;
    };
    for (auto& f : facets_) {
      Vec2q n(Rational(f.normal[0]), Rational(f.normal[1]));
      Vec2q u1(-n[1], n[0]), u2(n[1], -n[0]);
      if (in_half_plane(n) || in_half_plane(u1) || in_half_plane(u2))
        throw UnboundedPolytope("facet normals lie in a half plane");
    }
  }

  // candidate vertices from pairwise intersections
  struct Cand {
    Vec2q p;
    std::set<int> inc;
  };
  std::vector<Cand> cands;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const auto& a = facets_[i];
      const auto& b = facets_[j];
      Rational dt = Rational(a.normal[0]) * Rational(b.normal[1]) - Rational(a.normal[1]) * Rational(b.normal[0]);
      if (dt == 0) continue;
      Vec2q p;
      p[0] = (-a.offset * Rational(b.normal[1]) + b.offset * Rational(a.normal[1])) / dt;
      p[1] = (-b.offset * Rational(a.normal[0]) + a.offset * Rational(b.normal[0])) / dt;
      bool feasible = true;
      for (int k = 0; k < d && feasible; ++k)
        if (facets_[k].reference_label(p) < 0) feasible = false;
      if (!feasible) continue;
      auto it = std::find_if(cands.begin(), cands.end(), [&](const Cand& c) { return c.p == p; });
      if (it == cands.end()) {
        cands.push_back({p, {i, j}});
      } else {
        it->inc.insert(i);
        it->inc.insert(j);
      }
    }
  }
  if (cands.size() < 3) throw EmptyInterior("feasible region has no area");
  for (auto& c : cands)
    if (c.inc.size() > 2) throw NotSimple("more than 2 facets through a vertex");

  // CCW order around centroid, then rotate to start at the lexicographic min
  Vec2q ctr = Vec2q::Zero();
  for (auto& c : cands) ctr += c.p;
  ctr /= Rational(static_cast<int>(cands.size()));
  std::sort(cands.begin(), cands.end(), [&](const Cand& a, const Cand& b) {
    Vec2q da = a.p - ctr, db = b.p - ctr;
    int ha = half_of(da), hb = half_of(db);
    if (ha != hb) return ha < hb;
    return cross(da, db) > 0;
  });
  size_t start = 0;
  for (size_t k = 1; k < cands.size(); ++k) {
    if (cands[k].p[0] < cands[start].p[0] ||
        (cands[k].p[0] == cands[start].p[0] && cands[k].p[1] < cands[start].p[1]))
      start = k;
  }
  std::rotate(cands.begin(), cands.begin() + start, cands.end());

  const int n = static_cast<int>(cands.size());
  vertices_.reserve(n);
  for (auto& c : cands) vertices_.push_back(c.p);

  // interior nonempty: all reference labels strictly positive at the centroid
  for (auto& f : facets_)
    if (f.reference_label(ctr) <= 0) throw EmptyInterior("centroid not strictly interior");

  // edge -> facet: the common facet of consecutive vertices
  edge_facet_.assign(n, -1);
  facet_edge_.assign(d, -1);
  for (int k = 0; k < n; ++k) {
    std::vector<int> common;
    std::set_intersection(cands[k].inc.begin(), cands[k].inc.end(), cands[(k + 1) % n].inc.begin(),
                          cands[(k + 1) % n].inc.end(), std::back_inserter(common));
    if (common.size() != 1) throw NotSimple("consecutive vertices share none or several facets");
    edge_facet_[k] = common[0];
    facet_edge_[common[0]] = k;
  }
  for (int j = 0; j < d; ++j)
    if (facet_edge_[j] < 0)
      throw MalformedDocument("facet " + std::to_string(j) + " supports no edge of the region");
}

std::pair<Vec2q, Vec2q> LabelledPolytope::facet_segment(int j) const {
  int e = facet_edge_.at(j);
  return {vertices_[e], vertices_[(e + 1) % vertices_.size()]};
}

std::pair<int, int> LabelledPolytope::facet_neighbours(int j) const {
  int e = facet_edge_.at(j);
  int n = num_vertices();
  return {edge_facet_[(e + n - 1) % n], edge_facet_[(e + 1) % n]};
}

std::vector<int> LabelledPolytope::cusp_facets() const {
  std::vector<int> out;
  for (int j = 0; j < num_facets(); ++j)
    if (facets_[j].cusp()) out.push_back(j);
  return out;
}

Vec2q LabelledPolytope::centroid() const {
  Vec2q c = Vec2q::Zero();
  for (auto& v : vertices_) c += v;
  return c / Rational(num_vertices());
}

std::array<std::array<int, 2>, 2> LabelledPolytope::opposite_pairs() const {
  if (!is_quadrilateral()) throw std::runtime_error("NotQuadrilateral");
  return {{{edge_facet_[0], edge_facet_[2]}, {edge_facet_[1], edge_facet_[3]}}};
}

bool LabelledPolytope::is_parallelogram() const {
  if (!is_quadrilateral()) return false;
  Vec2q e0 = vertices_[1] - vertices_[0];
  Vec2q e1 = vertices_[2] - vertices_[1];
  Vec2q e2 = vertices_[3] - vertices_[2];
  Vec2q e3 = vertices_[0] - vertices_[3];
  return cross(e0, e2) == 0 && cross(e1, e3) == 0;
}

LabelledPolytope parse_polytope(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw MalformedDocument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("facets"))
    throw MalformedDocument("expected object with 'dimension' and 'facets'");
  if (doc["dimension"] != 2) throw MalformedDocument("only dimension 2 documents are supported");
  if (!doc["facets"].is_array()) throw MalformedDocument("'facets' must be an array");

  auto rat = [](const nlohmann::json& v) -> Rational {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw MalformedDocument("rationals must be integers or 'p/q' strings");
  };

  std::vector<Facet> facets;
  for (const auto& fj : doc["facets"]) {
    if (!fj.contains("normal") || !fj["normal"].is_array() || fj["normal"].size() != 2)
      throw MalformedDocument("facet normal must be a pair of integers");
    if (!fj["normal"][0].is_number_integer() || !fj["normal"][1].is_number_integer())
      throw MalformedDocument("facet normal entries must be integers");
    Facet f;
    f.normal[0] = Integer(fj["normal"][0].get<long long>());
    f.normal[1] = Integer(fj["normal"][1].get<long long>());
    f.offset = fj.contains("offset") ? rat(fj["offset"]) : Rational(0);
    f.weight = fj.contains("weight") ? rat(fj["weight"]) : Rational(1);
    facets.push_back(std::move(f));
  }
  return LabelledPolytope(std::move(facets));
}

std::string serialize_polytope(const LabelledPolytope& P) {
  nlohmann::ordered_json doc;
  doc["dimension"] = 2;
  doc["facets"] = nlohmann::ordered_json::array();
  for (const auto& f : P.facets()) {
    nlohmann::ordered_json fj;
    fj["normal"] = {f.normal[0].convert_to<long long>(), f.normal[1].convert_to<long long>()};
    fj["offset"] = to_string(f.offset);
    fj["weight"] = to_string(f.weight);
    doc["facets"].push_back(fj);
  }
  return doc.dump(2);
}

Rational facet_nu_density(const LabelledPolytope& P, int j, Measure m) {
  const Facet& f = P.facet(j);
  if (m == Measure::DF && f.cusp()) return Rational(0);
  auto [a, b] = P.facet_segment(j);
  Vec2q w = b - a;
  // w = c * (-n2, n1); |c| is the reference mass along the unit parameter
  Rational c;
  if (f.normal[1] != 0)
    c = w[0] / Rational(-f.normal[1]);
  else
    c = w[1] / Rational(f.normal[0]);
  if (c < 0) c = -c;
  return m == Measure::Reference ? c : c * f.weight;
}

Rational facet_nu_mass(const LabelledPolytope& P, int j, Measure m) {
  return facet_nu_density(P, j, m);  // unit parameter interval, f == 1
}

DelzantResult delzant_check(const LabelledPolytope& P) {
  for (int j = 0; j < P.num_facets(); ++j)
    if (!P.facet(j).cusp() && P.facet(j).weight != 1)
      return {false, "facet " + std::to_string(j) + " has weight != 1"};
  int n = P.num_vertices();
  for (int k = 0; k < n; ++k) {
    int f1 = P.edge_facet((k + n - 1) % n);
    int f2 = P.edge_facet(k);
    Mat2z M;
    M.col(0) = P.facet(f1).normal;
    M.col(1) = P.facet(f2).normal;
    Integer dt = det(M);
    if (dt != 1 && dt != -1)
      return {false, "vertex " + std::to_string(k) + " normals have determinant " + dt.str()};
  }
  return {true, ""};
}

IntervalProblem facet_subproblem(const LabelledPolytope& P, int i) {
  Rational len = facet_nu_mass(P, i, Measure::Reference);
  auto [a, b] = P.facet_segment(i);
  Vec2q w = b - a;
  // unit reference speed direction
  Vec2q dir = w / len;
  auto [nb_start, nb_end] = P.facet_neighbours(i);
  auto endpoint_mass = [&](int nb) -> Rational {
    const Facet& g = P.facet(nb);
    if (g.cusp()) return Rational(0);
    Rational rate = Rational(g.normal[0]) * dir[0] + Rational(g.normal[1]) * dir[1];
    if (rate < 0) rate = -rate;
    return g.weight / rate;
  };
  return {len, {endpoint_mass(nb_start), endpoint_mass(nb_end)}};
}

LabelledPolytope unimodular_transform(const LabelledPolytope& P, const Mat2z& M, const Vec2q& t) {
  Integer dt = det(M);
  if (dt != 1 && dt != -1) throw NotUnimodular("det must be +-1, got " + dt.str());
  // (M^-1)^T = adj(M)^T / det
  Mat2z K;
  K(0, 0) = M(1, 1) * dt;
  K(0, 1) = -M(1, 0) * dt;
  K(1, 0) = -M(0, 1) * dt;
  K(1, 1) = M(0, 0) * dt;
  std::vector<Facet> facets = P.facets();
  for (auto& f : facets) {
    Vec2z n2;
    n2[0] = K(0, 0) * f.normal[0] + K(0, 1) * f.normal[1];
    n2[1] = K(1, 0) * f.normal[0] + K(1, 1) * f.normal[1];
    f.normal = n2;
    f.offset = f.offset - (Rational(n2[0]) * t[0] + Rational(n2[1]) * t[1]);
  }
  return LabelledPolytope(std::move(facets));
}

}  // namespace torex
