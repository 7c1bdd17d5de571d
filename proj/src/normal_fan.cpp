#include "latcube/normal_fan.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace latcube {

std::vector<VertexCone> normal_fan(const Polytope& p) {
  std::vector<VertexCone> fan;
  for (int v = 0; v < p.num_vertices(); ++v) {
    VertexCone cone{v, {}};
    for (int f : p.vertex_facets(v)) cone.generators.push_back(p.facets()[static_cast<std::size_t>(f)].normal);
    std::sort(cone.generators.begin(), cone.generators.end(), LexLess{});
    fan.push_back(std::move(cone));
  }
  return fan;
}

std::optional<FanCorrespondence> fan_correspondence(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw std::invalid_argument("minkowski_equivalent: dimension mismatch");
  if (!p.is_full_dimensional() || !q.is_full_dimensional())
    throw std::invalid_argument("minkowski_equivalent: polytopes must be full-dimensional");
  if (p.num_facets() != q.num_facets() || p.num_vertices() != q.num_vertices()) return std::nullopt;
  // Facets are sorted by normal and normals are distinct, so equal normal
  // sets pair facets by index.
  FanCorrespondence corr;
  for (int f = 0; f < p.num_facets(); ++f) {
    if (p.facets()[static_cast<std::size_t>(f)].normal != q.facets()[static_cast<std::size_t>(f)].normal)
      return std::nullopt;
    corr.facet_map.push_back(f);
  }
  std::map<std::vector<int>, int> cone_of_q;
  for (int v = 0; v < q.num_vertices(); ++v) cone_of_q.emplace(q.vertex_facets(v), v);
  for (int v = 0; v < p.num_vertices(); ++v) {
    auto it = cone_of_q.find(p.vertex_facets(v));
    if (it == cone_of_q.end()) return std::nullopt;
    corr.vertex_map.push_back(it->second);
  }
  std::vector<int> image = corr.vertex_map;
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) return std::nullopt;
  return corr;
}

bool minkowski_equivalent(const Polytope& p, const Polytope& q) {
  return fan_correspondence(p, q).has_value();
}

bool intersects(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw std::invalid_argument("intersects: dimension mismatch");
  std::vector<RationalPoint> diffs;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) diffs.push_back(a - b);
  const Polytope d = from_vertices(diffs, Embedding::allow_lower_dimensional);
  return d.contains(RationalPoint(RationalPoint::Zero(p.ambient_dim())));
}

SeparationCertificate separating_facet_hyperplane(const Polytope& p, const Polytope& q) {
  if (intersects(p, q)) throw std::invalid_argument("not disjoint");
  if (!minkowski_equivalent(p, negate(q)))
    throw std::invalid_argument("separating_facet_hyperplane: P and -Q are not Minkowski equivalent");
  std::optional<SeparationCertificate> best;
  for (int f = 0; f < p.num_facets(); ++f) {
    const Facet& facet = p.facets()[static_cast<std::size_t>(f)];
    Rational lo = dot(facet.normal, q.vertices()[0]);
    for (const auto& v : q.vertices()) lo = std::min(lo, dot(facet.normal, v));
    if (!(facet.offset < lo)) continue;
    if (!best || best->min_on_second - best->max_on_first < lo - facet.offset)
      best = SeparationCertificate{facet.normal, facet.offset, lo, f};
  }
  if (!best) throw std::logic_error("lemma violation");
  return *best;
}

}  // namespace latcube
