#include "latcube/prismatoid.hpp"

#include "hull.hpp"
#include "latcube/normal_fan.hpp"
#include "latcube/smooth.hpp"

#include <algorithm>
#include <stdexcept>

namespace latcube {

namespace {

std::optional<PrismatoidStructure> check_pair(const Polytope& p, const FaceLattice& lattice, int bottom,
                                              int top) {
  const int d = p.dim();
  const auto& bv = p.facet_vertices(bottom);
  const auto& tv = p.facet_vertices(top);
  if (bv.size() != tv.size() || static_cast<int>(bv.size() + tv.size()) != p.num_vertices()) return std::nullopt;
  std::vector<int> both;
  std::set_union(bv.begin(), bv.end(), tv.begin(), tv.end(), std::back_inserter(both));
  if (static_cast<int>(both.size()) != p.num_vertices()) return std::nullopt;

  PrismatoidStructure s;
  s.bottom_facet = bottom;
  s.top_facet = top;
  s.bottom_normal = p.facets()[static_cast<std::size_t>(bottom)].normal;
  s.bottom_vertices = bv;
  s.lift.assign(bv.size(), -1);
  std::vector<int> phi(static_cast<std::size_t>(p.num_vertices()), -1);
  for (auto [a, b] : lattice.edges()) {
    const bool a_bottom = std::binary_search(bv.begin(), bv.end(), a);
    const bool b_bottom = std::binary_search(bv.begin(), bv.end(), b);
    if (a_bottom == b_bottom) continue;
    const int from = a_bottom ? a : b, to = a_bottom ? b : a;
    if (phi[static_cast<std::size_t>(from)] >= 0) return std::nullopt;
    phi[static_cast<std::size_t>(from)] = to;
  }
  std::vector<int> image;
  for (std::size_t i = 0; i < bv.size(); ++i) {
    const int t = phi[static_cast<std::size_t>(bv[i])];
    if (t < 0) return std::nullopt;
    s.lift[i] = t;
    image.push_back(t);
  }
  std::sort(image.begin(), image.end());
  if (image != tv) return std::nullopt;

  int sides = 0;
  for (int f = 0; f < p.num_facets(); ++f) {
    if (f == bottom || f == top) continue;
    ++sides;
    const auto& fv = p.facet_vertices(f);
    std::vector<int> on_bottom, on_top, mapped;
    std::set_intersection(fv.begin(), fv.end(), bv.begin(), bv.end(), std::back_inserter(on_bottom));
    std::set_intersection(fv.begin(), fv.end(), tv.begin(), tv.end(), std::back_inserter(on_top));
    for (int v : on_bottom) mapped.push_back(phi[static_cast<std::size_t>(v)]);
    std::sort(mapped.begin(), mapped.end());
    if (mapped != on_top) return std::nullopt;
    if (detail::affine_dimension(p.vertices(), on_bottom) != d - 2 ||
        detail::affine_dimension(p.vertices(), on_top) != d - 2)
      return std::nullopt;
  }
  int ridges = 0;
  for (int id : lattice.faces_of_dim(d - 2)) {
    const auto& vs = lattice.face(id).vertices;
    if (std::includes(bv.begin(), bv.end(), vs.begin(), vs.end())) ++ridges;
  }
  if (ridges != sides) return std::nullopt;
  return s;
}

RationalPoint drop_last(const RationalPoint& x) { return x.head(x.size() - 1); }

LatticeVector neg_unit(int d) { return LatticeVector(-unit_vector(d, d - 1)); }

}  // namespace

std::optional<PrismatoidStructure> detect_prismatoid(const Polytope& p, const FaceLattice& lattice,
                                                     const std::optional<LatticeVector>& bottom_normal) {
  const int d = p.ambient_dim();
  if (!p.is_full_dimensional() || d < 2) return std::nullopt;
  std::vector<std::pair<int, int>> candidates;
  for (int f = 0; f < p.num_facets(); ++f) {
    const LatticeVector& n = p.facets()[static_cast<std::size_t>(f)].normal;
    for (int g = 0; g < p.num_facets(); ++g) {
      if (p.facets()[static_cast<std::size_t>(g)].normal != LatticeVector(-n) || !lex_less(n, LatticeVector(-n)))
        continue;
      if (bottom_normal && *bottom_normal != n) continue;
      candidates.emplace_back(f, g);
    }
  }
  std::stable_partition(candidates.begin(), candidates.end(), [&](const std::pair<int, int>& c) {
    return p.facets()[static_cast<std::size_t>(c.first)].normal == neg_unit(d);
  });
  for (auto [f, g] : candidates)
    if (auto s = check_pair(p, lattice, f, g)) return s;
  return std::nullopt;
}

std::optional<PrismatoidStructure> detect_prismatoid(const Polytope& p,
                                                     const std::optional<LatticeVector>& bottom_normal) {
  if (!p.is_full_dimensional()) return std::nullopt;
  return detect_prismatoid(p, FaceLattice(p), bottom_normal);
}

NormalizedPrismatoid normalize_axis(const Polytope& p) {
  const FaceLattice lattice(p);
  const auto s = detect_prismatoid(p, lattice);
  if (!s) throw std::invalid_argument("normalize_axis: not a prismatoid");
  const int d = p.ambient_dim();
  UnimodularMap map = UnimodularMap::identity(d);
  const bool smooth = p.is_lattice() && is_smooth(p, lattice).smooth;
  if (smooth) {
    const int b0 = s->bottom_vertices[0];
    const LatticeVector origin = to_lattice(p.vertices()[static_cast<std::size_t>(b0)]);
    const auto& bv = s->bottom_vertices;
    const VertexStar star = vertex_star(p, lattice, b0);
    IntegerMatrix e(d, d);
    int col = 0;
    for (int f : p.vertex_facets(b0)) {
      if (f == s->bottom_facet) continue;
      for (std::size_t i = 0; i < star.neighbors.size(); ++i) {
        const int w = star.neighbors[i];
        if (std::binary_search(bv.begin(), bv.end(), w) && !p.incident(w, f)) e.col(col) = star.edge_dirs[i];
      }
      ++col;
    }
    if (col != d - 1) throw std::logic_error("normalize_axis: unexpected bottom vertex degree");
    const RationalPoint lift = p.vertices()[static_cast<std::size_t>(s->lift[0])] - to_rational(origin);
    e.col(d - 1) = primitive(clear_denominators(lift));
    const IntegerMatrix m = unimodular_inverse(e);
    map = UnimodularMap::make(m, LatticeVector(-(m * origin)));
  } else if (s->bottom_normal != neg_unit(d)) {
    map = UnimodularMap::make(unimodular_with_last_row(LatticeVector(-s->bottom_normal)));
  }
  Polytope image = apply_unimodular(map, p);
  auto structure = detect_prismatoid(image, neg_unit(d));
  if (!structure) throw std::logic_error("normalize_axis: normalized image lost its prismatoid axis");
  return {std::move(image), map, std::move(*structure)};
}

SliceDecomposition slices(const Polytope& p) {
  const int d = p.ambient_dim();
  if (d < 2 || !p.is_full_dimensional()) throw std::invalid_argument("slices: need a full-dimensional polytope, d >= 2");
  const LatticeVector up = unit_vector(d, d - 1);
  std::optional<Rational> bottom, top;
  for (const auto& f : p.facets()) {
    if (f.normal == up) top = f.offset;
    if (f.normal == LatticeVector(-up)) bottom = -f.offset;
  }
  if (!bottom || !top) throw std::invalid_argument("slices: no facets with normals -e_d and e_d");
  if (!is_integral(*bottom) || !is_integral(*top)) throw std::invalid_argument("slices: non-integer top or bottom height");

  SliceDecomposition dec;
  dec.axis_normal = up;
  dec.bottom_height = floor(*bottom);
  dec.top_height = floor(*top);
  const FaceLattice lattice(p);
  const auto edges = lattice.edges();
  for (Integer l = 0; dec.bottom_height + l <= dec.top_height; ++l) {
    const Rational height(dec.bottom_height + l);
    std::vector<RationalPoint> pts;
    for (auto [a, b] : edges) {
      const RationalPoint& u = p.vertices()[static_cast<std::size_t>(a)];
      const RationalPoint& w = p.vertices()[static_cast<std::size_t>(b)];
      const Rational ud = u(d - 1), wd = w(d - 1);
      if (ud == wd) {
        if (ud == height) {
          pts.push_back(drop_last(u));
          pts.push_back(drop_last(w));
        }
        continue;
      }
      const Rational lo = std::min(ud, wd), hi = std::max(ud, wd);
      if (height < lo || height > hi) continue;
      const Rational t = (height - ud) / (wd - ud);
      pts.push_back(drop_last(RationalPoint(u + (w - u) * t)));
    }
    dec.slices.push_back({l, from_vertices(pts, Embedding::allow_lower_dimensional)});
  }
  return dec;
}

bool SliceLemmaReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed; });
}

SliceLemmaReport verify_slice_lemmas(const Polytope& p) {
  SliceLemmaReport r;
  if (!detect_prismatoid(p)) {
    r.checks.push_back({"prismatoid", false, "no bottom/top facet pair with a prism face lattice"});
    return r;
  }
  const NormalizedPrismatoid n = normalize_axis(p);
  const int d = p.ambient_dim();
  const SliceDecomposition dec = slices(n.polytope);
  const Polytope& bottom = dec.slices.front().polytope;
  const Polytope& top = dec.slices.back().polytope;
  r.checks.push_back({"top and bottom Minkowski equivalent", minkowski_equivalent(bottom, top), ""});

  const UnimodularMap back = n.map.inverse();
  for (const auto& s : dec.slices) {
    const std::string at = "l=" + to_string(s.level);
    const bool integral = s.polytope.is_lattice();
    std::string detail;
    if (!integral) {
      for (const auto& v : s.polytope.vertices()) {
        if (is_integral(v)) continue;
        RationalPoint lifted(d);
        lifted << v, Rational(dec.bottom_height + s.level);
        if (!r.non_integral_vertex) r.non_integral_vertex = back.apply(lifted);
        detail = "vertex " + to_string(v);
        break;
      }
    }
    r.checks.push_back({"slice integral " + at, integral, detail});
    const bool full = s.polytope.dim() == d - 1;
    r.checks.push_back({"slice dimension " + at, full, "dim " + std::to_string(s.polytope.dim())});
    r.checks.push_back({"slice Minkowski equivalent to bottom " + at, full && minkowski_equivalent(s.polytope, bottom), ""});
  }

  const bool smooth = n.polytope.is_lattice() && is_smooth(n.polytope).smooth;
  if (smooth) {
    const Polytope& q = n.polytope;
    const Integer h = dec.top_height - dec.bottom_height;
    for (std::size_t i = 0; i < n.structure.bottom_vertices.size(); ++i) {
      const LatticeVector b = to_lattice(q.vertices()[static_cast<std::size_t>(n.structure.bottom_vertices[i])]);
      const LatticeVector t = to_lattice(q.vertices()[static_cast<std::size_t>(n.structure.lift[i])]);
      const LatticeVector dir = primitive(LatticeVector(t - b));
      bool ok = dir(d - 1) == 1 && LatticeVector(t - b) == LatticeVector(dir * h);
      for (const auto& s : dec.slices) {
        if (!ok) break;
        const LatticeVector x = b + dir * s.level;
        ok = s.polytope.vertex_index(to_rational(LatticeVector(x.head(d - 1)))) >= 0;
      }
      r.checks.push_back({"edge formula at " + to_string(b), ok, "direction " + to_string(dir)});
    }
  }
  return r;
}

IdpReport idp_via_slices(const Polytope& p, const Polytope& p2) {
  const bool ok = p.ambient_dim() == p2.ambient_dim() && p.is_full_dimensional() && p2.is_full_dimensional() &&
                  p.is_lattice() && p2.is_lattice() && is_smooth(p).smooth && is_smooth(p2).smooth &&
                  minkowski_equivalent(p, p2) && detect_prismatoid(p).has_value();
  if (!ok) throw std::invalid_argument("idp_via_slices: requires Minkowski-equivalent smooth prismatoids");
  const NormalizedPrismatoid n = normalize_axis(p);
  const Polytope image = apply_unimodular(n.map, p2);
  const SliceDecomposition a = slices(n.polytope);
  const SliceDecomposition b = slices(image);

  IdpReport r;
  r.method = "slices";
  bool slices_ok = true;
  for (const auto& s : a.slices) {
    for (const auto& t : b.slices) {
      const IdpReport pair = is_idp_pair_regions(s.polytope, t.polytope);
      ++r.slice_pairs_checked;
      r.regions_checked += pair.regions_checked;
      if (!pair.verdict) {
        slices_ok = false;
        r.notes.push_back("slice pair (" + to_string(s.level) + ", " + to_string(t.level) + ") is not IDP");
      }
    }
  }
  const IdpReport direct = is_idp_pair_regions(p, p2);
  r.agrees_with_direct = slices_ok == direct.verdict;
  r.verdict = slices_ok ? true : direct.verdict;
  if (!slices_ok) {
    r.notes.push_back("slice criterion inconclusive; verdict from the region checker");
    r.counterexamples = direct.counterexamples;
  }
  r.decompositions = direct.decompositions;
  return r;
}

}  // namespace latcube
