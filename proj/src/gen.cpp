#include "latcube/gen.hpp"

#include "latcube/normal_fan.hpp"
#include "latcube/prismatoid.hpp"
#include "latcube/random.hpp"
#include "latcube/smooth.hpp"

#include <stdexcept>

namespace latcube {

namespace {

constexpr int kLiftBudget = 32;
constexpr int kPartnerBudget = 32;

enum Stream : std::uint64_t { kShape = 0, kMatrix = 1, kShift = 2, kLift = 3, kBase = 10 };

void check_params(const GenParams& p) {
  if (p.coord_bound < 1) throw std::invalid_argument("coord_bound must be positive");
  if (p.scramble_rounds < 0) throw std::invalid_argument("scramble_rounds must be non-negative");
}

Polytope random_trapezoid(Rng& rng, long long bound, std::string& construction) {
  const long long h = rng.uniform(1, bound);
  const long long w0 = rng.uniform(1, bound);
  const long long tlo = ceil_div(Integer(1 - w0), Integer(h)).convert_to<long long>();
  const long long thi = floor_div(Integer(bound - w0), Integer(h)).convert_to<long long>();
  const long long t = rng.uniform(tlo, thi);
  const long long w1 = w0 + t * h;
  construction = "trapezoid w0=" + std::to_string(w0) + " w1=" + std::to_string(w1) + " h=" + std::to_string(h);
  return smooth_trapezoid(w0, w1, h);
}

/// Vertices of the polytope with the normals of P and offsets moved by delta;
/// uses that the normals at each vertex of a smooth polytope form a lattice basis.
std::vector<LatticeVector> moved_vertices(const Polytope& p, const std::vector<Integer>& delta) {
  const int k = p.ambient_dim();
  std::vector<LatticeVector> out;
  for (int v = 0; v < p.num_vertices(); ++v) {
    const auto& fs = p.vertex_facets(v);
    IntegerMatrix a(k, k);
    LatticeVector rhs(k);
    for (int i = 0; i < k; ++i) {
      const Facet& f = p.facets()[static_cast<std::size_t>(fs[static_cast<std::size_t>(i)])];
      a.row(i) = f.normal.transpose();
      rhs(i) = delta[static_cast<std::size_t>(fs[static_cast<std::size_t>(i)])];
    }
    out.push_back(to_lattice(p.vertices()[static_cast<std::size_t>(v)]) + unimodular_inverse(a) * rhs);
  }
  return out;
}

bool within(const std::vector<LatticeVector>& pts, long long bound) {
  for (const auto& x : pts)
    for (Eigen::Index i = 0; i < x.size(); ++i)
      if (x(i) > bound || x(i) < -bound) return false;
  return true;
}

std::vector<LatticeVector> prism_points(const Polytope& base, const std::vector<LatticeVector>& top,
                                        long long h) {
  const int k = base.ambient_dim();
  std::vector<LatticeVector> pts;
  for (const auto& v : base.vertices()) {
    LatticeVector x(k + 1);
    x << to_lattice(v), Integer(0);
    pts.push_back(x);
  }
  for (const auto& t : top) {
    LatticeVector x(k + 1);
    x << t, Integer(h);
    pts.push_back(x);
  }
  return pts;
}

}  // namespace

Integer coordinate_bound(const GenParams& p) {
  Integer three = 1;
  for (int i = 0; i < p.scramble_rounds; ++i) three *= 3;
  return (three + 1) * p.coord_bound;
}

Polytope smooth_trapezoid(long long w0, long long w1, long long h) {
  if (w0 < 1 || w1 < 1 || h < 1 || (w1 - w0) % h != 0)
    throw std::invalid_argument("smooth_trapezoid: need w0, w1, h >= 1 and h | (w1 - w0)");
  return from_vertices({{0, 0}, {w0, 0}, {0, h}, {w1, h}});
}

UnimodularMap scramble_map(const GenParams& p) {
  check_params(p);
  const UnimodularMap linear = p.scramble_rounds == 0 ? UnimodularMap::identity(p.dim)
                                                      : random_unimodular(p.dim, mix_seed(p.seed, kMatrix), p.scramble_rounds);
  Rng rng(mix_seed(p.seed, kShift));
  LatticeVector shift(p.dim);
  for (int i = 0; i < p.dim; ++i) shift(i) = rng.uniform(-p.coord_bound, p.coord_bound);
  return UnimodularMap::make(linear.matrix, shift);
}

Polytope scramble(const Polytope& poly, const GenParams& p) {
  GenParams q = p;
  q.dim = poly.ambient_dim();
  return apply_unimodular(scramble_map(q), poly);
}

GeneratedPolytope gen_smooth_2cube(const GenParams& p) {
  check_params(p);
  if (p.dim != 2) throw std::invalid_argument("gen_smooth_2cube: dim must be 2");
  Rng rng(mix_seed(p.seed, kShape));
  std::string construction;
  const Polytope trap = random_trapezoid(rng, p.coord_bound, construction);
  if (!is_smooth(trap)) throw std::logic_error("gen_smooth_2cube: trapezoid is not smooth");
  return {scramble(trap, p), construction, 0};
}

GeneratedPolytope gen_smooth_lift(const Polytope& base, const GenParams& p, bool require_cube) {
  check_params(p);
  if (!base.is_full_dimensional() || !base.is_lattice() || !is_smooth(base))
    throw std::invalid_argument("gen_smooth_lift: base must be a smooth full-dimensional lattice polytope");
  const int k = base.ambient_dim();
  Rng rng(mix_seed(p.seed, kLift + static_cast<std::uint64_t>(k)));
  const long long hmax = std::min<long long>(2, p.coord_bound);
  int rejected = 0;
  for (int attempt = 0; attempt < kLiftBudget; ++attempt) {
    const long long h = rng.uniform(1, hmax);
    LatticeVector shear(k);
    for (int i = 0; i < k; ++i) shear(i) = rng.uniform(-1, 1);
    std::vector<Integer> delta;
    for (int f = 0; f < base.num_facets(); ++f) delta.push_back(Integer(h * rng.uniform(-1, 1)));
    std::vector<LatticeVector> top = moved_vertices(base, delta);
    for (auto& t : top) t += shear * Integer(h);
    const std::vector<LatticeVector> pts = prism_points(base, top, h);
    bool ok = within(pts, p.coord_bound);
    if (ok) {
      const Polytope t = from_vertices(top, Embedding::allow_lower_dimensional);
      ok = t.is_full_dimensional() && minkowski_equivalent(base, t);
    }
    if (ok) {
      const Polytope cand = from_vertices(pts);
      const FaceLattice lattice(cand);
      ok = is_smooth(cand, lattice).smooth &&
           detect_prismatoid(cand, lattice, LatticeVector(-unit_vector(k + 1, k))).has_value() &&
           (!require_cube || recognize_cube(cand, 8).has_value());
      if (ok) return {cand, "lift h=" + std::to_string(h) + " shear=" + to_string(shear), rejected};
    }
    ++rejected;
  }
  std::vector<LatticeVector> top;
  for (const auto& v : base.vertices()) top.push_back(to_lattice(v));
  return {from_vertices(prism_points(base, top, 1)), "prism fallback", rejected};
}

GeneratedPolytope gen_smooth_cube_lift(const CubeStructure& base, const GenParams& p) {
  return gen_smooth_lift(base.polytope(), p, true);
}

GeneratedPolytope gen_smooth_cube(const GenParams& p) {
  check_params(p);
  if (p.dim < 2 || p.dim > 4) throw std::invalid_argument("gen_smooth_cube: dim must be 2, 3 or 4");
  if (p.dim == 2) return gen_smooth_2cube(p);
  Rng rng(mix_seed(p.seed, kShape));
  std::string construction;
  Polytope poly = random_trapezoid(rng, p.coord_bound, construction);
  int rejected = 0;
  for (int d = 3; d <= p.dim; ++d) {
    GenParams q = p;
    q.dim = d;
    q.seed = mix_seed(p.seed, kBase + static_cast<std::uint64_t>(d));
    auto cube = recognize_cube(poly, 8);
    if (!cube) throw std::logic_error("gen_smooth_cube: base is not a cube");
    GeneratedPolytope lifted = gen_smooth_cube_lift(*cube, q);
    poly = lifted.polytope;
    rejected += lifted.rejected;
    construction += "; " + lifted.construction;
  }
  return {scramble(poly, p), construction, rejected};
}

Polytope cut_rectangle(long long width, long long height, unsigned corners) {
  if (width < 3 || height < 3) throw std::invalid_argument("cut_rectangle: width and height must be >= 3");
  std::vector<LatticeVector> pts;
  const long long xs[4] = {0, width, 0, width};
  const long long ys[4] = {0, 0, height, height};
  for (int c = 0; c < 4; ++c) {
    const long long x = xs[c], y = ys[c];
    if (!(corners & (1u << c))) {
      pts.push_back(lattice_vector({x, y}));
      continue;
    }
    const long long dx = x == 0 ? 1 : -1, dy = y == 0 ? 1 : -1;
    pts.push_back(lattice_vector({x + dx, y}));
    pts.push_back(lattice_vector({x, y + dy}));
  }
  return from_vertices(pts);
}

GeneratedPolytope gen_smooth_prismatoid(const GenParams& p) {
  check_params(p);
  if (p.dim < 3 || p.dim > 4) throw std::invalid_argument("gen_smooth_prismatoid: dim must be 3 or 4");
  if (p.coord_bound < 3) throw std::invalid_argument("gen_smooth_prismatoid: coord_bound must be >= 3");
  Rng rng(mix_seed(p.seed, kShape));
  const long long w = rng.uniform(3, p.coord_bound);
  const long long h = rng.uniform(3, p.coord_bound);
  const auto corners = static_cast<unsigned>(rng.uniform(0, 15));
  Polytope poly = cut_rectangle(w, h, corners);
  std::string construction = "cut rectangle " + std::to_string(w) + "x" + std::to_string(h) + " corners=" +
                             std::to_string(corners);
  int rejected = 0;
  for (int d = 3; d <= p.dim; ++d) {
    GenParams q = p;
    q.dim = d;
    q.seed = mix_seed(p.seed, kBase + static_cast<std::uint64_t>(d));
    GeneratedPolytope lifted = gen_smooth_lift(poly, q, false);
    poly = lifted.polytope;
    rejected += lifted.rejected;
    construction += "; " + lifted.construction;
  }
  return {scramble(poly, p), construction, rejected};
}

Polytope reeve_simplex(long long q) {
  if (q < 1) throw std::invalid_argument("reeve_simplex: q must be positive");
  return from_vertices({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, q}});
}

GeneratedPolytope equivalent_partner(const Polytope& poly, std::uint64_t seed) {
  if (!poly.is_full_dimensional() || !poly.is_lattice() || !is_smooth(poly))
    throw std::invalid_argument("equivalent_partner: need a smooth full-dimensional lattice polytope");
  Rng rng(seed);
  int rejected = 0;
  for (int attempt = 0; attempt < kPartnerBudget; ++attempt) {
    std::vector<Integer> delta;
    bool moved = false;
    for (int f = 0; f < poly.num_facets(); ++f) {
      delta.push_back(Integer(rng.uniform(0, 2)));
      moved = moved || delta.back() != 0;
    }
    if (moved) {
      const Polytope cand = from_vertices(moved_vertices(poly, delta), Embedding::allow_lower_dimensional);
      if (cand.is_full_dimensional() && minkowski_equivalent(poly, cand)) return {cand, "facet offsets moved", rejected};
    }
    ++rejected;
  }
  return {dilate(poly, Rational(2)), "dilation fallback", rejected};
}

}  // namespace latcube
