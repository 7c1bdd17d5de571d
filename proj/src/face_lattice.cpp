#include "latcube/face_lattice.hpp"

#include "hull.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace latcube {

FaceLattice::FaceLattice(const Polytope& p) {
  std::vector<int> all(static_cast<std::size_t>(p.num_vertices()));
  std::iota(all.begin(), all.end(), 0);

  std::set<std::vector<int>> seen{all};
  std::vector<std::vector<int>> queue;
  for (int f = 0; f < p.num_facets(); ++f)
    if (seen.insert(p.facet_vertices(f)).second) queue.push_back(p.facet_vertices(f));
  while (!queue.empty()) {
    const std::vector<int> s = std::move(queue.back());
    queue.pop_back();
    for (int f = 0; f < p.num_facets(); ++f) {
      const auto& fv = p.facet_vertices(f);
      std::vector<int> meet;
      std::set_intersection(s.begin(), s.end(), fv.begin(), fv.end(), std::back_inserter(meet));
      if (seen.insert(meet).second) queue.push_back(std::move(meet));
    }
  }
  seen.insert(std::vector<int>{});

  for (const auto& vs : seen) {
    Face face;
    face.vertices = vs;
    face.dim = detail::affine_dimension(p.vertices(), vs);
    for (int f = 0; f < p.num_facets(); ++f) {
      const auto& fv = p.facet_vertices(f);
      if (std::includes(fv.begin(), fv.end(), vs.begin(), vs.end())) face.facets.push_back(f);
    }
    faces_.push_back(std::move(face));
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    return std::tie(a.dim, a.vertices) < std::tie(b.dim, b.vertices);
  });
}

int FaceLattice::find(const std::vector<int>& vertices) const {
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].vertices == vertices) return static_cast<int>(i);
  return -1;
}

std::vector<int> FaceLattice::faces_of_dim(int k) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].dim == k) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<std::pair<int, int>> FaceLattice::edges() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& f : faces_)
    if (f.dim == 1) out.emplace_back(f.vertices[0], f.vertices[1]);
  return out;
}

bool FaceLattice::contains(int b, int a) const {
  const auto& big = face(b).vertices;
  const auto& small = face(a).vertices;
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

LinearSpan lin_span(const Polytope& p, const std::vector<int>& vertices) {
  LinearSpan span;
  if (vertices.empty()) return span;
  const RationalPoint& base = p.vertices()[static_cast<std::size_t>(vertices[0])];
  IntegerMatrix rows(0, p.ambient_dim());
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    LatticeVector diff = primitive(clear_denominators(
        RationalPoint(p.vertices()[static_cast<std::size_t>(vertices[i])] - base)));
    IntegerMatrix next(rows.rows() + 1, rows.cols());
    next << rows, diff.transpose();
    if (rank<Integer>(next) > span.dim) {
      rows = std::move(next);
      span.basis.push_back(std::move(diff));
      ++span.dim;
    }
  }
  return span;
}

LinearSpan lin_span(const Polytope& p, const Face& face) { return lin_span(p, face.vertices); }

LinearSpan lin_span(const Polytope& p) {
  std::vector<int> all(static_cast<std::size_t>(p.num_vertices()));
  std::iota(all.begin(), all.end(), 0);
  return lin_span(p, all);
}

bool parallel(const LinearSpan& a, const LinearSpan& b) {
  if (a.dim != b.dim) return false;
  if (a.dim == 0) return true;
  std::vector<LatticeVector> both = a.basis;
  both.insert(both.end(), b.basis.begin(), b.basis.end());
  return rank<Integer>(stack_rows<Integer>(both, both[0].size())) == a.dim;
}

bool parallel(const Polytope& p, const Face& f, const Polytope& q, const Face& g) {
  if (p.ambient_dim() != q.ambient_dim() || f.dim != g.dim || f.dim < 0) return false;
  return parallel(lin_span(p, f), lin_span(q, g));
}

}  // namespace latcube
