#include "latcube/cubeface.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace latcube {

namespace {

std::uint32_t axis_bit(int axis) {
  if (axis < 1 || axis > 31) throw std::invalid_argument("face label: axis out of range");
  return 1u << (axis - 1);
}

std::string face_name(const FaceLabel& l) {
  const std::string s = to_string(l);
  return "F_{" + s + "}";
}

}  // namespace

FaceLabel FaceLabel::make(const std::vector<int>& lower_axes, const std::vector<int>& upper_axes) {
  FaceLabel l;
  for (int a : lower_axes) l.lower |= axis_bit(a);
  for (int a : upper_axes) l.upper |= axis_bit(a);
  if (!l.valid()) throw std::invalid_argument("face label: an axis is in both I and J");
  return l;
}

FaceLabel FaceLabel::facet(int axis, bool upper_side) {
  FaceLabel l;
  (upper_side ? l.upper : l.lower) = axis_bit(axis);
  return l;
}

int FaceLabel::codim() const { return std::popcount(lower) + std::popcount(upper); }

std::string to_string(const FaceLabel& label) {
  std::string out;
  for (int a = 1; a <= 32; ++a) {
    const std::uint32_t bit = 1u << (a - 1);
    if (!((label.lower | label.upper) & bit)) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(a);
    if (label.upper & bit) out += "bar";
  }
  return out;
}

FaceLabel parse_face_label(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> lower, upper;
  std::string tok;
  while (in >> tok) {
    bool bar = tok.size() > 3 && tok.ends_with("bar");
    const std::string digits = bar ? tok.substr(0, tok.size() - 3) : tok;
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("face label: bad token '" + tok + "'");
    const int axis = std::stoi(digits);
    (bar ? upper : lower).push_back(axis);
  }
  return FaceLabel::make(lower, upper);
}

FaceLabel opposite(const FaceLabel& label, int axis) {
  const std::uint32_t bit = axis_bit(axis);
  FaceLabel out = label;
  if (label.lower & bit) {
    out.lower &= ~bit;
    out.upper |= bit;
  } else if (label.upper & bit) {
    out.upper &= ~bit;
    out.lower |= bit;
  } else {
    throw std::invalid_argument("opposite: axis " + std::to_string(axis) + " is not fixed by the label");
  }
  return out;
}

bool label_contains(const FaceLabel& big, const FaceLabel& small) {
  return (big.lower & ~small.lower) == 0 && (big.upper & ~small.upper) == 0;
}

std::optional<FaceLabel> label_meet(const FaceLabel& a, const FaceLabel& b) {
  FaceLabel m{a.lower | b.lower, a.upper | b.upper};
  if (!m.valid()) return std::nullopt;
  return m;
}

int CubeStructure::vertex_with_bits(std::uint32_t bits) const {
  for (std::size_t v = 0; v < vertex_bits_.size(); ++v)
    if (vertex_bits_[v] == bits) return static_cast<int>(v);
  return -1;
}

int CubeStructure::face_id(const FaceLabel& label) const {
  auto it = face_ids_.find(label);
  if (it == face_ids_.end()) throw std::invalid_argument("face label '" + to_string(label) + "' is not valid for this cube");
  return it->second;
}

FaceLabel CubeStructure::label_of(int id) const {
  const auto& l = labels_.at(static_cast<std::size_t>(id));
  if (!l) throw std::invalid_argument("label_of: the empty face has no label");
  return *l;
}

std::vector<int> CubeStructure::face_vertices(const FaceLabel& label) const {
  return lattice_.face(face_id(label)).vertices;
}

std::vector<FaceLabel> CubeStructure::labels() const {
  std::vector<FaceLabel> out;
  for (const auto& [l, id] : face_ids_) out.push_back(l);
  std::stable_sort(out.begin(), out.end(),
                   [](const FaceLabel& a, const FaceLabel& b) { return a.codim() < b.codim(); });
  return out;
}

std::optional<CubeStructure> recognize_cube(const Polytope& p, int max_dim) {
  const int d = p.dim();
  if (!p.is_full_dimensional() || d < 1 || d > max_dim || d > 31) return std::nullopt;
  if (p.num_vertices() != (1 << d) || p.num_facets() != 2 * d) return std::nullopt;
  for (int v = 0; v < p.num_vertices(); ++v)
    if (static_cast<int>(p.vertex_facets(v).size()) != d) return std::nullopt;

  CubeStructure c(p, FaceLattice(p));
  const int nv = p.num_vertices();
  const std::vector<int> base_facets = p.vertex_facets(0);
  for (int f : base_facets) {
    const auto& fv = p.facet_vertices(f);
    std::vector<int> rest;
    for (int v = 0; v < nv; ++v)
      if (!std::binary_search(fv.begin(), fv.end(), v)) rest.push_back(v);
    int opp = -1;
    for (int g = 0; g < p.num_facets(); ++g)
      if (p.facet_vertices(g) == rest) opp = g;
    if (opp < 0) return std::nullopt;
    c.lower_facet_.push_back(f);
    c.upper_facet_.push_back(opp);
  }

  c.vertex_bits_.assign(static_cast<std::size_t>(nv), 0);
  std::vector<char> used(static_cast<std::size_t>(nv), 0);
  for (int v = 0; v < nv; ++v) {
    std::uint32_t bits = 0;
    for (int a = 0; a < d; ++a)
      if (p.incident(v, c.upper_facet_[static_cast<std::size_t>(a)])) bits |= 1u << a;
    if (used[bits]) return std::nullopt;
    used[bits] = 1;
    c.vertex_bits_[static_cast<std::size_t>(v)] = bits;
  }

  // Every label must name a face of the right dimension; with 3^d labels and
  // 3^d nonempty faces the map is the poset isomorphism.
  int labelled = 0;
  c.labels_.assign(static_cast<std::size_t>(c.lattice_.size()), std::nullopt);
  std::uint32_t full = (1u << d) - 1;
  for (std::uint32_t lower = 0; lower <= full; ++lower) {
    for (std::uint32_t upper = 0; upper <= full; ++upper) {
      if (lower & upper) continue;
      const FaceLabel label{lower, upper};
      std::vector<int> vs;
      for (int v = 0; v < nv; ++v) {
        const std::uint32_t b = c.vertex_bits_[static_cast<std::size_t>(v)];
        if ((b & lower) == 0 && (b & upper) == upper) vs.push_back(v);
      }
      const int id = c.lattice_.find(vs);
      if (id < 0 || c.lattice_.face(id).dim != label.dim(d)) return std::nullopt;
      c.face_ids_.emplace(label, id);
      c.labels_[static_cast<std::size_t>(id)] = label;
      ++labelled;
    }
  }
  if (labelled + 1 != c.lattice_.size()) return std::nullopt;
  return c;
}

Polytope face_of(const CubeStructure& c, const FaceLabel& label) {
  if (!label.valid()) throw std::invalid_argument("face_of: overlapping I and J");
  std::vector<RationalPoint> pts;
  for (int v : c.face_vertices(label)) pts.push_back(c.polytope().vertices()[static_cast<std::size_t>(v)]);
  return from_vertices(pts, Embedding::allow_lower_dimensional);
}

namespace {

bool labels_parallel(const CubeStructure& c, const FaceLabel& a, const FaceLabel& b) {
  const auto& lat = c.lattice();
  return parallel(c.polytope(), lat.face(c.face_id(a)), c.polytope(), lat.face(c.face_id(b)));
}

}  // namespace

std::optional<int> parallel_facet_pair(const CubeStructure& c) {
  for (int axis = 1; axis <= c.dim(); ++axis)
    if (labels_parallel(c, FaceLabel::facet(axis, false), FaceLabel::facet(axis, true))) return axis;
  return std::nullopt;
}

bool ParallelPropositions::all_hold() const {
  auto ok = [](const PropositionCheck& p) { return p.holds(); };
  return std::all_of(degenerate_case.begin(), degenerate_case.end(), ok) &&
         std::all_of(three_imply_fourth.begin(), three_imply_fourth.end(), ok);
}

ParallelPropositions verify_parallel_propositions(const CubeStructure& c) {
  const int d = c.dim();
  if (d < 3) throw std::invalid_argument("verify_parallel_propositions: dimension must be at least 3");
  ParallelPropositions out;
  auto lab = [](std::vector<int> lo, std::vector<int> up) { return FaceLabel::make(lo, up); };

  for (int z = 1; z <= d; ++z) {
    const bool concl = labels_parallel(c, lab({z}, {}), lab({}, {z}));
    for (int x = 1; x <= d; ++x) {
      for (int y = x + 1; y <= d; ++y) {
        if (x == z || y == z) continue;
        PropositionCheck chk;
        chk.premise = labels_parallel(c, lab({x, z}, {}), lab({x}, {z})) &&
                      labels_parallel(c, lab({y, z}, {}), lab({y}, {z}));
        chk.conclusion = concl;
        chk.statement = "x=" + std::to_string(x) + " y=" + std::to_string(y) + " z=" + std::to_string(z);
        out.degenerate_case.push_back(std::move(chk));
      }
    }
  }

  for (int x = 1; x <= d; ++x) {
    for (int y = x + 1; y <= d; ++y) {
      const FaceLabel four[4] = {lab({x, y}, {}), lab({x}, {y}), lab({y}, {x}), lab({}, {x, y})};
      bool par[4][4];
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) par[i][j] = i == j || labels_parallel(c, four[i], four[j]);
      bool all = true;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) all = all && par[i][j];
      for (int omit = 0; omit < 4; ++omit) {
        PropositionCheck chk;
        chk.premise = true;
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            if (i != omit && j != omit) chk.premise = chk.premise && par[i][j];
        chk.conclusion = all;
        chk.statement = "x=" + std::to_string(x) + " y=" + std::to_string(y) + " fourth=" + face_name(four[omit]);
        out.three_imply_fourth.push_back(std::move(chk));
      }
    }
  }
  return out;
}

}  // namespace latcube
