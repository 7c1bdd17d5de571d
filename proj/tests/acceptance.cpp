// Acceptance run: one PASS/FAIL line per criterion.

#include "latcube/commands.hpp"
#include "latcube/gen.hpp"
#include "latcube/idp.hpp"
#include "latcube/normal_fan.hpp"
#include "latcube/prismatoid.hpp"
#include "latcube/random.hpp"
#include "latcube/smooth.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace latcube;

namespace {

constexpr std::uint64_t kSeed = 20240611;

std::vector<Polytope> corpus(const std::string& kind, int dim, int count) {
  std::vector<Polytope> out;
  const GenParams params{dim, 3, 2, mix_seed(kSeed, static_cast<std::uint64_t>(dim) + (kind == "cube" ? 0 : 10))};
  for (int i = 0; i < count; ++i) {
    std::uint64_t seed = 0;
    out.push_back(generate_instance(kind, params, i, seed).polytope);
  }
  return out;
}

struct Corpus {
  std::vector<Polytope> cubes2 = corpus("cube", 2, 100);
  std::vector<Polytope> cubes3 = corpus("cube", 3, 50);
  std::vector<Polytope> cubes4 = corpus("cube", 4, 10);
  std::vector<Polytope> prisms3 = corpus("prismatoid", 3, 40);
  std::vector<Polytope> prisms4 = corpus("prismatoid", 4, 10);
};

const Corpus& data() {
  static const Corpus c;
  return c;
}

struct Result {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int n, const std::string& name, const std::function<Result()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!r.pass) ++failures;
  std::printf("%s %2d %s: %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", n, name.c_str(), r.detail.c_str(), secs);
  std::fflush(stdout);
}

Result fail_at(const std::string& what) { return {false, what}; }

LatticeVector unit(int d, int i) { return unit_vector(d, i); }

Result checker_equivalence() {
  std::vector<std::pair<Polytope, Polytope>> pairs;
  const auto& c = data();
  for (std::size_t i = 0; i < c.cubes2.size(); ++i) {
    const Polytope& p = c.cubes2[i];
    pairs.emplace_back(p, p);
    if (i < 40) {
      pairs.emplace_back(p, dilate(p, Rational(2)));
      pairs.emplace_back(p, translate(p, unit(2, 0)));
    }
  }
  for (std::size_t i = 0; i < c.cubes3.size(); ++i) {
    const Polytope& p = c.cubes3[i];
    pairs.emplace_back(p, p);
    if (i < 10) pairs.emplace_back(p, translate(p, unit(3, 2)));
  }
  for (long long q = 1; q <= 3; ++q) pairs.emplace_back(reeve_simplex(q), reeve_simplex(q));
  pairs.emplace_back(reeve_simplex(2), dilate(reeve_simplex(2), Rational(2)));
  long long disagreements = 0, negatives = 0;
  for (const auto& [p, q] : pairs) {
    const IdpReport a = is_idp_pair_regions(p, q);
    const IdpReport b = is_idp_pair_bruteforce(p, q);
    if (a.verdict != b.verdict) ++disagreements;
    if (!a.verdict) ++negatives;
  }
  return {disagreements == 0 && pairs.size() >= 150, std::to_string(pairs.size()) + " pairs, " + std::to_string(disagreements) +
                                  " disagreements, " + std::to_string(negatives) + " non-IDP"};
}

Result parallel_pairs() {
  const auto& c = data();
  int n = 0;
  for (const auto* set : {&c.cubes2, &c.cubes3}) {
    for (const auto& p : *set) {
      const auto cube = recognize_cube(p);
      if (!cube || !is_smooth(p)) return fail_at("instance " + std::to_string(n) + " is not a smooth cube");
      if (!parallel_facet_pair(*cube)) return fail_at("no parallel facet pair in instance " + std::to_string(n));
      ++n;
    }
  }
  return {true, std::to_string(c.cubes2.size()) + " 2-cubes and " + std::to_string(c.cubes3.size()) +
                    " 3-cubes have a parallel facet pair"};
}

Result propositions() {
  const auto& c = data();
  int n = 0;
  long long premises = 0;
  for (const auto* set : {&c.cubes3, &c.cubes4}) {
    for (const auto& p : *set) {
      const auto cube = recognize_cube(p);
      if (!cube) return fail_at("not a cube");
      const ParallelPropositions props = verify_parallel_propositions(*cube);
      if (!props.all_hold()) return fail_at("proposition fails on instance " + std::to_string(n));
      for (const auto* checks : {&props.degenerate_case, &props.three_imply_fourth})
        for (const auto& check : *checks) premises += check.premise;
      ++n;
    }
  }
  return {n >= 60, std::to_string(n) + " cubes, " + std::to_string(premises) + " premises met"};
}

Result slice_lemmas() {
  const auto& c = data();
  int n = 0;
  long long slices_seen = 0;
  for (const auto* set : {&c.prisms3, &c.prisms4}) {
    for (const auto& p : *set) {
      const SliceLemmaReport r = verify_slice_lemmas(p);
      if (!r.all_pass()) return fail_at("lemma check fails on prismatoid " + std::to_string(n));
      slices_seen += static_cast<long long>(slices(normalize_axis(p).polytope).slices.size());
      ++n;
    }
  }
  const Polytope control = from_vertices({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                                          {1, 0, 2}, {2, 0, 2}, {1, 1, 2}, {2, 1, 2}});
  const SliceLemmaReport r = verify_slice_lemmas(control);
  if (!r.non_integral_vertex) return fail_at("control has integral slices");
  return {n >= 50, std::to_string(n) + " prismatoids, " + std::to_string(slices_seen) +
                       " slices; control slice vertex " + to_string(*r.non_integral_vertex)};
}

Result slice_idp() {
  const auto& c = data();
  int pairs = 0;
  long long slice_pairs = 0;
  std::vector<const Polytope*> inputs;
  for (const auto& p : c.prisms3) inputs.push_back(&p);
  for (std::size_t i = 0; i < 10; ++i) inputs.push_back(&c.cubes3[i]);
  std::uint64_t seed = 1;
  for (const Polytope* p : inputs) {
    if (!detect_prismatoid(*p)) continue;
    const Polytope partner = equivalent_partner(*p, mix_seed(kSeed, seed++)).polytope;
    for (const Polytope* q : {p, &partner}) {
      const IdpReport r = idp_via_slices(*p, *q);
      if (!r.verdict || r.agrees_with_direct != true) return fail_at("pair " + std::to_string(pairs));
      slice_pairs += r.slice_pairs_checked;
      ++pairs;
    }
  }
  return {pairs >= 30, std::to_string(pairs) + " pairs, " + std::to_string(slice_pairs) + " slice pairs"};
}

Result cubes_idp() {
  const auto& c = data();
  int n = 0;
  for (const auto* set : {&c.cubes2, &c.cubes3, &c.cubes4}) {
    for (const auto& p : *set) {
      if (!is_idp(p, 1).verdict) return fail_at("cube " + std::to_string(n) + " is not IDP");
      ++n;
    }
  }
  return {true, std::to_string(n) + " cubes (d = 2, 3, 4), k up to max(1, d-2) + 1"};
}

Result reeve() {
  const Polytope r2 = reeve_simplex(2);
  if (is_smooth(r2)) return fail_at("q=2 reported smooth");
  const IdpReport rep = is_idp_pair_regions(r2, r2);
  if (rep.verdict || rep.counterexamples.empty()) return fail_at("q=2 reported IDP");
  const auto& w = rep.counterexamples.front();
  if (w.point != lattice_vector({1, 1, 1})) return fail_at("witness " + to_string(w.point));
  if (!w.region_point) return fail_at("empty region");
  if (find_lattice_point(decomposition_region(r2, r2, w.point))) return fail_at("region has a lattice point");
  if (!is_idp(reeve_simplex(1)).verdict) return fail_at("q=1 reported not IDP");
  return {true, "q=2 witness (1,1,1), region point " + to_string(*w.region_point) + "; q=1 IDP"};
}

Result separation() {
  const auto& c = data();
  int n = 0;
  std::vector<const Polytope*> inputs;
  for (std::size_t i = 0; i < 15; ++i) inputs.push_back(&c.cubes2[i]);
  for (std::size_t i = 0; i < 10; ++i) inputs.push_back(&c.cubes3[i]);
  for (const Polytope* p : inputs) {
    const Facet& f = p->facets().front();
    const LatticeVector v = to_lattice(p->vertices()[static_cast<std::size_t>(p->facet_vertices(0).front())]);
    const LatticeVector a = LatticeVector(v * Integer(2)) + f.normal;
    const Polytope q = translate(negate(*p), a);
    if (intersects(*p, q)) return fail_at("pair " + std::to_string(n) + " not disjoint");
    const SeparationCertificate cert = separating_facet_hyperplane(*p, q);
    for (const auto& x : p->vertices())
      if (dot(cert.normal, x) > cert.max_on_first) return fail_at("bad certificate");
    for (const auto& x : q.vertices())
      if (dot(cert.normal, x) < cert.min_on_second) return fail_at("bad certificate");
    if (!(cert.max_on_first < cert.min_on_second)) return fail_at("no gap");
    ++n;
  }
  return {n == 25, std::to_string(n) + " disjoint pairs separated by a facet normal"};
}

Result invariance() {
  const auto& c = data();
  std::vector<Polytope> inputs;
  for (std::size_t i = 0; i < 10; ++i) inputs.push_back(c.cubes2[i]);
  for (std::size_t i = 0; i < 5; ++i) inputs.push_back(c.cubes3[i]);
  inputs.push_back(reeve_simplex(2));
  inputs.push_back(from_vertices({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {2, 2, 0}, {1, 1, 1}}));
  inputs.push_back(from_vertices({{0, 0}, {2, 0}, {0, 1}, {1, 1}}));
  long long checks = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const Polytope& p = inputs[i];
    const int d = p.ambient_dim();
    const bool smooth = is_smooth(p).smooth;
    const auto cube = recognize_cube(p);
    const bool par = cube && parallel_facet_pair(*cube).has_value();
    const bool idp = is_idp(p).verdict;
    for (std::uint64_t s = 0; s < 10; ++s) {
      Rng rng(mix_seed(kSeed + i, s));
      LatticeVector t(d);
      for (int k = 0; k < d; ++k) t(k) = rng.uniform(-5, 5);
      const UnimodularMap u = UnimodularMap::make(random_unimodular(d, rng.next(), 2).matrix, t);
      const Polytope img = apply_unimodular(u, p);
      const auto cube2 = recognize_cube(img);
      if (is_smooth(img).smooth != smooth || cube2.has_value() != cube.has_value() ||
          (cube2 && parallel_facet_pair(*cube2).has_value()) != par || is_idp(img).verdict != idp)
        return fail_at("instance " + std::to_string(i) + " scramble " + std::to_string(s));
      ++checks;
    }
  }
  return {true, std::to_string(inputs.size()) + " instances x 10 scrambles"};
}

Result determinism() {
  const auto root = std::filesystem::temp_directory_path() / "latcube-acceptance";
  std::string reports[2];
  for (int run = 0; run < 2; ++run) {
    const auto dir = root / ("run" + std::to_string(run));
    std::filesystem::remove_all(dir);
    std::vector<std::string> manifests;
    for (const auto& [kind, dim] : std::vector<std::pair<std::string, int>>{{"cube", 2}, {"cube", 3}, {"prismatoid", 3}}) {
      GenerateOptions g;
      g.kind = kind;
      g.params = {dim, 3, 2, kSeed};
      g.count = 4;
      g.out_dir = (dir / (kind + std::to_string(dim))).string();
      std::ostringstream sink;
      if (cmd_generate(g, sink, sink) != kExitPass) return fail_at("generate failed: " + sink.str());
      manifests.push_back(g.out_dir + "/manifest.json");
    }
    VerifyOptions v;
    v.theorem = "all";
    v.manifests = manifests;
    std::ostringstream out, err;
    if (cmd_verify_theorem(v, out, err) != kExitPass) return fail_at("verify failed: " + err.str());
    reports[run] = out.str();
  }
  std::filesystem::remove_all(root);
  return {reports[0] == reports[1], std::to_string(reports[0].size()) + "-byte reports " +
                                        (reports[0] == reports[1] ? "identical" : "differ")};
}

}  // namespace

int main() {
  criterion(1, "region checker agrees with definitional checker", checker_equivalence);
  criterion(2, "smooth 2- and 3-cubes have parallel facets", parallel_pairs);
  criterion(3, "parallel-face propositions on 3- and 4-cubes", propositions);
  criterion(4, "prismatoid slices integral and equivalent; control non-integral", slice_lemmas);
  criterion(5, "slice IDP agrees with region checker", slice_idp);
  criterion(6, "smooth cubes are IDP", cubes_idp);
  criterion(7, "Reeve simplex negative control", reeve);
  criterion(8, "disjoint P, a - P separated by a facet hyperplane", separation);
  criterion(9, "invariance under unimodular scrambles", invariance);
  criterion(10, "generate + verify is deterministic", determinism);
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
