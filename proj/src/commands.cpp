#include "latcube/commands.hpp"

#include "latcube/random.hpp"
#include "latcube/smooth.hpp"

#include <atomic>
#include <filesystem>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

namespace latcube {

namespace fs = std::filesystem;

namespace {

struct Outcome {
  enum Kind { skip, pass, fail } kind = skip;
  std::string text;  // witness on failure, reason when skipped
};

Outcome skip(std::string why) { return {Outcome::skip, std::move(why)}; }
Outcome pass() { return {Outcome::pass, ""}; }
Outcome fail(std::string witness) { return {Outcome::fail, std::move(witness)}; }

/// Lazily computed facts about one instance.
class Facts {
 public:
  explicit Facts(const CorpusInstance& inst) : inst_(inst) {}

  const Polytope& poly() const { return inst_.polytope; }
  bool lattice_full() const { return poly().is_lattice() && poly().is_full_dimensional(); }

  const FaceLattice& lattice() {
    if (!lattice_) lattice_.emplace(poly());
    return *lattice_;
  }
  bool smooth() {
    if (!smooth_) smooth_ = lattice_full() && is_smooth(poly(), lattice()).smooth;
    return *smooth_;
  }
  const std::optional<CubeStructure>& cube() {
    if (!cube_done_) {
      if (poly().is_full_dimensional()) cube_ = recognize_cube(poly(), 4);
      cube_done_ = true;
    }
    return cube_;
  }
  bool smooth_cube() { return smooth() && cube().has_value(); }
  bool smooth_prismatoid() {
    return smooth() && poly().dim() >= 2 && detect_prismatoid(poly(), lattice()).has_value();
  }

  /// Pairs (P, P'), P' from: P, 2P, a translate, and a fan-preserving
  /// deformation when P is smooth.
  std::vector<std::pair<std::string, Polytope>> partners(bool with_translate) {
    std::vector<std::pair<std::string, Polytope>> out;
    out.emplace_back("P", poly());
    out.emplace_back("2P", dilate(poly(), Rational(2)));
    if (with_translate) {
      LatticeVector t = LatticeVector::Zero(poly().ambient_dim());
      t(0) = 1;
      out.emplace_back("P+e1", translate(poly(), t));
    }
    if (smooth()) out.emplace_back("deformed P", equivalent_partner(poly(), mix_seed(inst_.seed, 99)).polytope);
    return out;
  }

 private:
  const CorpusInstance& inst_;
  std::optional<FaceLattice> lattice_;
  std::optional<bool> smooth_;
  std::optional<CubeStructure> cube_;
  bool cube_done_ = false;
};

std::string counterexample_text(const IdpReport& r) {
  if (r.counterexamples.empty()) return "no counterexample recorded";
  return "lattice point " + to_string(r.counterexamples.front().point) + " has no decomposition";
}

Outcome eval_theorem(const std::string& id, const CorpusInstance& inst, int extra_k) {
  Facts f(inst);
  if (id == "T3.5") {
    if (f.poly().ambient_dim() != 2 || !f.smooth()) return skip("not a smooth polygon");
    if (!f.cube()) return fail("smooth polygon is not a 2-cube");
    return parallel_facet_pair(*f.cube()) ? pass() : fail("no parallel facet pair");
  }
  if (id == "T3.8") {
    if (!f.smooth_cube()) return skip("not a smooth cube");
    return parallel_facet_pair(*f.cube()) ? pass() : fail("no parallel facet pair");
  }
  if (id == "C3.2" || id == "C3.4") {
    if (!f.smooth_cube() || f.poly().dim() < 3) return skip("not a smooth cube of dimension >= 3");
    const ParallelPropositions props = verify_parallel_propositions(*f.cube());
    const auto& list = id == "C3.2" ? props.degenerate_case : props.three_imply_fourth;
    for (const auto& c : list)
      if (!c.holds()) return fail("violated at " + c.statement);
    return pass();
  }
  if (id == "L4.2" || id == "L4.3") {
    if (!f.smooth_prismatoid()) return skip("not a smooth prismatoid");
    const SliceLemmaReport r = verify_slice_lemmas(f.poly());
    for (const auto& c : r.checks) {
      const bool relevant = id == "L4.3" || c.name == "top and bottom Minkowski equivalent";
      if (relevant && !c.passed) return fail(c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
    }
    return pass();
  }
  if (id == "T4.4") {
    if (f.poly().ambient_dim() != 2 || !f.lattice_full()) return skip("not a lattice polygon");
    for (const auto& [name, q] : f.partners(false)) {
      const IdpReport r = is_idp_pair_regions(f.poly(), q);
      if (!r.verdict) return fail("(P, " + name + "): " + counterexample_text(r));
    }
    return pass();
  }
  if (id == "L4.5" || id == "T4.6") {
    if (!f.smooth_prismatoid() || f.poly().dim() < 3) return skip("not a smooth prismatoid of dimension >= 3");
    if (id == "T4.6" && f.poly().dim() != 3) return skip("not 3-dimensional");
    for (const auto& [name, q] : f.partners(false)) {
      const IdpReport r = idp_via_slices(f.poly(), q);
      if (id == "L4.5" && !(r.agrees_with_direct && *r.agrees_with_direct))
        return fail("(P, " + name + "): slice criterion disagrees with the region checker");
      if (!r.verdict) return fail("(P, " + name + "): " + counterexample_text(r));
    }
    return pass();
  }
  if (id == "T4.7") {
    if (!f.smooth_cube()) return skip("not a smooth cube");
    for (const auto& [name, q] : f.partners(true)) {
      const auto c2 = recognize_cube(q, 4);
      if (!c2) return fail("(P, " + name + "): partner is not a cube");
      const IdpReport r = idp_cube_pair(*f.cube(), *c2);
      if (!r.verdict) return fail("(P, " + name + "): " + counterexample_text(r));
    }
    return pass();
  }
  if (id == "C4.8") {
    if (!f.smooth_cube()) return skip("not a smooth cube");
    const IdpReport r = is_idp(f.poly(), extra_k);
    return r.verdict ? pass() : fail(counterexample_text(r));
  }
  if (id == "P2.2-equiv") {
    if (!f.lattice_full()) return skip("not a full-dimensional lattice polytope");
    for (const auto& [name, q] : f.partners(false)) {
      const bool brute = is_idp_pair_bruteforce(f.poly(), q).verdict;
      const bool regions = is_idp_pair_regions(f.poly(), q).verdict;
      if (brute != regions)
        return fail("(P, " + name + "): bruteforce=" + (brute ? "true" : "false") +
                    " regions=" + (regions ? "true" : "false"));
    }
    return pass();
  }
  if (id == "L2.4") {
    if (!f.lattice_full()) return skip("not a full-dimensional lattice polytope");
    const Polytope& p = f.poly();
    const Facet& facet = p.facets().front();
    const LatticeVector v = to_lattice(p.vertices()[static_cast<std::size_t>(p.facet_vertices(0).front())]);
    const LatticeVector a = v * Integer(2) + facet.normal;
    const Polytope q = translate(negate(p), a);
    try {
      const SeparationCertificate c = separating_facet_hyperplane(p, q);
      if (!(c.max_on_first < c.min_on_second) || p.facets()[static_cast<std::size_t>(c.facet)].normal != c.normal)
        return fail("invalid certificate");
      return pass();
    } catch (const std::logic_error& e) {
      return fail(std::string("a = ") + to_string(a) + ": " + e.what());
    }
  }
  throw std::invalid_argument("unknown theorem id '" + id + "'");
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text(path, text);
  }
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {"T3.5", "T3.8", "C3.2", "C3.4", "L4.2", "L4.3", "T4.4",
                                               "L4.5", "T4.6", "T4.7", "C4.8", "P2.2-equiv", "L2.4"};
  return ids;
}

std::string theorem_statement(const std::string& id) {
  static const std::map<std::string, std::string> text = {
      {"T3.5", "a smooth 2-cube has a pair of parallel facets"},
      {"T3.8", "a smooth combinatorial cube has a pair of parallel facets"},
      {"C3.2", "F_xz || F_xzbar and F_yz || F_yzbar imply F_z || F_zbar"},
      {"C3.4", "three pairwise parallel faces among F_xy, F_xybar, F_xbary, F_xbarybar force the fourth"},
      {"L4.2", "top and bottom of a prismatoid are Minkowski equivalent"},
      {"L4.3", "slices of a smooth prismatoid are lattice polytopes Minkowski equivalent to the bottom"},
      {"T4.4", "Minkowski-equivalent lattice polygons form an IDP pair"},
      {"L4.5", "IDP slice pairs imply an IDP prismatoid pair; agrees with the region checker"},
      {"T4.6", "Minkowski-equivalent smooth 3-dimensional prismatoids form an IDP pair"},
      {"T4.7", "Minkowski-equivalent smooth cubes form an IDP pair"},
      {"C4.8", "smooth combinatorial cubes are IDP"},
      {"P2.2-equiv", "the region checker and the definitional checker agree"},
      {"L2.4", "disjoint P and a - P are separated by a hyperplane parallel to a facet of P"},
  };
  auto it = text.find(id);
  if (it == text.end()) throw std::invalid_argument("unknown theorem id '" + id + "'");
  return it->second;
}

std::vector<CorpusInstance> load_corpus(const std::vector<std::string>& manifests) {
  std::vector<CorpusInstance> out;
  for (const auto& m : manifests) {
    const fs::path dir = fs::path(m).parent_path();
    for (const auto& e : read_manifest(m)) {
      const fs::path file = dir / e.file;
      try {
        out.push_back({e.id, read_polytope(file), e.params.seed});
      } catch (const std::invalid_argument& ex) {
        throw ParseError(file.string() + ": " + ex.what());
      }
    }
  }
  return out;
}

TheoremReport verify_theorem(const std::string& id, const std::vector<CorpusInstance>& corpus, int jobs,
                             int extra_k) {
  TheoremReport report;
  report.theorem_id = id;
  report.statement = theorem_statement(id);
  std::vector<Outcome> outcomes(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        outcomes[i] = eval_theorem(id, corpus[i], extra_k);
      } catch (const std::exception& e) {
        outcomes[i] = fail(std::string("error: ") + e.what());
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(corpus.size())));
  std::vector<std::thread> threads;
  for (int t = 1; t < n; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  std::map<std::string, long long> skipped;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Outcome& o = outcomes[i];
    if (o.kind == Outcome::skip) {
      ++report.skipped;
      ++skipped[o.text];
      continue;
    }
    ++report.instances;
    if (o.kind == Outcome::pass) {
      ++report.passes;
    } else {
      report.failures.push_back({corpus[i].id, o.text});
    }
  }
  for (const auto& [why, count] : skipped) report.notes.push_back(std::to_string(count) + " skipped: " + why);
  return report;
}

GeneratedPolytope generate_instance(const std::string& kind, const GenParams& params, int index,
                                    std::uint64_t& instance_seed) {
  GenParams p = params;
  p.seed = instance_seed = mix_seed(params.seed, static_cast<std::uint64_t>(index));
  if (kind == "cube") return gen_smooth_cube(p);
  if (kind == "prismatoid") return gen_smooth_prismatoid(p);
  if (kind == "reeve") {
    const long long q = 1 + index % 3;
    p.dim = 3;
    return {scramble(reeve_simplex(q), p), "reeve q=" + std::to_string(q), 0};
  }
  throw std::invalid_argument("unknown kind '" + kind + "' (expected cube, prismatoid or reeve)");
}

int cmd_generate(const GenerateOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.count < 0) {
    err << "error: --count must be non-negative\n";
    return kExitUsage;
  }
  std::vector<ManifestEntry> entries;
  try {
    fs::create_directories(opts.out_dir);
    for (int i = 0; i < opts.count; ++i) {
      std::uint64_t seed = 0;
      const GeneratedPolytope g = generate_instance(opts.kind, opts.params, i, seed);
      std::ostringstream name;
      name << opts.kind << "-" << opts.params.dim << "d-" << std::setw(4) << std::setfill('0') << i;
      ManifestEntry e;
      e.id = name.str();
      e.file = e.id + ".json";
      e.kind = opts.kind;
      e.params = opts.params;
      e.params.dim = g.polytope.ambient_dim();
      e.params.seed = seed;
      e.construction = g.construction;
      e.rejected = g.rejected;
      write_polytope(fs::path(opts.out_dir) / e.file, g.polytope);
      entries.push_back(std::move(e));
    }
    write_text(fs::path(opts.out_dir) / "manifest.json", manifest_to_json(entries).dump(2) + "\n");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  long long rejected = 0;
  for (const auto& e : entries) rejected += e.rejected;
  Json summary;
  summary["tool"] = kToolName;
  summary["version"] = kToolVersion;
  summary["manifest"] = (fs::path(opts.out_dir) / "manifest.json").string();
  summary["count"] = entries.size();
  summary["rejected_candidates"] = rejected;
  out << summary.dump(2) << "\n";
  return kExitPass;
}

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  const std::size_t need = opts.property == "idp-pair" ? 2 : 1;
  if (opts.files.size() != need) {
    err << "error: property '" << opts.property << "' takes " << need << " file(s)\n";
    return kExitUsage;
  }
  std::vector<Polytope> polys;
  try {
    for (const auto& f : opts.files) polys.push_back(read_polytope(f));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["property"] = opts.property;
  j["files"] = opts.files;
  bool holds = false;
  try {
    const Polytope& p = polys[0];
    if (opts.property == "smooth") {
      const SmoothnessResult r = is_smooth(p);
      holds = r.smooth;
      if (!holds) {
        j["witness"] = {{"vertex", to_json(p.vertices()[static_cast<std::size_t>(*r.failing_vertex)])},
                        {"reason", r.reason}};
      }
    } else if (opts.property == "cube") {
      const auto c = recognize_cube(p);
      holds = c.has_value();
      if (c) {
        Json facets = Json::object();
        for (int axis = 1; axis <= c->dim(); ++axis) {
          for (bool up : {false, true}) {
            const FaceLabel l = FaceLabel::facet(axis, up);
            facets[to_string(l)] = to_json(p.facets()[static_cast<std::size_t>(up ? c->upper_facet(axis) : c->lower_facet(axis))].normal);
          }
        }
        j["facet_normals"] = facets;
        const auto axis = parallel_facet_pair(*c);
        j["parallel_facet_axis"] = axis ? Json(*axis) : Json(nullptr);
      }
    } else if (opts.property == "prismatoid") {
      const auto s = detect_prismatoid(p);
      holds = s.has_value();
      if (s) {
        j["bottom_normal"] = to_json(s->bottom_normal);
        j["slices"] = to_json(slices(normalize_axis(p).polytope));
      }
    } else if (opts.property == "idp") {
      const IdpReport r = is_idp(p, opts.extra_k);
      holds = r.verdict;
      j["report"] = to_json(r);
    } else if (opts.property == "idp-pair") {
      const IdpReport r = is_idp_pair_regions(p, polys[1]);
      const IdpReport b = is_idp_pair_bruteforce(p, polys[1]);
      holds = r.verdict;
      j["report"] = to_json(r);
      j["bruteforce_agrees"] = r.verdict == b.verdict;
    } else {
      err << "error: unknown property '" << opts.property << "'\n";
      return kExitUsage;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  j["holds"] = holds;
  if (opts.format == "text") {
    out << opts.property << ": " << (holds ? "holds" : "fails") << "\n";
    if (j.contains("witness")) out << "  witness: " << j["witness"].dump() << "\n";
    if (j.contains("report") && !j["report"]["counterexamples"].empty())
      out << "  counterexamples: " << j["report"]["counterexamples"].dump() << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
  return holds ? kExitPass : kExitFail;
}

int cmd_verify_theorem(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<std::string> ids;
  if (opts.theorem == "all") {
    ids = theorem_ids();
  } else if (std::find(theorem_ids().begin(), theorem_ids().end(), opts.theorem) != theorem_ids().end()) {
    ids = {opts.theorem};
  } else {
    err << "error: unknown theorem id '" << opts.theorem << "'\n";
    return kExitUsage;
  }
  std::vector<CorpusInstance> corpus;
  try {
    corpus = load_corpus(opts.manifests);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::vector<TheoremReport> reports;
  for (const auto& id : ids) reports.push_back(verify_theorem(id, corpus, opts.jobs, opts.extra_k));
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const TheoremReport& r) { return r.ok(); });

  std::string text;
  if (opts.format == "text") {
    for (const auto& r : reports) text += to_text(r);
  } else if (reports.size() == 1) {
    text = to_json(reports[0]).dump(2) + "\n";
  } else {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    Json rs = Json::array();
    for (const auto& r : reports) rs.push_back(to_json(r));
    j["reports"] = rs;
    text = j.dump(2) + "\n";
  }
  try {
    write_output(text, opts.out, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return ok ? kExitPass : kExitFail;
}

}  // namespace latcube
