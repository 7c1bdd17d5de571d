#include "latcube/report.hpp"

#include <sstream>

namespace latcube {

Json to_json(const TheoremReport& r) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["theorem_id"] = r.theorem_id;
  j["statement"] = r.statement;
  j["instances"] = r.instances;
  j["passes"] = r.passes;
  j["skipped"] = r.skipped;
  Json fs = Json::array();
  for (const auto& f : r.failures) fs.push_back({{"instance", f.instance}, {"witness", f.witness}});
  j["failures"] = fs;
  j["notes"] = r.notes;
  return j;
}

std::string to_text(const TheoremReport& r) {
  std::ostringstream out;
  out << r.theorem_id << ": " << (r.ok() ? "PASS" : "FAIL") << " " << r.passes << "/" << r.instances
      << " instances";
  if (r.skipped) out << ", " << r.skipped << " skipped";
  out << "\n";
  for (const auto& f : r.failures) out << "  failure " << f.instance << ": " << f.witness << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  return out.str();
}

Json to_json(const IdpReport& r) {
  Json j;
  j["method"] = r.method;
  j["verdict"] = r.verdict;
  j["regions_checked"] = r.regions_checked;
  if (!r.dilations_checked.empty()) j["dilations_checked"] = r.dilations_checked;
  if (r.slice_pairs_checked) j["slice_pairs_checked"] = r.slice_pairs_checked;
  if (r.agrees_with_direct) j["agrees_with_direct"] = *r.agrees_with_direct;
  Json ce = Json::array();
  for (const auto& c : r.counterexamples) {
    Json e;
    e["point"] = to_json(c.point);
    e["region_point"] = c.region_point ? to_json(*c.region_point) : Json(nullptr);
    ce.push_back(e);
  }
  j["counterexamples"] = ce;
  Json dec = Json::array();
  for (const auto& d : r.decompositions)
    dec.push_back({{"point", to_json(d.point)}, {"first", to_json(d.first)}, {"second", to_json(d.second)}});
  j["decompositions"] = dec;
  j["notes"] = r.notes;
  return j;
}

Json to_json(const SliceLemmaReport& r) {
  Json j;
  j["all_pass"] = r.all_pass();
  Json cs = Json::array();
  for (const auto& c : r.checks) cs.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = cs;
  if (r.non_integral_vertex) j["non_integral_vertex"] = to_json(*r.non_integral_vertex);
  return j;
}

Json to_json(const SliceDecomposition& d) {
  Json j;
  j["axis_normal"] = to_json(d.axis_normal);
  j["bottom_height"] = to_json(d.bottom_height);
  j["top_height"] = to_json(d.top_height);
  Json ss = Json::array();
  for (const auto& s : d.slices) {
    Json vs = Json::array();
    for (const auto& v : s.polytope.vertices()) vs.push_back(to_json(v));
    ss.push_back({{"level", to_json(s.level)}, {"vertices", vs}});
  }
  j["slices"] = ss;
  return j;
}

Json to_json(const ParallelPropositions& p) {
  auto list = [](const std::vector<PropositionCheck>& cs) {
    Json out = Json::array();
    for (const auto& c : cs)
      out.push_back({{"case", c.statement}, {"premise", c.premise}, {"conclusion", c.conclusion}, {"holds", c.holds()}});
    return out;
  };
  Json j;
  j["all_hold"] = p.all_hold();
  j["degenerate_case"] = list(p.degenerate_case);
  j["three_imply_fourth"] = list(p.three_imply_fourth);
  return j;
}

Json to_json(const SeparationCertificate& c) {
  Json j;
  j["normal"] = to_json(c.normal);
  j["max_on_first"] = to_json(c.max_on_first);
  j["min_on_second"] = to_json(c.min_on_second);
  j["facet"] = c.facet;
  return j;
}

}  // namespace latcube
