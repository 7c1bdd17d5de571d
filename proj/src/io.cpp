#include "latcube/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace latcube {

namespace {

Integer integer_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty number");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError("bad number '" + s + "'");
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw ParseError("bad number '" + s + "'");
  return Integer(s);
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

Json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return Json(x.convert_to<std::int64_t>());
  return Json(x.str());
}

Json to_json(const Rational& q) {
  if (is_integral(q)) return to_json(floor(q));
  return Json(to_string(q));
}

Json to_json(const LatticeVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const RationalPoint& p) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) out.push_back(to_json(p(i)));
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Rational(Integer(j.get<std::uint64_t>()));
  if (!j.is_string()) throw ParseError("coordinate must be an integer or a \"p/q\" string");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(integer_from_string(s));
  const Integer num = integer_from_string(s.substr(0, slash));
  const Integer den = integer_from_string(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  return Rational(num, den);
}

Json polytope_to_json(const Polytope& p) {
  Json out;
  out["dim"] = p.ambient_dim();
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(to_json(v));
  out["vertices"] = vs;
  return out;
}

Polytope polytope_from_json(const Json& j) {
  const Json& dim = field(j, "dim");
  if (!dim.is_number_integer() || dim.get<long long>() < 1) throw ParseError("'dim' must be a positive integer");
  const auto d = dim.get<int>();
  const Json& vs = field(j, "vertices");
  if (!vs.is_array() || vs.empty()) throw ParseError("'vertices' must be a nonempty array");
  std::vector<RationalPoint> pts;
  for (const auto& v : vs) {
    if (!v.is_array() || static_cast<int>(v.size()) != d) throw ParseError("vertex of wrong length");
    RationalPoint p(d);
    for (int i = 0; i < d; ++i) p(i) = rational_from_json(v[static_cast<std::size_t>(i)]);
    pts.push_back(std::move(p));
  }
  return from_vertices(pts, Embedding::allow_lower_dimensional);
}

Polytope read_polytope(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  try {
    return polytope_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

void write_polytope(const std::filesystem::path& path, const Polytope& p) {
  write_text(path, polytope_to_json(p).dump(2) + "\n");
}

Json manifest_to_json(const std::vector<ManifestEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) {
    Json j;
    j["id"] = e.id;
    j["file"] = e.file;
    j["kind"] = e.kind;
    j["params"] = {{"dim", e.params.dim},
                   {"coord_bound", e.params.coord_bound},
                   {"scramble_rounds", e.params.scramble_rounds},
                   {"seed", e.params.seed}};
    j["construction"] = e.construction;
    j["rejected"] = e.rejected;
    out.push_back(j);
  }
  return out;
}

std::vector<ManifestEntry> manifest_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("manifest must be a JSON array");
  std::vector<ManifestEntry> out;
  try {
    for (const auto& e : j) {
      ManifestEntry m;
      m.id = field(e, "id").get<std::string>();
      m.file = field(e, "file").get<std::string>();
      m.kind = e.value("kind", std::string("cube"));
      if (e.contains("params")) {
        const Json& p = e.at("params");
        m.params.dim = p.value("dim", 2);
        m.params.coord_bound = p.value("coord_bound", 4LL);
        m.params.scramble_rounds = p.value("scramble_rounds", 0);
        m.params.seed = p.value("seed", std::uint64_t{0});
      }
      m.construction = e.value("construction", std::string());
      m.rejected = e.value("rejected", 0);
      out.push_back(std::move(m));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("manifest: ") + e.what());
  }
  return out;
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return manifest_from_json(Json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace latcube
