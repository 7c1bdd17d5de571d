#pragma once

#include "latcube/gen.hpp"
#include "latcube/polytope.hpp"

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace latcube {

using Json = nlohmann::ordered_json;

/// Malformed input file (exit code 2 in the CLI).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Integers that fit in int64 are JSON numbers, larger ones decimal strings;
/// non-integral rationals are "p/q" strings.
Json to_json(const Integer& x);
Json to_json(const Rational& q);
Json to_json(const LatticeVector& v);
Json to_json(const RationalPoint& p);

Rational rational_from_json(const Json& j);

/// {"dim": d, "vertices": [[...], ...]} with vertices in canonical order.
Json polytope_to_json(const Polytope& p);
/// Lower-dimensional vertex sets are accepted (embedded).
Polytope polytope_from_json(const Json& j);

Polytope read_polytope(const std::filesystem::path& path);
void write_polytope(const std::filesystem::path& path, const Polytope& p);

struct ManifestEntry {
  std::string id;
  std::string file;  // relative to the manifest directory
  std::string kind;  // "cube", "prismatoid", "reeve"
  GenParams params;
  std::string construction;
  int rejected = 0;
};

Json manifest_to_json(const std::vector<ManifestEntry>& entries);
std::vector<ManifestEntry> manifest_from_json(const Json& j);
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);

/// Writes `text` to `path`; throws std::runtime_error if it cannot be written.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace latcube
