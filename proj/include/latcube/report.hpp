#pragma once

#include "latcube/cubeface.hpp"
#include "latcube/idp.hpp"
#include "latcube/io.hpp"
#include "latcube/normal_fan.hpp"
#include "latcube/prismatoid.hpp"

#include <string>
#include <vector>

namespace latcube {

inline constexpr const char* kToolName = "latcube";
inline constexpr const char* kToolVersion = LATCUBE_VERSION;

struct TheoremFailure {
  std::string instance;
  std::string witness;
};

/// Outcome of one theorem over a corpus; passes + failures = instances.
struct TheoremReport {
  std::string theorem_id;
  std::string statement;
  long long instances = 0;
  long long passes = 0;
  long long skipped = 0;
  std::vector<TheoremFailure> failures;
  std::vector<std::string> notes;
  bool ok() const { return failures.empty(); }
};

Json to_json(const TheoremReport& r);
std::string to_text(const TheoremReport& r);

Json to_json(const IdpReport& r);
Json to_json(const SliceLemmaReport& r);
Json to_json(const SliceDecomposition& d);
Json to_json(const ParallelPropositions& p);
Json to_json(const SeparationCertificate& c);

}  // namespace latcube
