#pragma once

#include "latcube/gen.hpp"
#include "latcube/io.hpp"
#include "latcube/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace latcube {

/// Exit codes of the command layer.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

struct GenerateOptions {
  GenParams params;
  int count = 10;
  std::string kind = "cube";  // cube | prismatoid | reeve
  std::string out_dir;
};

struct CheckOptions {
  std::vector<std::string> files;
  std::string property;  // smooth | cube | prismatoid | idp | idp-pair
  int extra_k = 0;
  std::string format = "json";
};

struct VerifyOptions {
  std::string theorem;  // an id from theorem_ids(), or "all"
  std::vector<std::string> manifests;
  int jobs = 1;
  int extra_k = 1;
  std::string format = "json";
  std::string out;  // empty: stdout
};

struct CorpusInstance {
  std::string id;
  Polytope polytope;
  std::uint64_t seed = 0;
};

/// Theorem identifiers accepted by verify, in report order.
const std::vector<std::string>& theorem_ids();
std::string theorem_statement(const std::string& id);

/// Instances listed in the manifests, in order; throws ParseError.
std::vector<CorpusInstance> load_corpus(const std::vector<std::string>& manifests);

/// Runs one theorem over the corpus with `jobs` worker threads; the report
/// does not depend on `jobs`. Throws std::invalid_argument on an unknown id.
TheoremReport verify_theorem(const std::string& id, const std::vector<CorpusInstance>& corpus, int jobs,
                             int extra_k);

/// Instance `index` of a corpus kind, deterministic in (params, index).
GeneratedPolytope generate_instance(const std::string& kind, const GenParams& params, int index,
                                    std::uint64_t& instance_seed);

int cmd_generate(const GenerateOptions& opts, std::ostream& out, std::ostream& err);
int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify_theorem(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace latcube
