#include "latcube/commands.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  using namespace latcube;

  std::uint64_t default_seed = 1;
  if (const char* env = std::getenv("LATCUBE_SEED")) {
    try {
      default_seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: LATCUBE_SEED must be a non-negative integer\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Exact lattice-polytope toolkit: smooth cubes, prismatoids and the integer decomposition property"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  GenerateOptions gen;
  gen.params.seed = default_seed;
  auto* g = app.add_subcommand("generate", "Generate a corpus of polytopes and a manifest");
  g->add_option("--dim", gen.params.dim, "Dimension (2-4)")->check(CLI::Range(2, 4));
  g->add_option("--count", gen.count, "Number of instances")->check(CLI::NonNegativeNumber);
  g->add_option("--seed", gen.params.seed, "Seed (default: LATCUBE_SEED or 1)");
  g->add_option("--coord-bound", gen.params.coord_bound, "Coordinate bound before scrambling")
      ->check(CLI::PositiveNumber);
  g->add_option("--scramble-rounds", gen.params.scramble_rounds, "Elementary factors in the scramble")
      ->check(CLI::NonNegativeNumber);
  g->add_option("--kind", gen.kind, "cube, prismatoid or reeve")
      ->check(CLI::IsMember({"cube", "prismatoid", "reeve"}));
  g->add_option("--out", gen.out_dir, "Output directory")->required();

  CheckOptions chk;
  auto* c = app.add_subcommand("check", "Check a property of one polytope file (two for idp-pair)");
  c->add_option("files", chk.files, "Polytope files")->required();
  c->add_option("--property", chk.property, "smooth, cube, prismatoid, idp or idp-pair")
      ->required()
      ->check(CLI::IsMember({"smooth", "cube", "prismatoid", "idp", "idp-pair"}));
  c->add_option("--extra-k", chk.extra_k, "Extra dilations beyond the dimension bound")->check(CLI::NonNegativeNumber);
  c->add_option("--format", chk.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  VerifyOptions ver;
  auto* v = app.add_subcommand("verify", "Verify a theorem over one or more corpus manifests");
  v->add_option("theorem", ver.theorem, "Theorem id or 'all'")->required();
  v->add_option("manifests", ver.manifests, "Manifest files")->required();
  v->add_option("--jobs", ver.jobs, "Worker threads")->check(CLI::PositiveNumber);
  v->add_option("--extra-k", ver.extra_k, "Extra dilations beyond the dimension bound")->check(CLI::NonNegativeNumber);
  v->add_option("--format", ver.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  v->add_option("--out", ver.out, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (g->parsed()) return cmd_generate(gen, std::cout, std::cerr);
  if (c->parsed()) return cmd_check(chk, std::cout, std::cerr);
  return cmd_verify_theorem(ver, std::cout, std::cerr);
}
