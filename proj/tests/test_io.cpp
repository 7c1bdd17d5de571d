#include "latcube/commands.hpp"
#include "latcube/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <iomanip>
#include <sstream>

using namespace latcube;

namespace {

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("latcube-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Json, Scalars) {
  EXPECT_EQ(to_json(Integer(-7)), Json(-7));
  const Integer big = Integer(1) << 80;
  EXPECT_TRUE(to_json(big).is_string());
  EXPECT_EQ(rational_from_json(to_json(big)), Rational(big));
  EXPECT_EQ(to_json(Rational(3, 4)), Json("3/4"));
  EXPECT_EQ(rational_from_json(Json("-3/4")), Rational(-3, 4));
  EXPECT_EQ(rational_from_json(Json(5)), Rational(5));
  EXPECT_THROW(rational_from_json(Json("abc")), ParseError);
  EXPECT_THROW(rational_from_json(Json(1.5)), ParseError);
}

TEST(Json, PolytopeRoundTrip) {
  const Polytope p = from_vertices({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}});
  EXPECT_EQ(polytope_from_json(polytope_to_json(p)), p);
  const Polytope half = dilate(p, Rational(1, 3));
  EXPECT_EQ(polytope_from_json(polytope_to_json(half)), half);
  const auto dir = temp_dir("roundtrip");
  write_polytope(dir / "p.json", p);
  EXPECT_EQ(read_polytope(dir / "p.json"), p);
}

TEST(Json, Malformed) {
  EXPECT_THROW(read_polytope(LATCUBE_TEST_DATA "/malformed.json"), ParseError);
  EXPECT_THROW(read_polytope(LATCUBE_TEST_DATA "/missing.json"), ParseError);
  EXPECT_THROW(polytope_from_json(Json::parse(R"({"dim": 2})")), ParseError);
  EXPECT_THROW(polytope_from_json(Json::parse(R"({"dim": 2, "vertices": [[0,0],[1]]})")), ParseError);
  EXPECT_THROW(polytope_from_json(Json::parse(R"({"dim": 2, "vertices": []})")), ParseError);
  EXPECT_EQ(read_polytope(LATCUBE_TEST_DATA "/unit_cube.json").num_vertices(), 8);
}

TEST(Json, ManifestRoundTrip) {
  ManifestEntry e;
  e.id = "cube-3d-0001";
  e.file = "cube-3d-0001.json";
  e.kind = "cube";
  e.params = {3, 4, 2, 12345678901234ULL};
  e.construction = "prism";
  e.rejected = 3;
  const auto back = manifest_from_json(manifest_to_json({e}));
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].id, e.id);
  EXPECT_EQ(back[0].params.seed, e.params.seed);
  EXPECT_EQ(back[0].params.dim, 3);
  EXPECT_EQ(back[0].rejected, 3);
  EXPECT_THROW(manifest_from_json(Json::parse("{}")), ParseError);
}

TEST(Commands, GenerateIsDeterministic) {
  GenerateOptions g;
  g.params = {2, 3, 1, 11};
  g.count = 4;
  std::string texts[2];
  for (int run = 0; run < 2; ++run) {
    g.out_dir = temp_dir("gen" + std::to_string(run)).string();
    std::ostringstream out, err;
    ASSERT_EQ(cmd_generate(g, out, err), kExitPass) << err.str();
    std::ostringstream files;
    for (int i = 0; i < 4; ++i) {
      std::ostringstream name;
      name << "cube-2d-" << std::setw(4) << std::setfill('0') << i << ".json";
      files << polytope_to_json(read_polytope(std::filesystem::path(g.out_dir) / name.str())).dump();
    }
    texts[run] = files.str();
  }
  EXPECT_EQ(texts[0], texts[1]);
}

TEST(Commands, CheckExitCodes) {
  std::ostringstream out, err;
  CheckOptions c;
  c.files = {LATCUBE_TEST_DATA "/unit_cube.json"};
  c.property = "smooth";
  EXPECT_EQ(cmd_check(c, out, err), kExitPass);
  c.files = {LATCUBE_TEST_DATA "/reeve2.json"};
  EXPECT_EQ(cmd_check(c, out, err), kExitFail);
  c.property = "idp";
  EXPECT_EQ(cmd_check(c, out, err), kExitFail);
  c.files = {LATCUBE_TEST_DATA "/malformed.json"};
  EXPECT_EQ(cmd_check(c, out, err), kExitUsage);
  c.files = {LATCUBE_TEST_DATA "/unit_cube.json"};
  c.property = "bogus";
  EXPECT_EQ(cmd_check(c, out, err), kExitUsage);
}

TEST(Commands, VerifyJobsIndependent) {
  const auto dir = temp_dir("verify");
  GenerateOptions g;
  g.params = {3, 3, 1, 5};
  g.count = 3;
  g.out_dir = dir.string();
  std::ostringstream sink;
  ASSERT_EQ(cmd_generate(g, sink, sink), kExitPass);
  const auto corpus = load_corpus({(dir / "manifest.json").string()});
  ASSERT_EQ(corpus.size(), 3u);
  for (const auto& id : theorem_ids()) {
    const TheoremReport a = verify_theorem(id, corpus, 1, 0);
    const TheoremReport b = verify_theorem(id, corpus, 3, 0);
    EXPECT_EQ(to_json(a).dump(), to_json(b).dump()) << id;
    EXPECT_EQ(a.passes + static_cast<long long>(a.failures.size()), a.instances) << id;
  }
  EXPECT_THROW(verify_theorem("T9.9", corpus, 1, 0), std::invalid_argument);
}
