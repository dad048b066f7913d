#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "gallery_panels.hpp"
#include "solenoid/render.hpp"
#include "solenoid/serialize.hpp"

using namespace solenoid;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  const Result r = run(std::move(args));
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  return Json::parse(r.out);
}

}  // namespace

TEST(Cli, Classify) {
  const Json j = run_json({"classify", "--a", "1", "--b", "0"});
  EXPECT_EQ(j["class"]["signature"], Json::parse(R"(["unstable","stable","neutral"])"));
  EXPECT_EQ(j["class"]["expansive"], false);
  EXPECT_EQ(j["class"].get<DirectionClass>().cone, Cone::line_b0);
  EXPECT_EQ(j["lyapunov"][1], Json::parse(R"({"log2":-1,"log3":0})"));
}

TEST(Cli, RefineReport) {
  const Json j = run_json({"refine", "--a", "1", "--b", "1", "--depth", "2"});
  const RefinementReport r = j["report"].get<RefinementReport>();
  EXPECT_EQ(r.atom_count, 7776u);
  EXPECT_EQ(r.real_diam_max, Rational::parse("1/216"));
  EXPECT_TRUE(r.all_rectangles);
  EXPECT_FALSE(j.contains("atoms"));
  const Json atoms = run_json({"refine", "--a", "-1", "--b", "1", "--depth", "1", "--atoms"});
  EXPECT_EQ(atoms["atoms"].get<Partition>().size(), 27u);
}

TEST(Cli, ZetaCountsAndTable) {
  const Result r = run({"zeta", "--a", "1", "--b", "1", "--order", "3"});
  ASSERT_EQ(r.code, cli::kOk);
  const ZetaSeries z = Json::parse(r.out).get<ZetaSeries>();
  EXPECT_EQ(z.counts, (std::vector<Rational>{5, 35, 215}));
  EXPECT_NE(r.err.find("(1-z)/(1-6z)"), std::string::npos);
}

TEST(Cli, PointCommandsRoundTrip) {
  const Reduction red = run_json({"reduce", "--real", "7/4", "--two", "0", "--three", "0"}).get<Reduction>();
  EXPECT_EQ(red.point, SolenoidPoint(Rational::parse("3/4"), -1, -1));
  EXPECT_EQ(red.shift, Rational(1));
  EXPECT_EQ(run_json({"add", "--x", "1/2,0,0", "--y", "3/4,0,0"}).get<SolenoidPoint>(),
            SolenoidPoint(Rational::parse("1/4"), -1, -1));
  EXPECT_EQ(run_json({"act", "--x", "0,1,1", "--a", "-1", "--b", "0"}).get<SolenoidPoint>(),
            SolenoidPoint(Rational::parse("1/2"), 1, 1));
  const Json w = run_json({"wilson", "--x", "0,1,1", "--depth", "2"});
  EXPECT_EQ(w["trace"].get<WilsonTrace>(), wilson_forward(SolenoidPoint(0, 1, 1), 2));
  EXPECT_EQ(w["digits"]["two_mod"], 1);
}

TEST(Cli, ImageAndPartition) {
  const BoxSet img = run_json({"image", "--a", "-1", "--b", "1", "--atom", "0"}).get<BoxSet>();
  EXPECT_TRUE(equals(img, gallery_panel_set(-1, 1)));
  const std::string set = Json(BoxSet{Box::interval(0, Rational::parse("1/2"))}).dump();
  EXPECT_TRUE(equals(run_json({"image", "--a", "1", "--b", "0", "--set", set}).get<BoxSet>(),
                     BoxSet{Box(0, 1, {Prime::two, 0, 1}, PadicClass::whole(Prime::three))}));
  const Partition p = run_json({"partition", "--a", "1", "--b", "1"}).get<Partition>();
  EXPECT_EQ(p.atoms, xi(1, 1).atoms);
}

TEST(Cli, MarkovAndGenerator) {
  const Json m = run_json({"markov-check", "--a", "-1", "--b", "1", "--depth", "2"});
  EXPECT_TRUE(m["markov"].get<MarkovReport>().passed);
  EXPECT_EQ(m["transition_matrix"].get<TransitionMatrix>().size, 3u);
  const Result csv = run({"markov-check", "--a", "1", "--b", "0", "--depth", "1", "--format", "csv"});
  EXPECT_EQ(csv.out, "1,1\n1,1\n");
  const Json g = run_json({"generator-check", "--a", "1", "--b", "0", "--depth", "2"});
  EXPECT_EQ(g["verdict"], "obstructed(Q3)");
  EXPECT_EQ(run_json({"generator-check", "--a", "1", "--b", "1", "--depth", "2"})["verdict"],
            "consistent with generating through depth 2");
  EXPECT_EQ(run_json({"entropy", "--a", "-2", "--b", "1"})["entropy"], "log 4");
}

TEST(Cli, RenderAndGalleryAreDeterministic) {
  const std::vector<std::string> render{"render", "--a", "-1", "--b", "1", "--atom", "0", "--act"};
  const Result r1 = run(render), r2 = run(render);
  ASSERT_EQ(r1.code, cli::kOk) << r1.err;
  EXPECT_EQ(r1.out, r2.out);
  EXPECT_EQ(r1.out, render_boxset(gallery_panel_set(-1, 1), RenderSpec{}));

  const std::vector<std::string> gallery{"gallery", "--directions", "1,1;-1,1;1,-1"};
  const Result g1 = run(gallery), g2 = run(gallery);
  ASSERT_EQ(g1.code, cli::kOk) << g1.err;
  EXPECT_EQ(g1.out, g2.out);
  EXPECT_EQ(gen::gallery_panels(g1.out).size(), 3u);
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "solenoid_cli_test.json";
  std::filesystem::remove(path);
  const Result r = run({"entropy", "--a", "1", "--b", "1", "--out", path.string()});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(Json::parse(in)["base"], 6);
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kBadArguments);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kBadArguments);
  EXPECT_EQ(run({"classify", "--a", "x", "--b", "1"}).code, cli::kBadArguments);
  EXPECT_EQ(run({"add", "--x", "1/0,0,0", "--y", "0,0,0"}).code, cli::kBadArguments);
  EXPECT_EQ(run({"entropy", "--a", "0", "--b", "0"}).code, cli::kPrecondition);
  EXPECT_EQ(run({"act", "--x", "3/2,0,0", "--a", "1", "--b", "0"}).code, cli::kPrecondition);
  EXPECT_EQ(run({"gallery", "--directions", "1,0"}).code, cli::kPrecondition);
  const Result capped = run({"refine", "--a", "1", "--b", "1", "--depth", "3", "--cap", "1000"});
  EXPECT_EQ(capped.code, cli::kResourceLimit);
  EXPECT_FALSE(capped.err.empty());
}
