#include <random>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "solenoid/errors.hpp"
#include "solenoid/serialize.hpp"

using namespace solenoid;

namespace {

template <class T>
T round_trip(const T& value) {
  return Json::parse(Json(value).dump()).template get<T>();
}

}  // namespace

TEST(Json, ScalarForms) {
  EXPECT_EQ(Json(Rational(0)).dump(), "\"0/1\"");
  EXPECT_EQ(Json(Rational::parse("-6/4")).dump(), "\"-3/2\"");
  EXPECT_EQ(Json(Integer(12)).dump(), "12");
  const Integer big = pow(Integer(6), 40);
  EXPECT_EQ(Json(big).dump(), "\"" + big.to_string() + "\"");
  EXPECT_EQ(round_trip(big), big);
  EXPECT_THROW(Json::parse("\"1/0\"").get<Rational>(), ParseError);
  EXPECT_THROW(Json::parse("0.5").get<Rational>(), ParseError);
}

TEST(Json, PointAndBoxLayout) {
  const SolenoidPoint x(Rational::parse("1/2"), Rational::parse("1/3"), 2);
  EXPECT_EQ(Json(x).dump(), R"({"real":"1/2","two":"1/3","three":"2/1"})");
  const Box b(Rational::parse("1/4"), Rational::parse("1/2"), {Prime::two, 1, 1}, {Prime::three, 5, 2});
  EXPECT_EQ(Json(b).dump(), R"({"real":["1/4","1/2"],"two":{"res":1,"exp":1},"three":{"res":5,"exp":2}})");
  EXPECT_EQ(round_trip(b), b);
  EXPECT_EQ(round_trip(x), x);
  EXPECT_THROW(Json::parse(R"({"real":"1","two":"0","three":"0"})").get<SolenoidPoint>(), PreconditionError);
}

TEST(Json, BoxSetRoundTrip) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 100; ++i) {
    const BoxSet s = gen::random_boxset(rng, 4);
    EXPECT_EQ(round_trip(s), s);
  }
  const auto overlapping = Json::parse(R"({"boxes":[
      {"real":["0/1","1/2"],"two":{"res":0,"exp":0},"three":{"res":0,"exp":0}},
      {"real":["1/4","1/1"],"two":{"res":0,"exp":0},"three":{"res":0,"exp":0}}]})");
  EXPECT_THROW(overlapping.get<BoxSet>(), ParseError);
  EXPECT_THROW(Json::parse(R"({"boxes":[{"real":["0/1"]}]})").get<BoxSet>(), ParseError);
}

TEST(Json, ReportsRoundTrip) {
  const OrbitJoin j = orbit_join(-1, 1, -1, 1);
  const Partition p = round_trip(j.partition);
  EXPECT_EQ(p.atoms, j.partition.atoms);
  EXPECT_EQ(p.words, j.partition.words);

  const RefinementReport r = round_trip(j.report);
  EXPECT_EQ(r.depth, j.report.depth);
  EXPECT_EQ(r.atom_count, j.report.atom_count);
  EXPECT_EQ(r.real_diam_max, j.report.real_diam_max);
  EXPECT_EQ(r.all_rectangles, j.report.all_rectangles);

  const MarkovReport m = markov_check(-1, 1, 2);
  const MarkovReport m2 = round_trip(m);
  EXPECT_EQ(m2.passed, m.passed);
  EXPECT_EQ(m2.two_sided_cylinders, m.two_sided_cylinders);
  EXPECT_EQ(m2.counterexample, m.counterexample);

  const TransitionMatrix t = transition_matrix(1, 1);
  EXPECT_EQ(round_trip(t).allowed, t.allowed);
  EXPECT_EQ(to_csv(transition_matrix(1, 0)), "1,1\n1,1\n");

  const GeneratorProfile g = generator_profile(1, 0, 2);
  const GeneratorProfile g2 = round_trip(g);
  EXPECT_EQ(g2.obstructed, g.obstructed);
  EXPECT_EQ(g2.generating_trend, g.generating_trend);
  EXPECT_EQ(g2.reports.size(), g.reports.size());
  EXPECT_EQ(Json(g2).dump(), Json(g).dump());
}

TEST(Json, DirectionRoundTrip) {
  const DirectionClass c = classify(1, 0);
  const Json j(c);
  EXPECT_EQ(j["signature"], Json::parse(R"(["unstable","stable","neutral"])"));
  EXPECT_EQ(j["expansive"], false);
  const DirectionClass c2 = round_trip(c);
  EXPECT_EQ(c2.signature, c.signature);
  EXPECT_EQ(c2.cone, c.cone);

  EXPECT_EQ(Json(entropy(-2, 1))["entropy"], "log 4");
  EXPECT_EQ(round_trip(entropy(-2, 1)).base, Integer(4));

  const ZetaSeries z = zeta_series(-1, 1, 4);
  EXPECT_EQ(Json(round_trip(z)).dump(), Json(z).dump());

  const WilsonTrace t = wilson_forward(SolenoidPoint(0, 1, 1), 2);
  EXPECT_EQ(Json(t).dump(), R"({"levels":["0/1","2/3","1/9"]})");
  EXPECT_EQ(round_trip(t), t);
  const WilsonDigits d = wilson_backward(t);
  EXPECT_EQ(round_trip(d), d);
  const Reduction red = reduce_to_fundamental_domain({Rational::parse("7/4"), 0, 0});
  const Reduction red2 = round_trip(red);
  EXPECT_EQ(red2.point, red.point);
  EXPECT_EQ(red2.shift, red.shift);

  EXPECT_EQ(parse_stability("u"), Stability::unstable);
  EXPECT_EQ(parse_stability("neutral"), Stability::neutral);
  EXPECT_THROW(parse_stability("x"), ParseError);
  EXPECT_EQ(parse_cone("line_b0"), Cone::line_b0);
  EXPECT_EQ(parse_place("three"), Place::three_adic);
}
