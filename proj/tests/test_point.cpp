#include <random>

#include <gtest/gtest.h>

#include "closed_forms.hpp"
#include "generators.hpp"
#include "solenoid/errors.hpp"
#include "solenoid/point.hpp"

using namespace solenoid;
using namespace solenoid::gen;

namespace {

Rational q(std::string_view s) { return Rational::parse(s); }
SolenoidPoint pt(std::string_view r, std::string_view t, std::string_view s) { return {q(r), q(t), q(s)}; }

}  // namespace

TEST(Reduce, Examples) {
  auto r = reduce_to_fundamental_domain({q("3/2"), q("3/2"), q("3/2")});
  EXPECT_EQ(r.point, SolenoidPoint());
  EXPECT_EQ(r.shift, q("3/2"));

  r = reduce_to_fundamental_domain({q("7/4"), 0, 0});
  EXPECT_EQ(r.point, pt("3/4", "-1", "-1"));
  EXPECT_EQ(r.shift, Rational(1));

  // {x2} = 1/2, {x3} = 0, floor(-1/2) = -1, so r = -1/2 and the point is g - r.
  r = reduce_to_fundamental_domain({0, q("1/2"), 0});
  EXPECT_EQ(r.shift, q("-1/2"));
  EXPECT_EQ(r.point, pt("1/2", "1", "1/2"));
}

TEST(Reduce, LandsInDomainByAGammaTranslate) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 1000; ++i) {
    const SolenoidPoint base = random_point(rng);
    const Rational g = random_z_sixth_unit(rng, 4, 3) * Rational(uniform(rng, -5, 5));
    const AdeleTriple t{base.real() + g, base.two() + g, base.three() + g};
    const Reduction r = reduce_to_fundamental_domain(t);
    EXPECT_TRUE(in_fundamental_domain(r.point.as_triple()));
    EXPECT_TRUE(in_z_sixth(r.shift));
    EXPECT_EQ(r.point.real() + r.shift, t.real);
    EXPECT_EQ(r.point.two() + r.shift, t.two);
    EXPECT_EQ(r.point.three() + r.shift, t.three);
    EXPECT_EQ(r.point, base);
  }
}

TEST(Point, ConstructorChecksDomain) {
  EXPECT_THROW(pt("1", "0", "0"), PreconditionError);
  EXPECT_THROW(pt("-1/2", "0", "0"), PreconditionError);
  EXPECT_THROW(pt("0", "1/2", "0"), PreconditionError);
  EXPECT_THROW(pt("0", "0", "1/3"), PreconditionError);
  EXPECT_NO_THROW(pt("0", "1/3", "1/2"));
}

TEST(Add, Examples) {
  EXPECT_EQ(add(pt("1/2", "0", "0"), pt("3/4", "0", "0")), pt("1/4", "-1", "-1"));
  const SolenoidPoint x = pt("2/5", "1/3", "7/2");
  EXPECT_EQ(add(x, SolenoidPoint()), x);
  // (1/2,1,1) + (1/2,0,0) = (1,1,1), which is the diagonal image of 1.
  EXPECT_EQ(add(pt("1/2", "1", "1"), pt("1/2", "0", "0")), SolenoidPoint());
  EXPECT_EQ(add(pt("1/2", "1", "1"), pt("1/2", "-1", "-1")), pt("0", "-1", "-1"));
}

TEST(Neg, Examples) {
  EXPECT_EQ(neg(SolenoidPoint()), SolenoidPoint());
  EXPECT_EQ(neg(pt("1/2", "1", "1")), pt("1/2", "0", "0"));
  EXPECT_EQ(neg(pt("1/4", "0", "0")), pt("3/4", "1", "1"));
}

TEST(Act, Examples) {
  EXPECT_EQ(act(pt("1/2", "1", "1"), 0, 1), pt("1/2", "2", "2"));
  EXPECT_EQ(act(pt("0", "1", "1"), -1, 0), pt("1/2", "1", "1"));
  EXPECT_EQ(act(pt("1/2", "1", "1"), 1, 0), pt("0", "1", "1"));
  const SolenoidPoint x = pt("5/7", "2/9", "3/4");
  EXPECT_EQ(act(x, 0, 0), x);
}

TEST(GroupLaw, AxiomsOnRandomPoints) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 1000; ++i) {
    const SolenoidPoint x = random_point(rng), y = random_point(rng), z = random_point(rng);
    EXPECT_EQ(add(add(x, y), z), add(x, add(y, z)));
    EXPECT_EQ(add(x, y), add(y, x));
    EXPECT_EQ(add(x, SolenoidPoint()), x);
    EXPECT_EQ(add(x, neg(x)), SolenoidPoint());
    EXPECT_EQ(add(x, y), reduce_to_fundamental_domain({x.real() + y.real(), x.two() + y.two(), x.three() + y.three()}).point);
  }
}

TEST(Act, ClosedFormsOnRandomPoints) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 1000; ++i) {
    const SolenoidPoint x = random_point(rng);
    EXPECT_EQ(act(x, 0, 1), times_three(x));
    EXPECT_EQ(act(x, -1, 0), halve(x));
    EXPECT_EQ(act(x, -1, 1), three_halves(x));
    EXPECT_EQ(act(act(x, -1, 0), 1, 0), x);
  }
}

TEST(Act, HomomorphismAndComposition) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 500; ++i) {
    const SolenoidPoint x = random_point(rng), y = random_point(rng);
    const std::int64_t a = uniform(rng, -3, 3), b = uniform(rng, -3, 3);
    const std::int64_t c = uniform(rng, -3, 3), d = uniform(rng, -3, 3);
    EXPECT_EQ(act(add(x, y), a, b), add(act(x, a, b), act(y, a, b)));
    EXPECT_EQ(act(act(x, a, b), c, d), act(x, a + c, b + d));
    EXPECT_EQ(act(act(x, a, b), -a, -b), x);
  }
}

TEST(Distance, Examples) {
  const SolenoidPoint x = pt("1/3", "5/7", "1/2");
  EXPECT_EQ(distance(x, x), Rational(0));
  EXPECT_EQ(distance(SolenoidPoint(), pt("1/2", "0", "0"), {2, 2}), q("1/2"));
  EXPECT_EQ(distance(SolenoidPoint(), pt("0", "1", "0"), {2, 2}), Rational(1));
}

TEST(Distance, SymmetricAndTranslationInvariant) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 40; ++i) {
    const SolenoidPoint x = random_point(rng), y = random_point(rng), z = random_point(rng);
    const DistanceBounds b{1, 2};
    EXPECT_EQ(distance(x, y, b), distance(y, x, b));
    EXPECT_EQ(distance(x, y, b), distance(add(x, z), add(y, z), b));
    EXPECT_LE(distance(x, y, b), Rational(1));
  }
}

TEST(Wilson, Examples) {
  EXPECT_EQ(wilson_forward(pt("0", "1", "1"), 2).levels, (std::vector<Rational>{0, q("2/3"), q("1/9")}));
  EXPECT_EQ(wilson_forward(SolenoidPoint(), 3).levels, (std::vector<Rational>{0, 0, 0, 0}));
  EXPECT_EQ(wilson_forward(pt("1/2", "0", "0"), 1).levels, (std::vector<Rational>{q("1/2"), q("1/12")}));

  WilsonDigits d = wilson_backward({{0, q("2/3"), q("1/9")}});
  EXPECT_EQ(d.real, Rational(0));
  EXPECT_EQ(d.two_mod, Integer(1));
  EXPECT_EQ(d.three_mod, Integer(1));
  EXPECT_EQ(d.depth, 2u);

  d = wilson_backward({{0}});
  EXPECT_EQ(d.depth, 0u);
  EXPECT_EQ(d.two_mod, Integer(0));

  d = wilson_backward({{q("1/2"), q("1/12")}});
  EXPECT_EQ(d.real, q("1/2"));
  EXPECT_EQ(d.two_mod, Integer(0));
  EXPECT_EQ(d.three_mod, Integer(0));
}

TEST(Wilson, RejectsInvalidTraces) {
  EXPECT_THROW(wilson_backward({}), PreconditionError);
  EXPECT_THROW(wilson_backward({{0, q("1/7")}}), PreconditionError);
  EXPECT_THROW(wilson_backward({{q("3/2")}}), PreconditionError);
}

TEST(Wilson, RoundTripAndCompatibility) {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 300; ++i) {
    const SolenoidPoint x = random_point(rng);
    const unsigned k = static_cast<unsigned>(uniform(rng, 0, 8));
    const WilsonTrace t = wilson_forward(x, k);
    ASSERT_EQ(t.levels.size(), k + 1);
    for (unsigned j = 0; j < k; ++j) EXPECT_TRUE((t.levels[j + 1] * 6 - t.levels[j]).is_integer());
    const WilsonDigits d = wilson_backward(t);
    EXPECT_EQ(d.real, x.real());
    EXPECT_EQ(d.two_mod, padic_residue(x.two(), Prime::two, k));
    EXPECT_EQ(d.three_mod, padic_residue(x.three(), Prime::three, k));
  }
}
