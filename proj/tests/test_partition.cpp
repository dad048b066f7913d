#include <random>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "solenoid/direction.hpp"
#include "solenoid/errors.hpp"
#include "solenoid/partition.hpp"

using namespace solenoid;

namespace {

Rational q(std::string_view s) { return Rational::parse(s); }

constexpr std::uint64_t kBigCap = 10'000'000;

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Index of the atom of xi^(a,b) holding x.
std::uint32_t atom_index(const SolenoidPoint& x, std::int64_t h) {
  return static_cast<std::uint32_t>(floor(x.real() * Rational(h)).small());
}

}  // namespace

TEST(Xi, Examples) {
  const Partition p = xi(1, 0);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.atoms[0], BoxSet{Box::interval(0, q("1/2"))});
  EXPECT_EQ(p.atoms[1], BoxSet{Box::interval(q("1/2"), 1)});
  EXPECT_EQ(xi(-1, 1).size(), 3u);
  EXPECT_EQ(xi(-1, 1).atoms[2], BoxSet{Box::interval(q("2/3"), 1)});
  const Partition six = xi(1, 1);
  ASSERT_EQ(six.size(), 6u);
  for (const BoxSet& a : six.atoms) EXPECT_EQ(a.boxes()[0].width(), q("1/6"));
  EXPECT_THROW(xi(0, 0), PreconditionError);
}

TEST(Join, Examples) {
  const Partition p = xi(-1, 1);
  const Partition trivial_join = join(p, trivial_partition());
  EXPECT_EQ(trivial_join.atoms, p.atoms);
  EXPECT_EQ(join(p, p).atoms, p.atoms);

  const Partition j = join(xi(1, 0), image(xi(1, 0), 1, 0));
  ASSERT_EQ(j.size(), 4u);
  for (std::uint32_t i = 0; i < 2; ++i) {
    for (std::uint32_t k = 0; k < 2; ++k) {
      const std::size_t n = 2 * i + k;
      EXPECT_EQ(j.words[n], (Word{i, k}));
      EXPECT_TRUE(equals(j.atoms[n], BoxSet{Box(Rational(std::int64_t{i}, 2), Rational(std::int64_t{i} + 1, 2),
                                                 {Prime::two, std::int64_t{k}, 1}, PadicClass::whole(Prime::three))}));
    }
  }
  EXPECT_TRUE(is_partition_of_space(j));
}

TEST(OrbitJoin, PositiveQuadrantDepthOne) {
  const OrbitJoin j = orbit_join(1, 1, -1, 1);
  EXPECT_EQ(j.partition.size(), 216u);
  EXPECT_EQ(j.report.atom_count, 216u);
  EXPECT_EQ(j.report.depth, 1);
  EXPECT_EQ(j.report.real_diam_max, q("1/36"));
  EXPECT_EQ(j.report.two_exp_min, 1u);
  EXPECT_EQ(j.report.three_exp_min, 1u);
  EXPECT_TRUE(j.report.all_rectangles);
  EXPECT_TRUE(is_partition_of_space(j.partition));
  for (std::size_t i = 1; i < j.partition.size(); ++i) EXPECT_LT(j.partition.words[i - 1], j.partition.words[i]);
}

TEST(OrbitJoin, ReportMatchesMaterializedJoin) {
  for (auto [a, b] : {std::pair{1, 1}, {-1, 1}, {2, -1}, {1, 0}}) {
    const OrbitJoin j = orbit_join(a, b, -1, 2);
    const RefinementReport r = orbit_join_report(a, b, -1, 2);
    EXPECT_EQ(r.atom_count, j.report.atom_count);
    EXPECT_EQ(r.real_diam_max, j.report.real_diam_max);
    EXPECT_EQ(r.two_exp_min, j.report.two_exp_min);
    EXPECT_EQ(r.three_exp_min, j.report.three_exp_min);
    EXPECT_EQ(r.all_rectangles, j.report.all_rectangles);
  }
}

TEST(OrbitJoin, DirectionOneZeroKeepsTheThreeAdicFiber) {
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(orbit_join_report(1, 0, -n, n).three_exp_min, 0u);
}

TEST(OrbitJoin, ThreeHalvesHasANonRectangularAtom) {
  const OrbitJoin j = orbit_join(-1, 1, -1, 1);
  const Partition base = xi(-1, 1);
  const BoxSet direct = intersect(intersect(image(base.atoms[0], 1, -1), base.atoms[1]), image(base.atoms[0], -1, 1));
  std::size_t found = j.partition.size();
  for (std::size_t i = 0; i < j.partition.size(); ++i) {
    if (j.partition.words[i] == Word{0, 1, 0}) found = i;
  }
  ASSERT_LT(found, j.partition.size());
  EXPECT_TRUE(equals(j.partition.atoms[found], direct));
  EXPECT_GT(j.partition.atoms[found].size(), 1u);
  EXPECT_FALSE(j.report.all_rectangles);
  EXPECT_TRUE(is_partition_of_space(j.partition));
}

TEST(OrbitJoin, WordsAgreeWithPointOrbits) {
  std::mt19937_64 rng(41);
  for (auto [a, b] : {std::pair{-1, 1}, {1, 1}, {2, -1}, {1, 0}}) {
    const std::int64_t h = height(a, b).small();
    const OrbitJoin j = orbit_join(a, b, -1, 1);
    for (std::size_t i = 0; i < j.partition.size(); ++i) {
      for (const Box& bx : j.partition.atoms[i].boxes()) {
        const SolenoidPoint x = gen::random_point_in(rng, bx);
        for (int k = -1; k <= 1; ++k) {
          EXPECT_EQ(atom_index(act(x, -k * a, -k * b), h), j.partition.words[i][static_cast<std::size_t>(k + 1)]);
        }
      }
    }
  }
}

TEST(OrbitJoin, CapIsEnforced) {
  EXPECT_THROW(orbit_join(1, 1, -3, 3, 1000), ResourceLimitError);
  EXPECT_THROW(orbit_join_report(1, 1, -3, 3, 1000), ResourceLimitError);
  EXPECT_THROW(markov_check(1, 1, 2, 1000), ResourceLimitError);
  EXPECT_THROW(orbit_join(0, 0, -1, 1), PreconditionError);
}

TEST(OrbitJoin, RectangleLaw) {
  struct Case { std::int64_t a, b; int n_max; };
  for (const Case c : {Case{1, 1, 3}, Case{2, 1, 2}, Case{1, 2, 2}}) {
    const std::uint64_t h = static_cast<std::uint64_t>(height(c.a, c.b).small());
    for (int n = 1; n <= c.n_max; ++n) {
      const RefinementReport r = orbit_join_report(c.a, c.b, -n, n, kBigCap);
      EXPECT_TRUE(r.all_rectangles);
      EXPECT_EQ(r.atom_count, ipow(h, 2 * n + 1));
      EXPECT_EQ(r.real_diam_max, Rational(Integer(1), Integer(static_cast<std::int64_t>(ipow(h, n + 1)))));
      EXPECT_EQ(r.two_exp_min, static_cast<unsigned>(c.a * n));
      EXPECT_EQ(r.three_exp_min, static_cast<unsigned>(c.b * n));
    }
  }
}

TEST(OrbitJoin, ExpansiveAtomCountIsFullShift) {
  for (auto [a, b] : {std::pair{1, 1}, {-1, 1}, {1, -1}, {-1, -1}, {-1, 2}, {2, -1}, {-2, 1}, {1, -2}, {2, -2}}) {
    const std::uint64_t h = static_cast<std::uint64_t>(height(a, b).small());
    const OrbitJoin j = orbit_join(a, b, -1, 1);
    EXPECT_EQ(j.report.atom_count, ipow(h, 3)) << a << "," << b;
    EXPECT_TRUE(is_partition_of_space(j.partition)) << a << "," << b;
  }
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(closed_form_forward_atom(1, 1, 0, {}), Box(0, 1, {Prime::two, 0, 1}, {Prime::three, 0, 1}));
  const std::vector<std::uint32_t> zero{0}, five{5};
  EXPECT_EQ(closed_form_forward_atom(1, 1, 1, zero), Box(0, 1, {Prime::two, 2, 2}, {Prime::three, 3, 2}));
  EXPECT_EQ(closed_form_backward_atom(1, 1, 0, zero), Box::interval(0, q("1/36")));
  EXPECT_EQ(closed_form_backward_atom(1, 1, 5, five), Box::interval(q("35/36"), 1));
  EXPECT_THROW(closed_form_forward_atom(1, 1, 6, {}), PreconditionError);
  EXPECT_THROW(closed_form_backward_atom(-1, 1, 0, zero), PreconditionError);
}

TEST(ClosedForm, PairsMatchTheEngine) {
  const Partition base = xi(1, 1);
  for (std::uint32_t i = 0; i < 6; ++i) {
    for (std::uint32_t k = 0; k < 6; ++k) {
      const std::vector<std::uint32_t> ell{i};
      const BoxSet fwd = intersect(image(base.atoms[i], 1, 1), image(base.atoms[k], 2, 2));
      EXPECT_TRUE(equals(fwd, BoxSet{closed_form_forward_atom(1, 1, k, ell)}));
      const BoxSet bwd = intersect(base.atoms[i], image(base.atoms[k], -1, -1));
      EXPECT_TRUE(equals(bwd, BoxSet{closed_form_backward_atom(1, 1, k, ell)}));
    }
  }
}

TEST(ClosedForm, WordsUpToLengthThreeMatchTheEngine) {
  for (int n = 1; n <= 3; ++n) {
    const OrbitJoin fwd = orbit_join(1, 1, 1, n);
    ASSERT_EQ(fwd.partition.size(), ipow(6, static_cast<unsigned>(n)));
    for (std::size_t i = 0; i < fwd.partition.size(); ++i) {
      const Word& w = fwd.partition.words[i];  // i_1..i_n
      const std::vector<std::uint32_t> ells(w.rbegin() + 1, w.rend());
      ASSERT_EQ(fwd.partition.atoms[i].size(), 1u);
      EXPECT_EQ(fwd.partition.atoms[i].boxes()[0], closed_form_forward_atom(1, 1, w.back(), ells));
    }
  }
  for (int n = 1; n <= 3; ++n) {
    const OrbitJoin bwd = orbit_join(1, 1, -n, 0);
    for (std::size_t i = 0; i < bwd.partition.size(); ++i) {
      const Word& w = bwd.partition.words[i];  // i_n..i_0
      const std::vector<std::uint32_t> ells(w.begin() + 1, w.end());
      ASSERT_EQ(bwd.partition.atoms[i].size(), 1u);
      EXPECT_EQ(bwd.partition.atoms[i].boxes()[0], closed_form_backward_atom(1, 1, w.front(), ells));
    }
  }
}

TEST(Markov, Examples) {
  const MarkovReport six = markov_check(1, 1, 2);
  EXPECT_TRUE(six.passed);
  EXPECT_TRUE(six.full_shift);
  EXPECT_EQ(six.forward_cylinders, 216u);
  EXPECT_EQ(six.backward_cylinders, 216u);
  EXPECT_EQ(six.two_sided_cylinders, ipow(6, 5));
  EXPECT_FALSE(six.counterexample.has_value());
  EXPECT_TRUE(markov_check(-1, 1, 2).passed);
  EXPECT_TRUE(markov_check(1, 0, 2).passed);
  EXPECT_THROW(markov_check(1, 1, 0), PreconditionError);
}

TEST(Markov, ExpansiveDirectionsUpToTwo) {
  for (std::int64_t a = -2; a <= 2; ++a) {
    for (std::int64_t b = -2; b <= 2; ++b) {
      if (a == 0 || b == 0 || (std::abs(a) == 2 && std::abs(b) == 2 && a == b)) continue;
      const MarkovReport r = markov_check(a, b, 2, kBigCap);
      EXPECT_TRUE(r.passed) << a << "," << b;
      EXPECT_TRUE(r.full_shift) << a << "," << b;
    }
  }
}

TEST(TransitionMatrix, Examples) {
  for (auto [a, b, n] : {std::tuple{1, 1, 6u}, {-1, 1, 3u}, {1, 0, 2u}}) {
    const TransitionMatrix m = transition_matrix(a, b);
    ASSERT_EQ(m.size, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_TRUE(m.at(i, j));
  }
}

TEST(TransitionMatrix, WordCountsAreSymbolicCoverCounts) {
  for (auto [a, b] : {std::pair{1, 1}, {-1, 1}, {1, -2}, {-1, -1}, {2, 1}}) {
    const TransitionMatrix m = transition_matrix(a, b);
    const Integer h = height(a, b);
    for (unsigned n = 1; n <= 5; ++n) {
      EXPECT_EQ(count_words(m, n), pow(h, n));
      EXPECT_EQ(count_periodic_words(m, n), pow(h, n));
      EXPECT_LE(periodic_point_count(a, b, n), Rational(pow(h, n)));
    }
  }
}

TEST(Generator, PositiveQuadrantWidths) {
  const GeneratorProfile g = generator_profile(1, 1, 3);
  EXPECT_TRUE(g.generating_trend);
  EXPECT_TRUE(g.obstructed.empty());
  ASSERT_EQ(g.reports.size(), 3u);
  const Rational widths[] = {q("1/36"), q("1/216"), q("1/1296")};
  for (unsigned n = 0; n < 3; ++n) {
    EXPECT_EQ(g.reports[n].real_diam_max, widths[n]);
    EXPECT_EQ(g.reports[n].two_exp_min, n + 1);
    EXPECT_EQ(g.reports[n].three_exp_min, n + 1);
  }
}

TEST(Generator, NonExpansiveDirectionsAreObstructed) {
  const GeneratorProfile g = generator_profile(1, 0, 3);
  EXPECT_FALSE(g.generating_trend);
  EXPECT_EQ(g.obstructed, std::vector<Place>{Place::three_adic});
  for (const auto& r : g.reports) EXPECT_EQ(r.three_exp_min, 0u);

  const GeneratorProfile h = generator_profile(0, 1, 2);
  EXPECT_FALSE(h.generating_trend);
  EXPECT_EQ(h.obstructed, std::vector<Place>{Place::two_adic});
  EXPECT_THROW(generator_profile(1, 1, 0), PreconditionError);
}
