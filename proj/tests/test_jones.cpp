#include <random>

#include <gtest/gtest.h>

#include "knotslope/catalog.hpp"
#include "knotslope/jones.hpp"
#include "oracle.hpp"

using namespace knotslope;

namespace {

PDDiagram braid(const std::string& w) { return braid_to_pd(parse_braid(w)); }

oracle::Braid random_knot_braid(std::mt19937_64& rng, int max_letters) {
  for (;;) {
    auto b = oracle::random_braid(rng, 3, max_letters);
    if (oracle::components(b) == 1) return b;
  }
}

}  // namespace

TEST(Chebyshev, LowOrders) {
  EXPECT_EQ(chebyshev(0).coeffs, (std::map<int, Integer>{{0, 1}}));
  EXPECT_EQ(chebyshev(1).coeffs, (std::map<int, Integer>{{1, 1}}));
  EXPECT_EQ(chebyshev(2).coeffs, (std::map<int, Integer>{{0, -1}, {2, 1}}));
  EXPECT_EQ(chebyshev(4).coeffs, (std::map<int, Integer>{{0, 1}, {2, -3}, {4, 1}}));
  EXPECT_THROW(chebyshev(-1), InputError);
}

TEST(Chebyshev, UnknotValueIsChebyshevOfDelta) {
  for (int n = 0; n <= 6; ++n) {
    LaurentPoly v;
    for (const auto& [m, a] : chebyshev(n).coeffs) v += pow(LaurentPoly::delta(), static_cast<unsigned>(m)) * a;
    EXPECT_EQ(v, unknot_cabled_value(n)) << n;
  }
}

TEST(Jones, UnknotIsOne) {
  const auto t = jones_table(unknot_pd(), 6);
  for (const auto& e : t.entries) EXPECT_EQ(e.j, LaurentPoly::constant(1)) << e.n;
  const auto kink = parse_pd(R"({"crossings":[[1,1,2,2]]})");
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(colored_jones(kink, n), LaurentPoly::constant(1)) << n;
}

TEST(Jones, KnownPolynomials) {
  EXPECT_EQ(colored_jones(braid("2: 1 1 1"), 2), (LaurentPoly{{4, -1}, {3, 1}, {1, 1}}));
  EXPECT_EQ(colored_jones(braid("3: 1 -2 1 -2"), 2), (LaurentPoly{{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}}));
  EXPECT_EQ(colored_jones(braid("2: 1 1 1 1 1"), 2), torus_knot_jones(2, 5));
  EXPECT_EQ(colored_jones(braid("3: 1 2 1 2"), 2), torus_knot_jones(3, 2));
  EXPECT_EQ(colored_jones(braid("3: 1 2 1 2 1 2 1 2"), 2), torus_knot_jones(3, 4));
}

TEST(Jones, RejectsLinksAndBadColors) {
  EXPECT_THROW(colored_jones(braid("2: 1 1"), 2), MultiComponent);
  EXPECT_THROW(colored_jones(braid("2: 1 1 1"), 0), InputError);
  EXPECT_THROW(verify(braid("2: 1 1 1"), 2), InputError);
}

TEST(Jones, TrefoilDegreesMatchPredictor) {
  const auto d = braid("2: 1 1 1");
  const auto t = jones_table(d, 5);
  const auto st = stats(d);
  const auto a = is_adequate(d);
  const std::int64_t jmin[] = {0, 1, 2, 3, 4};
  const std::int64_t jmax[] = {0, 4, 11, 21, 34};
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(t.at(n).jmin, jmin[n - 1]);
    EXPECT_EQ(t.at(n).jmax, jmax[n - 1]);
    EXPECT_EQ(predict_extreme_degree(st, a.v_a, n, Side::A), jmin[n - 1]);
    EXPECT_EQ(predict_extreme_degree(st, a.v_b, n, Side::B), jmax[n - 1]);
  }
}

TEST(Jones, PredictorRefusesInadequateSide) {
  EXPECT_THROW(predict_extreme_degree(pretzel_pd({-2, 3, 5}), 3, Side::B), InputError);
  EXPECT_NO_THROW(predict_extreme_degree(pretzel_pd({-2, 3, 5}), 3, Side::A));
}

TEST(Jones, TableIsEngineAndThreadInvariant) {
  const auto d = braid("3: 1 -2 1 -2");
  JonesOptions naive{Engine::Naive, 1, 16};
  JonesOptions threaded{Engine::Dp, 4, 16};
  const auto a = jones_table(d, 3);
  const auto b = jones_table(d, 3, naive);
  const auto c = jones_table(d, 3, threaded);
  for (int n = 1; n <= 3; ++n) {
    EXPECT_EQ(a.at(n).j, b.at(n).j) << n;
    EXPECT_EQ(a.at(n).j, c.at(n).j) << n;
  }
}

TEST(Jones, VerifyTrefoilAndFigureEight) {
  const auto v = verify(braid("2: 1 1 1"), 5);
  EXPECT_TRUE(v.passed());
  EXPECT_EQ(*v.a_side.estimated, 0);
  EXPECT_EQ(*v.b_side.estimated, 6);
  EXPECT_EQ(v.slopes_distinct, true);

  const auto f = verify(braid("3: 1 -2 1 -2"), 4);
  EXPECT_TRUE(f.passed());
  EXPECT_EQ(*f.a_side.estimated, -4);
  EXPECT_EQ(*f.b_side.estimated, 4);
}

TEST(Jones, VerifyReportsMissingAdequateSide) {
  // Figure-eight stabilized twice: the positive kink spoils B, the negative one spoils A.
  const auto d = braid("5: 1 -2 1 -2 3 -4");
  const auto a = is_adequate(d);
  ASSERT_FALSE(a.a_adequate);
  ASSERT_FALSE(a.b_adequate);
  const auto v = verify(d, 3);
  EXPECT_TRUE(v.passed());
  ASSERT_FALSE(v.notes.empty());
  EXPECT_NE(v.notes.front().find("no adequate side"), std::string::npos);
}

TEST(JonesProperty, MatchesOracleForColorTwo) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 60; ++i) {
    const auto b = random_knot_braid(rng, 8);
    const auto d = braid_to_pd(BraidWord{b.strands, b.letters});
    EXPECT_EQ(colored_jones(d, 2), oracle::colored_jones(b, 2)) << oracle::to_text(b);
  }
}

TEST(JonesProperty, MatchesOracleForColorThree) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 25; ++i) {
    const auto b = random_knot_braid(rng, 4);
    const auto d = braid_to_pd(BraidWord{b.strands, b.letters});
    EXPECT_EQ(colored_jones(d, 3), oracle::colored_jones(b, 3)) << oracle::to_text(b);
  }
}

TEST(JonesProperty, MirrorInvertsQ) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 40; ++i) {
    const auto b = random_knot_braid(rng, 6);
    const auto d = braid_to_pd(BraidWord{b.strands, b.letters});
    for (int n = 2; n <= 3; ++n) {
      EXPECT_EQ(colored_jones(mirror(d), n), colored_jones(d, n).invert_variable()) << oracle::to_text(b) << " n=" << n;
    }
  }
}

TEST(JonesProperty, ColorOneIsTrivial) {
  std::mt19937_64 rng(54);
  for (int i = 0; i < 40; ++i) {
    const auto b = random_knot_braid(rng, 8);
    EXPECT_EQ(colored_jones(braid_to_pd(BraidWord{b.strands, b.letters}), 1), LaurentPoly::constant(1));
  }
}

TEST(Jones, VerifyIsEngineIndependentWithinOracleBound) {
  for (const auto& e : builtin_catalog()) {
    const auto d = build(e);
    // the 2-cable is the largest diagram the naive engine sees at n_max = 3
    if (4 * d.crossing_count() > kDefaultOracleBound) continue;
    const auto dp = verify(d, 3);
    const auto naive = verify(d, 3, {Engine::Naive, 1, kDefaultOracleBound});
    EXPECT_EQ(dp.passed(), naive.passed()) << e.name;
    EXPECT_EQ(dp.a_side.estimated, naive.a_side.estimated) << e.name;
    EXPECT_EQ(dp.b_side.estimated, naive.b_side.estimated) << e.name;
    for (int n = 1; n <= 3; ++n) EXPECT_EQ(dp.table.at(n).j, naive.table.at(n).j) << e.name << " n=" << n;
  }
}
