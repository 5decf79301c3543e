#include <random>

#include <gtest/gtest.h>

#include "knotslope/catalog.hpp"
#include "knotslope/states.hpp"
#include "oracle.hpp"

using namespace knotslope;

namespace {

PDDiagram braid(const std::string& w) { return braid_to_pd(parse_braid(w)); }

// Odd generators positive, even generators negative: the closure is alternating.
oracle::Braid random_alternating(std::mt19937_64& rng) {
  oracle::Braid b;
  b.strands = std::uniform_int_distribution<int>(2, 4)(rng);
  for (int g = 1; g < b.strands; ++g) b.letters.push_back(g);
  std::shuffle(b.letters.begin(), b.letters.end(), rng);
  const int extra = std::uniform_int_distribution<int>(0, 5)(rng);
  for (int i = 0; i < extra; ++i) {
    b.letters.push_back(std::uniform_int_distribution<int>(1, b.strands - 1)(rng));
  }
  std::shuffle(b.letters.begin(), b.letters.end(), rng);
  for (int& l : b.letters) l = (l % 2 == 1) ? l : -l;
  return b;
}

}  // namespace

TEST(States, TrefoilCalibration) {
  const auto d = braid("2: 1 1 1");
  const auto a = is_adequate(d);
  EXPECT_TRUE(a.a_adequate);
  EXPECT_TRUE(a.b_adequate);
  EXPECT_EQ(a.v_a, 2);
  EXPECT_EQ(a.v_b, 3);
  EXPECT_EQ(resolve(d, all_a(d)).circle_count, 2);
  EXPECT_EQ(state_graph(d, all_b(d)).edges.size(), 3u);
}

TEST(States, KinkHasOneSidedLoop) {
  const auto d = parse_pd(R"({"crossings":[[1,1,2,2]]})");
  EXPECT_EQ(resolve(d, all_a(d)).circle_count, 2);
  EXPECT_EQ(resolve(d, all_b(d)).circle_count, 1);
  const auto a = is_adequate(d);
  EXPECT_TRUE(a.a_adequate);
  EXPECT_FALSE(a.b_adequate);
  EXPECT_EQ(a.b_loops, std::vector<int>{0});
}

TEST(States, StateLengthIsChecked) {
  const auto d = braid("2: 1 1 1");
  EXPECT_THROW(resolve(d, KauffmanState(2, Smoothing::A)), InputError);
}

TEST(States, Slopes) {
  auto check = [](const PDDiagram& d, std::int64_t a, std::int64_t b) {
    const auto s = boundary_slopes(d);
    EXPECT_EQ(s.a, Slope::integer(a)) << d.name;
    EXPECT_EQ(s.b, Slope::integer(b)) << d.name;
  };
  check(braid("2: 1 1 1"), 0, 6);
  check(braid("3: 1 -2 1 -2"), -4, 4);
  check(unknot_pd(), 0, 0);
  check(pretzel_pd({-2, 3, 5}), 0, 20);
  EXPECT_THROW(boundary_slopes(braid("2: 1 1")), MultiComponent);
}

TEST(States, SlopeFormatting) {
  EXPECT_EQ(Slope::make(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Slope::make(4, 2), Slope::integer(2));
  EXPECT_EQ(Slope::make(3, 0).den, 0);
}

TEST(States, PretzelAdequacyFollowsSignOfP) {
  for (int p : {3, 5, 7, -5}) {
    const auto a = is_adequate(pretzel_pd({-2, 3, p}));
    EXPECT_EQ(a.a_adequate, p > 0) << p;
    EXPECT_EQ(a.b_adequate, p < 0) << p;
  }
}

TEST(States, CatalogInvariants) {
  for (const auto& e : builtin_catalog()) {
    const auto d = build(e);
    const auto a = is_adequate(d);
    const auto m = is_adequate(mirror(d));
    EXPECT_EQ(m.a_adequate, a.b_adequate) << e.name;
    EXPECT_EQ(m.b_adequate, a.a_adequate) << e.name;
    EXPECT_EQ(m.v_a, a.v_b) << e.name;
    EXPECT_EQ(state_slope(d, seifert_state(d)), Slope::integer(0)) << e.name;
    const auto s = boundary_slopes(d);
    EXPECT_LE(s.a.num, 0) << e.name;
    EXPECT_GE(s.b.num, 0) << e.name;
  }
}

TEST(StatesProperty, AlternatingDiagramsSatisfyEulerRelation) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto b = random_alternating(rng);
    const auto d = braid_to_pd(BraidWord{b.strands, b.letters});
    const auto a = is_adequate(d);
    EXPECT_EQ(a.v_a + a.v_b, d.crossing_count() + 2) << oracle::to_text(b);
  }
}

TEST(StatesProperty, CablingMultipliesStateCircles) {
  for (const auto& e : builtin_catalog()) {
    const auto d = build(e);
    if (d.crossing_count() > 6) continue;
    const auto a = is_adequate(d);
    for (int m = 2; m <= 3; ++m) {
      const auto c = is_adequate(morse_to_pd(cable(to_morse(d), m)));
      EXPECT_EQ(c.v_a, m * a.v_a) << e.name << " m=" << m;
      EXPECT_EQ(c.v_b, m * a.v_b) << e.name << " m=" << m;
      if (a.a_adequate) {
        EXPECT_TRUE(c.a_adequate) << e.name << " m=" << m;
      }
      if (a.b_adequate) {
        EXPECT_TRUE(c.b_adequate) << e.name << " m=" << m;
      }
    }
  }
}
