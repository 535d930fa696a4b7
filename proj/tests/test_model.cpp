#include <gtest/gtest.h>

#include <random>

#include "bforest/model.hpp"
#include "oracles.hpp"

using namespace bforest;

namespace {

RawSpec raw(long n, std::vector<std::int64_t> a, std::vector<std::int64_t> b, std::vector<std::int64_t> g,
            bool hr = false, bool ht = false) {
  RawSpec r;
  r.n = n;
  r.alphas = std::move(a);
  r.betas = std::move(b);
  r.gammas = std::move(g);
  r.half_r = hr;
  r.half_t = ht;
  return r;
}

Errc code_of(const RawSpec& r, bool spokes = true) {
  try {
    validate_spec(r, spokes);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return Errc::InvalidArgument;
}

}  // namespace

TEST(Validate, PrismIsFamilyOne) {
  const auto s = validate_spec(raw(3, {1}, {1}, {0}));
  EXPECT_EQ(classify_family(s), Family::One);
  EXPECT_EQ(s.r(), 1);
  EXPECT_EQ(s.s(), 1);
}

TEST(Validate, HalfNeedsEvenOrder) {
  EXPECT_EQ(code_of(raw(3, {}, {}, {0}, true)), Errc::HalfWithoutEvenN);
  EXPECT_EQ(code_of(raw(5, {1}, {}, {0}, false, true)), Errc::HalfWithoutEvenN);
}

TEST(Validate, FamilyTwoAtFour) {
  const auto s = validate_spec(raw(4, {1}, {}, {0}, true));
  EXPECT_EQ(classify_family(s), Family::Two);
}

TEST(Validate, RangeChecks) {
  EXPECT_EQ(code_of(raw(6, {3}, {}, {0})), Errc::OutOfRange);
  EXPECT_EQ(code_of(raw(6, {}, {0}, {0})), Errc::OutOfRange);
  EXPECT_EQ(code_of(raw(6, {}, {}, {6})), Errc::OutOfRange);
  EXPECT_EQ(code_of(raw(6, {}, {}, {-1})), Errc::OutOfRange);
  EXPECT_EQ(code_of(raw(0, {}, {}, {0})), Errc::OutOfRange);
  EXPECT_EQ(code_of(raw(6, {1}, {}, {})), Errc::EmptySpokes);
  EXPECT_NO_THROW(validate_spec(raw(6, {1}, {}, {}), false));
}

TEST(Validate, SortsAndDeduplicates) {
  const auto s = validate_spec(raw(11, {3, 1, 3}, {2, 2}, {7, 0, 7}));
  EXPECT_EQ(s.alphas(), (std::vector<long>{1, 3}));
  EXPECT_EQ(s.betas(), (std::vector<long>{2}));
  EXPECT_EQ(s.gammas(), (std::vector<long>{0, 7}));
}

TEST(Classify, AllFourFlagPairs) {
  EXPECT_EQ(classify_family(validate_spec(raw(4, {1}, {}, {0}, false, false))), Family::One);
  EXPECT_EQ(classify_family(validate_spec(raw(4, {1}, {}, {0}, true, false))), Family::Two);
  EXPECT_EQ(classify_family(validate_spec(raw(4, {1}, {}, {0}, false, true))), Family::Three);
  EXPECT_EQ(classify_family(validate_spec(raw(4, {1}, {}, {0}, true, true))), Family::Four);
}

TEST(Connectivity, PrismSingleSpoke) {
  const auto c = check_connectivity(validate_spec(raw(3, {1}, {1}, {0})));
  EXPECT_TRUE(c.flags.a);
  EXPECT_TRUE(c.flags.b);
  EXPECT_FALSE(c.flags.c);  // no spoke differences
  EXPECT_TRUE(c.connected);
}

TEST(Connectivity, EvenStepSplits) {
  const auto c = check_connectivity(validate_spec(raw(4, {}, {}, {0})));
  EXPECT_FALSE(c.connected);
  const auto d = check_connectivity(validate_spec(raw(5, {2}, {}, {0})));
  EXPECT_TRUE(d.flags.a);
  EXPECT_TRUE(d.connected);
  // alpha = 2 is outside [1, n/2) for n = 4, so build the n = 8 analogue
  const auto e = check_connectivity(validate_spec(raw(8, {2}, {}, {0})));
  EXPECT_FALSE(e.flags.a);
  EXPECT_FALSE(e.connected);
}

TEST(Connectivity, FourCycleFromTwoSpokes) {
  const auto c = check_connectivity(validate_spec(raw(2, {}, {}, {0, 1})));
  EXPECT_TRUE(c.flags.c);
  EXPECT_TRUE(c.connected);
  EXPECT_EQ(realize(validate_spec(raw(2, {}, {}, {0, 1}))).edge_count(), 4u);
}

TEST(Realize, PrismAdjacency) {
  const auto g = realize(validate_spec(raw(3, {1}, {1}, {0})));
  ASSERT_EQ(g.vertex_count(), 6u);
  EXPECT_EQ(g.edge_count(), 9u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_TRUE(g.adjacent(i, 3 + i));
    EXPECT_TRUE(g.adjacent(i, (i + 1) % 3));
    EXPECT_TRUE(g.adjacent(3 + i, 3 + (i + 1) % 3));
  }
}

TEST(Realize, FamilyTwoAtFourIsK4WithPendants) {
  const auto g = realize(validate_spec(raw(4, {1}, {}, {0}, true)));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(g.adjacent(i, j), i != j);
    for (std::size_t j = 0; j < 4; ++j) EXPECT_FALSE(g.adjacent(4 + i, 4 + j));
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(g.adjacent(i, 4 + j), i == j);
  }
}

TEST(Realize, SingleEdge) {
  const auto g = realize(validate_spec(raw(1, {}, {}, {0})));
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(Json, RoundTrip) {
  const auto s = validate_spec(raw(10, {1, 3}, {2}, {0, 5}, true, false));
  EXPECT_EQ(spec_from_json(to_json(s)), s);
  const auto t = spec_from_json(nlohmann::json::parse(R"({"n":4,"alphas":[1],"gammas":[0],"half_r":true})"));
  EXPECT_TRUE(t.betas().empty());
  EXPECT_EQ(classify_family(t), Family::Two);
  EXPECT_THROW(spec_from_json(nlohmann::json::parse(R"({"alphas":[1]})")), Error);
  EXPECT_THROW(spec_from_json(nlohmann::json::parse(R"({"n":"x"})")), Error);
}

TEST(Properties, RandomRealizations) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 400; ++iter) {
    const auto s = validate_spec(oracle::random_raw(rng, 1, 12, 3, 3, 4));
    const auto g = realize(s);
    const std::size_t n = static_cast<std::size_t>(s.n());
    const std::size_t right = static_cast<std::size_t>(2 * s.r() + s.s() + (s.half_r() ? 1 : 0));
    const std::size_t left = static_cast<std::size_t>(2 * s.t() + s.s() + (s.half_t() ? 1 : 0));
    for (std::size_t u = 0; u < 2 * n; ++u) {
      EXPECT_FALSE(g.adjacent(u, u));
      for (std::size_t v = 0; v < 2 * n; ++v) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
      EXPECT_EQ(g.degree(u), u < n ? right : left) << "n=" << n << " u=" << u;
    }
    // circulant blocks
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        EXPECT_EQ(g.adjacent(u, v), g.adjacent((u + 1) % n, (v + 1) % n));
        EXPECT_EQ(g.adjacent(n + u, n + v), g.adjacent(n + (u + 1) % n, n + (v + 1) % n));
      }
    const auto c = check_connectivity(s);
    EXPECT_EQ(c.connected, g.is_connected());
    if (c.flags.a || c.flags.b || c.flags.c) {
      EXPECT_TRUE(c.connected);
    }
    // same edges as the set-based construction
    const auto ref = oracle::bicirculant(s);
    EXPECT_EQ(g.edge_count(), ref.edges.size());
    for (auto [a, b] : ref.edges) EXPECT_TRUE(g.adjacent(a, b));
  }
}
