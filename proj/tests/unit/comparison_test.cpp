#include <gtest/gtest.h>

#include <random>

#include "misere/comparison.hpp"
#include "misere/enumeration.hpp"
#include "misere/notation.hpp"
#include "misere/universe.hpp"
#include "oracles.hpp"

namespace misere {
namespace {

class ComparisonTest : public ::testing::Test {
 protected:
  GameId g(const char* text) { return parse_game(store, text); }

  GameStore store;
  DeadEnds de{store};
  std::unique_ptr<Universe> dicots = Universe::dicots(de);
  std::unique_ptr<Universe> full = Universe::dead_ending(de);
  std::unique_ptr<Universe> d1 = parse_universe(de, "D(-1)");
  std::unique_ptr<Universe> d10 = parse_universe(de, "D(-1:0)");
};

TEST_F(ComparisonTest, Examples) {
  EXPECT_TRUE(geq(*dicots, g("{0,*|*}"), kZero));
  EXPECT_FALSE(geq(*dicots, g("{0|*}"), kZero));
  EXPECT_TRUE(geq(*full, g("{0,{0,-1|M(5)}|-2,0}"), g("M(5)")));
  EXPECT_TRUE(equiv(*dicots, g("{0,*|*}"), g("{0,SL|*}")));
  for (Universe* u : {dicots.get(), full.get(), d1.get(), d10.get()}) {
    EXPECT_FALSE(equiv(*u, g("-1"), kZero));
    EXPECT_EQ(compare(*u, kZero, kZero), Relation::Equal);
  }
  EXPECT_EQ(compare(*full, g("-1"), g("-2")), Relation::Incomparable);
  EXPECT_EQ(compare(*full, g("-1"), g("{|-1,0}")), Relation::Greater);
  EXPECT_EQ(compare(*full, g("{|-1,0}"), g("-1")), Relation::Less);
  EXPECT_EQ(relation_symbol(Relation::Incomparable), "||");
}

TEST_F(ComparisonTest, DeadEndComparisonIsAbsolute) {
  const auto& l3 = de.level(3).elements;
  for (Universe* u : {d1.get(), d10.get(), full.get()})
    for (GameId a : l3)
      for (GameId b : l3) EXPECT_EQ(geq(*u, a, b), de.geq(a, b)) << u->name() << " " << to_string(store, a) << " " << to_string(store, b);
}

TEST_F(ComparisonTest, OrderAxiomsOnDayTwo) {
  for (Universe* u : {dicots.get(), d10.get(), full.get()}) {
    const auto games = enumerate_trees(*u, 2);
    for (GameId a : games) EXPECT_TRUE(geq(*u, a, a));
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::size_t> pick(0, games.size() - 1);
    for (int i = 0; i < 3000; ++i) {
      const GameId a = games[pick(rng)], b = games[pick(rng)], c = games[pick(rng)];
      if (geq(*u, a, b) && geq(*u, b, c)) EXPECT_TRUE(geq(*u, a, c));
    }
    for (GameId a : games)
      for (GameId b : games)
        if (geq(*u, a, b) && geq(*u, b, a)) EXPECT_EQ(compare(*u, a, b), Relation::Equal);
  }
}

TEST_F(ComparisonTest, SmallerUniversesCompareMore) {
  const auto games = enumerate_trees(*full, 2);
  for (GameId a : games)
    for (GameId b : games) {
      if (!geq(*full, a, b)) continue;
      for (Universe* u : {d1.get(), d10.get()}) EXPECT_TRUE(geq(*u, a, b));
      if (dicots->contains(a) && dicots->contains(b)) EXPECT_TRUE(geq(*dicots, a, b));
    }
}

TEST_F(ComparisonTest, DicotComparisonIsSoundAgainstPlay) {
  // necessary condition: G >= H forces o(G + X) >= o(H + X) for every dicot X tested
  const auto games = testing::dicot_trees(store, 2);
  std::vector<GameId> probes = games;
  std::mt19937_64 rng(29);
  auto nonempty_subset = [&rng](const std::vector<GameId>& from) {
    std::vector<GameId> out;
    while (out.empty())
      for (GameId x : from)
        if (rng() % 3 == 0) out.push_back(x);
    return out;
  };
  std::vector<GameId> day3;
  for (int i = 0; i < 300; ++i) day3.push_back(store.intern(nonempty_subset(games), nonempty_subset(games)));
  probes.insert(probes.end(), day3.begin(), day3.end());
  for (int i = 0; i < 300; ++i) probes.push_back(store.intern(nonempty_subset(day3), nonempty_subset(day3)));
  for (GameId a : games)
    for (GameId b : games) {
      bool pointwise = true;
      for (GameId x : probes)
        if (!outcome_geq(store.outcome(store.sum(a, x)), store.outcome(store.sum(b, x)))) {
          pointwise = false;
          break;
        }
      if (geq(*dicots, a, b)) EXPECT_TRUE(pointwise) << to_string(store, a) << " >= " << to_string(store, b);
      if (!pointwise) EXPECT_FALSE(geq(*dicots, a, b));
    }
}

TEST_F(ComparisonTest, SumIsCongruence) {
  for (Universe* u : {dicots.get(), d1.get(), full.get()}) {
    const auto games = enumerate_trees(*u, 2);
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<std::size_t> pick(0, games.size() - 1);
    int checked = 0;
    for (int i = 0; i < 4000 && checked < 150; ++i) {
      const GameId a = games[pick(rng)], b = games[pick(rng)], j = games[pick(rng)];
      if (a == b || !geq(*u, a, b)) continue;
      ++checked;
      EXPECT_TRUE(geq(*u, store.sum(a, j), store.sum(b, j))) << u->name();
    }
    EXPECT_GT(checked, 20);
  }
}

TEST_F(ComparisonTest, SumsCommute) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    const GameId a = testing::random_game(store, rng, {2, 2, false});
    const GameId b = testing::random_game(store, rng, {2, 2, false});
    if (!full->contains(a) || !full->contains(b)) continue;
    EXPECT_TRUE(equiv(*full, store.sum(a, b), store.sum(b, a)));
  }
}

}  // namespace
}  // namespace misere
