#include <gtest/gtest.h>

#include <set>

#include "misere/dead_ends.hpp"
#include "misere/errors.hpp"
#include "misere/notation.hpp"
#include "misere/universe.hpp"
#include "oracles.hpp"

namespace misere {
namespace {

class DeadEndsTest : public ::testing::Test {
 protected:
  GameId g(const char* text) { return parse_game(store, text); }

  GameStore store;
  DeadEnds de{store};
};

TEST_F(DeadEndsTest, OrderExamples) {
  EXPECT_FALSE(de.geq(g("-1"), g("-2")));
  EXPECT_FALSE(de.geq(g("-2"), g("-1")));
  EXPECT_TRUE(de.geq(g("-1"), g("{|-1,0}")));
  EXPECT_FALSE(de.geq(g("-1"), kZero));
  EXPECT_FALSE(de.geq(kZero, g("-1")));
  EXPECT_TRUE(de.geq(g("{|-1,0}"), g("{|-1,0}")));
  EXPECT_THROW(de.geq(g("*"), kZero), std::invalid_argument);
}

TEST_F(DeadEndsTest, CanonicalExamples) {
  const GameId sharp = g("{|{|-1,0}}");
  EXPECT_EQ(de.canonical(g("{|-1,-2,{|-1,0}}")), sharp);
  EXPECT_EQ(de.canonical(store.sum(g("{|-1,0}"), g("-1"))), sharp);
  EXPECT_EQ(de.canonical(g("{|-1,0}")), g("{|-1,0}"));
  EXPECT_THROW(de.canonical(g("1")), std::invalid_argument);
}

TEST_F(DeadEndsTest, Terminable) {
  EXPECT_TRUE(de.is_terminable(g("-1")));
  EXPECT_FALSE(de.is_terminable(g("-2")));
  for (GameId a : de.level(2).elements)
    for (GameId b : de.level(2).elements)
      if (a != kZero && b != kZero) EXPECT_FALSE(de.is_terminable(store.sum(a, b)));
}

TEST_F(DeadEndsTest, LevelSizes) {
  const std::size_t expected[] = {1, 2, 4, 10, 52};
  for (unsigned n = 0; n <= 4; ++n) {
    EXPECT_EQ(de.level(n).size(), expected[n]);
    if (n >= 1) EXPECT_EQ(de.level(n).size() % 2, 0u);
  }
  DeadEnds small(store, 3);
  EXPECT_THROW(small.level(4), BoundExceeded);
}

TEST_F(DeadEndsTest, LevelsMatchTreeEnumeration) {
  // every tree of height <= n is equal to exactly one element of L_n
  for (unsigned n = 0; n <= 4; ++n) {
    std::set<GameId> values;
    for (GameId t : testing::left_dead_end_trees(store, n)) values.insert(de.canonical(t));
    const auto& elems = de.level(n).elements;
    EXPECT_EQ(values, std::set<GameId>(elems.begin(), elems.end())) << n;
  }
}

TEST_F(DeadEndsTest, CanonicalIsIdempotentAndOrderPreserving) {
  auto trees = testing::left_dead_end_trees(store, 3);
  for (GameId a : trees) {
    EXPECT_EQ(de.canonical(de.canonical(a)), de.canonical(a));
    for (GameId b : trees) EXPECT_EQ(de.geq(a, b), de.geq(de.canonical(a), de.canonical(b)));
  }
}

TEST_F(DeadEndsTest, AdjointOutcomeMatchesOrderOnTrees) {
  testing::PlayOracle oracle(store);
  auto trees = testing::left_dead_end_trees(store, 3);
  for (GameId a : trees) {
    GameId adj = adjoint(store, a);
    for (GameId b : trees) {
      OutcomePair o = oracle.outcome(adj, b);
      const bool at_most_p = o.left_first == Player::Right;
      EXPECT_EQ(de.geq(a, b), at_most_p) << to_string(store, a) << " vs " << to_string(store, b);
    }
  }
}

TEST_F(DeadEndsTest, BirthdayIsMonotoneAndAdditive) {
  const auto& l4 = de.level(4).elements;
  for (GameId a : l4)
    for (GameId b : l4)
      if (de.geq(a, b)) EXPECT_LE(de.birthday(a), de.birthday(b));
  const auto& l2 = de.level(2).elements;
  for (GameId a : l2)
    for (GameId b : l2) EXPECT_EQ(de.birthday(store.sum(a, b)), de.birthday(a) + de.birthday(b));
  EXPECT_EQ(de.birthday(kZero), 0u);
  EXPECT_EQ(de.birthday(store.perfect_murder(5)), 5u);
  EXPECT_EQ(de.canonical(store.perfect_murder(5)), store.perfect_murder(5));
}

TEST_F(DeadEndsTest, LeastAndMaximalElements) {
  for (unsigned n = 1; n <= 4; ++n) {
    const DeadEndPoset& p = de.level(n);
    ASSERT_TRUE(p.least.has_value());
    EXPECT_EQ(*p.least, store.perfect_murder(n));
    std::set<GameId> ints;
    for (unsigned k = 1; k <= n; ++k) ints.insert(store.integer(-static_cast<long>(k)));
    EXPECT_EQ(std::set<GameId>(p.maximal.begin(), p.maximal.end()), ints);
  }
}

TEST_F(DeadEndsTest, HasseDiagramOfL2) {
  HasseDiagram d = de.hasse(de.level(2));
  EXPECT_EQ(d.nodes.size(), 3u);
  std::set<std::pair<GameId, GameId>> covers(d.covers.begin(), d.covers.end());
  std::set<std::pair<GameId, GameId>> expected{{g("-1"), g("{|-1,0}")}, {g("-2"), g("{|-1,0}")}};
  EXPECT_EQ(covers, expected);
}

TEST_F(DeadEndsTest, HasseDiagramOfL3) {
  HasseDiagram d = de.hasse(de.level(3));
  EXPECT_EQ(d.nodes.size(), 9u);
  const GameId one = g("-1"), two = g("-2"), three = g("-3");
  const GameId one_zero = g("{|-1,0}"), two_zero = g("{|-2,0}"), two_one = g("{|-2,-1}");
  const GameId two_one_zero = g("{|-2,-1,0}"), one_zero_zero = g("{|{|-1,0},0}"), sharp = g("{|{|-1,0}}");
  std::set<std::pair<GameId, GameId>> expected{
      {one, one_zero},          {one, two_zero},       {three, two_zero},          {three, two_one},
      {two, two_one},           {two, one_zero},       {one_zero, two_one_zero},   {two_one_zero, one_zero_zero},
      {sharp, one_zero_zero},   {two_one, sharp},      {two_one, two_one_zero},    {two_zero, two_one_zero}};
  std::set<std::pair<GameId, GameId>> covers(d.covers.begin(), d.covers.end());
  EXPECT_EQ(covers, expected);
}

TEST_F(DeadEndsTest, MeetAndJoin) {
  EXPECT_EQ(de.meet(g("-1"), g("-2"), 2), g("{|-1,0}"));
  EXPECT_EQ(de.meet(g("-2"), g("-2"), 2), g("-2"));
  EXPECT_EQ(de.join(g("{|-1,0}"), g("{|-2,0}"), 3), g("-1"));
  EXPECT_FALSE(de.join(g("-1"), g("-2"), 2).has_value());
  EXPECT_THROW(de.meet(kZero, g("-1"), 2), std::invalid_argument);
}

TEST_F(DeadEndsTest, JoinIsLeastUpperBound) {
  const DeadEndPoset& p = de.level(3);
  std::vector<GameId> xs(p.elements.begin() + 1, p.elements.end());
  for (GameId a : xs)
    for (GameId b : xs) {
      std::vector<GameId> upper;
      for (GameId c : xs)
        if (de.geq(c, a) && de.geq(c, b)) upper.push_back(c);
      auto j = de.join(a, b, 3);
      if (upper.empty()) {
        EXPECT_FALSE(j.has_value());
        continue;
      }
      ASSERT_TRUE(j.has_value());
      for (GameId c : upper) EXPECT_TRUE(de.geq(c, *j));
      EXPECT_TRUE(de.geq(*j, a) && de.geq(*j, b));
    }
}

TEST_F(DeadEndsTest, LatticeLawsOnL3Star) {
  // the adjoined top is represented by nullopt
  using Elem = std::optional<GameId>;
  const DeadEndPoset& p = de.level(3);
  std::vector<Elem> xs{std::nullopt};
  for (std::size_t i = 1; i < p.size(); ++i) xs.push_back(p.elements[i]);
  auto meet = [&](Elem a, Elem b) -> Elem {
    if (!a) return b;
    if (!b) return a;
    return de.meet(*a, *b, 3);
  };
  auto join = [&](Elem a, Elem b) -> Elem {
    if (!a || !b) return std::nullopt;
    return de.join(*a, *b, 3);
  };
  for (Elem a : xs)
    for (Elem b : xs) {
      EXPECT_EQ(meet(a, b), meet(b, a));
      EXPECT_EQ(join(a, b), join(b, a));
      EXPECT_EQ(meet(a, join(a, b)), a);
      EXPECT_EQ(join(a, meet(a, b)), a);
      for (Elem c : xs) {
        EXPECT_EQ(meet(a, join(b, c)), join(meet(a, b), meet(a, c)));
        EXPECT_EQ(join(a, meet(b, c)), meet(join(a, b), join(a, c)));
      }
    }
}

TEST_F(DeadEndsTest, DotOutput) {
  const std::string dot = to_dot(store, de.hasse(de.level(2)), "L2");
  EXPECT_NE(dot.find("digraph \"L2\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"{|-1,0}\""), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '>'), 2);
}

}  // namespace
}  // namespace misere
