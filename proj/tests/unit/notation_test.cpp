#include <gtest/gtest.h>

#include <random>

#include "misere/errors.hpp"
#include "misere/notation.hpp"
#include "oracles.hpp"

namespace misere {
namespace {

TEST(Notation, ParsesBasicForms) {
  GameStore store;
  EXPECT_EQ(parse_game(store, "0"), kZero);
  EXPECT_EQ(parse_game(store, "*"), store.star());
  EXPECT_EQ(parse_game(store, " { 0 | 0 } "), store.star());
  EXPECT_EQ(parse_game(store, "-2"), store.integer(-2));
  EXPECT_EQ(parse_game(store, "M(3)"), store.perfect_murder(3));
  EXPECT_EQ(parse_game(store, "+-1"), store.intern({store.integer(1)}, {store.integer(-1)}));
  EXPECT_EQ(parse_game(store, "{|0,M(0)}"), store.integer(-1));
  GameId t = parse_game(store, "{0,SL|SR}");
  EXPECT_TRUE(store.node(t).sigma_left);
  EXPECT_TRUE(store.node(t).sigma_right);
}

TEST(Notation, RejectsMalformedInput) {
  GameStore store;
  for (const char* bad : {"", "{", "{0|", "{0|0}}", "{SR|0}", "{0|SL}", "M(", "x", "{0,|0}", "--1"}) {
    EXPECT_THROW(parse_game(store, bad), ParseError) << bad;
  }
  try {
    parse_game(store, "{0|0");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Notation, Prints) {
  GameStore store;
  auto rt = [&](const char* s) { return to_string(store, parse_game(store, s)); };
  EXPECT_EQ(rt("{0|0}"), "*");
  EXPECT_EQ(rt("{{0|}|}"), "2");
  EXPECT_EQ(rt("{|0,-1}"), "{|-1,0}");
  EXPECT_EQ(rt("{SL,0|*}"), "{0,SL|*}");
  EXPECT_EQ(rt("{1|-1}"), "+-1");
  EXPECT_EQ(rt("{SL|}"), "{SL|}");
}

TEST(Notation, RoundTripsRandomGames) {
  GameStore store;
  std::mt19937_64 rng(21);
  for (int i = 0; i < 500; ++i) {
    GameId g = testing::random_game(store, rng, {4, 3, true});
    const std::string s = to_string(store, g);
    EXPECT_EQ(parse_game(store, s), g) << s;
    EXPECT_EQ(to_string(store, parse_game(store, s)), s);
  }
}

TEST(Notation, GoldenCorpusRoundTrips) {
  GameStore store;
  for (const char* s : {"{0,*|*}", "{0,SL|*}", "{0,{0,-1|M(5)}|-2,0}", "{2,+-1|{-1|0,SR}}",
                        "{{2,+-1|0}|{{-1|0,SR}|}}", "{|*}", "{0,SL|0,-5}", "{|{|-1,0}}"}) {
    const std::string once = to_string(store, parse_game(store, s));
    EXPECT_EQ(to_string(store, parse_game(store, once)), once) << s;
  }
}

}  // namespace
}  // namespace misere
