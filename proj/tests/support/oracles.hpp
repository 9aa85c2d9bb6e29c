#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "misere/dead_ends.hpp"
#include "misere/game_store.hpp"

namespace misere::testing {

/// Outcome of a disjunctive sum by direct play on the tuple of components,
/// without forming the sum in the store.
class PlayOracle {
 public:
  explicit PlayOracle(GameStore& store) : store_(store) {}

  OutcomePair outcome(std::vector<GameId> components);
  OutcomePair outcome(GameId g) { return outcome(std::vector<GameId>{g}); }
  OutcomePair outcome(GameId g, GameId h) { return outcome(std::vector<GameId>{g, h}); }

 private:
  bool wins_moving_first(std::vector<GameId> components, Side mover);

  GameStore& store_;
  std::map<std::pair<std::vector<GameId>, Side>, bool> memo_;
};

struct RandomGameConfig {
  unsigned max_depth = 3;
  unsigned max_options = 3;
  bool tombstones = false;
};

GameId random_game(GameStore& store, std::mt19937_64& rng, const RandomGameConfig& config);

/// Left dead-end trees of height <= n: {.|S} for every subset S of the trees of height <= n-1.
std::vector<GameId> left_dead_end_trees(GameStore& store, unsigned n);

/// {tau_n(G) : G in cl(generators)} closed under pairwise sums, canonical.
std::vector<GameId> naive_truncated_closure(DeadEnds& dead_ends, std::span<const GameId> generators, unsigned n);

/// All dicot trees of height <= day.
std::vector<GameId> dicot_trees(GameStore& store, unsigned day);

}  // namespace misere::testing
