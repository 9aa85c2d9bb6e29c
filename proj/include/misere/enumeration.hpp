#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "misere/game_store.hpp"
#include "misere/universe.hpp"

namespace misere {

/// Forms of height <= day all of whose subpositions lie in U, as pairs of subsets of
/// the previous day's forms. Throws BoundExceeded when a day has more than
/// `max_candidates` subset pairs.
std::vector<GameId> enumerate_trees(Universe& u, unsigned day, std::uint64_t max_candidates = std::uint64_t{1} << 22);

struct Census {
  unsigned day = 0;
  std::string universe;
  std::uint64_t tree_count = 0;
  std::uint64_t distinct_count = 0;
  std::vector<GameId> representatives;  ///< simplest forms, sorted by id
};

/// Trees born by `day` in U and their distinct values, bucketed by simplest form.
///
/// For the dicots, days beyond the tree-enumeration bound are handled on values:
/// a day-n simplest form only depends on the simplest forms of its options, and
/// dicot membership only on which sides are empty.
Census census(Universe& u, unsigned day, std::uint64_t max_candidates = std::uint64_t{1} << 22);

/// Number of classes of `games` under pairwise equivalence mod U.
std::size_t count_classes_pairwise(Universe& u, std::span<const GameId> games);

}  // namespace misere
