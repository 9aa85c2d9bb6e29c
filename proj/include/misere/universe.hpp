#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "misere/dead_ends.hpp"
#include "misere/game_store.hpp"

namespace misere {

enum class UniverseKind { Dicots, DeadEnding, Generated };

/// {tau_n(G) : G in cl(generators)} by value: canonical Left dead-ends, sorted by id.
/// Least fixpoint of adding a truncated follower of a generator and truncating again.
std::vector<GameId> closure_truncated(DeadEnds& dead_ends, std::span<const GameId> generators, unsigned n);

/// The forms of height <= `height` in cl(generators): sums of followers of generators.
std::vector<GameId> closure_forms(GameStore& store, std::span<const GameId> generators, unsigned height);

/// Adjoint G°, defined on augmented games; tombstones are ignored and the result is ordinary.
GameId adjoint(GameStore& store, GameId g);
/// G⊛ for a Left dead-end: {0|*} when G = 0, otherwise {(G^R)°|*}.
GameId left_modified_adjoint(GameStore& store, GameId g);

struct ComparisonCache {
  std::unordered_map<std::uint64_t, bool> geq;
  std::unordered_map<std::uint64_t, bool> in_progress;
};

/// A dead-ending universe together with its memo caches.
///
/// Dicots, the full dead-ending universe E, or the universal closure of a finite set
/// of Left dead-ends. Strongness is decided with the finite test sets T_n: G is Left
/// strong iff o(G + X) >= N for every X in T_{fb(G)}.
class Universe {
 public:
  static std::unique_ptr<Universe> dicots(DeadEnds& dead_ends);
  static std::unique_ptr<Universe> dead_ending(DeadEnds& dead_ends);
  /// Generators must be Left dead-ends (otherwise UnsupportedUniverse); they are stored canonical.
  static std::unique_ptr<Universe> generated(DeadEnds& dead_ends, std::span<const GameId> generators);

  Universe(const Universe&) = delete;
  Universe& operator=(const Universe&) = delete;

  UniverseKind kind() const { return kind_; }
  const std::vector<GameId>& generators() const { return generators_; }
  /// Stable cache key: "D", "E" or the sorted generator list.
  const std::string& key() const { return key_; }
  /// Human-readable name in CLI syntax.
  std::string name() const;

  GameStore& store() { return dead_ends_.store(); }
  DeadEnds& dead_ends() { return dead_ends_; }

  const std::vector<GameId>& test_set(unsigned n);
  /// Test set by minimal elements of closure_truncated (for E: minimal elements of L_n), ignoring fast paths.
  std::vector<GameId> generic_test_set(unsigned n);

  bool is_left_strong(GameId g);
  bool is_right_strong(GameId g);
  bool is_strong(GameId g, Side side) { return side == Side::Left ? is_left_strong(g) : is_right_strong(g); }

  /// Membership of an ordinary form. Throws std::invalid_argument on tombstones.
  bool contains(GameId g);
  /// G in up(A), for a Left dead-end G: decided as "G° is not Left strong".
  bool in_upward_closure(GameId g);

  ComparisonCache& comparison_cache() { return comparison_; }
  std::unordered_map<std::uint32_t, std::uint32_t>& simplest_cache() { return simplest_; }

 private:
  Universe(DeadEnds& dead_ends, UniverseKind kind, std::vector<GameId> generators);

  bool is_left_strong_impl(GameId g);
  bool end_in_closure(GameId g);
  std::vector<GameId> fast_test_set(unsigned n, bool& has_fast_path);

  DeadEnds& dead_ends_;
  UniverseKind kind_;
  std::vector<GameId> generators_;
  std::string key_;
  std::map<unsigned, std::vector<GameId>> test_sets_;
  std::map<unsigned, std::vector<GameId>> closure_forms_;
  std::unordered_map<std::uint32_t, bool> left_strong_;
  std::unordered_map<std::uint32_t, bool> contains_;
  ComparisonCache comparison_;
  std::unordered_map<std::uint32_t, std::uint32_t> simplest_;
};

/// "D" | "E" | "D(-1)" | "D(-1:0)" | "gen:<game>[,<game>...]"
/// Throws ParseError on bad syntax and UnsupportedUniverse for generators that are not Left dead-ends.
std::unique_ptr<Universe> parse_universe(DeadEnds& dead_ends, std::string_view text);

}  // namespace misere
