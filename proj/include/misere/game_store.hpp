#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace misere {

/// Handle of an interned augmented game form. Equal ids <=> identical trees.
struct GameId {
  std::uint32_t value = 0;

  constexpr auto operator<=>(const GameId&) const = default;
};

inline constexpr GameId kZero{0};

enum class Side : std::uint8_t { Left, Right };

constexpr Side opponent(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

/// Winner of a position under a fixed first mover.
enum class Player : std::uint8_t { Left, Right };

enum class OutcomeClass : std::uint8_t { P, N, L, R };

/// Misere outcome as (winner when Left starts, winner when Right starts).
struct OutcomePair {
  Player left_first = Player::Left;
  Player right_first = Player::Right;

  constexpr bool operator==(const OutcomePair&) const = default;

  constexpr OutcomeClass cls() const {
    if (left_first == Player::Left) return right_first == Player::Left ? OutcomeClass::L : OutcomeClass::N;
    return right_first == Player::Left ? OutcomeClass::P : OutcomeClass::R;
  }
  /// o(G) >= N
  constexpr bool left_wins_first() const { return left_first == Player::Left; }
  /// o(G) <= N
  constexpr bool right_wins_first() const { return right_first == Player::Right; }
};

/// Pointwise order on outcome pairs (Left-favourable is larger).
constexpr bool outcome_geq(OutcomePair a, OutcomePair b) {
  auto rank = [](Player p) { return p == Player::Left ? 1 : 0; };
  return rank(a.left_first) >= rank(b.left_first) && rank(a.right_first) >= rank(b.right_first);
}

char outcome_letter(OutcomeClass c);

/// Read-only view of one interned node. The spans stay valid for the lifetime of the store.
struct GameNode {
  std::span<const GameId> left;
  std::span<const GameId> right;
  bool sigma_left = false;
  bool sigma_right = false;

  std::span<const GameId> options(Side s) const { return s == Side::Left ? left : right; }
  bool sigma(Side s) const { return s == Side::Left ? sigma_left : sigma_right; }
  bool has_tombstone() const { return sigma_left || sigma_right; }
};

using EdgeCount = boost::multiprecision::cpp_int;

/// Append-only hash-consed store of augmented game forms.
///
/// Every node is a pair of sorted, duplicate-free option sets plus the two tombstone
/// flags. Interning the same fields twice yields the same id, so structural identity
/// is id equality. Derived quantities (sums, conjugates, outcomes, heights) are
/// memoized per id. Not internally synchronized: callers serialize writes.
class GameStore {
 public:
  GameStore();
  GameStore(const GameStore&) = delete;
  GameStore& operator=(const GameStore&) = delete;

  GameId intern(std::span<const GameId> left, std::span<const GameId> right, bool sigma_left = false,
                bool sigma_right = false);
  GameId intern(std::initializer_list<GameId> left, std::initializer_list<GameId> right,
                bool sigma_left = false, bool sigma_right = false) {
    return intern(std::span<const GameId>(left.begin(), left.size()),
                  std::span<const GameId>(right.begin(), right.size()), sigma_left, sigma_right);
  }

  GameNode node(GameId g) const;
  std::size_t size() const { return nodes_.size(); }
  bool contains(GameId g) const { return g.value < nodes_.size(); }

  /// Throws BoundExceeded once the store would grow past `limit` nodes.
  void set_node_limit(std::size_t limit) { node_limit_ = limit; }
  std::size_t node_limit() const { return node_limit_; }

  GameId zero() const { return kZero; }
  GameId star();
  GameId integer(long n);
  std::optional<long> as_integer(GameId g) const;

  GameId conjugate(GameId g);
  GameId sum(GameId g, GameId h);
  GameId sum(std::span<const GameId> terms);
  /// g with its Left (or Right) tombstone set to `present`.
  GameId with_sigma(GameId g, Side side, bool present);

  OutcomePair outcome(GameId g);

  /// tau_n; defined on ordinary games only (throws std::invalid_argument on tombstones).
  GameId truncate(GameId g, unsigned n);
  /// Height of the tree of ordinary options; tombstones count as height 0.
  unsigned formal_birthday(GameId g);

  /// M_0 = 0, M_{n+1} = {.|0, M_n}
  GameId perfect_murder(unsigned n);

  /// Tree edges with multiplicity; each tombstone flag counts one edge.
  EdgeCount edge_count(GameId g);

  bool is_left_end(GameId g) const;
  bool is_right_end(GameId g) const;
  bool is_end(GameId g, Side s) const { return s == Side::Left ? is_left_end(g) : is_right_end(g); }
  bool is_left_end_like(GameId g) const;
  bool is_right_end_like(GameId g) const;
  bool is_end_like(GameId g, Side s) const {
    return s == Side::Left ? is_left_end_like(g) : is_right_end_like(g);
  }
  bool has_tombstones_anywhere(GameId g);
  bool is_dicot(GameId g);
  bool is_left_dead_end(GameId g);
  bool is_right_dead_end(GameId g);
  bool is_dead_ending(GameId g);

  /// All subpositions of g (including g), each once, children before parents.
  std::vector<GameId> subpositions(GameId g) const;

 private:
  struct NodeRecord {
    std::uint32_t chunk;
    std::uint32_t offset;
    std::uint32_t left_count;
    std::uint32_t right_count;
    std::uint64_t hash;
    bool sigma_left;
    bool sigma_right;
  };

  struct Probe {
    std::span<const GameId> left;
    std::span<const GameId> right;
    bool sigma_left;
    bool sigma_right;
    std::uint64_t hash;
  };

  struct IdHash {
    using is_transparent = void;
    const GameStore* store;
    std::size_t operator()(std::uint32_t id) const { return store->nodes_[id].hash; }
    std::size_t operator()(const Probe& p) const { return p.hash; }
  };
  struct IdEqual {
    using is_transparent = void;
    const GameStore* store;
    bool operator()(std::uint32_t a, std::uint32_t b) const { return a == b; }
    bool operator()(const Probe& p, std::uint32_t id) const { return store->matches(p, id); }
    bool operator()(std::uint32_t id, const Probe& p) const { return store->matches(p, id); }
  };

  enum Flag : std::uint8_t {
    kTombKnown = 1 << 0,
    kTomb = 1 << 1,
    kDicotKnown = 1 << 2,
    kDicot = 1 << 3,
    kLeftDeadKnown = 1 << 4,
    kLeftDead = 1 << 5,
    kDeadEndingKnown = 1 << 6,
    kDeadEnding = 1 << 7,
  };

  static std::uint64_t hash_fields(std::span<const GameId> left, std::span<const GameId> right,
                                   bool sigma_left, bool sigma_right);
  bool matches(const Probe& p, std::uint32_t id) const;
  GameId insert(std::span<const GameId> left, std::span<const GameId> right, bool sigma_left,
                bool sigma_right, std::uint64_t hash);
  void grow_memos();
  std::uint8_t& flags(GameId g) { return flags_[g.value]; }

  static constexpr std::size_t kChunkSize = std::size_t{1} << 20;

  std::vector<std::unique_ptr<GameId[]>> chunks_;
  std::size_t chunk_used_ = kChunkSize;
  std::vector<NodeRecord> nodes_;
  std::unordered_set<std::uint32_t, IdHash, IdEqual> index_;
  std::size_t node_limit_ = std::size_t{1} << 31;

  static constexpr std::uint32_t kUnknown = 0xffffffffu;
  std::vector<std::uint32_t> conjugate_memo_;
  std::vector<std::uint32_t> birthday_memo_;
  std::vector<std::uint8_t> outcome_memo_;
  std::vector<std::uint8_t> flags_;
  std::unordered_map<std::uint64_t, std::uint32_t> sum_memo_;
  std::unordered_map<std::uint64_t, std::uint32_t> truncate_memo_;
  std::unordered_map<std::uint32_t, EdgeCount> edge_memo_;
};

}  // namespace misere

template <>
struct std::hash<misere::GameId> {
  std::size_t operator()(misere::GameId g) const noexcept { return std::hash<std::uint32_t>{}(g.value); }
};
