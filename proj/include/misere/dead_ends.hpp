#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "misere/game_store.hpp"

namespace misere {

/// The Left dead-ends of birthday <= n, stored by canonical form.
struct DeadEndPoset {
  unsigned level = 0;
  std::vector<GameId> elements;  ///< canonical forms; 0 first
  /// order[i * size + j] == (elements[i] >= elements[j]); empty when the level is too large to tabulate
  std::vector<bool> order;
  std::vector<GameId> maximal;  ///< maximal elements of L_n^x
  std::optional<GameId> least;  ///< least element of L_n^x (M_n), n >= 1

  std::size_t size() const { return elements.size(); }
  bool has_order() const { return !order.empty(); }
  bool geq(std::size_t i, std::size_t j) const { return order[i * elements.size() + j]; }
  std::optional<std::size_t> index_of(GameId g) const;
};

struct HasseDiagram {
  std::vector<GameId> nodes;
  std::vector<std::pair<GameId, GameId>> covers;  ///< (upper, lower)
};

/// Universe-independent order and canonical forms of Left dead-ends.
///
/// G >= H iff every G^R is >= some H^R, and G == 0 forces H == 0. Canonical forms
/// drop dominated Right options recursively; two dead-ends are equal iff their
/// canonical forms are the same id.
class DeadEnds {
 public:
  explicit DeadEnds(GameStore& store, unsigned level_bound = 5);

  GameStore& store() { return store_; }

  bool geq(GameId g, GameId h);
  bool equal(GameId g, GameId h) { return canonical(g) == canonical(h); }
  GameId canonical(GameId g);
  bool is_terminable(GameId g);
  unsigned birthday(GameId g);

  /// Elements of xs that have nothing strictly below them (duplicates by value collapse
  /// to the first occurrence).
  std::vector<GameId> minimal_elements(std::span<const GameId> xs);

  unsigned level_bound() const { return level_bound_; }
  /// L_n, built as {.|A} over antichains A of L_{n-1}. Throws BoundExceeded past the bound.
  const DeadEndPoset& level(unsigned n);

  /// Meet and join in L_n^* via upward closures in L_{n-1}; nullopt join is the adjoined top.
  GameId meet(GameId g, GameId h, unsigned n);
  std::optional<GameId> join(GameId g, GameId h, unsigned n);

  HasseDiagram hasse(const DeadEndPoset& poset, bool include_zero = false);

 private:
  void require_dead_end(GameId g, const char* what);
  bool geq_unchecked(GameId g, GameId h);
  GameId canonical_unchecked(GameId g);
  std::vector<GameId> upward_closure(GameId g, unsigned n);

  GameStore& store_;
  unsigned level_bound_;
  std::unordered_map<std::uint64_t, bool> geq_memo_;
  std::unordered_map<std::uint32_t, std::uint32_t> canonical_memo_;
  std::map<unsigned, DeadEndPoset> levels_;
};

std::string to_dot(GameStore& store, const HasseDiagram& diagram, const std::string& name = "L");

}  // namespace misere
