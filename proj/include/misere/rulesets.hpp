#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "misere/dead_ends.hpp"
#include "misere/game_store.hpp"

namespace misere {

enum class GridKind { Domineering, Clobber };

/// Rectangular board. Domineering cells are '.' (empty) or '#' (blocked);
/// Clobber cells are 'x' (Left), 'o' (Right) or '.' (empty).
struct Grid {
  GridKind kind = GridKind::Domineering;
  int rows = 0;
  int cols = 0;
  std::string cells;  ///< row-major

  char at(int r, int c) const { return cells[static_cast<std::size_t>(r * cols + c)]; }
  char& at(int r, int c) { return cells[static_cast<std::size_t>(r * cols + c)]; }
  /// Rows joined by '|'.
  std::string to_string() const;
};

/// Rows are separated by '|'. Throws ParseError on ragged rows or foreign characters.
Grid parse_grid(std::string_view text, GridKind kind);

/// Maps a game to an equal one (e.g. a canonical or simplest form); identity by default.
using Reducer = std::function<GameId(GameId)>;

/// Builds game forms of board positions.
///
/// Positions split into connected components that are evaluated separately and
/// summed. Components are keyed by their translated layout in a transposition table.
/// In Domineering Left places vertical dominoes; in Clobber Left owns 'x'.
class BoardEvaluator {
 public:
  explicit BoardEvaluator(GameStore& store, Reducer reducer = {}, std::size_t max_cells = 64);

  GameId evaluate(const Grid& grid);
  std::size_t table_size() const { return table_.size(); }

 private:
  GameId component_value(const Grid& component);
  std::vector<Grid> components(const Grid& grid) const;
  GameId reduce(GameId g) { return reducer_ ? reducer_(g) : g; }

  GameStore& store_;
  Reducer reducer_;
  std::size_t max_cells_;
  std::unordered_map<std::string, GameId> table_;
};

GameId domineering_game(GameStore& store, const Grid& grid, Reducer reducer = {});
GameId clobber_game(GameStore& store, const Grid& grid, Reducer reducer = {});

/// Closed form of the 1 x n strip as a canonical Left dead-end:
/// k copies of (-1:0)# = canonical(-1:0 + -1), plus 0, -1, -1:0 or -2 by n mod 6.
GameId domineering_1xn_formula(DeadEnds& dead_ends, unsigned n);

}  // namespace misere
