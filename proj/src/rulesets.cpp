#include "misere/rulesets.hpp"

#include <algorithm>

#include "misere/errors.hpp"

namespace misere {

namespace {

constexpr int kDr[] = {1, -1, 0, 0};
constexpr int kDc[] = {0, 0, 1, -1};

bool valid_cell(GridKind kind, char c) {
  if (kind == GridKind::Domineering) return c == '.' || c == '#';
  return c == 'x' || c == 'o' || c == '.';
}

/// Cells that take part in play: empty squares in Domineering, stones in Clobber.
bool live(GridKind kind, char c) { return kind == GridKind::Domineering ? c == '.' : c != '.'; }

char filler(GridKind kind) { return kind == GridKind::Domineering ? '#' : '.'; }

}  // namespace

std::string Grid::to_string() const {
  std::string out;
  for (int r = 0; r < rows; ++r) {
    if (r) out += '|';
    out.append(cells, static_cast<std::size_t>(r * cols), static_cast<std::size_t>(cols));
  }
  return out;
}

Grid parse_grid(std::string_view text, GridKind kind) {
  Grid g;
  g.kind = kind;
  int col = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '|') {
      if (g.rows == 0) {
        g.cols = col;
      } else if (col != g.cols) {
        throw ParseError(i, "ragged row");
      }
      ++g.rows;
      col = 0;
      continue;
    }
    if (!valid_cell(kind, text[i])) throw ParseError(i, std::string("unexpected cell '") + text[i] + "'");
    g.cells += text[i];
    ++col;
  }
  if (g.cols == 0) throw ParseError(0, "empty grid");
  return g;
}

BoardEvaluator::BoardEvaluator(GameStore& store, Reducer reducer, std::size_t max_cells)
    : store_(store), reducer_(std::move(reducer)), max_cells_(max_cells) {}

std::vector<Grid> BoardEvaluator::components(const Grid& grid) const {
  std::vector<Grid> out;
  std::vector<char> seen(grid.cells.size(), 0);
  for (int r0 = 0; r0 < grid.rows; ++r0) {
    for (int c0 = 0; c0 < grid.cols; ++c0) {
      if (seen[r0 * grid.cols + c0] || !live(grid.kind, grid.at(r0, c0))) continue;
      std::vector<std::pair<int, int>> cells{{r0, c0}};
      seen[r0 * grid.cols + c0] = 1;
      for (std::size_t k = 0; k < cells.size(); ++k) {
        auto [r, c] = cells[k];
        for (int d = 0; d < 4; ++d) {
          const int nr = r + kDr[d], nc = c + kDc[d];
          if (nr < 0 || nc < 0 || nr >= grid.rows || nc >= grid.cols) continue;
          if (seen[nr * grid.cols + nc] || !live(grid.kind, grid.at(nr, nc))) continue;
          seen[nr * grid.cols + nc] = 1;
          cells.emplace_back(nr, nc);
        }
      }
      int rmin = grid.rows, rmax = -1, cmin = grid.cols, cmax = -1;
      for (auto [r, c] : cells) {
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
        cmin = std::min(cmin, c);
        cmax = std::max(cmax, c);
      }
      Grid comp;
      comp.kind = grid.kind;
      comp.rows = rmax - rmin + 1;
      comp.cols = cmax - cmin + 1;
      comp.cells.assign(static_cast<std::size_t>(comp.rows * comp.cols), filler(grid.kind));
      for (auto [r, c] : cells) comp.at(r - rmin, c - cmin) = grid.at(r, c);
      out.push_back(std::move(comp));
    }
  }
  return out;
}

GameId BoardEvaluator::evaluate(const Grid& grid) {
  if (grid.cells.size() > max_cells_)
    throw BoundExceeded("board has " + std::to_string(grid.cells.size()) + " cells, bound is " +
                        std::to_string(max_cells_));
  std::vector<GameId> parts;
  for (const Grid& comp : components(grid)) {
    GameId v = component_value(comp);
    if (v != kZero) parts.push_back(v);
  }
  if (parts.empty()) return kZero;
  if (parts.size() == 1) return parts.front();
  return reduce(store_.sum(parts));
}

GameId BoardEvaluator::component_value(const Grid& comp) {
  std::string key = std::to_string(comp.rows) + ':' + comp.to_string();
  if (auto it = table_.find(key); it != table_.end()) return it->second;
  std::vector<GameId> left, right;
  Grid next = comp;
  if (comp.kind == GridKind::Domineering) {
    for (int r = 0; r < comp.rows; ++r) {
      for (int c = 0; c < comp.cols; ++c) {
        if (comp.at(r, c) != '.') continue;
        if (r + 1 < comp.rows && comp.at(r + 1, c) == '.') {
          next.at(r, c) = next.at(r + 1, c) = '#';
          left.push_back(evaluate(next));
          next.at(r, c) = next.at(r + 1, c) = '.';
        }
        if (c + 1 < comp.cols && comp.at(r, c + 1) == '.') {
          next.at(r, c) = next.at(r, c + 1) = '#';
          right.push_back(evaluate(next));
          next.at(r, c) = next.at(r, c + 1) = '.';
        }
      }
    }
  } else {
    for (int r = 0; r < comp.rows; ++r) {
      for (int c = 0; c < comp.cols; ++c) {
        const char mover = comp.at(r, c);
        if (mover == '.') continue;
        const char target = mover == 'x' ? 'o' : 'x';
        for (int d = 0; d < 4; ++d) {
          const int nr = r + kDr[d], nc = c + kDc[d];
          if (nr < 0 || nc < 0 || nr >= comp.rows || nc >= comp.cols || comp.at(nr, nc) != target) continue;
          next.at(r, c) = '.';
          next.at(nr, nc) = mover;
          (mover == 'x' ? left : right).push_back(evaluate(next));
          next.at(r, c) = mover;
          next.at(nr, nc) = target;
        }
      }
    }
  }
  GameId v = reduce(store_.intern(left, right));
  table_.emplace(std::move(key), v);
  return v;
}

GameId domineering_game(GameStore& store, const Grid& grid, Reducer reducer) {
  if (grid.kind != GridKind::Domineering) throw std::invalid_argument("domineering_game: not a Domineering grid");
  return BoardEvaluator(store, std::move(reducer)).evaluate(grid);
}

GameId clobber_game(GameStore& store, const Grid& grid, Reducer reducer) {
  if (grid.kind != GridKind::Clobber) throw std::invalid_argument("clobber_game: not a Clobber grid");
  return BoardEvaluator(store, std::move(reducer)).evaluate(grid);
}

GameId domineering_1xn_formula(DeadEnds& dead_ends, unsigned n) {
  GameStore& store = dead_ends.store();
  const GameId one_zero = store.perfect_murder(2);
  const GameId sharp = dead_ends.canonical(store.sum(one_zero, store.integer(-1)));
  GameId tail = kZero;
  switch (n % 6) {
    case 2:
    case 3:
      tail = store.integer(-1);
      break;
    case 4:
      tail = one_zero;
      break;
    case 5:
      tail = store.integer(-2);
      break;
    default:
      break;
  }
  GameId total = tail;
  for (unsigned k = 0; k < n / 6; ++k) total = dead_ends.canonical(store.sum(total, sharp));
  return dead_ends.canonical(total);
}

}  // namespace misere
