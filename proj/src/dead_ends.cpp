#include "misere/dead_ends.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "misere/errors.hpp"
#include "misere/notation.hpp"

namespace misere {

namespace {

constexpr std::size_t kMaxTabulated = 4096;

std::uint64_t pair_key(GameId a, GameId b) { return (std::uint64_t{a.value} << 32) | b.value; }

}  // namespace

std::optional<std::size_t> DeadEndPoset::index_of(GameId g) const {
  auto it = std::find(elements.begin(), elements.end(), g);
  if (it == elements.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

DeadEnds::DeadEnds(GameStore& store, unsigned level_bound) : store_(store), level_bound_(level_bound) {}

void DeadEnds::require_dead_end(GameId g, const char* what) {
  if (!store_.is_left_dead_end(g)) throw std::invalid_argument(std::string(what) + ": not a Left dead-end");
}

bool DeadEnds::geq(GameId g, GameId h) {
  require_dead_end(g, "de_geq");
  require_dead_end(h, "de_geq");
  return geq_unchecked(g, h);
}

bool DeadEnds::geq_unchecked(GameId g, GameId h) {
  if (g == h) return true;
  if (g == kZero || h == kZero) return false;
  const std::uint64_t key = pair_key(g, h);
  if (auto it = geq_memo_.find(key); it != geq_memo_.end()) return it->second;
  GameNode gn = store_.node(g);
  GameNode hn = store_.node(h);
  bool result = true;
  for (GameId gr : gn.right) {
    bool matched = false;
    for (GameId hr : hn.right) {
      if (geq_unchecked(gr, hr)) {
        matched = true;
        break;
      }
    }
    if (!matched) {
      result = false;
      break;
    }
  }
  geq_memo_.emplace(key, result);
  return result;
}

GameId DeadEnds::canonical(GameId g) {
  require_dead_end(g, "de_canonical");
  return canonical_unchecked(g);
}

GameId DeadEnds::canonical_unchecked(GameId g) {
  if (auto it = canonical_memo_.find(g.value); it != canonical_memo_.end()) return GameId{it->second};
  GameNode n = store_.node(g);
  std::vector<GameId> options;
  options.reserve(n.right.size());
  for (GameId r : n.right) options.push_back(canonical_unchecked(r));
  std::sort(options.begin(), options.end());
  options.erase(std::unique(options.begin(), options.end()), options.end());
  // canonical options that are equal share an id, so >= between distinct ids is strict
  std::vector<GameId> kept;
  for (GameId r1 : options) {
    bool dominated = false;
    for (GameId r2 : options) {
      if (r2 != r1 && geq_unchecked(r1, r2)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(r1);
  }
  GameId c = store_.intern(std::span<const GameId>{}, kept);
  canonical_memo_[g.value] = c.value;
  canonical_memo_[c.value] = c.value;
  return c;
}

bool DeadEnds::is_terminable(GameId g) {
  GameNode n = store_.node(canonical(g));
  return std::binary_search(n.right.begin(), n.right.end(), kZero);
}

unsigned DeadEnds::birthday(GameId g) { return store_.formal_birthday(canonical(g)); }

std::vector<GameId> DeadEnds::minimal_elements(std::span<const GameId> xs) {
  std::vector<GameId> candidates;
  for (GameId x : xs) {
    require_dead_end(x, "minimal_elements");
    bool covered = false;
    for (GameId c : candidates) {
      if (geq_unchecked(x, c)) {
        covered = true;
        break;
      }
    }
    if (covered) continue;
    std::erase_if(candidates, [&](GameId c) { return geq_unchecked(c, x); });
    candidates.push_back(x);
  }
  return candidates;
}

const DeadEndPoset& DeadEnds::level(unsigned n) {
  if (n > level_bound_)
    throw BoundExceeded("dead-end level " + std::to_string(n) + " exceeds bound " +
                        std::to_string(level_bound_));
  if (auto it = levels_.find(n); it != levels_.end()) return it->second;

  DeadEndPoset poset;
  poset.level = n;
  poset.elements.push_back(kZero);
  if (n > 0) {
    const DeadEndPoset& below = level(n - 1);
    if (!below.has_order()) throw BoundExceeded("order of the previous level is not tabulated");
    const std::size_t m = below.size();
    std::vector<std::size_t> chosen;
    // depth-first over indices; an element joins only if incomparable to every chosen one
    auto visit = [&](auto&& self, std::size_t i) -> void {
      if (i == m) {
        if (chosen.empty()) return;
        std::vector<GameId> opts;
        opts.reserve(chosen.size());
        for (std::size_t k : chosen) opts.push_back(below.elements[k]);
        poset.elements.push_back(store_.intern(std::span<const GameId>{}, opts));
        return;
      }
      bool free = true;
      for (std::size_t k : chosen) {
        if (below.geq(i, k) || below.geq(k, i)) {
          free = false;
          break;
        }
      }
      if (free) {
        chosen.push_back(i);
        self(self, i + 1);
        chosen.pop_back();
      }
      self(self, i + 1);
    };
    visit(visit, 0);
    for (GameId e : poset.elements) canonical_memo_[e.value] = e.value;
  }

  const std::size_t size = poset.elements.size();
  if (size <= kMaxTabulated) {
    poset.order.assign(size * size, false);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) poset.order[i * size + j] = geq_unchecked(poset.elements[i], poset.elements[j]);
  }
  if (n > 0) {
    std::vector<GameId> nonzero(poset.elements.begin() + 1, poset.elements.end());
    auto least = minimal_elements(nonzero);
    if (least.size() == 1) poset.least = least.front();
    std::vector<GameId> maxima;
    for (GameId x : nonzero) {
      bool covered = false;
      for (GameId c : maxima)
        if (geq_unchecked(c, x)) {
          covered = true;
          break;
        }
      if (covered) continue;
      std::erase_if(maxima, [&](GameId c) { return geq_unchecked(x, c); });
      maxima.push_back(x);
    }
    poset.maximal = std::move(maxima);
  }
  return levels_.emplace(n, std::move(poset)).first->second;
}

std::vector<GameId> DeadEnds::upward_closure(GameId g, unsigned n) {
  const DeadEndPoset& below = level(n - 1);
  GameNode gn = store_.node(g);
  std::vector<GameId> out;
  for (GameId x : below.elements) {
    for (GameId r : gn.right) {
      if (geq_unchecked(x, r)) {
        out.push_back(x);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GameId DeadEnds::meet(GameId g, GameId h, unsigned n) {
  g = canonical(g);
  h = canonical(h);
  if (g == kZero || h == kZero) throw std::invalid_argument("de_meet: 0 is not in L_n^x");
  if (birthday(g) > n || birthday(h) > n) throw std::invalid_argument("de_meet: argument not in L_n");
  auto a = upward_closure(g, n);
  auto b = upward_closure(h, n);
  std::vector<GameId> u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return canonical_unchecked(store_.intern(std::span<const GameId>{}, u));
}

std::optional<GameId> DeadEnds::join(GameId g, GameId h, unsigned n) {
  g = canonical(g);
  h = canonical(h);
  if (g == kZero || h == kZero) throw std::invalid_argument("de_join: 0 is not in L_n^x");
  if (birthday(g) > n || birthday(h) > n) throw std::invalid_argument("de_join: argument not in L_n");
  auto a = upward_closure(g, n);
  auto b = upward_closure(h, n);
  std::vector<GameId> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (common.empty()) return std::nullopt;
  return canonical_unchecked(store_.intern(std::span<const GameId>{}, common));
}

HasseDiagram DeadEnds::hasse(const DeadEndPoset& poset, bool include_zero) {
  if (!poset.has_order()) throw BoundExceeded("Hasse diagram needs a tabulated order");
  HasseDiagram d;
  const std::size_t size = poset.size();
  auto strictly = [&](std::size_t i, std::size_t j) { return i != j && poset.geq(i, j); };
  for (std::size_t i = 0; i < size; ++i) {
    if (!include_zero && poset.elements[i] == kZero) continue;
    d.nodes.push_back(poset.elements[i]);
  }
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (!strictly(i, j)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < size && covered; ++k)
        if (strictly(i, k) && strictly(k, j)) covered = false;
      if (covered) d.covers.emplace_back(poset.elements[i], poset.elements[j]);
    }
  }
  return d;
}

std::string to_dot(GameStore& store, const HasseDiagram& diagram, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (GameId g : diagram.nodes) out << "  g" << g.value << " [label=\"" << to_string(store, g) << "\"];\n";
  for (auto [upper, lower] : diagram.covers) out << "  g" << lower.value << " -> g" << upper.value << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace misere
