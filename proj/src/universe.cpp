#include "misere/universe.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "misere/errors.hpp"
#include "misere/notation.hpp"

namespace misere {

namespace {

GameId adjoint_rec(GameStore& store, GameId g, std::unordered_map<std::uint32_t, GameId>& memo) {
  if (auto it = memo.find(g.value); it != memo.end()) return it->second;
  GameNode n = store.node(g);
  std::vector<GameId> left, right;
  for (GameId r : n.right) left.push_back(adjoint_rec(store, r, memo));
  for (GameId l : n.left) right.push_back(adjoint_rec(store, l, memo));
  GameId result;
  if (n.left.empty() && n.right.empty()) {
    result = store.star();
  } else if (n.left.empty()) {
    right.push_back(kZero);
    result = store.intern(left, right);
  } else if (n.right.empty()) {
    left.push_back(kZero);
    result = store.intern(left, right);
  } else {
    result = store.intern(left, right);
  }
  memo.emplace(g.value, result);
  return result;
}

std::vector<GameId> sorted_unique(std::vector<GameId> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

GameId adjoint(GameStore& store, GameId g) {
  std::unordered_map<std::uint32_t, GameId> memo;
  return adjoint_rec(store, g, memo);
}

GameId left_modified_adjoint(GameStore& store, GameId g) {
  if (!store.is_left_dead_end(g)) throw std::invalid_argument("left_modified_adjoint: not a Left dead-end");
  const GameId star = store.star();
  if (g == kZero) return store.intern({kZero}, {star});
  std::unordered_map<std::uint32_t, GameId> memo;
  std::vector<GameId> left;
  for (GameId r : store.node(g).right) left.push_back(adjoint_rec(store, r, memo));
  const GameId right[] = {star};
  return store.intern(left, right);
}

std::vector<GameId> closure_truncated(DeadEnds& dead_ends, std::span<const GameId> generators, unsigned n) {
  GameStore& store = dead_ends.store();
  std::vector<GameId> seeds;
  for (GameId gen : generators) {
    for (GameId f : store.subpositions(gen)) {
      GameId t = dead_ends.canonical(store.truncate(f, n));
      if (t != kZero) seeds.push_back(t);
    }
  }
  seeds = sorted_unique(std::move(seeds));

  std::unordered_set<GameId> seen{kZero};
  std::deque<GameId> work{kZero};
  while (!work.empty()) {
    GameId x = work.front();
    work.pop_front();
    for (GameId s : seeds) {
      GameId y = dead_ends.canonical(store.truncate(store.sum(x, s), n));
      if (seen.insert(y).second) work.push_back(y);
    }
  }
  return sorted_unique(std::vector<GameId>(seen.begin(), seen.end()));
}

std::vector<GameId> closure_forms(GameStore& store, std::span<const GameId> generators, unsigned height) {
  std::vector<GameId> seeds;
  for (GameId gen : generators)
    for (GameId f : store.subpositions(gen))
      if (f != kZero && store.formal_birthday(f) <= height) seeds.push_back(f);
  seeds = sorted_unique(std::move(seeds));

  std::unordered_set<GameId> seen{kZero};
  std::deque<GameId> work{kZero};
  while (!work.empty()) {
    GameId x = work.front();
    work.pop_front();
    const unsigned hx = store.formal_birthday(x);
    for (GameId s : seeds) {
      if (hx + store.formal_birthday(s) > height) continue;
      GameId y = store.sum(x, s);
      if (seen.insert(y).second) work.push_back(y);
    }
  }
  return sorted_unique(std::vector<GameId>(seen.begin(), seen.end()));
}

Universe::Universe(DeadEnds& dead_ends, UniverseKind kind, std::vector<GameId> generators)
    : dead_ends_(dead_ends), kind_(kind), generators_(std::move(generators)) {
  switch (kind_) {
    case UniverseKind::Dicots:
      key_ = "D";
      break;
    case UniverseKind::DeadEnding:
      key_ = "E";
      break;
    case UniverseKind::Generated:
      key_ = "G";
      for (GameId g : generators_) key_ += ":" + std::to_string(g.value);
      break;
  }
}

std::unique_ptr<Universe> Universe::dicots(DeadEnds& dead_ends) {
  return std::unique_ptr<Universe>(new Universe(dead_ends, UniverseKind::Dicots, {}));
}

std::unique_ptr<Universe> Universe::dead_ending(DeadEnds& dead_ends) {
  return std::unique_ptr<Universe>(new Universe(dead_ends, UniverseKind::DeadEnding, {}));
}

std::unique_ptr<Universe> Universe::generated(DeadEnds& dead_ends, std::span<const GameId> generators) {
  GameStore& store = dead_ends.store();
  std::vector<GameId> gens;
  for (GameId g : generators) {
    if (store.has_tombstones_anywhere(g) || !store.is_left_dead_end(g))
      throw UnsupportedUniverse("generator " + to_string(store, g) + " is not a Left dead-end");
    GameId c = dead_ends.canonical(g);
    if (c != kZero) gens.push_back(c);
  }
  gens = sorted_unique(std::move(gens));
  if (gens.empty()) return dicots(dead_ends);
  return std::unique_ptr<Universe>(new Universe(dead_ends, UniverseKind::Generated, std::move(gens)));
}

std::string Universe::name() const {
  GameStore& store = dead_ends_.store();
  switch (kind_) {
    case UniverseKind::Dicots:
      return "D";
    case UniverseKind::DeadEnding:
      return "E";
    case UniverseKind::Generated:
      break;
  }
  if (generators_.size() == 1) {
    if (generators_[0] == store.integer(-1)) return "D(-1)";
    if (generators_[0] == store.perfect_murder(2)) return "D(-1:0)";
  }
  std::string out = "gen:";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ',';
    out += to_string(store, generators_[i]);
  }
  return out;
}

std::vector<GameId> Universe::fast_test_set(unsigned n, bool& has_fast_path) {
  GameStore& store = dead_ends_.store();
  has_fast_path = true;
  std::vector<GameId> out{kZero};
  if (kind_ == UniverseKind::Dicots) return out;
  if (kind_ == UniverseKind::DeadEnding) {
    if (n > 0) out.push_back(store.perfect_murder(n));
    return out;
  }
  if (generators_.size() == 1 && generators_[0] == store.integer(-1)) {
    for (unsigned k = 1; k <= n; ++k) out.push_back(store.integer(-static_cast<long>(k)));
    return out;
  }
  if (generators_.size() == 1 && generators_[0] == store.perfect_murder(2)) {
    const GameId base = generators_[0];
    const unsigned k = n / 2;
    GameId multiple = kZero;
    for (unsigned j = 1; j <= k; ++j) {
      multiple = dead_ends_.canonical(store.sum(multiple, base));
      out.push_back(multiple);
    }
    if (n % 2 == 1) out.push_back(dead_ends_.canonical(store.sum(multiple, store.integer(-1))));
    return out;
  }
  has_fast_path = false;
  return {};
}

std::vector<GameId> Universe::generic_test_set(unsigned n) {
  GameStore& store = dead_ends_.store();
  std::vector<GameId> candidates;
  if (kind_ == UniverseKind::DeadEnding) {
    if (n <= dead_ends_.level_bound()) {
      candidates = dead_ends_.level(n).elements;
    } else {
      // every truncation tau_n(X) lies above the complete tree, whose canonical form is M_n
      candidates = {kZero, store.perfect_murder(n)};
    }
  } else {
    candidates = closure_truncated(dead_ends_, generators_, n);
  }
  return sorted_unique(dead_ends_.minimal_elements(candidates));
}

const std::vector<GameId>& Universe::test_set(unsigned n) {
  if (auto it = test_sets_.find(n); it != test_sets_.end()) return it->second;
  bool fast = false;
  std::vector<GameId> t = fast_test_set(n, fast);
  if (!fast) t = generic_test_set(n);
  return test_sets_.emplace(n, sorted_unique(std::move(t))).first->second;
}

bool Universe::is_left_strong(GameId g) {
  if (auto it = left_strong_.find(g.value); it != left_strong_.end()) return it->second;
  const bool result = is_left_strong_impl(g);
  left_strong_.emplace(g.value, result);
  return result;
}

bool Universe::is_left_strong_impl(GameId g) {
  GameStore& store = dead_ends_.store();
  if (store.is_left_end_like(g)) return true;
  for (GameId x : test_set(store.formal_birthday(g)))
    if (!store.outcome(store.sum(g, x)).left_wins_first()) return false;
  return true;
}

bool Universe::is_right_strong(GameId g) { return is_left_strong(store().conjugate(g)); }

bool Universe::end_in_closure(GameId g) {
  GameStore& store = dead_ends_.store();
  if (g == kZero) return true;
  const unsigned h = store.formal_birthday(g);
  auto it = closure_forms_.find(h);
  if (it == closure_forms_.end()) it = closure_forms_.emplace(h, closure_forms(store, generators_, h)).first;
  return std::binary_search(it->second.begin(), it->second.end(), g);
}

bool Universe::contains(GameId g) {
  GameStore& store = dead_ends_.store();
  if (store.has_tombstones_anywhere(g)) throw std::invalid_argument("universe membership: tombstones present");
  if (auto it = contains_.find(g.value); it != contains_.end()) return it->second;
  bool result = false;
  switch (kind_) {
    case UniverseKind::Dicots:
      result = store.is_dicot(g);
      break;
    case UniverseKind::DeadEnding:
      result = store.is_dead_ending(g);
      break;
    case UniverseKind::Generated:
      result = store.is_dead_ending(g);
      if (result) {
        for (GameId p : store.subpositions(g)) {
          if (store.is_left_end(p) && !end_in_closure(p)) result = false;
          if (store.is_right_end(p) && !end_in_closure(store.conjugate(p))) result = false;
          if (!result) break;
        }
      }
      break;
  }
  contains_.emplace(g.value, result);
  return result;
}

bool Universe::in_upward_closure(GameId g) {
  GameStore& store = dead_ends_.store();
  if (store.has_tombstones_anywhere(g) || !store.is_left_dead_end(g))
    throw std::invalid_argument("in_upward_closure: not a Left dead-end");
  return !is_left_strong(adjoint(store, g));
}

namespace {

std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '{' || c == '(') ++depth;
    if (c == '}' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

}  // namespace

std::unique_ptr<Universe> parse_universe(DeadEnds& dead_ends, std::string_view text) {
  GameStore& store = dead_ends.store();
  if (text == "D") return Universe::dicots(dead_ends);
  if (text == "E") return Universe::dead_ending(dead_ends);
  if (text == "D(-1)") {
    const GameId g[] = {store.integer(-1)};
    return Universe::generated(dead_ends, g);
  }
  if (text == "D(-1:0)") {
    const GameId g[] = {store.perfect_murder(2)};
    return Universe::generated(dead_ends, g);
  }
  constexpr std::string_view prefix = "gen:";
  if (text.substr(0, prefix.size()) != prefix) throw ParseError(0, "unknown universe '" + std::string(text) + "'");
  std::vector<GameId> gens;
  std::size_t offset = prefix.size();
  for (const std::string& part : split_top_level(text.substr(prefix.size()))) {
    try {
      gens.push_back(parse_game(store, part));
    } catch (const ParseError& e) {
      throw ParseError(offset + e.position(), std::string("in universe: ") + e.what());
    }
    offset += part.size() + 1;
  }
  return Universe::generated(dead_ends, gens);
}

}  // namespace misere
