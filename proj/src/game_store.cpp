#include "misere/game_store.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "misere/errors.hpp"

namespace misere {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::vector<GameId> sorted_unique(std::span<const GameId> ids) {
  std::vector<GameId> out(ids.begin(), ids.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t pair_key(GameId a, GameId b) { return (std::uint64_t{a.value} << 32) | b.value; }

}  // namespace

char outcome_letter(OutcomeClass c) {
  switch (c) {
    case OutcomeClass::P: return 'P';
    case OutcomeClass::N: return 'N';
    case OutcomeClass::L: return 'L';
    case OutcomeClass::R: return 'R';
  }
  return '?';
}

GameStore::GameStore() : index_(64, IdHash{this}, IdEqual{this}) {
  intern(std::span<const GameId>{}, std::span<const GameId>{});
}

std::uint64_t GameStore::hash_fields(std::span<const GameId> left, std::span<const GameId> right,
                                     bool sigma_left, bool sigma_right) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  h = mix(h, left.size());
  for (GameId g : left) h = mix(h, g.value);
  h = mix(h, right.size() + 0x51ed);
  for (GameId g : right) h = mix(h, g.value);
  h = mix(h, (sigma_left ? 1u : 0u) | (sigma_right ? 2u : 0u));
  return h;
}

bool GameStore::matches(const Probe& p, std::uint32_t id) const {
  const NodeRecord& r = nodes_[id];
  if (r.hash != p.hash || r.sigma_left != p.sigma_left || r.sigma_right != p.sigma_right) return false;
  if (r.left_count != p.left.size() || r.right_count != p.right.size()) return false;
  GameNode n = node(GameId{id});
  return std::equal(n.left.begin(), n.left.end(), p.left.begin()) &&
         std::equal(n.right.begin(), n.right.end(), p.right.begin());
}

GameId GameStore::intern(std::span<const GameId> left, std::span<const GameId> right, bool sigma_left,
                         bool sigma_right) {
  const bool left_sorted = std::adjacent_find(left.begin(), left.end(), std::greater_equal<>{}) == left.end();
  const bool right_sorted =
      std::adjacent_find(right.begin(), right.end(), std::greater_equal<>{}) == right.end();
  if (!left_sorted || !right_sorted) {
    auto l = sorted_unique(left);
    auto r = sorted_unique(right);
    return intern(l, r, sigma_left, sigma_right);
  }
  for (GameId g : left)
    if (!contains(g)) throw std::invalid_argument("intern: unknown left option id");
  for (GameId g : right)
    if (!contains(g)) throw std::invalid_argument("intern: unknown right option id");

  const std::uint64_t hash = hash_fields(left, right, sigma_left, sigma_right);
  Probe probe{left, right, sigma_left, sigma_right, hash};
  if (auto it = index_.find(probe); it != index_.end()) return GameId{*it};
  return insert(left, right, sigma_left, sigma_right, hash);
}

GameId GameStore::insert(std::span<const GameId> left, std::span<const GameId> right, bool sigma_left,
                         bool sigma_right, std::uint64_t hash) {
  if (nodes_.size() >= node_limit_)
    throw BoundExceeded("game store limit of " + std::to_string(node_limit_) + " nodes reached");
  const std::size_t need = left.size() + right.size();
  if (need > kChunkSize) throw BoundExceeded("node has too many options");
  if (chunks_.empty() || chunk_used_ + need > kChunkSize) {
    chunks_.push_back(std::make_unique<GameId[]>(kChunkSize));
    chunk_used_ = 0;
  }
  GameId* base = chunks_.back().get() + chunk_used_;
  std::copy(left.begin(), left.end(), base);
  std::copy(right.begin(), right.end(), base + left.size());

  NodeRecord rec{static_cast<std::uint32_t>(chunks_.size() - 1), static_cast<std::uint32_t>(chunk_used_),
                 static_cast<std::uint32_t>(left.size()), static_cast<std::uint32_t>(right.size()),
                 hash, sigma_left, sigma_right};
  chunk_used_ += need;
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(rec);
  grow_memos();
  index_.insert(id);
  return GameId{id};
}

void GameStore::grow_memos() {
  conjugate_memo_.push_back(kUnknown);
  birthday_memo_.push_back(kUnknown);
  outcome_memo_.push_back(0);
  flags_.push_back(0);
}

GameNode GameStore::node(GameId g) const {
  const NodeRecord& r = nodes_.at(g.value);
  const GameId* base = chunks_[r.chunk].get() + r.offset;
  return GameNode{std::span<const GameId>(base, r.left_count),
                  std::span<const GameId>(base + r.left_count, r.right_count), r.sigma_left,
                  r.sigma_right};
}

GameId GameStore::star() { return intern({kZero}, {kZero}); }

GameId GameStore::integer(long n) {
  GameId g = kZero;
  for (long i = 0; i < (n < 0 ? -n : n); ++i) g = n > 0 ? intern({g}, {}) : intern({}, {g});
  return g;
}

std::optional<long> GameStore::as_integer(GameId g) const {
  long value = 0;
  int sign = 0;
  while (g != kZero) {
    GameNode n = node(g);
    if (n.has_tombstone()) return std::nullopt;
    if (n.left.size() == 1 && n.right.empty() && sign >= 0) {
      sign = 1;
      g = n.left[0];
    } else if (n.right.size() == 1 && n.left.empty() && sign <= 0) {
      sign = -1;
      g = n.right[0];
    } else {
      return std::nullopt;
    }
    ++value;
  }
  return sign * value;
}

GameId GameStore::conjugate(GameId g) {
  if (conjugate_memo_[g.value] != kUnknown) return GameId{conjugate_memo_[g.value]};
  GameNode n = node(g);
  std::vector<GameId> left, right;
  left.reserve(n.right.size());
  right.reserve(n.left.size());
  for (GameId r : n.right) left.push_back(conjugate(r));
  for (GameId l : n.left) right.push_back(conjugate(l));
  GameId c = intern(left, right, n.sigma_right, n.sigma_left);
  conjugate_memo_[g.value] = c.value;
  conjugate_memo_[c.value] = g.value;
  return c;
}

GameId GameStore::sum(GameId g, GameId h) {
  if (g == kZero) return h;
  if (h == kZero) return g;
  if (h < g) std::swap(g, h);
  const std::uint64_t key = pair_key(g, h);
  if (auto it = sum_memo_.find(key); it != sum_memo_.end()) return GameId{it->second};

  GameNode a = node(g);
  GameNode b = node(h);
  std::vector<GameId> left, right;
  left.reserve(a.left.size() + b.left.size());
  right.reserve(a.right.size() + b.right.size());
  for (GameId x : a.left) left.push_back(sum(x, h));
  for (GameId x : b.left) left.push_back(sum(g, x));
  for (GameId x : a.right) right.push_back(sum(x, h));
  for (GameId x : b.right) right.push_back(sum(g, x));
  const bool sigma_left = is_left_end_like(g) && is_left_end_like(h) && (a.sigma_left || b.sigma_left);
  const bool sigma_right =
      is_right_end_like(g) && is_right_end_like(h) && (a.sigma_right || b.sigma_right);
  GameId s = intern(left, right, sigma_left, sigma_right);
  sum_memo_.emplace(key, s.value);
  return s;
}

GameId GameStore::sum(std::span<const GameId> terms) {
  GameId acc = kZero;
  for (GameId t : terms) acc = sum(acc, t);
  return acc;
}

GameId GameStore::with_sigma(GameId g, Side side, bool present) {
  GameNode n = node(g);
  if (n.sigma(side) == present) return g;
  return side == Side::Left ? intern(n.left, n.right, present, n.sigma_right)
                            : intern(n.left, n.right, n.sigma_left, present);
}

OutcomePair GameStore::outcome(GameId g) {
  if (std::uint8_t m = outcome_memo_[g.value]) {
    return OutcomePair{(m & 1) ? Player::Left : Player::Right, (m & 2) ? Player::Left : Player::Right};
  }
  GameNode n = node(g);
  bool left_first_wins = is_left_end_like(g);
  for (std::size_t i = 0; !left_first_wins && i < n.left.size(); ++i)
    left_first_wins = outcome(n.left[i]).right_first == Player::Left;
  bool right_first_wins = is_right_end_like(g);
  for (std::size_t i = 0; !right_first_wins && i < n.right.size(); ++i)
    right_first_wins = outcome(n.right[i]).left_first == Player::Right;
  OutcomePair o{left_first_wins ? Player::Left : Player::Right,
                right_first_wins ? Player::Right : Player::Left};
  outcome_memo_[g.value] = static_cast<std::uint8_t>(4 | (o.left_first == Player::Left ? 1 : 0) |
                                                     (o.right_first == Player::Left ? 2 : 0));
  return o;
}

GameId GameStore::truncate(GameId g, unsigned n) {
  GameNode node_g = node(g);
  if (node_g.has_tombstone()) throw std::invalid_argument("truncate: tombstoned game");
  if (n == 0) return kZero;
  if (formal_birthday(g) <= n) return g;
  const std::uint64_t key = (std::uint64_t{g.value} << 32) | n;
  if (auto it = truncate_memo_.find(key); it != truncate_memo_.end()) return GameId{it->second};
  std::vector<GameId> left, right;
  for (GameId x : node_g.left) left.push_back(truncate(x, n - 1));
  for (GameId x : node_g.right) right.push_back(truncate(x, n - 1));
  GameId t = intern(left, right);
  truncate_memo_.emplace(key, t.value);
  return t;
}

unsigned GameStore::formal_birthday(GameId g) {
  if (birthday_memo_[g.value] != kUnknown) return birthday_memo_[g.value];
  GameNode n = node(g);
  unsigned b = 0;
  for (GameId x : n.left) b = std::max(b, formal_birthday(x) + 1);
  for (GameId x : n.right) b = std::max(b, formal_birthday(x) + 1);
  birthday_memo_[g.value] = b;
  return b;
}

GameId GameStore::perfect_murder(unsigned n) {
  GameId m = kZero;
  for (unsigned i = 0; i < n; ++i) m = intern({}, {kZero, m});
  return m;
}

EdgeCount GameStore::edge_count(GameId g) {
  if (auto it = edge_memo_.find(g.value); it != edge_memo_.end()) return it->second;
  GameNode n = node(g);
  EdgeCount e = (n.sigma_left ? 1 : 0) + (n.sigma_right ? 1 : 0);
  for (GameId x : n.left) e += 1 + edge_count(x);
  for (GameId x : n.right) e += 1 + edge_count(x);
  edge_memo_.emplace(g.value, e);
  return e;
}

bool GameStore::is_left_end(GameId g) const {
  GameNode n = node(g);
  return n.left.empty() && !n.sigma_left;
}

bool GameStore::is_right_end(GameId g) const {
  GameNode n = node(g);
  return n.right.empty() && !n.sigma_right;
}

bool GameStore::is_left_end_like(GameId g) const {
  GameNode n = node(g);
  return n.left.empty() || n.sigma_left;
}

bool GameStore::is_right_end_like(GameId g) const {
  GameNode n = node(g);
  return n.right.empty() || n.sigma_right;
}

bool GameStore::has_tombstones_anywhere(GameId g) {
  if (flags(g) & kTombKnown) return flags(g) & kTomb;
  GameNode n = node(g);
  bool t = n.has_tombstone();
  for (std::size_t i = 0; !t && i < n.left.size(); ++i) t = has_tombstones_anywhere(n.left[i]);
  for (std::size_t i = 0; !t && i < n.right.size(); ++i) t = has_tombstones_anywhere(n.right[i]);
  flags(g) |= kTombKnown | (t ? kTomb : 0);
  return t;
}

bool GameStore::is_dicot(GameId g) {
  if (g == kZero) return true;
  if (flags(g) & kDicotKnown) return flags(g) & kDicot;
  GameNode n = node(g);
  bool d = !n.has_tombstone() && !n.left.empty() && !n.right.empty();
  for (std::size_t i = 0; d && i < n.left.size(); ++i) d = is_dicot(n.left[i]);
  for (std::size_t i = 0; d && i < n.right.size(); ++i) d = is_dicot(n.right[i]);
  flags(g) |= kDicotKnown | (d ? kDicot : 0);
  return d;
}

bool GameStore::is_left_dead_end(GameId g) {
  if (flags(g) & kLeftDeadKnown) return flags(g) & kLeftDead;
  GameNode n = node(g);
  bool d = n.left.empty() && !n.has_tombstone();
  for (std::size_t i = 0; d && i < n.right.size(); ++i) d = is_left_dead_end(n.right[i]);
  flags(g) |= kLeftDeadKnown | (d ? kLeftDead : 0);
  return d;
}

bool GameStore::is_right_dead_end(GameId g) { return is_left_dead_end(conjugate(g)); }

bool GameStore::is_dead_ending(GameId g) {
  if (flags(g) & kDeadEndingKnown) return flags(g) & kDeadEnding;
  GameNode n = node(g);
  bool d = !n.has_tombstone();
  if (d && n.left.empty()) d = is_left_dead_end(g);
  if (d && n.right.empty()) d = is_right_dead_end(g);
  for (std::size_t i = 0; d && i < n.left.size(); ++i) d = is_dead_ending(n.left[i]);
  for (std::size_t i = 0; d && i < n.right.size(); ++i) d = is_dead_ending(n.right[i]);
  flags(g) |= kDeadEndingKnown | (d ? kDeadEnding : 0);
  return d;
}

std::vector<GameId> GameStore::subpositions(GameId g) const {
  std::vector<GameId> order;
  std::unordered_set<std::uint32_t> seen;
  // iterative post-order so deep games do not exhaust the stack
  std::vector<std::pair<GameId, bool>> stack{{g, false}};
  while (!stack.empty()) {
    auto [x, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      order.push_back(x);
      continue;
    }
    if (!seen.insert(x.value).second) continue;
    stack.push_back({x, true});
    GameNode n = node(x);
    for (GameId c : n.left)
      if (!seen.count(c.value)) stack.push_back({c, false});
    for (GameId c : n.right)
      if (!seen.count(c.value)) stack.push_back({c, false});
  }
  return order;
}

}  // namespace misere
