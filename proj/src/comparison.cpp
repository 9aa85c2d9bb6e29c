#include "misere/comparison.hpp"

#include <stdexcept>

namespace misere {

namespace {

std::uint64_t pair_key(GameId a, GameId b) { return (std::uint64_t{a.value} << 32) | b.value; }

bool geq_rec(Universe& u, GameId g, GameId h) {
  if (g == h) return true;
  ComparisonCache& cache = u.comparison_cache();
  const std::uint64_t key = pair_key(g, h);
  if (auto it = cache.geq.find(key); it != cache.geq.end()) return it->second;
  if (!cache.in_progress.emplace(key, true).second) throw std::logic_error("geq: cyclic recursion");

  GameStore& store = u.store();
  const GameNode gn = store.node(g);
  const GameNode hn = store.node(h);
  bool result = true;

  // proviso first: strongness is cached per universe
  if (store.is_left_end_like(h) && !u.is_left_strong(g)) result = false;
  if (result && store.is_right_end_like(g) && !u.is_right_strong(h)) result = false;

  for (std::size_t i = 0; result && i < gn.right.size(); ++i) {
    const GameId gr = gn.right[i];
    bool ok = false;
    for (GameId hr : hn.right)
      if (geq_rec(u, gr, hr)) {
        ok = true;
        break;
      }
    if (!ok) {
      for (GameId grl : store.node(gr).left)
        if (geq_rec(u, grl, h)) {
          ok = true;
          break;
        }
    }
    result = ok;
  }
  for (std::size_t i = 0; result && i < hn.left.size(); ++i) {
    const GameId hl = hn.left[i];
    bool ok = false;
    for (GameId gl : gn.left)
      if (geq_rec(u, gl, hl)) {
        ok = true;
        break;
      }
    if (!ok) {
      for (GameId hlr : store.node(hl).right)
        if (geq_rec(u, g, hlr)) {
          ok = true;
          break;
        }
    }
    result = ok;
  }

  cache.in_progress.erase(key);
  cache.geq.emplace(key, result);
  return result;
}

}  // namespace

std::string_view relation_symbol(Relation r) {
  switch (r) {
    case Relation::Greater:
      return ">";
    case Relation::Less:
      return "<";
    case Relation::Equal:
      return "=";
    case Relation::Incomparable:
      return "||";
  }
  return "?";
}

bool geq(Universe& u, GameId g, GameId h) { return geq_rec(u, g, h); }

bool equiv(Universe& u, GameId g, GameId h) { return geq(u, g, h) && geq(u, h, g); }

Relation compare(Universe& u, GameId g, GameId h) {
  const bool ge = geq(u, g, h);
  const bool le = geq(u, h, g);
  if (ge && le) return Relation::Equal;
  if (ge) return Relation::Greater;
  if (le) return Relation::Less;
  return Relation::Incomparable;
}

}  // namespace misere
