#include "misere/enumeration.hpp"

#include <algorithm>

#include "misere/comparison.hpp"
#include "misere/errors.hpp"
#include "misere/simplest_form.hpp"

namespace misere {

namespace {

std::vector<std::vector<GameId>> all_subsets(std::span<const GameId> xs) {
  std::vector<std::vector<GameId>> out;
  const std::uint64_t count = std::uint64_t{1} << xs.size();
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<GameId> s;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (mask >> i & 1) s.push_back(xs[i]);
    out.push_back(std::move(s));
  }
  return out;
}

void check_candidates(std::size_t previous, std::uint64_t max_candidates) {
  if (2 * previous >= 63 || (std::uint64_t{1} << (2 * previous)) > max_candidates)
    throw BoundExceeded("enumeration needs 2^" + std::to_string(2 * previous) + " candidates");
}

}  // namespace

std::vector<GameId> enumerate_trees(Universe& u, unsigned day, std::uint64_t max_candidates) {
  GameStore& store = u.store();
  std::vector<GameId> trees{kZero};
  for (unsigned d = 1; d <= day; ++d) {
    check_candidates(trees.size(), max_candidates);
    const auto subsets = all_subsets(trees);
    std::vector<GameId> next;
    for (const auto& left : subsets)
      for (const auto& right : subsets) {
        GameId g = store.intern(left, right);
        if (u.contains(g)) next.push_back(g);
      }
    std::sort(next.begin(), next.end());
    trees = std::move(next);
  }
  return trees;
}

Census census(Universe& u, unsigned day, std::uint64_t max_candidates) {
  Census c;
  c.day = day;
  c.universe = u.name();
  GameStore& store = u.store();

  if (u.kind() == UniverseKind::Dicots && day >= 3) {
    Census below = census(u, day - 1, max_candidates);
    check_candidates(below.representatives.size(), max_candidates);
    // dicot trees of day n: both sides empty, or both sides nonempty subsets of the day n-1 trees
    if (below.tree_count < 32) {
      const std::uint64_t nonempty = (std::uint64_t{1} << below.tree_count) - 1;
      c.tree_count = 1 + nonempty * nonempty;
    }
    const auto subsets = all_subsets(below.representatives);
    std::vector<GameId> values{kZero};
    for (std::size_t i = 1; i < subsets.size(); ++i)
      for (std::size_t j = 1; j < subsets.size(); ++j)
        values.push_back(simplest_form(u, store.intern(subsets[i], subsets[j])));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    c.distinct_count = values.size();
    c.representatives = std::move(values);
    return c;
  }

  const auto trees = enumerate_trees(u, day, max_candidates);
  c.tree_count = trees.size();
  std::vector<GameId> values;
  values.reserve(trees.size());
  for (GameId t : trees) values.push_back(simplest_form(u, t));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  c.distinct_count = values.size();
  c.representatives = std::move(values);
  return c;
}

std::size_t count_classes_pairwise(Universe& u, std::span<const GameId> games) {
  std::vector<GameId> reps;
  for (GameId g : games) {
    bool found = false;
    for (GameId r : reps)
      if (equiv(u, g, r)) {
        found = true;
        break;
      }
    if (!found) reps.push_back(g);
  }
  return reps.size();
}

}  // namespace misere
