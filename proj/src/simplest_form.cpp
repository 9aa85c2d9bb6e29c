#include "misere/simplest_form.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <unordered_map>

#include "misere/comparison.hpp"
#include "misere/notation.hpp"

namespace misere {

namespace {

using Rng = std::mt19937_64;

std::vector<std::size_t> scan_order(std::size_t n, Rng* rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (rng) std::shuffle(order.begin(), order.end(), *rng);
  return order;
}

std::array<Side, 2> side_order(Rng* rng) {
  if (rng && ((*rng)() & 1)) return {Side::Right, Side::Left};
  return {Side::Left, Side::Right};
}

std::vector<GameId> without(std::span<const GameId> xs, GameId x) {
  std::vector<GameId> out;
  for (GameId y : xs)
    if (y != x) out.push_back(y);
  return out;
}

/// Rebuilds g with one side replaced.
GameId rebuild(GameStore& store, const GameNode& n, Side side, std::span<const GameId> options, bool sigma) {
  if (side == Side::Left) return store.intern(options, n.right, sigma, n.sigma_right);
  return store.intern(n.left, options, n.sigma_left, sigma);
}

/// x is at least as good as y for `side`.
bool better_or_equal(Universe& u, Side side, GameId x, GameId y) {
  return side == Side::Left ? geq(u, x, y) : geq(u, y, x);
}

StepResult eliminate_dominated_impl(Universe& u, GameId g, Rng* rng) {
  GameStore& store = u.store();
  const GameNode n = store.node(g);
  for (Side side : side_order(rng)) {
    auto opts = n.options(side);
    for (std::size_t i : scan_order(opts.size(), rng)) {
      for (std::size_t j = 0; j < opts.size(); ++j) {
        if (i == j || !better_or_equal(u, side, opts[j], opts[i])) continue;
        auto kept = without(opts, opts[i]);
        return {rebuild(store, n, side, kept, n.sigma(side)), true, side, opts[i], opts[j]};
      }
    }
  }
  return {g, false, Side::Left, std::nullopt, std::nullopt};
}

/// Reversible through `through`: G >= G^{LR} on the Left, G^{RL} >= G on the Right.
bool reverses(Universe& u, Side side, GameId g, GameId through) {
  return side == Side::Left ? geq(u, g, through) : geq(u, through, g);
}

StepResult reversible_impl(Universe& u, GameId g, Rng* rng, bool atomic) {
  GameStore& store = u.store();
  const GameNode n = store.node(g);
  for (Side side : side_order(rng)) {
    auto opts = n.options(side);
    for (std::size_t i : scan_order(opts.size(), rng)) {
      const GameId option = opts[i];
      auto replies = store.node(option).options(opponent(side));
      for (std::size_t j : scan_order(replies.size(), rng)) {
        const GameId through = replies[j];
        if (store.is_end(through, side) != atomic) continue;
        if (!reverses(u, side, g, through)) continue;
        auto kept = without(opts, option);
        bool sigma = n.sigma(side);
        if (atomic) {
          sigma = true;
        } else {
          const GameNode t = store.node(through);
          auto extra = t.options(side);
          kept.insert(kept.end(), extra.begin(), extra.end());
          sigma = sigma || t.sigma(side);
        }
        return {rebuild(store, n, side, kept, sigma), true, side, option, through};
      }
    }
  }
  return {g, false, Side::Left, std::nullopt, std::nullopt};
}

StepResult sigma_erase_impl(Universe& u, GameId g) {
  GameStore& store = u.store();
  for (Side side : {Side::Left, Side::Right}) {
    if (!store.node(g).sigma(side)) continue;
    const GameId erased = store.with_sigma(g, side, false);
    if (u.is_strong(erased, side)) return {erased, true, side, std::nullopt, std::nullopt};
  }
  return {g, false, Side::Left, std::nullopt, std::nullopt};
}

class Reducer {
 public:
  Reducer(Universe& u, std::vector<ReductionStep>* steps, Rng* rng) : u_(u), store_(u.store()), steps_(steps), rng_(rng) {}

  GameId simplify(GameId g) {
    auto& memo = steps_ ? local_memo_ : u_.simplest_cache();
    if (auto it = memo.find(g.value); it != memo.end()) return GameId{it->second};
    const GameNode n = store_.node(g);
    std::vector<GameId> left, right;
    left.reserve(n.left.size());
    right.reserve(n.right.size());
    for (GameId l : n.left) left.push_back(simplify(l));
    for (GameId r : n.right) right.push_back(simplify(r));
    GameId current = store_.intern(left, right, n.sigma_left, n.sigma_right);
    current = reduce_root(current);
    memo[g.value] = current.value;
    memo[current.value] = current.value;
    return current;
  }

 private:
  GameId reduce_root(GameId g) {
    // each bypass replaces an option by strictly shorter ones, so the loop terminates
    for (;;) {
      if (apply(StepKind::BypassedReversible, reversible_impl(u_, g, rng_, false), g)) continue;
      if (apply(StepKind::EliminatedDominated, eliminate_dominated_impl(u_, g, rng_), g)) continue;
      break;
    }
    while (apply(StepKind::SigmaReplaced, reversible_impl(u_, g, rng_, true), g)) {
    }
    while (apply(StepKind::SigmaErased, sigma_erase_impl(u_, g), g)) {
    }
    return g;
  }

  bool apply(StepKind kind, const StepResult& r, GameId& g) {
    if (!r.applied) return false;
    if (steps_) steps_->push_back({kind, r.side, r.option, r.through, g, r.result});
    g = r.result;
    return true;
  }

  Universe& u_;
  GameStore& store_;
  std::vector<ReductionStep>* steps_;
  Rng* rng_;
  std::unordered_map<std::uint32_t, std::uint32_t> local_memo_;
};

GameId substitute(GameStore& store, GameId g, GameId before, GameId after,
                  std::unordered_map<std::uint32_t, GameId>& memo) {
  if (g == before) return after;
  if (auto it = memo.find(g.value); it != memo.end()) return it->second;
  const GameNode n = store.node(g);
  std::vector<GameId> left, right;
  for (GameId l : n.left) left.push_back(substitute(store, l, before, after, memo));
  for (GameId r : n.right) right.push_back(substitute(store, r, before, after, memo));
  GameId result = store.intern(left, right, n.sigma_left, n.sigma_right);
  memo.emplace(g.value, result);
  return result;
}

}  // namespace

const char* step_name(StepKind k) {
  switch (k) {
    case StepKind::EliminatedDominated:
      return "eliminate_dominated";
    case StepKind::BypassedReversible:
      return "bypass_reversible";
    case StepKind::SigmaReplaced:
      return "sigma_replace";
    case StepKind::SigmaErased:
      return "sigma_erase";
  }
  return "unknown";
}

StepResult eliminate_dominated(Universe& u, GameId g) { return eliminate_dominated_impl(u, g, nullptr); }
StepResult bypass_ordinary_reversible(Universe& u, GameId g) { return reversible_impl(u, g, nullptr, false); }
StepResult sigma_replace_atomic(Universe& u, GameId g) { return reversible_impl(u, g, nullptr, true); }
StepResult sigma_erase(Universe& u, GameId g) { return sigma_erase_impl(u, g); }

GameId simplest_form(Universe& u, GameId g) { return Reducer(u, nullptr, nullptr).simplify(g); }

ReductionTrace simplest_form_traced(Universe& u, GameId g, std::optional<std::uint64_t> seed) {
  ReductionTrace trace;
  trace.input = g;
  std::optional<Rng> rng;
  if (seed) rng.emplace(*seed);
  trace.output = Reducer(u, &trace.steps, rng ? &*rng : nullptr).simplify(g);
  return trace;
}

bool is_simplest(Universe& u, GameId g) {
  for (GameId p : u.store().subpositions(g)) {
    if (eliminate_dominated(u, p).applied) return false;
    if (bypass_ordinary_reversible(u, p).applied) return false;
    if (sigma_replace_atomic(u, p).applied) return false;
    if (sigma_erase(u, p).applied) return false;
  }
  return true;
}

GameId replay(GameStore& store, const ReductionTrace& trace) {
  GameId current = trace.input;
  for (const ReductionStep& s : trace.steps) {
    std::unordered_map<std::uint32_t, GameId> memo;
    current = substitute(store, current, s.before, s.after, memo);
  }
  return current;
}

nlohmann::json to_json(GameStore& store, const ReductionTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const ReductionStep& s : trace.steps) {
    nlohmann::json j{{"step", step_name(s.kind)},
                     {"side", s.side == Side::Left ? "L" : "R"},
                     {"before", to_string(store, s.before)},
                     {"after", to_string(store, s.after)}};
    if (s.option) j["option"] = to_string(store, *s.option);
    if (s.through) j["through"] = to_string(store, *s.through);
    steps.push_back(std::move(j));
  }
  return {{"input", to_string(store, trace.input)}, {"output", to_string(store, trace.output)}, {"steps", steps}};
}

}  // namespace misere
