#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"

#include "misere/game_store.hpp"
#include "misere/universe.hpp"

namespace misere {

enum class StepKind { EliminatedDominated, BypassedReversible, SigmaReplaced, SigmaErased };

const char* step_name(StepKind k);

/// One rewrite of a single subposition: `before` becomes `after` wherever it occurs.
struct ReductionStep {
  StepKind kind;
  Side side;
  std::optional<GameId> option;   ///< the removed option (absent for SigmaErased)
  std::optional<GameId> through;  ///< reversing position, or the dominating option
  GameId before;
  GameId after;
};

struct ReductionTrace {
  GameId input;
  GameId output;
  std::vector<ReductionStep> steps;
};

struct StepResult {
  GameId result;
  bool applied = false;
  Side side = Side::Left;
  std::optional<GameId> option;
  std::optional<GameId> through;
};

/// Single-step rewrites at the root of g; options are not simplified first.
/// When nothing applies, `applied` is false and `result == g`.
StepResult eliminate_dominated(Universe& u, GameId g);
StepResult bypass_ordinary_reversible(Universe& u, GameId g);
StepResult sigma_replace_atomic(Universe& u, GameId g);
StepResult sigma_erase(Universe& u, GameId g);

/// The unique augmented U-simplest form, computed bottom-up:
/// bypass ordinary reversibles and eliminate dominated options until stable,
/// replace atomic reversibles by tombstones, then erase erasable tombstones (Left first).
GameId simplest_form(Universe& u, GameId g);

/// As simplest_form, recording each rewrite. A seed shuffles the order in which
/// candidate options are examined; the final form does not depend on it.
ReductionTrace simplest_form_traced(Universe& u, GameId g, std::optional<std::uint64_t> seed = std::nullopt);

/// No dominated or reversible options and no erasable tombstone, in every subposition.
bool is_simplest(Universe& u, GameId g);

/// Applies the trace's steps to its input as global substitutions.
GameId replay(GameStore& store, const ReductionTrace& trace);

nlohmann::json to_json(GameStore& store, const ReductionTrace& trace);

}  // namespace misere
