#pragma once

#include <string_view>

#include "misere/game_store.hpp"
#include "misere/universe.hpp"

namespace misere {

enum class Relation { Greater, Less, Equal, Incomparable };

/// ">", "<", "=" or "||"
std::string_view relation_symbol(Relation r);

/// G >=_U H for augmented G, H.
///
/// (a) every G^R has some H^R <= it, or some G^RL >= H;
/// (b) every H^L has some G^L >= it, or some H^LR <= G;
/// (c) H Left end-like implies G Left U-strong;
/// (d) G Right end-like implies H Right U-strong.
bool geq(Universe& u, GameId g, GameId h);
bool equiv(Universe& u, GameId g, GameId h);
Relation compare(Universe& u, GameId g, GameId h);

}  // namespace misere
