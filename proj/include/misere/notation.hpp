#pragma once

#include <string>
#include <string_view>

#include "misere/game_store.hpp"

namespace misere {

/// Parses the text notation
///
///   Game := "0" | Int | "*" | "{" List "|" List "}"
///   List := empty | Item ("," Item)*
///   Item := Game | "SL" | "SR" | "M(" nat ")" | "+-" Game
///
/// "+-G" is {G | conj G}, "M(n)" the perfect murder M_n. SL may only appear on the
/// Left of a bar and SR only on the Right. Whitespace is ignored.
GameId parse_game(GameStore& store, std::string_view text);

/// Inverse of parse_game: integers and * are printed as such, {X|conj X} as "+-X",
/// everything else in braces. Options are listed tallest first, ties by id,
/// with tombstones last.
std::string to_string(GameStore& store, GameId g);

}  // namespace misere
