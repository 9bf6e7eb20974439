#ifndef HEDONICA_JSON_IO_HPP
#define HEDONICA_JSON_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "hedonica/games.hpp"

namespace hedonica {

// Instance files hold one object {"n": int, "kind": string, <payload>}:
//
//   utilities             "u": {"<player>": {"<coalition-key>": number}}
//   additively_separable  "v": n x n array, row i = v_i
//   subset_additive       "v": {"<player>": {"<coalition-key>": number}}
//   subset_neutral        "w": {"<coalition-key>": number}
//   common_ranking        "w": {"<coalition-key>": number}
//   neutrally_anonymous   "f": array of n numbers, f[s-1] for size s
//   anonymous             "g": n x n array, g[i-1][s-1]
//
// A coalition key lists ascending ids joined by commas ("1,3"). Numbers are
// JSON integers or strings holding an integer, a decimal ("-2.5") or a
// fraction ("1/3"). Output writes integers as JSON integers, terminating
// fractions as decimal strings and anything else as "p/q".

Game game_from_json(std::string_view text);
std::string game_to_json(const Game& game);

Game load_game(const std::filesystem::path& path);
void save_game(const Game& game, const std::filesystem::path& path);

}  // namespace hedonica

#endif  // HEDONICA_JSON_IO_HPP
