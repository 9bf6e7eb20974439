#ifndef HEDONICA_FIXTURES_HPP
#define HEDONICA_FIXTURES_HPP

#include <span>
#include <string_view>

#include "hedonica/games.hpp"

namespace hedonica {

/// Registry of the small worked games used throughout the tests:
///
///   ex1_separability            subset-neutral, n=3: w = 0 on singletons, 1 on pairs,
///                               -10 on {1,2,3}; subset-neutral but not separable
///   ex2_cycle                   subset-neutral, n=4: w({1,3}) = w({2,4}) = 1, every
///                               other subset 0; players 1 and 2 disagree on
///                               {1,2,3} vs {1,2,4}
///   ex3_no_nash_common_ranking  common ranking {1,2} > {1} > {2} > {1,2,3} > {1,3}
///                               > {2,3} > {3}; no Nash stable partition
///   ex4_tie_break               common ranking {1,2} ~ {1,2,3} > {2} > {1} > {1,3}
///                               > {2,3} > {3}; greedy must prefer the larger tie
///   ex5_top_coalition           per-player rankings with the top-coalition property
///                               whose top-coalition partition is not individually stable
///   ex6_core_not_cis            neutrally anonymous f = (0, 1, 1)
///   ex7_no_nash_core            neutrally anonymous f = (0, 2, 1, 0, 0)
///   inline_f_01m1               neutrally anonymous f = (0, 1, -1)
///   inline_strongcore_none      neutrally anonymous f = (0, 1, 0)
///
/// Rankings are stored as integer scores: tiers numbered from the bottom,
/// lowest tier 0.
std::span<const std::string_view> fixture_names();

/// Throws std::invalid_argument for an unknown name.
Game load_fixture(std::string_view name);

}  // namespace hedonica

#endif  // HEDONICA_FIXTURES_HPP
