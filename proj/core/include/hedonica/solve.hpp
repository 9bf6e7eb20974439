#ifndef HEDONICA_SOLVE_HPP
#define HEDONICA_SOLVE_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hedonica/games.hpp"
#include "hedonica/stability.hpp"

namespace hedonica {

/// Phi(pi): for every block C, the sum of w over all nonempty subsets of C.
Rational potential(const SubsetNeutralRepr& w, const Partition& partition);

/// One improving move of the better-response dynamics. `to` is the block the
/// player ends up in (the destination block plus the player).
struct DynamicsStep
{
  PlayerId player;
  Coalition from;
  Coalition to;
  Rational phi_before;
  Rational phi_after;
};

using DynamicsTrace = std::vector<DynamicsStep>;

/// Applies the first strictly improving deviation in the Nash scan order, or
/// returns nullopt when the partition is Nash stable.
std::optional<std::pair<Partition, DynamicsStep>> better_response_step(const SubsetNeutralRepr& w,
                                                                       const Partition& partition);

struct LocalSearchResult
{
  Partition partition;
  DynamicsTrace trace;
};

/// Better-response dynamics from `start` (all singletons by default) to a
/// Nash stable fixed point. Phi increases strictly at every step, so this
/// terminates.
LocalSearchResult solve_nash_local_search(const SubsetNeutralRepr& w, std::optional<Partition> start = std::nullopt);

/// Accepts any game with a subset-neutral form (see as_subset_neutral).
LocalSearchResult solve_nash_local_search(const Game& game, std::optional<Partition> start = std::nullopt);

/// First maximizer of Phi in restricted-growth order; Nash stable.
Partition solve_nash_global(const SubsetNeutralRepr& w, const Limits& limits = {});
Partition solve_nash_global(const Game& game, const Limits& limits = {});

/// Greedy for games with a common ranking w: repeatedly remove from the pool
/// the subset with the highest w, the largest such, then the
/// lexicographically smallest. The result is core stable and individually
/// stable.
///
/// Common-ranking games use their w, neutrally anonymous games rank by
/// f(|T|); any other game is accepted if has_common_ranking finds a w.
Partition solve_common_ranking_greedy(const Game& game, const Limits& limits = {});

/// Repeatedly removes find_top_coalition(pool). Requires the top-coalition
/// property; the result is core stable but need not be individually stable.
Partition solve_top_coalition_greedy(const Game& game,
                                     TopCoalitionOrder order = TopCoalitionOrder::kLargestFirst,
                                     const Limits& limits = {});

/// Every partition satisfying all of `notions`, in restricted-growth order.
std::vector<Partition> enumerate_stable(const Game& game, std::span<const Notion> notions, const Limits& limits = {});

}  // namespace hedonica

#endif  // HEDONICA_SOLVE_HPP
