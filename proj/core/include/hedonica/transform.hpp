#ifndef HEDONICA_TRANSFORM_HPP
#define HEDONICA_TRANSFORM_HPP

#include <optional>
#include <vector>

#include "hedonica/games.hpp"

namespace hedonica {

/// Rewrites any game as a subset-additive one with identical utilities.
///
/// For each player i the coalitions containing i are visited by increasing
/// size (bitmask order within a size) and assigned
///   v_i(C) = u_i(C) - sum of v_i(C') over i in C', C' a proper subset of C,
/// so v_i({i}) = u_i({i}) and the sums over subsets reproduce u_i exactly.
SubsetAdditiveRepr to_subset_additive(const Game& game, const Limits& limits = {});

/// Subset-neutral form of a neutrally anonymous game. The result is
/// size-indexed: w_k = f(k) - sum_{j<k} C(k-1, j-1) w_j.
SubsetNeutralRepr na_to_subset_neutral(const NeutrallyAnonymousRepr& f);

/// w({i}) = v_i(i), w({i,j}) = v_i(j), zero on larger sets. Throws
/// PreconditionError unless the matrix is symmetric.
SubsetNeutralRepr symmetric_as_to_subset_neutral(const AdditivelySeparableRepr& v);

/// Subset-neutral view of a game when one is known by construction:
/// subset-neutral games as-is, neutrally anonymous games via
/// na_to_subset_neutral, symmetric additively separable games via the
/// embedding. nullopt otherwise.
std::optional<SubsetNeutralRepr> as_subset_neutral(const Game& game);

/// Tiers of player i's coalitions, best first. Every coalition containing i
/// must appear exactly once; tier t counted from the bottom gets utility t-1.
CoalitionValues ranking_to_utilities(const std::vector<std::vector<Coalition>>& tiers, PlayerId i, int n);

}  // namespace hedonica

#endif  // HEDONICA_TRANSFORM_HPP
