#include "hedonica/solve.hpp"

#include "hedonica/errors.hpp"
#include "hedonica/transform.hpp"

namespace hedonica {

namespace {

SubsetNeutralRepr
require_subset_neutral(const Game& game)
{
  auto sn = as_subset_neutral(game);
  if (!sn) {
    throw PreconditionError(std::string("potential-based solvers need a subset-neutral, neutrally anonymous or "
                                        "symmetric additively separable game, got ") +
                            std::string(kind_name(game.kind())));
  }
  return std::move(*sn);
}

void
check_partition(const SubsetNeutralRepr& w, const Partition& partition)
{
  if (partition.num_players() != w.num_players()) {
    throw PreconditionError("partition covers " + std::to_string(partition.num_players()) +
                            " players but the game has " + std::to_string(w.num_players()));
  }
}

}  // namespace

Rational
potential(const SubsetNeutralRepr& w, const Partition& partition)
{
  check_partition(w, partition);
  Rational phi;
  for (const Coalition& block : partition.blocks()) {
    phi += w.block_value(block.mask());
  }
  return phi;
}

std::optional<std::pair<Partition, DynamicsStep>>
better_response_step(const SubsetNeutralRepr& w, const Partition& partition)
{
  check_partition(w, partition);
  const auto& blocks = partition.blocks();
  for (PlayerId i = 1; i <= w.num_players(); ++i) {
    const PlayerMask self = player_bit(i);
    const std::size_t origin_index = partition.block_index_of(i);
    const PlayerMask origin = blocks[origin_index].mask();
    const Rational current = w.utility(i, origin);

    auto apply = [&](std::optional<std::size_t> target) -> std::optional<std::pair<Partition, DynamicsStep>> {
      const PlayerMask joined = (target ? blocks[*target].mask() : 0) | self;
      if (w.utility(i, joined) <= current) {
        return std::nullopt;
      }
      Partition next = partition.with_move(i, target);
      DynamicsStep step{i, blocks[origin_index], Coalition::from_mask(joined), potential(w, partition),
                        potential(w, next)};
      return std::make_pair(std::move(next), std::move(step));
    };

    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (b == origin_index) {
        continue;
      }
      if (auto moved = apply(b)) {
        return moved;
      }
    }
    if (origin != self) {
      if (auto moved = apply(std::nullopt)) {
        return moved;
      }
    }
  }
  return std::nullopt;
}

LocalSearchResult
solve_nash_local_search(const SubsetNeutralRepr& w, std::optional<Partition> start)
{
  LocalSearchResult result{start ? std::move(*start) : Partition::singletons(w.num_players()), {}};
  check_partition(w, result.partition);
  while (auto moved = better_response_step(w, result.partition)) {
    result.partition = std::move(moved->first);
    result.trace.push_back(std::move(moved->second));
  }
  return result;
}

LocalSearchResult
solve_nash_local_search(const Game& game, std::optional<Partition> start)
{
  return solve_nash_local_search(require_subset_neutral(game), std::move(start));
}

Partition
solve_nash_global(const SubsetNeutralRepr& w, const Limits& limits)
{
  std::optional<Partition> best;
  Rational best_phi;
  for_each_partition(
    w.num_players(),
    [&](const Partition& p) {
      Rational phi = potential(w, p);
      if (!best || phi > best_phi) {
        best = p;
        best_phi = std::move(phi);
      }
    },
    limits.partition_cap);
  return std::move(*best);
}

Partition
solve_nash_global(const Game& game, const Limits& limits)
{
  return solve_nash_global(require_subset_neutral(game), limits);
}

Partition
solve_common_ranking_greedy(const Game& game, const Limits& limits)
{
  const int n = game.num_players();
  require_within_cap(n, limits.coalition_cap, "common ranking greedy");

  std::vector<Rational> rank(std::size_t{1} << n);
  if (const auto* cr = game.get_if<CommonRankingRepr>()) {
    for (PlayerMask c = 1; c <= full_mask(n); ++c) {
      rank[c] = cr->w(c);
    }
  } else if (const auto* na = game.get_if<NeutrallyAnonymousRepr>()) {
    for (PlayerMask c = 1; c <= full_mask(n); ++c) {
      rank[c] = na->f(popcount(c));
    }
  } else {
    CommonRankingCheck check = has_common_ranking(game, limits);
    if (!check.holds()) {
      const RankingConstraint& c = check.conflict_cycle.front();
      throw PreconditionError("game has no common ranking (player " + std::to_string(c.player) + " ranks {" +
                              c.higher.to_string() + "} above {" + c.lower.to_string() +
                              "}, which other comparisons contradict)");
    }
    for (const auto& [c, value] : *check.ranking) {
      rank[c.mask()] = value;
    }
  }

  std::vector<Coalition> blocks;
  PlayerMask pool = full_mask(n);
  while (pool != 0) {
    PlayerMask chosen = 0;
    for_each_submask(pool, [&](PlayerMask t) {
      if (chosen == 0) {
        chosen = t;
        return;
      }
      const auto order = rank[t] <=> rank[chosen];
      if (order > 0 || (order == 0 && (popcount(t) > popcount(chosen) ||
                                       (popcount(t) == popcount(chosen) && lexicographically_less(t, chosen))))) {
        chosen = t;
      }
    });
    blocks.push_back(Coalition::from_mask(chosen));
    pool &= ~chosen;
  }
  return Partition(n, std::move(blocks));
}

Partition
solve_top_coalition_greedy(const Game& game, TopCoalitionOrder order, const Limits& limits)
{
  const int n = game.num_players();
  if (const auto missing = has_top_coalition_property(game, limits).counterexample) {
    throw PreconditionError("top-coalition property fails: {" + missing->to_string() + "} has no top coalition");
  }
  std::vector<Coalition> blocks;
  PlayerMask pool = full_mask(n);
  while (pool != 0) {
    const auto top = find_top_coalition(game, Coalition::from_mask(pool), order);
    if (!top) {
      throw PreconditionError("pool {" + Coalition::from_mask(pool).to_string() + "} has no top coalition");
    }
    blocks.push_back(*top);
    pool &= ~top->mask();
  }
  return Partition(n, std::move(blocks));
}

std::vector<Partition>
enumerate_stable(const Game& game, std::span<const Notion> notions, const Limits& limits)
{
  std::vector<Partition> out;
  for_each_partition(
    game.num_players(),
    [&](const Partition& p) {
      for (Notion notion : notions) {
        if (!satisfies(game, p, notion, limits)) {
          return;
        }
      }
      out.push_back(p);
    },
    limits.partition_cap);
  return out;
}

}  // namespace hedonica
