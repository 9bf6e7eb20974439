#include "hedonica/stability.hpp"

#include <array>

#include "hedonica/errors.hpp"

namespace hedonica {

namespace {

constexpr std::array<std::string_view, 5> kNotionNames = {"nash", "is", "cis", "core", "strongcore"};

enum class VetoRule
{
  kNone,         // Nash
  kDestination,  // individual stability
  kEither,       // contractual individual stability
};

void
check_partition(const Game& game, const Partition& partition)
{
  if (partition.num_players() != game.num_players()) {
    throw PreconditionError("partition covers " + std::to_string(partition.num_players()) +
                            " players but the game has " + std::to_string(game.num_players()));
  }
}

/// Some member of `block` strictly prefers `block` to `block` changed into `changed`.
std::optional<PlayerId>
find_objector(const Game& game, PlayerMask block, PlayerMask changed, PlayerMask members)
{
  for (PlayerMask m = members; m != 0; m &= m - 1) {
    const PlayerId j = lowest_player(m);
    if (game.compare(j, block, changed) > 0) {
      return j;
    }
  }
  return std::nullopt;
}

DeviationVerdict
scan_deviations(const Game& game, const Partition& partition, VetoRule rule)
{
  check_partition(game, partition);
  const auto& blocks = partition.blocks();
  for (PlayerId i = 1; i <= game.num_players(); ++i) {
    const PlayerMask self = player_bit(i);
    const std::size_t origin_index = partition.block_index_of(i);
    const PlayerMask origin = blocks[origin_index].mask();
    const PlayerMask origin_after = origin & ~self;

    auto consider = [&](std::optional<std::size_t> target) -> std::optional<DeviationWitness> {
      const PlayerMask dest = target ? blocks[*target].mask() : 0;
      if (game.compare(i, dest | self, origin) <= 0) {
        return std::nullopt;
      }
      std::optional<PlayerId> origin_veto;
      if (rule != VetoRule::kNone) {
        if (dest != 0 && find_objector(game, dest, dest | self, dest)) {
          return std::nullopt;
        }
        if (origin_after != 0) {
          origin_veto = find_objector(game, origin, origin_after, origin_after);
        }
        if (rule == VetoRule::kEither && origin_veto) {
          return std::nullopt;
        }
      }
      DeviationWitness w{i, std::nullopt, std::nullopt};
      if (target) {
        w.target = blocks[*target];
      }
      if (rule == VetoRule::kDestination) {
        w.vetoer = origin_veto;
      }
      return w;
    };

    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (b == origin_index) {
        continue;
      }
      if (auto w = consider(b)) {
        return {std::move(w)};
      }
    }
    if (origin_after != 0) {
      if (auto w = consider(std::nullopt)) {
        return {std::move(w)};
      }
    }
  }
  return {};
}

BlockVerdict
scan_blocks(const Game& game, const Partition& partition, const Limits& limits, bool weak)
{
  check_partition(game, partition);
  const int n = game.num_players();
  require_within_cap(n, limits.coalition_cap, weak ? "strong core check" : "core check");

  std::vector<Rational> current(static_cast<std::size_t>(n) + 1);
  for (const Coalition& block : partition.blocks()) {
    for (PlayerMask m = block.mask(); m != 0; m &= m - 1) {
      const PlayerId i = lowest_player(m);
      current[static_cast<std::size_t>(i)] = game.utility_at(i, block.mask());
    }
  }

  for (PlayerMask c = 1; c <= full_mask(n); ++c) {
    bool blocks = true;
    std::optional<PlayerId> strict;
    for (PlayerMask m = c; m != 0 && blocks; m &= m - 1) {
      const PlayerId i = lowest_player(m);
      const auto order = game.utility_at(i, c) <=> current[static_cast<std::size_t>(i)];
      if (order > 0) {
        if (!strict) {
          strict = i;
        }
      } else if (!weak || order < 0) {
        blocks = false;
      }
    }
    if (blocks && strict) {
      BlockWitness w{Coalition::from_mask(c), std::nullopt};
      if (weak) {
        w.strict_member = strict;
      }
      return {w};
    }
  }
  return {};
}

}  // namespace

std::string_view
notion_name(Notion notion)
{
  return kNotionNames[static_cast<std::size_t>(notion)];
}

Notion
parse_notion(std::string_view name)
{
  for (std::size_t k = 0; k < kNotionNames.size(); ++k) {
    if (kNotionNames[k] == name) {
      return static_cast<Notion>(k);
    }
  }
  throw std::invalid_argument("unknown stability notion '" + std::string(name) +
                              "' (expected nash, is, cis, core or strongcore)");
}

DeviationVerdict
is_nash_stable(const Game& game, const Partition& partition)
{
  return scan_deviations(game, partition, VetoRule::kNone);
}

DeviationVerdict
is_individually_stable(const Game& game, const Partition& partition)
{
  return scan_deviations(game, partition, VetoRule::kDestination);
}

DeviationVerdict
is_contractually_individually_stable(const Game& game, const Partition& partition)
{
  return scan_deviations(game, partition, VetoRule::kEither);
}

BlockVerdict
is_core_stable(const Game& game, const Partition& partition, const Limits& limits)
{
  return scan_blocks(game, partition, limits, false);
}

BlockVerdict
is_strong_core_stable(const Game& game, const Partition& partition, const Limits& limits)
{
  return scan_blocks(game, partition, limits, true);
}

bool
StabilityReport::stable(Notion notion) const
{
  switch (notion) {
    case Notion::kNash: return nash.stable();
    case Notion::kIndividual: return individual.stable();
    case Notion::kContractual: return contractual.stable();
    case Notion::kCore: return core.stable();
    case Notion::kStrongCore: return strong_core.stable();
  }
  return false;
}

std::string
StabilityReport::witness_text(Notion notion) const
{
  if (stable(notion)) {
    return {};
  }
  switch (notion) {
    case Notion::kNash: return to_string(*nash.witness);
    case Notion::kIndividual: return to_string(*individual.witness);
    case Notion::kContractual: return to_string(*contractual.witness);
    case Notion::kCore: return to_string(*core.witness);
    case Notion::kStrongCore: return to_string(*strong_core.witness);
  }
  return {};
}

StabilityReport
classify(const Game& game, const Partition& partition, const Limits& limits)
{
  return StabilityReport{
    is_nash_stable(game, partition),
    is_individually_stable(game, partition),
    is_contractually_individually_stable(game, partition),
    is_core_stable(game, partition, limits),
    is_strong_core_stable(game, partition, limits),
  };
}

bool
satisfies(const Game& game, const Partition& partition, Notion notion, const Limits& limits)
{
  switch (notion) {
    case Notion::kNash: return is_nash_stable(game, partition).stable();
    case Notion::kIndividual: return is_individually_stable(game, partition).stable();
    case Notion::kContractual: return is_contractually_individually_stable(game, partition).stable();
    case Notion::kCore: return is_core_stable(game, partition, limits).stable();
    case Notion::kStrongCore: return is_strong_core_stable(game, partition, limits).stable();
  }
  return false;
}

std::string
to_string(const DeviationWitness& w)
{
  return "player=" + std::to_string(w.player) + " target=" + (w.target ? w.target->to_string() : "empty");
}

std::string
to_string(const BlockWitness& w)
{
  std::string out = "coalition=" + w.coalition.to_string();
  if (w.strict_member) {
    out += " strict=" + std::to_string(*w.strict_member);
  }
  return out;
}

}  // namespace hedonica
