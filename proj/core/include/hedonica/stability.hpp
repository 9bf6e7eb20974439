#ifndef HEDONICA_STABILITY_HPP
#define HEDONICA_STABILITY_HPP

#include <optional>
#include <string>
#include <string_view>

#include "hedonica/games.hpp"

namespace hedonica {

enum class Notion
{
  kNash,
  kIndividual,
  kContractual,
  kCore,
  kStrongCore,
};

inline constexpr Notion kAllNotions[] = {
  Notion::kNash, Notion::kIndividual, Notion::kContractual, Notion::kCore, Notion::kStrongCore,
};

/// "nash", "is", "cis", "core", "strongcore".
std::string_view notion_name(Notion notion);
Notion parse_notion(std::string_view name);

/// A profitable unilateral move: `player` leaves its block and joins `target`
/// (a block of the partition), or goes alone when `target` is empty.
struct DeviationWitness
{
  PlayerId player;
  std::optional<Coalition> target;
  /// Individual stability only: a member of the origin block who would be
  /// hurt by the departure, i.e. the move is still vetoed under contractual
  /// individual stability.
  std::optional<PlayerId> vetoer;
};

/// A coalition whose members all gain (core), or all weakly gain with
/// `strict_member` strictly better off (strong core).
struct BlockWitness
{
  Coalition coalition;
  std::optional<PlayerId> strict_member;
};

template <typename Witness>
struct Verdict
{
  std::optional<Witness> witness;

  bool stable() const { return !witness.has_value(); }
};

using DeviationVerdict = Verdict<DeviationWitness>;
using BlockVerdict = Verdict<BlockWitness>;

// Deviation scans visit players in ascending order, destination blocks in
// canonical order, then the empty coalition; the first violation is reported.

DeviationVerdict is_nash_stable(const Game& game, const Partition& partition);
DeviationVerdict is_individually_stable(const Game& game, const Partition& partition);
DeviationVerdict is_contractually_individually_stable(const Game& game, const Partition& partition);

// Coalition scans visit every nonempty coalition in increasing bitmask order.

BlockVerdict is_core_stable(const Game& game, const Partition& partition, const Limits& limits = {});
BlockVerdict is_strong_core_stable(const Game& game, const Partition& partition, const Limits& limits = {});

struct StabilityReport
{
  DeviationVerdict nash;
  DeviationVerdict individual;
  DeviationVerdict contractual;
  BlockVerdict core;
  BlockVerdict strong_core;

  bool stable(Notion notion) const;
  /// "player=3 target=1,2" style witness for the notion, empty when stable.
  std::string witness_text(Notion notion) const;
};

StabilityReport classify(const Game& game, const Partition& partition, const Limits& limits = {});

bool satisfies(const Game& game, const Partition& partition, Notion notion, const Limits& limits = {});

/// "player=3 target=1,2" (target=empty for going alone).
std::string to_string(const DeviationWitness& w);
/// "coalition=1,2", with " strict=<id>" for weak blocks.
std::string to_string(const BlockWitness& w);

}  // namespace hedonica

#endif  // HEDONICA_STABILITY_HPP
