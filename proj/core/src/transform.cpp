#include "hedonica/transform.hpp"

#include <algorithm>
#include <string>

#include "hedonica/errors.hpp"

namespace hedonica {

SubsetAdditiveRepr
to_subset_additive(const Game& game, const Limits& limits)
{
  const int n = game.num_players();
  require_within_cap(n, limits.coalition_cap, "subset-additive conversion");

  std::vector<PlayerMask> by_size;
  for (PlayerMask c = 1; c <= full_mask(n); ++c) {
    by_size.push_back(c);
  }
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](PlayerMask a, PlayerMask b) { return popcount(a) < popcount(b); });

  std::vector<CoalitionValues> rows(static_cast<std::size_t>(n));
  std::vector<Rational> v(std::size_t{1} << n);
  for (PlayerId i = 1; i <= n; ++i) {
    const PlayerMask self = player_bit(i);
    for (PlayerMask c : by_size) {
      if (!(c & self)) {
        continue;
      }
      Rational value = game.utility_at(i, c);
      // Proper subsets of C that contain i: {i} plus proper submasks of C \ {i}.
      const PlayerMask rest = c & ~self;
      if (rest != 0) {
        value -= v[self];
        for_each_submask(rest, [&](PlayerMask sub) {
          if (sub != rest) {
            value -= v[sub | self];
          }
        });
      }
      v[c] = value;
      rows[static_cast<std::size_t>(i - 1)].emplace(Coalition::from_mask(c), std::move(value));
    }
  }
  return SubsetAdditiveRepr(n, rows);
}

SubsetNeutralRepr
na_to_subset_neutral(const NeutrallyAnonymousRepr& f)
{
  const int n = f.num_players();
  // Pascal's triangle row k-1 gives C(k-1, j-1) for j = 1..k.
  std::vector<Rational> w(static_cast<std::size_t>(n));
  std::vector<Rational> row{Rational(1)};
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      std::vector<Rational> next(static_cast<std::size_t>(k), Rational(1));
      for (int j = 1; j + 1 < k; ++j) {
        next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
      }
      row = std::move(next);
    }
    Rational value = f.f(k);
    for (int j = 1; j < k; ++j) {
      value -= row[static_cast<std::size_t>(j - 1)] * w[static_cast<std::size_t>(j - 1)];
    }
    w[static_cast<std::size_t>(k - 1)] = std::move(value);
  }
  return SubsetNeutralRepr::by_size(std::move(w));
}

SubsetNeutralRepr
symmetric_as_to_subset_neutral(const AdditivelySeparableRepr& v)
{
  if (!is_symmetric(v)) {
    throw PreconditionError("additively separable game is not symmetric (v_i(j) != v_j(i) for some pair)");
  }
  const int n = v.num_players();
  CoalitionValues w;
  for (PlayerMask c = 1; c <= full_mask(n); ++c) {
    Rational value;
    if (popcount(c) == 1) {
      const PlayerId i = lowest_player(c);
      value = v.value(i, i);
    } else if (popcount(c) == 2) {
      const PlayerId i = lowest_player(c);
      const PlayerId j = lowest_player(c & (c - 1));
      value = v.value(i, j);
    }
    w.emplace_hint(w.end(), Coalition::from_mask(c), std::move(value));
  }
  return SubsetNeutralRepr::dense(n, w);
}

std::optional<SubsetNeutralRepr>
as_subset_neutral(const Game& game)
{
  if (const auto* sn = game.get_if<SubsetNeutralRepr>()) {
    return *sn;
  }
  if (const auto* na = game.get_if<NeutrallyAnonymousRepr>()) {
    return na_to_subset_neutral(*na);
  }
  if (const auto* as = game.get_if<AdditivelySeparableRepr>(); as != nullptr && is_symmetric(*as)) {
    return symmetric_as_to_subset_neutral(*as);
  }
  return std::nullopt;
}

CoalitionValues
ranking_to_utilities(const std::vector<std::vector<Coalition>>& tiers, PlayerId i, int n)
{
  if (i < 1 || i > n) {
    throw std::invalid_argument("player " + std::to_string(i) + " out of range 1.." + std::to_string(n));
  }
  CoalitionValues row;
  const auto top = static_cast<std::int64_t>(tiers.size()) - 1;
  for (std::size_t t = 0; t < tiers.size(); ++t) {
    for (const Coalition& c : tiers[t]) {
      if (!c.within(n) || !c.contains(i)) {
        throw std::invalid_argument("coalition {" + c.to_string() + "} is not a coalition of player " +
                                    std::to_string(i));
      }
      if (!row.emplace(c, Rational(top - static_cast<std::int64_t>(t))).second) {
        throw std::invalid_argument("duplicated coalition {" + c.to_string() + "} in ranking of player " +
                                    std::to_string(i));
      }
    }
  }
  if (row.size() != (std::size_t{1} << (n - 1))) {
    for (PlayerMask m = 1; m <= full_mask(n); ++m) {
      if ((m & player_bit(i)) && !row.contains(Coalition::from_mask(m))) {
        throw std::invalid_argument("missing coalition {" + Coalition::from_mask(m).to_string() +
                                    "} in ranking of player " + std::to_string(i));
      }
    }
  }
  return row;
}

}  // namespace hedonica
