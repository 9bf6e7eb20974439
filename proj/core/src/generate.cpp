#include "hedonica/generate.hpp"

#include <array>
#include <random>
#include <stdexcept>
#include <string>

namespace hedonica {

namespace {

constexpr std::array<std::string_view, 5> kNames = {
  "random_subset_neutral", "random_neutrally_anonymous", "random_symmetric_as",
  "random_common_ranking", "random_utility_table",
};

}  // namespace

std::string_view
generator_name(GeneratorKind kind)
{
  return kNames[static_cast<std::size_t>(kind)];
}

GeneratorKind
parse_generator_name(std::string_view name)
{
  for (std::size_t k = 0; k < kNames.size(); ++k) {
    if (kNames[k] == name) {
      return static_cast<GeneratorKind>(k);
    }
  }
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

Game
generate(const GeneratorSpec& spec)
{
  if (spec.low > spec.high) {
    throw std::invalid_argument("generator range is empty: low=" + std::to_string(spec.low) +
                                " > high=" + std::to_string(spec.high));
  }
  const int n = spec.n;
  const bool dense = spec.kind == GeneratorKind::kRandomSubsetNeutral ||
                     spec.kind == GeneratorKind::kRandomCommonRanking ||
                     spec.kind == GeneratorKind::kRandomUtilityTable;
  if (n < 1 || n > (dense ? kMaxDensePlayers : kMaxPlayers)) {
    throw std::invalid_argument("generator player count out of range: " + std::to_string(n));
  }

  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<std::int64_t> dist(spec.low, spec.high);
  auto draw = [&] { return Rational(dist(rng)); };
  auto subset_values = [&] {
    CoalitionValues w;
    for (PlayerMask m = 1; m <= full_mask(n); ++m) {
      w.emplace_hint(w.end(), Coalition::from_mask(m), draw());
    }
    return w;
  };

  switch (spec.kind) {
    case GeneratorKind::kRandomSubsetNeutral:
      return SubsetNeutralRepr::dense(n, subset_values());
    case GeneratorKind::kRandomCommonRanking:
      return CommonRankingRepr(n, subset_values());
    case GeneratorKind::kRandomNeutrallyAnonymous: {
      std::vector<Rational> f;
      for (int s = 0; s < n; ++s) {
        f.push_back(draw());
      }
      return NeutrallyAnonymousRepr(std::move(f));
    }
    case GeneratorKind::kRandomSymmetricAs: {
      std::vector<std::vector<Rational>> v(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
      for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
          v[i][j] = draw();
          v[j][i] = v[i][j];
        }
      }
      return AdditivelySeparableRepr(std::move(v));
    }
    case GeneratorKind::kRandomUtilityTable: {
      std::vector<CoalitionValues> rows(static_cast<std::size_t>(n));
      for (PlayerId i = 1; i <= n; ++i) {
        for (PlayerMask m = 1; m <= full_mask(n); ++m) {
          if (m & player_bit(i)) {
            rows[static_cast<std::size_t>(i - 1)].emplace_hint(rows[static_cast<std::size_t>(i - 1)].end(),
                                                               Coalition::from_mask(m), draw());
          }
        }
      }
      return UtilityTable(n, rows);
    }
  }
  throw std::logic_error("unhandled generator kind");
}

}  // namespace hedonica
