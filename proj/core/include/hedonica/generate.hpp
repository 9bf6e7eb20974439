#ifndef HEDONICA_GENERATE_HPP
#define HEDONICA_GENERATE_HPP

#include <cstdint>
#include <string_view>

#include "hedonica/games.hpp"

namespace hedonica {

enum class GeneratorKind
{
  kRandomSubsetNeutral,
  kRandomNeutrallyAnonymous,
  kRandomSymmetricAs,
  kRandomCommonRanking,
  kRandomUtilityTable,
};

std::string_view generator_name(GeneratorKind kind);
GeneratorKind parse_generator_name(std::string_view name);

/// Integer values drawn uniformly from [low, high].
struct GeneratorSpec
{
  GeneratorKind kind = GeneratorKind::kRandomSubsetNeutral;
  int n = 3;
  std::uint64_t seed = 0;
  std::int64_t low = -5;
  std::int64_t high = 5;
};

/// Deterministic for a given spec. The symmetric generator sets v_i(i) = 0
/// and v_i(j) = v_j(i).
Game generate(const GeneratorSpec& spec);

}  // namespace hedonica

#endif  // HEDONICA_GENERATE_HPP
