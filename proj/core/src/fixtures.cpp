#include "hedonica/fixtures.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "hedonica/transform.hpp"

namespace hedonica {

namespace {

constexpr std::array<std::string_view, 9> kNames = {
  "ex1_separability",  "ex2_cycle",        "ex3_no_nash_common_ranking",
  "ex4_tie_break",     "ex5_top_coalition", "ex6_core_not_cis",
  "ex7_no_nash_core",  "inline_f_01m1",    "inline_strongcore_none",
};

Coalition
c(std::initializer_list<PlayerId> members)
{
  return Coalition::of(members);
}

std::vector<Rational>
ints(std::initializer_list<std::int64_t> values)
{
  return {values.begin(), values.end()};
}

/// Common ranking from tiers (best first), scored like per-player rankings.
CommonRankingRepr
common_ranking(int n, const std::vector<std::vector<Coalition>>& tiers)
{
  CoalitionValues w;
  const auto top = static_cast<std::int64_t>(tiers.size()) - 1;
  for (std::size_t t = 0; t < tiers.size(); ++t) {
    for (const Coalition& coalition : tiers[t]) {
      w.emplace(coalition, Rational(top - static_cast<std::int64_t>(t)));
    }
  }
  return CommonRankingRepr(n, w);
}

Game
ex1()
{
  CoalitionValues w;
  for (PlayerMask m = 1; m <= full_mask(3); ++m) {
    w.emplace(Coalition::from_mask(m), popcount(m) == 1 ? 0 : popcount(m) == 2 ? 1 : -10);
  }
  return SubsetNeutralRepr::dense(3, w);
}

Game
ex2()
{
  // Only {1,3} and {2,4} are nonzero; the subsets left unspecified are 0.
  CoalitionValues w;
  for (PlayerMask m = 1; m <= full_mask(4); ++m) {
    w.emplace(Coalition::from_mask(m), 0);
  }
  w[c({1, 3})] = 1;
  w[c({2, 4})] = 1;
  return SubsetNeutralRepr::dense(4, w);
}

Game
ex5()
{
  const int n = 3;
  return UtilityTable(n, {
    ranking_to_utilities({{c({1, 2}), c({1, 2, 3})}, {c({1})}, {c({1, 3})}}, 1, n),
    ranking_to_utilities({{c({1, 2}), c({1, 2, 3})}, {c({2})}, {c({2, 3})}}, 2, n),
    ranking_to_utilities({{c({1, 3}), c({2, 3})}, {c({1, 2, 3})}, {c({3})}}, 3, n),
  });
}

}  // namespace

std::span<const std::string_view>
fixture_names()
{
  return kNames;
}

Game
load_fixture(std::string_view name)
{
  if (name == "ex1_separability") {
    return ex1();
  }
  if (name == "ex2_cycle") {
    return ex2();
  }
  if (name == "ex3_no_nash_common_ranking") {
    return common_ranking(3, {{c({1, 2})}, {c({1})}, {c({2})}, {c({1, 2, 3})}, {c({1, 3})}, {c({2, 3})}, {c({3})}});
  }
  if (name == "ex4_tie_break") {
    return common_ranking(3, {{c({1, 2}), c({1, 2, 3})}, {c({2})}, {c({1})}, {c({1, 3})}, {c({2, 3})}, {c({3})}});
  }
  if (name == "ex5_top_coalition") {
    return ex5();
  }
  if (name == "ex6_core_not_cis") {
    return NeutrallyAnonymousRepr(ints({0, 1, 1}));
  }
  if (name == "ex7_no_nash_core") {
    return NeutrallyAnonymousRepr(ints({0, 2, 1, 0, 0}));
  }
  if (name == "inline_f_01m1") {
    return NeutrallyAnonymousRepr(ints({0, 1, -1}));
  }
  if (name == "inline_strongcore_none") {
    return NeutrallyAnonymousRepr(ints({0, 1, 0}));
  }
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

}  // namespace hedonica
