#include <gtest/gtest.h>

#include <algorithm>

#include "hedonica/errors.hpp"
#include "hedonica/fixtures.hpp"
#include "hedonica/solve.hpp"
#include "hedonica/transform.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace hedonica;
using oracle::Set;

namespace {

Coalition
C(std::initializer_list<PlayerId> m)
{
  return Coalition::of(m);
}

Partition
P(std::string_view text, int n)
{
  return Partition::parse(text, n);
}

Game
na(std::initializer_list<std::int64_t> f)
{
  return NeutrallyAnonymousRepr(std::vector<Rational>(f.begin(), f.end()));
}

SubsetNeutralRepr
ex1_w()
{
  return *load_fixture("ex1_separability").get_if<SubsetNeutralRepr>();
}

SubsetNeutralRepr
zero_w(int n)
{
  return SubsetNeutralRepr::by_size(std::vector<Rational>(static_cast<std::size_t>(n)));
}

Rational
oracle_potential(const SubsetNeutralRepr& w, const Partition& p)
{
  std::vector<Set> blocks;
  for (const Coalition& b : p.blocks()) {
    blocks.push_back(b.members());
  }
  return oracle::potential([&](const Set& s) { return w.w(oracle::to_coalition(s).mask()); }, blocks);
}

/// Cyclic profile: 1 wants 2, 2 wants 3, 3 wants 1. {1,2,3} has no top coalition.
Game
cyclic_game()
{
  auto row = [](PlayerId i, Coalition best) {
    CoalitionValues u;
    for (PlayerMask m = 1; m <= full_mask(3); ++m) {
      if (m & player_bit(i)) {
        u.emplace(Coalition::from_mask(m), Coalition::from_mask(m) == best ? 2 : popcount(m) == 3 ? 1 : 0);
      }
    }
    return u;
  };
  return UtilityTable(3, {row(1, C({1, 2})), row(2, C({2, 3})), row(3, C({1, 3}))});
}

}  // namespace

TEST(Potential, Example1)
{
  const SubsetNeutralRepr w = ex1_w();
  EXPECT_EQ(oracle_potential(w, P("1,2,3", 3)), Rational(-7));
  EXPECT_EQ(potential(w, P("1,2,3", 3)), Rational(-7));
  EXPECT_EQ(oracle_potential(w, P("1,2|3", 3)), Rational(1));
  EXPECT_EQ(potential(w, P("1,2|3", 3)), Rational(1));
  EXPECT_EQ(potential(zero_w(4), P("1,4|2,3", 4)), Rational(0));
}

TEST(Potential, MatchesDefinitionOnRandomGames)
{
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 1 + static_cast<int>(seed % 5);
    const auto w = *as_subset_neutral(testutil::generated(GeneratorKind::kRandomSubsetNeutral, n, seed));
    for (const Partition& p : enumerate_partitions(n)) {
      EXPECT_EQ(potential(w, p), oracle_potential(w, p));
    }
  }
}

TEST(BetterResponse, Example1FromSingletons)
{
  const auto moved = better_response_step(ex1_w(), Partition::singletons(3));
  ASSERT_TRUE(moved.has_value());
  const auto& [next, step] = *moved;
  EXPECT_EQ(next, P("1,2|3", 3));
  EXPECT_EQ(step.player, 1);
  EXPECT_EQ(step.from, C({1}));
  EXPECT_EQ(step.to, C({1, 2}));
  EXPECT_EQ(step.phi_before, Rational(0));
  EXPECT_EQ(step.phi_after, Rational(1));
}

TEST(BetterResponse, StableOrFlatHasNoMove)
{
  EXPECT_FALSE(better_response_step(ex1_w(), P("1,2|3", 3)).has_value());
  for (const Partition& p : enumerate_partitions(4)) {
    EXPECT_FALSE(better_response_step(zero_w(4), p).has_value());
  }
}

TEST(LocalSearch, Examples)
{
  const auto ex1 = solve_nash_local_search(load_fixture("ex1_separability"));
  EXPECT_EQ(ex1.partition, P("1,2|3", 3));
  EXPECT_EQ(potential(ex1_w(), ex1.partition), Rational(1));
  EXPECT_TRUE(is_nash_stable(load_fixture("ex1_separability"), ex1.partition).stable());

  const Game ex7 = load_fixture("ex7_no_nash_core");
  EXPECT_TRUE(is_nash_stable(ex7, solve_nash_local_search(ex7).partition).stable());

  const auto one = solve_nash_local_search(na({3}));
  EXPECT_EQ(one.partition, Partition::singletons(1));
  EXPECT_TRUE(one.trace.empty());
}

TEST(LocalSearch, RejectsGamesWithoutPotential)
{
  EXPECT_THROW(solve_nash_local_search(load_fixture("ex5_top_coalition")), PreconditionError);
  EXPECT_THROW(solve_nash_global(load_fixture("ex3_no_nash_common_ranking")), PreconditionError);
}

TEST(LocalSearch, TraceIdentitiesAndTermination)
{
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 1 + static_cast<int>(seed % 6);
    const Game g = testutil::generated(seed % 3 == 0 ? GeneratorKind::kRandomNeutrallyAnonymous
                                                     : GeneratorKind::kRandomSubsetNeutral,
                                       n, seed);
    const auto w = *as_subset_neutral(g);
    // Start from a partition other than singletons for some of the runs.
    std::optional<Partition> start;
    if (seed % 2 == 1) {
      start = Partition::grand(n);
    }
    const auto result = solve_nash_local_search(g, start);
    ASSERT_LE(result.trace.size(), oracle::bell(n) - 1);
    Partition current = start.value_or(Partition::singletons(n));
    for (const DynamicsStep& step : result.trace) {
      EXPECT_GT(step.phi_after, step.phi_before);
      EXPECT_EQ(step.phi_before, oracle_potential(w, current));
      const Rational before = g.utility(step.player, current.coalition_of(step.player));
      const Rational after = g.utility(step.player, step.to);
      EXPECT_EQ(step.phi_after - step.phi_before, after - before);
      EXPECT_EQ(step.from, current.coalition_of(step.player));
      std::optional<std::size_t> target;
      if (step.to.size() > 1) {
        target = current.block_index_of(lowest_player(step.to.mask() & ~player_bit(step.player)));
      }
      current = current.with_move(step.player, target);
      EXPECT_EQ(step.phi_after, oracle_potential(w, current));
    }
    EXPECT_EQ(current, result.partition);
    EXPECT_TRUE(is_nash_stable(g, result.partition).stable());
  }
}

TEST(Global, Examples)
{
  EXPECT_EQ(solve_nash_global(ex1_w()), P("1,2|3", 3));
  EXPECT_EQ(solve_nash_global(zero_w(4)), Partition::grand(4));
  EXPECT_TRUE(is_nash_stable(Game(zero_w(4)), Partition::grand(4)).stable());
}

TEST(Global, MaximizesPotentialAndIsNashStable)
{
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 3 + static_cast<int>(seed % 4);
    const Game g = testutil::generated(GeneratorKind::kRandomSubsetNeutral, n, seed);
    const auto w = *as_subset_neutral(g);
    const Partition best = solve_nash_global(w);
    EXPECT_TRUE(is_nash_stable(g, best).stable());
    const Rational top = oracle_potential(w, best);
    bool seen = false;
    for (const Partition& p : enumerate_partitions(n)) {
      const Rational phi = oracle_potential(w, p);
      EXPECT_LE(phi, top);
      if (phi == top && !seen) {
        EXPECT_EQ(p, best) << "first maximizer in enumeration order";
        seen = true;
      }
    }
  }
}

TEST(Greedy, Examples)
{
  const Game ex3 = load_fixture("ex3_no_nash_common_ranking");
  const Partition p3 = solve_common_ranking_greedy(ex3);
  EXPECT_EQ(p3, P("1,2|3", 3));
  EXPECT_TRUE(is_core_stable(ex3, p3).stable());
  EXPECT_TRUE(is_individually_stable(ex3, p3).stable());

  EXPECT_EQ(solve_common_ranking_greedy(load_fixture("ex4_tie_break")), P("1,2,3", 3));
  EXPECT_EQ(solve_common_ranking_greedy(na({4})), Partition::singletons(1));
}

TEST(Greedy, CoreAndIndividuallyStableOnCommonRankingGames)
{
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 1 + static_cast<int>(seed % 7);
    const Game g = testutil::generated(seed % 2 == 0 ? GeneratorKind::kRandomCommonRanking
                                                     : GeneratorKind::kRandomNeutrallyAnonymous,
                                       n, seed, -2, 2);
    const Partition p = solve_common_ranking_greedy(g);
    EXPECT_TRUE(is_core_stable(g, p).stable()) << p.to_string();
    EXPECT_TRUE(is_individually_stable(g, p).stable()) << p.to_string();
    // Replayed by descending common rank, each block is a top coalition of
    // the players not yet placed.
    std::vector<Coalition> order = p.blocks();
    std::stable_sort(order.begin(), order.end(), [&](const Coalition& a, const Coalition& b) {
      return g.utility_at(a.min_member(), a.mask()) > g.utility_at(b.min_member(), b.mask());
    });
    PlayerMask pool = full_mask(n);
    for (const Coalition& block : order) {
      for (PlayerId i : block.members()) {
        for_each_submask(pool, [&](PlayerMask t) {
          if (t & player_bit(i)) {
            EXPECT_GE(g.utility_at(i, block.mask()), g.utility_at(i, t));
          }
        });
      }
      pool &= ~block.mask();
    }
  }
}

TEST(Greedy, NeedsACommonRanking)
{
  EXPECT_THROW(solve_common_ranking_greedy(load_fixture("ex5_top_coalition")), PreconditionError);
  // Subset-neutral ex1 happens to admit one (sizes rank 1 > 0 > -8).
  EXPECT_NO_THROW(solve_common_ranking_greedy(load_fixture("ex1_separability")));
}

TEST(TopCoalitionGreedy, Examples)
{
  const Game ex5 = load_fixture("ex5_top_coalition");
  const Partition p5 = solve_top_coalition_greedy(ex5);
  EXPECT_EQ(p5, P("1,2|3", 3));
  EXPECT_TRUE(is_core_stable(ex5, p5).stable());
  const auto is5 = is_individually_stable(ex5, p5);
  ASSERT_FALSE(is5.stable());
  EXPECT_EQ(is5.witness->player, 3);
  EXPECT_EQ(is5.witness->target, C({1, 2}));

  const Game ex4 = load_fixture("ex4_tie_break");
  EXPECT_EQ(solve_top_coalition_greedy(ex4), P("1,2,3", 3));
  const Partition naive = solve_top_coalition_greedy(ex4, TopCoalitionOrder::kSmallestFirst);
  EXPECT_EQ(naive, P("1,2|3", 3));
  EXPECT_FALSE(is_individually_stable(ex4, naive).stable());

  EXPECT_EQ(solve_top_coalition_greedy(na({0})), Partition::singletons(1));
}

TEST(TopCoalitionGreedy, RequiresTheProperty)
{
  const Game g = cyclic_game();
  const auto check = has_top_coalition_property(g);
  ASSERT_FALSE(check.holds());
  EXPECT_EQ(*check.counterexample, C({1, 2, 3}));
  EXPECT_THROW(solve_top_coalition_greedy(g), PreconditionError);
}

TEST(TopCoalitionGreedy, CoreStableWheneverPropertyHolds)
{
  int used = 0;
  for (std::uint64_t k = 0; k < 60; ++k) {
    const Game g = testutil::mixed_game(k, 4, -1, 1);
    if (!has_top_coalition_property(g).holds()) {
      continue;
    }
    ++used;
    EXPECT_TRUE(is_core_stable(g, solve_top_coalition_greedy(g)).stable());
  }
  EXPECT_GT(used, 10);
}

TEST(Enumerate, Examples)
{
  const Notion nash[] = {Notion::kNash};
  const Notion core[] = {Notion::kCore};
  const Notion both[] = {Notion::kNash, Notion::kCore};
  const Notion strong[] = {Notion::kStrongCore};

  EXPECT_TRUE(enumerate_stable(load_fixture("ex3_no_nash_common_ranking"), nash).empty());

  const Game ex7 = load_fixture("ex7_no_nash_core");
  EXPECT_TRUE(enumerate_stable(ex7, both).empty());
  EXPECT_FALSE(enumerate_stable(ex7, nash).empty());
  EXPECT_FALSE(enumerate_stable(ex7, core).empty());

  const Game inline_game = na({0, 1, 0});
  EXPECT_TRUE(enumerate_stable(inline_game, strong).empty());
  EXPECT_FALSE(enumerate_stable(inline_game, core).empty());
}

TEST(Enumerate, FiltersAllPartitionsInOrder)
{
  for (std::uint64_t k = 0; k < 20; ++k) {
    const Game g = testutil::mixed_game(k, 4);
    for (Notion notion : kAllNotions) {
      const Notion one[] = {notion};
      std::vector<Partition> expected;
      for (const Partition& p : enumerate_partitions(g.num_players())) {
        if (satisfies(g, p, notion)) {
          expected.push_back(p);
        }
      }
      EXPECT_EQ(enumerate_stable(g, one), expected);
    }
  }
}

TEST(Enumerate, CapExceeded)
{
  const Notion nash[] = {Notion::kNash};
  Limits limits;
  limits.partition_cap = 4;
  EXPECT_THROW(enumerate_stable(load_fixture("ex7_no_nash_core"), nash, limits), CapExceeded);
}
