// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "hedonica/fixtures.hpp"
#include "hedonica/solve.hpp"
#include "hedonica/transform.hpp"
#include "test_util.hpp"

using namespace hedonica;

namespace {

using Clock = std::chrono::steady_clock;

struct Check
{
  bool ok = true;
  std::string why;

  void require(bool condition, const std::string& message)
  {
    if (ok && !condition) {
      ok = false;
      why = message;
    }
  }
};

int failures = 0;

/// Runs `body`, then prints one line. `limit_ms` of 0 means no runtime bound.
void
criterion(int id, const char* title, double limit_ms, const std::function<void(Check&)>& body)
{
  Check check;
  const auto start = Clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.require(false, std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (limit_ms > 0) {
    check.require(elapsed < limit_ms, "runtime " + std::to_string(elapsed) + " ms over limit");
  }
  std::printf("%s %2d %s (%.3f ms%s)%s%s\n", check.ok ? "PASS" : "FAIL", id, title, elapsed,
              limit_ms > 0 ? (" / limit " + std::to_string(static_cast<long>(limit_ms)) + " ms").c_str() : "",
              check.ok ? "" : ": ", check.why.c_str());
  std::fflush(stdout);
  failures += check.ok ? 0 : 1;
}

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

bool
same_utilities(const Game& a, const Game& b)
{
  for (PlayerMask c = 1; c <= full_mask(a.num_players()); ++c) {
    for (PlayerMask m = c; m != 0; m &= m - 1) {
      if (a.utility_at(lowest_player(m), c) != b.utility_at(lowest_player(m), c)) {
        return false;
      }
    }
  }
  return true;
}

Rational
binomial(int n, int k)
{
  Rational r(1);
  for (int j = 1; j <= k; ++j) {
    r = r * Rational(n - k + j, j);
  }
  return r;
}

void
check_local_and_global(Check& check, const Game& g, const std::string& label)
{
  const LocalSearchResult local = solve_nash_local_search(g);
  Partition current = Partition::singletons(g.num_players());
  for (const DynamicsStep& step : local.trace) {
    check.require(step.phi_after > step.phi_before, label + ": potential did not increase");
    const Rational gain = g.utility(step.player, step.to) - g.utility(step.player, current.coalition_of(step.player));
    check.require(step.phi_after - step.phi_before == gain, label + ": potential delta differs from utility gain");
    std::optional<std::size_t> target;
    if (step.to.size() > 1) {
      target = current.block_index_of(lowest_player(step.to.mask() & ~player_bit(step.player)));
    }
    current = current.with_move(step.player, target);
  }
  check.require(current == local.partition, label + ": trace does not reproduce the result");
  const Partition global = solve_nash_global(g);
  for (const Partition& p : {local.partition, global}) {
    check.require(is_nash_stable(g, p).stable(), label + ": " + p.to_string() + " not Nash stable");
    check.require(is_individually_stable(g, p).stable(), label + ": " + p.to_string() + " not IS");
  }
}

}  // namespace

int
main()
{
  criterion(1, "separability violation in the three-player subset-neutral example", 1.0, [](Check& c) {
    const Game g = load_fixture("ex1_separability");
    const auto sep = is_separable(g);
    c.require(!sep.holds(), "reported separable");
    c.require(sep.counterexample && sep.counterexample->player == 1 && sep.counterexample->joiner == 3 &&
                sep.counterexample->base == C({1, 2}),
              "witness is not (1, 3, {1,2})");
    c.require(g.utility(1, C({1, 3})) == Rational(1) && g.utility(1, C({1})) == Rational(0), "u1({1,3})=1 > u1({1})=0");
    c.require(g.utility(1, C({1, 2, 3})) == Rational(-8) && g.utility(1, C({1, 2})) == Rational(1),
              "u1({1,2,3})=-8 < u1({1,2})=1");
  });

  criterion(2, "local search and global potential maximum are Nash and IS stable", 10000.0, [](Check& c) {
    check_local_and_global(c, load_fixture("ex1_separability"), "ex1");
    for (std::uint64_t seed = 0; seed < 100 && c.ok; ++seed) {
      const int n = 1 + static_cast<int>(seed % 7);
      check_local_and_global(c, testutil::generated(GeneratorKind::kRandomSubsetNeutral, n, seed),
                             "seed " + std::to_string(seed));
    }
  });

  criterion(3, "subset-additive conversion reproduces every utility", 0, [](Check& c) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const int n = 1 + static_cast<int>(seed % 5);
      const Game g = testutil::generated(GeneratorKind::kRandomUtilityTable, n, seed, -10, 10);
      c.require(same_utilities(g, Game(to_subset_additive(g))), "seed " + std::to_string(seed));
    }
  });

  criterion(4, "neutrally anonymous to subset-neutral binomial identity", 0, [](Check& c) {
    const auto w = na_to_subset_neutral(NeutrallyAnonymousRepr({0, 1, -1})).size_values();
    c.require(w == std::vector<Rational>{0, 1, -3}, "f=(0,1,-1) does not map to (0,1,-3)");
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 9);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 1 + trial % 12;
      std::vector<Rational> f;
      for (int k = 0; k < n; ++k) {
        f.emplace_back(num(rng), den(rng));
      }
      const auto ws = na_to_subset_neutral(NeutrallyAnonymousRepr(f)).size_values();
      for (int k = 1; k <= n; ++k) {
        Rational sum;
        for (int j = 1; j <= k; ++j) {
          sum += binomial(k - 1, j - 1) * ws[static_cast<std::size_t>(j - 1)];
        }
        c.require(sum == f[static_cast<std::size_t>(k - 1)], "trial " + std::to_string(trial));
      }
    }
  });

  criterion(5, "common ranking without a Nash stable partition; greedy is core and IS", 0, [](Check& c) {
    const Game g = load_fixture("ex3_no_nash_common_ranking");
    const Notion nash[] = {Notion::kNash};
    c.require(enumerate_partitions(3).size() == 5, "expected 5 partitions");
    c.require(enumerate_stable(g, nash).empty(), "found a Nash stable partition");
    const Partition p = solve_common_ranking_greedy(g);
    c.require(p == P("1,2|3", 3), "greedy returned " + p.to_string());
    c.require(is_core_stable(g, p).stable() && is_individually_stable(g, p).stable(), "greedy output not core+IS");
  });

  criterion(6, "largest-size tie-break is needed for individual stability", 0, [](Check& c) {
    const Game g = load_fixture("ex4_tie_break");
    const Partition greedy = solve_common_ranking_greedy(g);
    c.require(greedy == P("1,2,3", 3), "greedy returned " + greedy.to_string());
    c.require(is_core_stable(g, greedy).stable() && is_individually_stable(g, greedy).stable(),
              "grand coalition not core+IS");
    const Partition naive = solve_top_coalition_greedy(g, TopCoalitionOrder::kSmallestFirst);
    c.require(naive == P("1,2|3", 3), "smallest tie-break returned " + naive.to_string());
    const auto is = is_individually_stable(g, naive);
    c.require(!is.stable() && is.witness->player == 3, "smallest tie-break output is IS or witness is not player 3");
  });

  criterion(7, "top-coalition algorithm output is not individually stable", 0, [](Check& c) {
    const Game g = load_fixture("ex5_top_coalition");
    c.require(has_top_coalition_property(g).holds(), "property reported false");
    const Partition p = solve_top_coalition_greedy(g);
    c.require(p == P("1,2|3", 3), "returned " + p.to_string());
    const auto is = is_individually_stable(g, p);
    c.require(!is.stable() && is.witness->player == 3 && is.witness->target == C({1, 2}),
              "expected unvetoed move of player 3 into {1,2}");
  });

  criterion(8, "core stable partition that is not contractually individually stable", 0, [](Check& c) {
    const Game g = load_fixture("ex6_core_not_cis");
    c.require(is_core_stable(g, P("1,2|3", 3)).stable(), "{1,2},{3} not core stable");
    c.require(!is_contractually_individually_stable(g, P("1,2|3", 3)).stable(), "{1,2},{3} is CIS");
    c.require(is_core_stable(g, P("1,2,3", 3)).stable(), "{1,2,3} not core stable");
    c.require(is_individually_stable(g, P("1,2,3", 3)).stable(), "{1,2,3} not IS");
  });

  criterion(9, "no partition is both Nash and core stable (n=5, 52 partitions)", 1000.0, [](Check& c) {
    const Game g = load_fixture("ex7_no_nash_core");
    c.require(enumerate_partitions(5).size() == 52, "expected 52 partitions");
    const Notion both[] = {Notion::kNash, Notion::kCore};
    const Notion nash[] = {Notion::kNash};
    const Notion core[] = {Notion::kCore};
    c.require(enumerate_stable(g, both).empty(), "found a Nash and core stable partition");
    c.require(!enumerate_stable(g, nash).empty(), "no Nash stable partition");
    c.require(!enumerate_stable(g, core).empty(), "no core stable partition");
  });

  criterion(10, "strong core may be empty while the core is not", 0, [](Check& c) {
    const Game g = load_fixture("inline_strongcore_none");
    const Notion strong[] = {Notion::kStrongCore};
    const Notion core[] = {Notion::kCore};
    c.require(enumerate_stable(g, strong).empty(), "found a strong core stable partition");
    c.require(!enumerate_stable(g, core).empty(), "core is empty");
  });

  criterion(11, "implication chain and CIS existence on 200 random games", 30000.0, [](Check& c) {
    for (std::uint64_t k = 0; k < 200; ++k) {
      const Game g = testutil::mixed_game(k, 5);
      bool some_cis = false;
      for_each_partition(g.num_players(), [&](const Partition& p) {
        const StabilityReport r = classify(g, p);
        const std::string where = "game " + std::to_string(k) + " partition " + p.to_string();
        const bool ns = r.stable(Notion::kNash), is = r.stable(Notion::kIndividual);
        const bool cis = r.stable(Notion::kContractual), core = r.stable(Notion::kCore);
        const bool sc = r.stable(Notion::kStrongCore);
        c.require(!ns || is, where + ": NS but not IS");
        c.require(!is || cis, where + ": IS but not CIS");
        c.require(!sc || (core && is), where + ": strong core but not core+IS");
        some_cis = some_cis || cis;
      });
      c.require(some_cis, "game " + std::to_string(k) + " has no CIS partition");
    }
  });

  criterion(12, "symmetric additive games embed as subset-neutral", 0, [](Check& c) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const int n = 1 + static_cast<int>(seed % 6);
      const Game g = testutil::generated(GeneratorKind::kRandomSymmetricAs, n, seed);
      const Game embedded = symmetric_as_to_subset_neutral(*g.get_if<AdditivelySeparableRepr>());
      c.require(same_utilities(g, embedded), "seed " + std::to_string(seed) + ": utilities differ");
      const Partition p = solve_nash_local_search(embedded).partition;
      c.require(is_nash_stable(g, p).stable(), "seed " + std::to_string(seed) + ": not Nash stable in original");
    }
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
