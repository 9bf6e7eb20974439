// Predicates over preference profiles: separability, symmetry/mutuality,
// anonymity, the common ranking property and top coalitions.

#include <algorithm>
#include <deque>
#include <stack>

#include "hedonica/games.hpp"

namespace hedonica {

bool
lexicographically_less(PlayerMask a, PlayerMask b)
{
  if (a == b) {
    return false;
  }
  const PlayerMask diff = (a ^ b) & ~((a ^ b) - 1);  // lowest differing player
  const PlayerMask above = ~(diff | (diff - 1));
  // The list holding `diff` is smaller unless the other list ends right there.
  return (a & diff) ? (b & above) != 0 : (a & above) == 0;
}

PropertyCheck<SeparabilityViolation>
is_separable(const Game& game, const Limits& limits)
{
  const int n = game.num_players();
  require_within_cap(n, limits.coalition_cap, "separability check");
  for (PlayerId i = 1; i <= n; ++i) {
    const PlayerMask self = player_bit(i);
    for (PlayerMask c = 1; c <= full_mask(n); ++c) {
      if (!(c & self)) {
        continue;
      }
      for (PlayerId j = 1; j <= n; ++j) {
        const PlayerMask joiner = player_bit(j);
        if (c & joiner) {
          continue;
        }
        // Both biconditionals hold iff the two comparisons have the same sign.
        if (game.compare(i, c | joiner, c) != game.compare(i, self | joiner, self)) {
          return {SeparabilityViolation{i, j, Coalition::from_mask(c)}};
        }
      }
    }
  }
  return {};
}

bool
is_symmetric(const AdditivelySeparableRepr& repr)
{
  const int n = repr.num_players();
  for (PlayerId i = 1; i <= n; ++i) {
    for (PlayerId j = i + 1; j <= n; ++j) {
      if (repr.value(i, j) != repr.value(j, i)) {
        return false;
      }
    }
  }
  return true;
}

bool
is_mutual(const AdditivelySeparableRepr& repr)
{
  const int n = repr.num_players();
  for (PlayerId i = 1; i <= n; ++i) {
    for (PlayerId j = 1; j <= n; ++j) {
      if (i != j && repr.value(j, i).sign() >= 0 && repr.value(i, j).sign() < 0) {
        return false;
      }
    }
  }
  return true;
}

PropertyCheck<AnonymityViolation>
is_anonymous(const Game& game, const Limits& limits)
{
  const int n = game.num_players();
  require_within_cap(n, limits.coalition_cap, "anonymity check");
  for (PlayerId i = 1; i <= n; ++i) {
    std::vector<PlayerMask> first_of_size(static_cast<std::size_t>(n) + 1, 0);
    for (PlayerMask c = 1; c <= full_mask(n); ++c) {
      if (!(c & player_bit(i))) {
        continue;
      }
      PlayerMask& reference = first_of_size[static_cast<std::size_t>(popcount(c))];
      if (reference == 0) {
        reference = c;
      } else if (game.compare(i, reference, c) != 0) {
        return {AnonymityViolation{i, Coalition::from_mask(reference), Coalition::from_mask(c)}};
      }
    }
  }
  return {};
}

namespace {

/// Edge u -> v asserts w(u) >= w(v), strictly when the constraint is strict.
struct ConstraintEdge
{
  PlayerMask to;
  std::size_t constraint;
};

/// Tarjan's algorithm without recursion. Components are numbered in the
/// order they complete, which is a reverse topological order.
std::vector<int>
strongly_connected_components(const std::vector<std::vector<ConstraintEdge>>& adj, int& count)
{
  const std::size_t size = adj.size();
  std::vector<int> index(size, -1);
  std::vector<int> low(size, 0);
  std::vector<int> comp(size, -1);
  std::vector<bool> on_stack(size, false);
  std::vector<std::size_t> stack;
  int next_index = 0;
  count = 0;

  struct Frame
  {
    std::size_t node;
    std::size_t edge;
  };
  for (std::size_t root = 1; root < size; ++root) {
    if (index[root] != -1) {
      continue;
    }
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < adj[f.node].size()) {
        const std::size_t to = adj[f.node][f.edge++].to;
        if (index[to] == -1) {
          index[to] = low[to] = next_index++;
          stack.push_back(to);
          on_stack[to] = true;
          frames.push_back({to, 0});
        } else if (on_stack[to]) {
          low[f.node] = std::min(low[f.node], index[to]);
        }
        continue;
      }
      const std::size_t node = f.node;
      frames.pop_back();
      if (!frames.empty()) {
        low[frames.back().node] = std::min(low[frames.back().node], low[node]);
      }
      if (low[node] == index[node]) {
        std::size_t member;
        do {
          member = stack.back();
          stack.pop_back();
          on_stack[member] = false;
          comp[member] = count;
        } while (member != node);
        ++count;
      }
    }
  }
  return comp;
}

}  // namespace

CommonRankingCheck
has_common_ranking(const Game& game, const Limits& limits)
{
  const int n = game.num_players();
  require_within_cap(n, limits.coalition_cap, "common ranking check");
  const std::size_t size = std::size_t{1} << n;

  // Each player's order over N_i, as tiers of indifferent coalitions. Within
  // a tier the members are chained both ways; consecutive tiers are linked
  // by one strict edge. Transitivity covers every other comparison.
  std::vector<RankingConstraint> constraints;
  std::vector<std::vector<ConstraintEdge>> adj(size);
  auto add = [&](PlayerId i, PlayerMask hi, PlayerMask lo, bool strict) {
    adj[hi].push_back({lo, constraints.size()});
    constraints.push_back({i, Coalition::from_mask(hi), Coalition::from_mask(lo), strict});
  };

  for (PlayerId i = 1; i <= n; ++i) {
    std::vector<std::pair<Rational, PlayerMask>> order;
    for (PlayerMask c = 1; c < size; ++c) {
      if (c & player_bit(i)) {
        order.emplace_back(game.utility_at(i, c), c);
      }
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    PlayerMask tier_head = order.front().second;
    for (std::size_t k = 1; k < order.size(); ++k) {
      const PlayerMask prev = order[k - 1].second;
      const PlayerMask cur = order[k].second;
      if (order[k].first == order[k - 1].first) {
        add(i, prev, cur, false);
        add(i, cur, prev, false);
      } else {
        add(i, tier_head, cur, true);
        tier_head = cur;
      }
    }
  }

  int components = 0;
  const std::vector<int> comp = strongly_connected_components(adj, components);

  CommonRankingCheck result;
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    const RankingConstraint& strict = constraints[k];
    if (!strict.strict || comp[strict.higher.mask()] != comp[strict.lower.mask()]) {
      continue;
    }
    // Close the cycle: breadth-first path from `lower` back to `higher`
    // inside the shared component.
    const PlayerMask start = strict.lower.mask();
    const PlayerMask goal = strict.higher.mask();
    std::vector<std::size_t> via(size, constraints.size());
    std::vector<bool> seen(size, false);
    std::deque<PlayerMask> queue{start};
    seen[start] = true;
    while (!queue.empty() && !seen[goal]) {
      const PlayerMask u = queue.front();
      queue.pop_front();
      for (const ConstraintEdge& e : adj[u]) {
        if (!seen[e.to] && comp[e.to] == comp[start]) {
          seen[e.to] = true;
          via[e.to] = e.constraint;
          queue.push_back(e.to);
        }
      }
    }
    std::vector<RankingConstraint> path;
    for (PlayerMask v = goal; v != start;) {
      const RankingConstraint& step = constraints[via[v]];
      path.push_back(step);
      v = step.higher.mask();
    }
    result.conflict_cycle.push_back(strict);
    result.conflict_cycle.insert(result.conflict_cycle.end(), path.rbegin(), path.rend());
    return result;
  }

  // Height in the condensation: sinks are 0, each strict step adds one.
  // Components complete sinks-first, so a single pass in that order works.
  std::vector<std::vector<PlayerMask>> members(static_cast<std::size_t>(components));
  for (PlayerMask c = 1; c < size; ++c) {
    members[static_cast<std::size_t>(comp[c])].push_back(c);
  }
  std::vector<std::int64_t> height(static_cast<std::size_t>(components), 0);
  for (int k = 0; k < components; ++k) {
    std::int64_t h = 0;
    for (PlayerMask u : members[static_cast<std::size_t>(k)]) {
      for (const ConstraintEdge& e : adj[u]) {
        if (comp[e.to] != k) {
          h = std::max(h, height[static_cast<std::size_t>(comp[e.to])] + 1);
        }
      }
    }
    height[static_cast<std::size_t>(k)] = h;
  }
  CoalitionValues ranking;
  for (PlayerMask c = 1; c < size; ++c) {
    ranking.emplace_hint(ranking.end(), Coalition::from_mask(c), Rational(height[static_cast<std::size_t>(comp[c])]));
  }
  result.ranking = std::move(ranking);
  return result;
}

std::optional<Coalition>
find_top_coalition(const Game& game, const Coalition& ground, TopCoalitionOrder order)
{
  const int n = game.num_players();
  if (!ground.within(n)) {
    throw std::invalid_argument("ground set {" + ground.to_string() + "} has a player outside 1.." +
                                std::to_string(n));
  }
  const PlayerMask v = ground.mask();

  // Best utility each member of V can reach inside V.
  std::vector<Rational> best(static_cast<std::size_t>(n) + 1);
  for (PlayerMask m = v; m != 0; m &= m - 1) {
    const PlayerId i = lowest_player(m);
    const PlayerMask self = player_bit(i);
    Rational top = game.utility_at(i, self);
    for_each_submask(v & ~self, [&](PlayerMask rest) {
      Rational u = game.utility_at(i, rest | self);
      if (u > top) {
        top = std::move(u);
      }
    });
    best[static_cast<std::size_t>(i)] = std::move(top);
  }

  std::optional<PlayerMask> chosen;
  auto better = [&](PlayerMask a, PlayerMask b) {
    if (popcount(a) != popcount(b)) {
      return order == TopCoalitionOrder::kLargestFirst ? popcount(a) > popcount(b) : popcount(a) < popcount(b);
    }
    return lexicographically_less(a, b);
  };
  for_each_submask(v, [&](PlayerMask s) {
    for (PlayerMask m = s; m != 0; m &= m - 1) {
      const PlayerId i = lowest_player(m);
      if (game.utility_at(i, s) != best[static_cast<std::size_t>(i)]) {
        return;
      }
    }
    if (!chosen || better(s, *chosen)) {
      chosen = s;
    }
  });
  if (!chosen) {
    return std::nullopt;
  }
  return Coalition::from_mask(*chosen);
}

PropertyCheck<Coalition>
has_top_coalition_property(const Game& game, const Limits& limits)
{
  const int n = game.num_players();
  require_within_cap(n, limits.top_coalition_cap, "top-coalition property check");
  for (PlayerMask v = 1; v <= full_mask(n); ++v) {
    const Coalition ground = Coalition::from_mask(v);
    if (!find_top_coalition(game, ground)) {
      return {ground};
    }
  }
  return {};
}

}  // namespace hedonica
