#ifndef HEDONICA_GAMES_HPP
#define HEDONICA_GAMES_HPP

#include <map>
#include <optional>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "hedonica/model.hpp"
#include "hedonica/rational.hpp"

namespace hedonica {

/// Representations with a value per subset are stored densely; this bounds their size.
inline constexpr int kMaxDensePlayers = 20;

enum class GameKind
{
  kUtilityTable,
  kAdditivelySeparable,
  kSubsetAdditive,
  kSubsetNeutral,
  kAnonymous,
  kNeutrallyAnonymous,
  kCommonRanking,
};

/// JSON name of a kind ("utilities", "additively_separable", ...).
std::string_view kind_name(GameKind kind);
GameKind parse_kind_name(std::string_view name);

using CoalitionValues = std::map<Coalition, Rational>;

namespace detail {

/// One value per (player i, coalition containing i), 2^(n-1) slots per player.
class PerPlayerTable
{
public:
  PerPlayerTable() = default;
  PerPlayerTable(int n, const std::vector<CoalitionValues>& rows, std::string_view what);

  int num_players() const { return n_; }
  const Rational& at(PlayerId i, PlayerMask c) const { return rows_[static_cast<std::size_t>(i - 1)][slot(i, c)]; }
  Rational& at(PlayerId i, PlayerMask c) { return rows_[static_cast<std::size_t>(i - 1)][slot(i, c)]; }
  std::vector<CoalitionValues> to_rows() const;

  static std::size_t slot(PlayerId i, PlayerMask c)
  {
    const PlayerMask low = player_bit(i) - 1;
    return (c & low) | ((c >> 1) & ~low);
  }

private:
  int n_ = 0;
  std::vector<std::vector<Rational>> rows_;
};

}  // namespace detail

/// Arbitrary utilities u_i(C) for every player i and every coalition C containing i.
class UtilityTable
{
public:
  /// rows[i-1] must hold exactly the 2^(n-1) coalitions containing player i.
  UtilityTable(int n, const std::vector<CoalitionValues>& rows);

  int num_players() const { return table_.num_players(); }
  const Rational& at(PlayerId i, PlayerMask c) const { return table_.at(i, c); }
  std::vector<CoalitionValues> rows() const { return table_.to_rows(); }

private:
  detail::PerPlayerTable table_;
};

/// v[i-1][j-1] = v_i(j); the utility of C for i is the sum of v_i(j) over j in C.
class AdditivelySeparableRepr
{
public:
  explicit AdditivelySeparableRepr(std::vector<std::vector<Rational>> v);

  int num_players() const { return static_cast<int>(v_.size()); }
  const Rational& value(PlayerId i, PlayerId j) const
  {
    return v_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }
  const std::vector<std::vector<Rational>>& matrix() const { return v_; }

private:
  std::vector<std::vector<Rational>> v_;
};

/// Per-player set function v_i on coalitions containing i; the utility of C for
/// i is the sum of v_i(C') over all C' with i in C' and C' a subset of C.
class SubsetAdditiveRepr
{
public:
  SubsetAdditiveRepr(int n, const std::vector<CoalitionValues>& rows);

  int num_players() const { return v_.num_players(); }
  const Rational& value(PlayerId i, PlayerMask c) const { return v_.at(i, c); }
  const Rational& utility(PlayerId i, PlayerMask c) const { return sums_.at(i, c); }
  std::vector<CoalitionValues> rows() const { return v_.to_rows(); }

private:
  detail::PerPlayerTable v_;
  detail::PerPlayerTable sums_;
};

/// A single set function w on nonempty subsets; every player of C values C at
/// the sum of w(C') over the subsets C' of C that contain the player.
///
/// Stored either densely (one value per subset) or size-indexed when w(C)
/// depends only on |C|. Both forms keep the subset-sum transform
/// block_value(C) = sum of w over all nonempty subsets of C, so
/// utility(i, C) = block_value(C) - block_value(C \ {i}) is O(1).
class SubsetNeutralRepr
{
public:
  static SubsetNeutralRepr dense(int n, const CoalitionValues& w);
  /// w_by_size[s-1] is the value of every coalition of size s.
  static SubsetNeutralRepr by_size(std::vector<Rational> w_by_size);

  int num_players() const { return n_; }
  bool size_indexed() const { return size_indexed_; }
  /// Values by size (index s-1); only for size-indexed storage.
  std::vector<Rational> size_values() const;

  Rational w(PlayerMask c) const;
  const Rational& block_value(PlayerMask c) const;
  Rational utility(PlayerId i, PlayerMask c) const;
  /// All 2^n - 1 values of w, keyed by coalition.
  CoalitionValues materialize() const;

private:
  SubsetNeutralRepr() = default;

  int n_ = 0;
  bool size_indexed_ = false;
  std::vector<Rational> w_;       // by mask, or by size (index s)
  std::vector<Rational> totals_;  // block values, same indexing as w_
};

/// Per-player scores by coalition size: g[i-1][s-1].
class AnonymousRepr
{
public:
  explicit AnonymousRepr(std::vector<std::vector<Rational>> g);

  int num_players() const { return static_cast<int>(g_.size()); }
  const Rational& score(PlayerId i, int size) const
  {
    return g_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(size - 1)];
  }
  const std::vector<std::vector<Rational>>& scores() const { return g_; }

private:
  std::vector<std::vector<Rational>> g_;
};

/// One function f of coalition size shared by all players: f[s-1].
class NeutrallyAnonymousRepr
{
public:
  explicit NeutrallyAnonymousRepr(std::vector<Rational> f);

  int num_players() const { return static_cast<int>(f_.size()); }
  const Rational& f(int size) const { return f_[static_cast<std::size_t>(size - 1)]; }
  const std::vector<Rational>& values() const { return f_; }

private:
  std::vector<Rational> f_;
};

/// One function w on nonempty subsets that every player ranks by.
class CommonRankingRepr
{
public:
  CommonRankingRepr(int n, const CoalitionValues& w);

  int num_players() const { return n_; }
  const Rational& w(PlayerMask c) const { return w_[c]; }
  CoalitionValues values() const;

private:
  int n_;
  std::vector<Rational> w_;
};

using GameRepr = std::variant<UtilityTable,
                              AdditivelySeparableRepr,
                              SubsetAdditiveRepr,
                              SubsetNeutralRepr,
                              AnonymousRepr,
                              NeutrallyAnonymousRepr,
                              CommonRankingRepr>;

enum class Preference
{
  kStrictlyPrefers,
  kIndifferent,
  kStrictlyDisprefers,
};

/// A hedonic game: n players and one of the preference representations.
/// Immutable; utility evaluation is exact.
class Game
{
public:
  Game(GameRepr repr);  // NOLINT(google-explicit-constructor)

  template <typename Repr>
    requires(!std::is_same_v<std::remove_cvref_t<Repr>, Game> &&
             !std::is_same_v<std::remove_cvref_t<Repr>, GameRepr> && std::is_constructible_v<GameRepr, Repr &&>)
  Game(Repr&& repr)  // NOLINT(google-explicit-constructor)
    : Game(GameRepr(std::forward<Repr>(repr)))
  {}

  int num_players() const { return n_; }
  GameKind kind() const { return static_cast<GameKind>(repr_.index()); }
  const GameRepr& repr() const { return repr_; }

  template <typename T>
  const T* get_if() const
  {
    return std::get_if<T>(&repr_);
  }

  /// u_i(C). Throws PreconditionError if i is not a member of C or C has
  /// players beyond n.
  Rational utility(PlayerId i, const Coalition& c) const;

  /// u_i(C) by bitmask; caller guarantees i in c and c within 1..n.
  Rational utility_at(PlayerId i, PlayerMask c) const;

  /// Sign of u_i(a) - u_i(b): -1, 0 or 1.
  int compare(PlayerId i, PlayerMask a, PlayerMask b) const;

  Preference prefers(PlayerId i, const Coalition& c, const Coalition& d) const;

private:
  GameRepr repr_;
  int n_;
};

template <typename Witness>
struct PropertyCheck
{
  std::optional<Witness> counterexample;

  bool holds() const { return !counterexample.has_value(); }
};

/// Triple (i, j, C) with i in C, j outside C for which adding j to C and
/// pairing i with j disagree in sign for player i.
struct SeparabilityViolation
{
  PlayerId player;
  PlayerId joiner;
  Coalition base;
};

PropertyCheck<SeparabilityViolation> is_separable(const Game& game, const Limits& limits = {});

bool is_symmetric(const AdditivelySeparableRepr& repr);
bool is_mutual(const AdditivelySeparableRepr& repr);

/// Player who is not indifferent between two coalitions of equal size.
struct AnonymityViolation
{
  PlayerId player;
  Coalition first;
  Coalition second;
};

PropertyCheck<AnonymityViolation> is_anonymous(const Game& game, const Limits& limits = {});

/// One comparison made by a player: w(higher) >= w(lower), strictly if `strict`.
struct RankingConstraint
{
  PlayerId player;
  Coalition higher;
  Coalition lower;
  bool strict;
};

struct CommonRankingCheck
{
  /// A function w consistent with every player's preferences, when one exists.
  std::optional<CoalitionValues> ranking;
  /// Otherwise a closed chain of constraints, the first one strict, proving
  /// w(first.higher) > w(first.higher).
  std::vector<RankingConstraint> conflict_cycle;

  bool holds() const { return ranking.has_value(); }
};

CommonRankingCheck has_common_ranking(const Game& game, const Limits& limits = {});

/// Which top coalition to return when several exist. Both orders break the
/// remaining ties by the lexicographically smallest member list.
enum class TopCoalitionOrder
{
  kLargestFirst,
  kSmallestFirst,
};

/// A subset S of `ground` such that every member of S weakly prefers S to
/// every subset of `ground` containing that member, or nullopt if none exists.
std::optional<Coalition> find_top_coalition(const Game& game,
                                            const Coalition& ground,
                                            TopCoalitionOrder order = TopCoalitionOrder::kLargestFirst);

/// Counterexample is a nonempty V without a top coalition.
PropertyCheck<Coalition> has_top_coalition_property(const Game& game, const Limits& limits = {});

/// True when `a` precedes `b` in lexicographic order of ascending member lists.
bool lexicographically_less(PlayerMask a, PlayerMask b);

}  // namespace hedonica

#endif  // HEDONICA_GAMES_HPP
