#include "hedonica/games.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "hedonica/errors.hpp"

namespace hedonica {

namespace {

constexpr std::array<std::string_view, 7> kKindNames = {
  "utilities", "additively_separable", "subset_additive", "subset_neutral",
  "anonymous", "neutrally_anonymous", "common_ranking",
};

void
check_dense_size(int n, std::string_view what)
{
  if (n < 1 || n > kMaxDensePlayers) {
    throw std::invalid_argument(std::string(what) + ": player count must be in 1.." +
                                std::to_string(kMaxDensePlayers) + ", got " + std::to_string(n));
  }
}

void
check_square(const std::vector<std::vector<Rational>>& m, std::string_view what)
{
  const std::size_t n = m.size();
  if (n < 1 || n > static_cast<std::size_t>(kMaxPlayers)) {
    throw std::invalid_argument(std::string(what) + ": player count must be in 1.." + std::to_string(kMaxPlayers));
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (m[r].size() != n) {
      throw std::invalid_argument(std::string(what) + ": row " + std::to_string(r + 1) + " has " +
                                  std::to_string(m[r].size()) + " entries, expected " + std::to_string(n));
    }
  }
}

/// Values for every nonempty subset of {1..n}, indexed by mask (slot 0 unused).
std::vector<Rational>
dense_from_map(int n, const CoalitionValues& values, std::string_view what)
{
  check_dense_size(n, what);
  const std::size_t size = std::size_t{1} << n;
  if (values.size() != size - 1) {
    for (PlayerMask m = 1; m < size; ++m) {
      if (!values.contains(Coalition::from_mask(m))) {
        throw std::invalid_argument(std::string(what) + ": missing value for {" +
                                    Coalition::from_mask(m).to_string() + "}");
      }
    }
  }
  std::vector<Rational> out(size);
  for (const auto& [c, v] : values) {
    if (!c.within(n)) {
      throw std::invalid_argument(std::string(what) + ": coalition {" + c.to_string() +
                                  "} has a player outside 1.." + std::to_string(n));
    }
    out[c.mask()] = v;
  }
  return out;
}

/// In-place zeta transform over subsets: out[C] = sum of in[C'] for C' subset of C.
void
subset_sum_transform(std::vector<Rational>& values, int n)
{
  for (int b = 0; b < n; ++b) {
    const PlayerMask bit = PlayerMask{1} << b;
    for (PlayerMask m = 0; m < values.size(); ++m) {
      if (m & bit) {
        values[m] += values[m ^ bit];
      }
    }
  }
}

}  // namespace

std::string_view
kind_name(GameKind kind)
{
  return kKindNames[static_cast<std::size_t>(kind)];
}

GameKind
parse_kind_name(std::string_view name)
{
  for (std::size_t k = 0; k < kKindNames.size(); ++k) {
    if (kKindNames[k] == name) {
      return static_cast<GameKind>(k);
    }
  }
  throw std::invalid_argument("unknown game kind '" + std::string(name) + "'");
}

// PerPlayerTable -------------------------------------------------------------

namespace detail {

PerPlayerTable::PerPlayerTable(int n, const std::vector<CoalitionValues>& rows, std::string_view what)
  : n_(n)
{
  check_dense_size(n, what);
  if (rows.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(n) + " player rows, got " +
                                std::to_string(rows.size()));
  }
  const std::size_t slots = std::size_t{1} << (n - 1);
  rows_.resize(static_cast<std::size_t>(n));
  for (PlayerId i = 1; i <= n; ++i) {
    const CoalitionValues& row = rows[static_cast<std::size_t>(i - 1)];
    auto& dst = rows_[static_cast<std::size_t>(i - 1)];
    dst.resize(slots);
    std::vector<bool> filled(slots, false);
    for (const auto& [c, v] : row) {
      if (!c.within(n)) {
        throw std::invalid_argument(std::string(what) + ": coalition {" + c.to_string() +
                                    "} has a player outside 1.." + std::to_string(n));
      }
      if (!c.contains(i)) {
        throw std::invalid_argument(std::string(what) + ": player " + std::to_string(i) +
                                    " is not a member of {" + c.to_string() + "}");
      }
      dst[slot(i, c.mask())] = v;
      filled[slot(i, c.mask())] = true;
    }
    if (row.size() != slots) {
      for (PlayerMask m = 1; m <= full_mask(n); ++m) {
        if ((m & player_bit(i)) && !filled[slot(i, m)]) {
          throw std::invalid_argument(std::string(what) + ": missing entry for player " + std::to_string(i) +
                                      " and coalition {" + Coalition::from_mask(m).to_string() + "}");
        }
      }
    }
  }
}

std::vector<CoalitionValues>
PerPlayerTable::to_rows() const
{
  std::vector<CoalitionValues> out(static_cast<std::size_t>(n_));
  for (PlayerId i = 1; i <= n_; ++i) {
    for (PlayerMask m = 1; m <= full_mask(n_); ++m) {
      if (m & player_bit(i)) {
        out[static_cast<std::size_t>(i - 1)].emplace(Coalition::from_mask(m), at(i, m));
      }
    }
  }
  return out;
}

}  // namespace detail

// Representations ------------------------------------------------------------

UtilityTable::UtilityTable(int n, const std::vector<CoalitionValues>& rows)
  : table_(n, rows, "utility table")
{
}

AdditivelySeparableRepr::AdditivelySeparableRepr(std::vector<std::vector<Rational>> v)
  : v_(std::move(v))
{
  check_square(v_, "additively separable matrix");
}

SubsetAdditiveRepr::SubsetAdditiveRepr(int n, const std::vector<CoalitionValues>& rows)
  : v_(n, rows, "subset-additive values")
  , sums_(v_)
{
  // Subset-sum over the coalitions containing i; bit i itself stays fixed.
  for (PlayerId i = 1; i <= n; ++i) {
    for (int b = 0; b < n; ++b) {
      const PlayerMask bit = PlayerMask{1} << b;
      if (bit == player_bit(i)) {
        continue;
      }
      for (PlayerMask m = 1; m <= full_mask(n); ++m) {
        if ((m & player_bit(i)) && (m & bit)) {
          sums_.at(i, m) += sums_.at(i, m ^ bit);
        }
      }
    }
  }
}

SubsetNeutralRepr
SubsetNeutralRepr::dense(int n, const CoalitionValues& w)
{
  SubsetNeutralRepr r;
  r.n_ = n;
  r.w_ = dense_from_map(n, w, "subset-neutral w");
  r.totals_ = r.w_;
  subset_sum_transform(r.totals_, n);
  return r;
}

SubsetNeutralRepr
SubsetNeutralRepr::by_size(std::vector<Rational> w_by_size)
{
  const int n = static_cast<int>(w_by_size.size());
  if (n < 1 || n > kMaxPlayers) {
    throw std::invalid_argument("size-indexed w must have 1.." + std::to_string(kMaxPlayers) + " entries");
  }
  SubsetNeutralRepr r;
  r.n_ = n;
  r.size_indexed_ = true;
  r.w_.reserve(static_cast<std::size_t>(n) + 1);
  r.w_.emplace_back(0);
  for (auto& v : w_by_size) {
    r.w_.push_back(std::move(v));
  }
  // totals_[s] = sum_{j=1..s} C(s, j) w_j, with the binomials from Pascal's rule.
  std::vector<Rational> row{Rational(1)};
  r.totals_.assign(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int s = 1; s <= n; ++s) {
    std::vector<Rational> next(static_cast<std::size_t>(s) + 1, Rational(1));
    for (int j = 1; j < s; ++j) {
      next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
    }
    row = std::move(next);
    for (int j = 1; j <= s; ++j) {
      r.totals_[static_cast<std::size_t>(s)] += row[static_cast<std::size_t>(j)] * r.w_[static_cast<std::size_t>(j)];
    }
  }
  return r;
}

std::vector<Rational>
SubsetNeutralRepr::size_values() const
{
  if (!size_indexed_) {
    throw std::logic_error("subset-neutral w is not size-indexed");
  }
  return {w_.begin() + 1, w_.end()};
}

Rational
SubsetNeutralRepr::w(PlayerMask c) const
{
  return size_indexed_ ? w_[static_cast<std::size_t>(popcount(c))] : w_[c];
}

const Rational&
SubsetNeutralRepr::block_value(PlayerMask c) const
{
  return size_indexed_ ? totals_[static_cast<std::size_t>(popcount(c))] : totals_[c];
}

Rational
SubsetNeutralRepr::utility(PlayerId i, PlayerMask c) const
{
  return block_value(c) - block_value(c & ~player_bit(i));
}

CoalitionValues
SubsetNeutralRepr::materialize() const
{
  check_dense_size(n_, "subset-neutral w");
  CoalitionValues out;
  for (PlayerMask m = 1; m <= full_mask(n_); ++m) {
    out.emplace_hint(out.end(), Coalition::from_mask(m), w(m));
  }
  return out;
}

AnonymousRepr::AnonymousRepr(std::vector<std::vector<Rational>> g)
  : g_(std::move(g))
{
  check_square(g_, "anonymous size scores");
}

NeutrallyAnonymousRepr::NeutrallyAnonymousRepr(std::vector<Rational> f)
  : f_(std::move(f))
{
  if (f_.empty() || f_.size() > static_cast<std::size_t>(kMaxPlayers)) {
    throw std::invalid_argument("f must have 1.." + std::to_string(kMaxPlayers) + " entries");
  }
}

CommonRankingRepr::CommonRankingRepr(int n, const CoalitionValues& w)
  : n_(n)
  , w_(dense_from_map(n, w, "common ranking w"))
{
}

CoalitionValues
CommonRankingRepr::values() const
{
  CoalitionValues out;
  for (PlayerMask m = 1; m <= full_mask(n_); ++m) {
    out.emplace_hint(out.end(), Coalition::from_mask(m), w_[m]);
  }
  return out;
}

// Game -----------------------------------------------------------------------

Game::Game(GameRepr repr)
  : repr_(std::move(repr))
  , n_(std::visit([](const auto& r) { return r.num_players(); }, repr_))
{
}

Rational
Game::utility(PlayerId i, const Coalition& c) const
{
  if (!c.within(n_)) {
    throw PreconditionError("coalition {" + c.to_string() + "} has a player outside 1.." + std::to_string(n_));
  }
  if (!c.contains(i)) {
    throw PreconditionError("player " + std::to_string(i) + " is not a member of {" + c.to_string() + "}");
  }
  return utility_at(i, c.mask());
}

Rational
Game::utility_at(PlayerId i, PlayerMask c) const
{
  struct Eval
  {
    PlayerId i;
    PlayerMask c;

    Rational operator()(const UtilityTable& r) const { return r.at(i, c); }
    Rational operator()(const AdditivelySeparableRepr& r) const
    {
      Rational sum;
      for (PlayerMask m = c; m != 0; m &= m - 1) {
        sum += r.value(i, lowest_player(m));
      }
      return sum;
    }
    Rational operator()(const SubsetAdditiveRepr& r) const { return r.utility(i, c); }
    Rational operator()(const SubsetNeutralRepr& r) const { return r.utility(i, c); }
    Rational operator()(const AnonymousRepr& r) const { return r.score(i, popcount(c)); }
    Rational operator()(const NeutrallyAnonymousRepr& r) const { return r.f(popcount(c)); }
    Rational operator()(const CommonRankingRepr& r) const { return r.w(c); }
  };
  return std::visit(Eval{i, c}, repr_);
}

int
Game::compare(PlayerId i, PlayerMask a, PlayerMask b) const
{
  const auto order = utility_at(i, a) <=> utility_at(i, b);
  return order < 0 ? -1 : order > 0 ? 1 : 0;
}

Preference
Game::prefers(PlayerId i, const Coalition& c, const Coalition& d) const
{
  const auto order = utility(i, c) <=> utility(i, d);
  if (order > 0) {
    return Preference::kStrictlyPrefers;
  }
  return order < 0 ? Preference::kStrictlyDisprefers : Preference::kIndifferent;
}

}  // namespace hedonica
