#ifndef HEDONICA_MODEL_HPP
#define HEDONICA_MODEL_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hedonica {

/// Players are numbered 1..n everywhere in the public interface.
using PlayerId = int;

/// Bit (i-1) is set iff player i is a member.
using PlayerMask = std::uint32_t;

inline constexpr int kMaxPlayers = 30;
inline constexpr int kDefaultPartitionCap = 12;
inline constexpr int kDefaultCoalitionCap = 16;
inline constexpr int kDefaultTopCoalitionCap = 8;

constexpr PlayerMask
player_bit(PlayerId i)
{
  return PlayerMask{1} << (i - 1);
}

constexpr PlayerMask
full_mask(int n)
{
  return n >= 32 ? ~PlayerMask{0} : (PlayerMask{1} << n) - 1;
}

constexpr PlayerId
lowest_player(PlayerMask m)
{
  return std::countr_zero(m) + 1;
}

constexpr int
popcount(PlayerMask m)
{
  return std::popcount(m);
}

/// Size bounds for the exhaustive scans.
struct Limits
{
  int partition_cap = kDefaultPartitionCap;      // Bell enumeration
  int coalition_cap = kDefaultCoalitionCap;      // 2^n coalition scans
  int top_coalition_cap = kDefaultTopCoalitionCap;

  /// Defaults, with `HEDONICA_PARTITION_CAP` overriding the partition cap when set.
  static Limits from_environment();
};

void require_within_cap(int n, int cap, std::string_view what);

/// A nonempty set of players. Observable form is the ascending member list.
class Coalition
{
public:
  static Coalition from_mask(PlayerMask mask);
  static Coalition of(std::initializer_list<PlayerId> members);
  static Coalition of(std::span<const PlayerId> members);
  static Coalition singleton(PlayerId i) { return from_mask(player_bit(i)); }
  static Coalition grand(int n) { return from_mask(full_mask(n)); }
  /// "1,3" (whitespace ignored); every id must lie in 1..n.
  static Coalition parse(std::string_view text, int n);

  PlayerMask mask() const { return mask_; }
  int size() const { return popcount(mask_); }
  bool contains(PlayerId i) const;
  PlayerId min_member() const { return lowest_player(mask_); }
  std::vector<PlayerId> members() const;
  bool within(int n) const { return (mask_ & ~full_mask(n)) == 0; }

  /// Ascending ids joined by commas, e.g. "1,3".
  std::string to_string() const;

  friend bool operator==(const Coalition&, const Coalition&) = default;
  /// Bitmask order; used for map keys and deterministic scans.
  friend auto operator<=>(const Coalition& a, const Coalition& b) { return a.mask_ <=> b.mask_; }

private:
  explicit Coalition(PlayerMask mask)
    : mask_(mask)
  {}

  PlayerMask mask_;
};

/// Disjoint coalitions covering 1..n, blocks ordered by minimum member.
class Partition
{
public:
  Partition(int n, std::vector<Coalition> blocks);

  static Partition singletons(int n);
  static Partition grand(int n);
  /// Parses the `1,2|3` literal; output is canonicalized.
  static Partition parse(std::string_view text, int n);
  /// Restricted-growth string (labels 0-based, first label 0) to partition.
  static Partition from_rgs(std::span<const int> labels);

  int num_players() const { return n_; }
  const std::vector<Coalition>& blocks() const { return blocks_; }
  std::size_t num_blocks() const { return blocks_.size(); }

  std::size_t block_index_of(PlayerId i) const;
  const Coalition& coalition_of(PlayerId i) const { return blocks_[block_index_of(i)]; }

  /// The partition reached when player i leaves its block and joins block
  /// `target` (an index into blocks()), or goes alone when `target` is empty.
  Partition with_move(PlayerId i, std::optional<std::size_t> target) const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b)
  {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }

private:
  int n_;
  std::vector<Coalition> blocks_;
};

/// C_pi(i): the block of `partition` containing player i.
Coalition coalition_of(const Partition& partition, PlayerId i);

/// Calls fn(mask) for every nonempty submask of `ground`, in increasing numeric order.
template <typename Fn>
void
for_each_submask(PlayerMask ground, Fn&& fn)
{
  PlayerMask sub = 0;
  do {
    sub = (sub - ground) & ground;
    if (sub != 0) {
      fn(sub);
    }
  } while (sub != 0);
}

/// Nonempty subsets of `ground`, optionally only those containing `containing`,
/// in increasing bitmask order.
std::vector<Coalition> enumerate_subsets(const Coalition& ground,
                                         std::optional<PlayerId> containing = std::nullopt);

/// Lexicographic walk over the restricted-growth strings of length n; each
/// string corresponds to exactly one partition of {1..n}.
class PartitionEnumerator
{
public:
  explicit PartitionEnumerator(int n, int cap = kDefaultPartitionCap);

  /// Next partition in RGS order, or nullopt when exhausted.
  std::optional<Partition> next();

private:
  std::vector<int> labels_;
  std::vector<int> prefix_max_;  // max label over labels_[0..k]
  bool started_ = false;
  bool done_ = false;
};

template <typename Fn>
void
for_each_partition(int n, Fn&& fn, int cap = kDefaultPartitionCap)
{
  PartitionEnumerator it(n, cap);
  while (auto p = it.next()) {
    fn(*p);
  }
}

std::vector<Partition> enumerate_partitions(int n, int cap = kDefaultPartitionCap);

}  // namespace hedonica

#endif  // HEDONICA_MODEL_HPP
