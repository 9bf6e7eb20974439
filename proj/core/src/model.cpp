#include "hedonica/model.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include "hedonica/errors.hpp"

namespace hedonica {

namespace {

std::string_view
trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view>
split(std::string_view s, char sep)
{
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  return parts;
}

PlayerId
parse_player(std::string_view token, int n)
{
  token = trim(token);
  if (token.empty() || !std::all_of(token.begin(), token.end(),
                                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw std::invalid_argument("invalid player id '" + std::string(token) + "'");
  }
  if (token.size() > 3) {
    throw std::invalid_argument("player id out of range: " + std::string(token));
  }
  const int id = std::stoi(std::string(token));
  if (id < 1 || id > n) {
    throw std::invalid_argument("player id out of range: " + std::to_string(id) + " (n=" + std::to_string(n) + ")");
  }
  return id;
}

void
check_player_count(int n)
{
  if (n < 1 || n > kMaxPlayers) {
    throw std::invalid_argument("player count must be in 1.." + std::to_string(kMaxPlayers) +
                                ", got " + std::to_string(n));
  }
}

}  // namespace

// Limits ---------------------------------------------------------------------

Limits
Limits::from_environment()
{
  Limits limits;
  if (const char* env = std::getenv("HEDONICA_PARTITION_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || cap < 1 || cap > kMaxPlayers) {
      throw std::invalid_argument(std::string("HEDONICA_PARTITION_CAP must be an integer in 1..") +
                                  std::to_string(kMaxPlayers) + ", got '" + env + "'");
    }
    limits.partition_cap = static_cast<int>(cap);
  }
  return limits;
}

void
require_within_cap(int n, int cap, std::string_view what)
{
  if (n > cap) {
    throw CapExceeded(std::string(what) + ": n=" + std::to_string(n) + " exceeds the bound n<=" +
                      std::to_string(cap));
  }
}

// Coalition ------------------------------------------------------------------

Coalition
Coalition::from_mask(PlayerMask mask)
{
  if (mask == 0) {
    throw std::invalid_argument("a coalition must be nonempty");
  }
  if ((mask & ~full_mask(kMaxPlayers)) != 0) {
    throw std::invalid_argument("coalition member exceeds player limit");
  }
  return Coalition(mask);
}

Coalition
Coalition::of(std::initializer_list<PlayerId> members)
{
  return of(std::span<const PlayerId>(members.begin(), members.size()));
}

Coalition
Coalition::of(std::span<const PlayerId> members)
{
  PlayerMask mask = 0;
  for (PlayerId i : members) {
    if (i < 1 || i > kMaxPlayers) {
      throw std::invalid_argument("player id out of range: " + std::to_string(i));
    }
    if (mask & player_bit(i)) {
      throw std::invalid_argument("duplicate player " + std::to_string(i) + " in coalition");
    }
    mask |= player_bit(i);
  }
  return from_mask(mask);
}

Coalition
Coalition::parse(std::string_view text, int n)
{
  check_player_count(n);
  text = trim(text);
  if (text.empty()) {
    throw std::invalid_argument("empty coalition");
  }
  std::vector<PlayerId> ids;
  for (auto token : split(text, ',')) {
    ids.push_back(parse_player(token, n));
  }
  return of(ids);
}

bool
Coalition::contains(PlayerId i) const
{
  return i >= 1 && i <= kMaxPlayers && (mask_ & player_bit(i)) != 0;
}

std::vector<PlayerId>
Coalition::members() const
{
  std::vector<PlayerId> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (PlayerMask m = mask_; m != 0; m &= m - 1) {
    out.push_back(lowest_player(m));
  }
  return out;
}

std::string
Coalition::to_string() const
{
  std::string out;
  for (PlayerMask m = mask_; m != 0; m &= m - 1) {
    if (!out.empty()) {
      out += ',';
    }
    out += std::to_string(lowest_player(m));
  }
  return out;
}

// Partition ------------------------------------------------------------------

Partition::Partition(int n, std::vector<Coalition> blocks)
  : n_(n)
  , blocks_(std::move(blocks))
{
  check_player_count(n);
  PlayerMask seen = 0;
  for (const Coalition& c : blocks_) {
    if (!c.within(n)) {
      throw std::invalid_argument("block {" + c.to_string() + "} has a player outside 1.." + std::to_string(n));
    }
    if (seen & c.mask()) {
      throw std::invalid_argument("duplicate player " + std::to_string(lowest_player(seen & c.mask())) +
                                  " in partition");
    }
    seen |= c.mask();
  }
  if (seen != full_mask(n)) {
    throw std::invalid_argument("missing player " + std::to_string(lowest_player(full_mask(n) & ~seen)) +
                                " in partition");
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Coalition& a, const Coalition& b) { return a.min_member() < b.min_member(); });
}

Partition
Partition::singletons(int n)
{
  check_player_count(n);
  std::vector<Coalition> blocks;
  for (PlayerId i = 1; i <= n; ++i) {
    blocks.push_back(Coalition::singleton(i));
  }
  return Partition(n, std::move(blocks));
}

Partition
Partition::grand(int n)
{
  check_player_count(n);
  return Partition(n, {Coalition::grand(n)});
}

Partition
Partition::parse(std::string_view text, int n)
{
  check_player_count(n);
  std::vector<Coalition> blocks;
  PlayerMask seen = 0;
  for (auto block_text : split(text, '|')) {
    block_text = trim(block_text);
    if (block_text.empty()) {
      throw std::invalid_argument("empty block in partition literal '" + std::string(text) + "'");
    }
    PlayerMask mask = 0;
    for (auto token : split(block_text, ',')) {
      const PlayerId i = parse_player(token, n);
      if ((seen | mask) & player_bit(i)) {
        throw std::invalid_argument("duplicate player " + std::to_string(i) + " in partition literal");
      }
      mask |= player_bit(i);
    }
    seen |= mask;
    blocks.push_back(Coalition::from_mask(mask));
  }
  return Partition(n, std::move(blocks));
}

Partition
Partition::from_rgs(std::span<const int> labels)
{
  const int n = static_cast<int>(labels.size());
  check_player_count(n);
  std::vector<PlayerMask> masks;
  for (int k = 0; k < n; ++k) {
    const int label = labels[static_cast<std::size_t>(k)];
    if (label < 0 || label > static_cast<int>(masks.size())) {
      throw std::invalid_argument("not a restricted-growth string");
    }
    if (label == static_cast<int>(masks.size())) {
      masks.push_back(0);
    }
    masks[static_cast<std::size_t>(label)] |= player_bit(k + 1);
  }
  std::vector<Coalition> blocks;
  blocks.reserve(masks.size());
  for (PlayerMask m : masks) {
    blocks.push_back(Coalition::from_mask(m));
  }
  return Partition(n, std::move(blocks));
}

std::size_t
Partition::block_index_of(PlayerId i) const
{
  if (i < 1 || i > n_) {
    throw std::out_of_range("player " + std::to_string(i) + " out of range 1.." + std::to_string(n_));
  }
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].contains(i)) {
      return b;
    }
  }
  throw std::logic_error("partition does not cover player");
}

Partition
Partition::with_move(PlayerId i, std::optional<std::size_t> target) const
{
  const std::size_t origin = block_index_of(i);
  if (target && (*target >= blocks_.size() || *target == origin)) {
    throw std::invalid_argument("invalid move target");
  }
  std::vector<Coalition> blocks;
  blocks.reserve(blocks_.size() + 1);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    PlayerMask m = blocks_[b].mask();
    if (b == origin) {
      m &= ~player_bit(i);
    } else if (target && b == *target) {
      m |= player_bit(i);
    }
    if (m != 0) {
      blocks.push_back(Coalition::from_mask(m));
    }
  }
  if (!target) {
    blocks.push_back(Coalition::singleton(i));
  }
  return Partition(n_, std::move(blocks));
}

std::string
Partition::to_string() const
{
  std::string out;
  for (const Coalition& c : blocks_) {
    if (!out.empty()) {
      out += '|';
    }
    out += c.to_string();
  }
  return out;
}

Coalition
coalition_of(const Partition& partition, PlayerId i)
{
  return partition.coalition_of(i);
}

// Enumeration ----------------------------------------------------------------

std::vector<Coalition>
enumerate_subsets(const Coalition& ground, std::optional<PlayerId> containing)
{
  std::vector<Coalition> out;
  if (containing) {
    if (!ground.contains(*containing)) {
      throw std::invalid_argument("player " + std::to_string(*containing) + " is not in {" +
                                  ground.to_string() + "}");
    }
    const PlayerMask fixed = player_bit(*containing);
    out.push_back(Coalition::from_mask(fixed));
    for_each_submask(ground.mask() & ~fixed,
                     [&](PlayerMask sub) { out.push_back(Coalition::from_mask(sub | fixed)); });
    std::sort(out.begin(), out.end());
    return out;
  }
  for_each_submask(ground.mask(), [&](PlayerMask sub) { out.push_back(Coalition::from_mask(sub)); });
  return out;
}

PartitionEnumerator::PartitionEnumerator(int n, int cap)
{
  check_player_count(n);
  require_within_cap(n, cap, "partition enumeration");
  labels_.assign(static_cast<std::size_t>(n), 0);
  prefix_max_.assign(static_cast<std::size_t>(n), 0);
}

std::optional<Partition>
PartitionEnumerator::next()
{
  if (done_) {
    return std::nullopt;
  }
  if (!started_) {
    started_ = true;
    return Partition::from_rgs(labels_);
  }
  const int n = static_cast<int>(labels_.size());
  int k = n - 1;
  while (k >= 1 && labels_[static_cast<std::size_t>(k)] > prefix_max_[static_cast<std::size_t>(k - 1)]) {
    --k;
  }
  if (k < 1) {
    done_ = true;
    return std::nullopt;
  }
  auto uk = static_cast<std::size_t>(k);
  ++labels_[uk];
  prefix_max_[uk] = std::max(prefix_max_[uk - 1], labels_[uk]);
  for (auto j = uk + 1; j < labels_.size(); ++j) {
    labels_[j] = 0;
    prefix_max_[j] = prefix_max_[j - 1];
  }
  return Partition::from_rgs(labels_);
}

std::vector<Partition>
enumerate_partitions(int n, int cap)
{
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); }, cap);
  return out;
}

}  // namespace hedonica
