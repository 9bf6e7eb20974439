#include "hedonica/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hedonica {

namespace {

using Json = nlohmann::ordered_json;

Rational
number_from_json(const Json& j, std::string_view where)
{
  if (j.is_number_integer()) {
    return Rational(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string(where) + ": " + e.what());
    }
  }
  if (j.is_number_float()) {
    throw std::invalid_argument(std::string(where) + ": floating-point literal " + j.dump() +
                                " is not exact; write it as a decimal string");
  }
  throw std::invalid_argument(std::string(where) + ": expected a number, got " + j.dump());
}

Json
number_to_json(const Rational& r)
{
  if (auto v = r.to_int64()) {
    return *v;
  }
  // Terminating fractions (denominator 2^a 5^b) print as decimals.
  mpz_class den = r.raw().get_den();
  unsigned twos = 0;
  unsigned fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) {
    return r.to_string();
  }
  const unsigned digits = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class scaled = r.raw().get_num() * scale / r.raw().get_den();
  const bool negative = scaled < 0;
  std::string text = mpz_class(abs(scaled)).get_str();
  if (text.size() <= digits) {
    text.insert(0, digits + 1 - text.size(), '0');
  }
  text.insert(text.size() - digits, ".");
  return (negative ? "-" : "") + text;
}

const Json&
require(const Json& obj, const char* key)
{
  if (!obj.contains(key)) {
    throw std::invalid_argument(std::string("instance is missing \"") + key + "\"");
  }
  return obj.at(key);
}

CoalitionValues
coalition_map_from_json(const Json& j, int n, std::string_view where)
{
  if (!j.is_object()) {
    throw std::invalid_argument(std::string(where) + ": expected an object keyed by coalition");
  }
  CoalitionValues out;
  for (const auto& [key, value] : j.items()) {
    const Coalition c = Coalition::parse(key, n);
    if (c.to_string() != key) {
      throw std::invalid_argument(std::string(where) + ": coalition key \"" + key +
                                  "\" must list ascending ids without spaces (\"" + c.to_string() + "\")");
    }
    out.emplace(c, number_from_json(value, std::string(where) + "[" + key + "]"));
  }
  return out;
}

Json
coalition_map_to_json(const CoalitionValues& values)
{
  Json out = Json::object();
  for (const auto& [c, v] : values) {
    out[c.to_string()] = number_to_json(v);
  }
  return out;
}

std::vector<CoalitionValues>
per_player_from_json(const Json& j, int n, std::string_view where)
{
  if (!j.is_object()) {
    throw std::invalid_argument(std::string(where) + ": expected an object keyed by player");
  }
  std::vector<CoalitionValues> rows(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& [key, value] : j.items()) {
    const Coalition player = Coalition::parse(key, n);
    if (player.size() != 1 || player.to_string() != key) {
      throw std::invalid_argument(std::string(where) + ": \"" + key + "\" is not a player id");
    }
    const auto idx = static_cast<std::size_t>(player.min_member() - 1);
    seen[idx] = true;
    rows[idx] = coalition_map_from_json(value, n, std::string(where) + "[" + key + "]");
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      throw std::invalid_argument(std::string(where) + ": missing player " + std::to_string(i + 1));
    }
  }
  return rows;
}

Json
per_player_to_json(const std::vector<CoalitionValues>& rows)
{
  Json out = Json::object();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out[std::to_string(i + 1)] = coalition_map_to_json(rows[i]);
  }
  return out;
}

std::vector<Rational>
vector_from_json(const Json& j, int n, std::string_view where)
{
  if (!j.is_array() || j.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument(std::string(where) + ": expected an array of " + std::to_string(n) + " numbers");
  }
  std::vector<Rational> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(number_from_json(j[k], std::string(where) + "[" + std::to_string(k) + "]"));
  }
  return out;
}

std::vector<std::vector<Rational>>
matrix_from_json(const Json& j, int n, std::string_view where)
{
  if (!j.is_array() || j.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument(std::string(where) + ": expected " + std::to_string(n) + " rows");
  }
  std::vector<std::vector<Rational>> out;
  for (std::size_t r = 0; r < j.size(); ++r) {
    out.push_back(vector_from_json(j[r], n, std::string(where) + "[" + std::to_string(r) + "]"));
  }
  return out;
}

Json
vector_to_json(const std::vector<Rational>& values)
{
  Json out = Json::array();
  for (const auto& v : values) {
    out.push_back(number_to_json(v));
  }
  return out;
}

Json
matrix_to_json(const std::vector<std::vector<Rational>>& rows)
{
  Json out = Json::array();
  for (const auto& row : rows) {
    out.push_back(vector_to_json(row));
  }
  return out;
}

}  // namespace

Game
game_from_json(std::string_view text)
{
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("instance must be a JSON object");
  }
  const Json& n_json = require(doc, "n");
  if (!n_json.is_number_integer()) {
    throw std::invalid_argument("\"n\" must be an integer");
  }
  const auto n64 = n_json.get<std::int64_t>();
  if (n64 < 1 || n64 > kMaxPlayers) {
    throw std::invalid_argument("\"n\" must be in 1.." + std::to_string(kMaxPlayers));
  }
  const int n = static_cast<int>(n64);
  const Json& kind_json = require(doc, "kind");
  if (!kind_json.is_string()) {
    throw std::invalid_argument("\"kind\" must be a string");
  }

  switch (parse_kind_name(kind_json.get<std::string>())) {
    case GameKind::kUtilityTable:
      return UtilityTable(n, per_player_from_json(require(doc, "u"), n, "u"));
    case GameKind::kAdditivelySeparable:
      return AdditivelySeparableRepr(matrix_from_json(require(doc, "v"), n, "v"));
    case GameKind::kSubsetAdditive:
      return SubsetAdditiveRepr(n, per_player_from_json(require(doc, "v"), n, "v"));
    case GameKind::kSubsetNeutral:
      return SubsetNeutralRepr::dense(n, coalition_map_from_json(require(doc, "w"), n, "w"));
    case GameKind::kAnonymous:
      return AnonymousRepr(matrix_from_json(require(doc, "g"), n, "g"));
    case GameKind::kNeutrallyAnonymous:
      return NeutrallyAnonymousRepr(vector_from_json(require(doc, "f"), n, "f"));
    case GameKind::kCommonRanking:
      return CommonRankingRepr(n, coalition_map_from_json(require(doc, "w"), n, "w"));
  }
  throw std::logic_error("unhandled game kind");
}

std::string
game_to_json(const Game& game)
{
  Json doc = Json::object();
  doc["n"] = game.num_players();
  doc["kind"] = std::string(kind_name(game.kind()));
  struct Payload
  {
    Json& doc;

    void operator()(const UtilityTable& r) { doc["u"] = per_player_to_json(r.rows()); }
    void operator()(const AdditivelySeparableRepr& r) { doc["v"] = matrix_to_json(r.matrix()); }
    void operator()(const SubsetAdditiveRepr& r) { doc["v"] = per_player_to_json(r.rows()); }
    void operator()(const SubsetNeutralRepr& r) { doc["w"] = coalition_map_to_json(r.materialize()); }
    void operator()(const AnonymousRepr& r) { doc["g"] = matrix_to_json(r.scores()); }
    void operator()(const NeutrallyAnonymousRepr& r) { doc["f"] = vector_to_json(r.values()); }
    void operator()(const CommonRankingRepr& r) { doc["w"] = coalition_map_to_json(r.values()); }
  };
  std::visit(Payload{doc}, game.repr());
  return doc.dump(2) + "\n";
}

Game
load_game(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open instance file " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return game_from_json(buffer.str());
}

void
save_game(const Game& game, const std::filesystem::path& path)
{
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << game_to_json(game);
}

}  // namespace hedonica
