// Copyright 2026 The anongame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "anongame/game_io.h"

#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace anongame {

using nlohmann::json;

json GameToJson(const AnonymousGame& game) {
  json utilities = json::array();
  for (int p = 0; p < game.num_players(); ++p) {
    json per_player = json::array();
    for (int i = 0; i < game.num_strategies(); ++i) {
      const auto table = game.Table(p, i);
      per_player.push_back(std::vector<double>(table.begin(), table.end()));
    }
    utilities.push_back(std::move(per_player));
  }
  json doc = {{"n", game.num_players()},
              {"s", game.num_strategies()},
              {"utilities", std::move(utilities)}};
  if (game.declared_lambda()) doc["lambda"] = *game.declared_lambda();
  return doc;
}

AnonymousGame GameFromJson(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("game must be an object");
  const int n = doc.at("n").get<int>();
  const int s = doc.at("s").get<int>();
  if (n < 2 || s < 2) throw std::invalid_argument("game needs n, s >= 2");
  const json& utilities = doc.at("utilities");
  const std::uint64_t per_table = NumPartitions(n - 1, s);
  if (!utilities.is_array() || utilities.size() != static_cast<size_t>(n)) {
    throw std::invalid_argument("utilities must have n entries");
  }
  std::vector<double> flat;
  flat.reserve(per_table * n * s);
  for (const json& per_player : utilities) {
    if (!per_player.is_array() || per_player.size() != static_cast<size_t>(s)) {
      throw std::invalid_argument("each player needs s utility tables");
    }
    for (const json& table : per_player) {
      if (!table.is_array() || table.size() != per_table) {
        throw std::invalid_argument("utility table must have " +
                                    std::to_string(per_table) + " entries");
      }
      for (const json& v : table) flat.push_back(v.get<double>());
    }
  }
  std::optional<double> lambda;
  if (doc.contains("lambda") && !doc["lambda"].is_null()) {
    lambda = doc["lambda"].get<double>();
  }
  return AnonymousGame(n, s, std::move(flat), lambda);
}

AnonymousGame ReadGame(std::istream& in) {
  return GameFromJson(json::parse(in));
}

AnonymousGame ReadGameFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open game file " + path);
  return ReadGame(in);
}

std::vector<double> ReadProbabilityVector(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    return json::parse(text).get<std::vector<double>>();
  }
  std::vector<double> out;
  std::istringstream stream(text);
  std::string token;
  while (stream >> token) {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) {
      throw std::invalid_argument("not a number: " + token);
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace anongame
