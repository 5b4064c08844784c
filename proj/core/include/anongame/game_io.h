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

#ifndef ANONGAME_GAME_IO_H_
#define ANONGAME_GAME_IO_H_

#include <istream>
#include <string>
#include <vector>

#include "json.hpp"

#include "anongame/game.h"

namespace anongame {

// Game document:
//   {"n": int, "s": int,
//    "utilities": [n][s][C(n-1+s-1, s-1)] numbers in [0, 1],
//    "lambda": number (optional, declared Lipschitz constant)}
// The innermost index is Partition::Rank() of the other players' counts.
nlohmann::json GameToJson(const AnonymousGame& game);
AnonymousGame GameFromJson(const nlohmann::json& doc);

AnonymousGame ReadGame(std::istream& in);
AnonymousGame ReadGameFile(const std::string& path);

// Accepts a JSON array of numbers or whitespace / newline separated plain
// numbers.
std::vector<double> ReadProbabilityVector(std::istream& in);

}  // namespace anongame

#endif  // ANONGAME_GAME_IO_H_
