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

#ifndef ANONGAME_TESTS_TEST_GAMES_H_
#define ANONGAME_TESTS_TEST_GAMES_H_

#include "anongame/game.h"

namespace anongame::testing {

// Two players; player 0 wants to match the other, player 1 to differ.
inline AnonymousGame MatchingPennies() {
  return AnonymousGame::FromFunction(
      2, 2, [](int player, int strategy, const Partition& others) {
        const bool other_plays_strategy = others[strategy] == 1;
        return (player == 0) == other_plays_strategy ? 1.0 : 0.0;
      });
}

inline AnonymousGame ConstantGame(int n, int s, double value = 0.5) {
  return AnonymousGame::FromFunction(
      n, s, [value](int, int, const Partition&) { return value; });
}

// Strategy `best` pays 0.5 + margin, every other strategy pays 0.5.
inline AnonymousGame DominantGame(int n, int s, int best, double margin) {
  return AnonymousGame::FromFunction(
      n, s, [=](int, int strategy, const Partition&) {
        return strategy == best ? 0.5 + margin : 0.5;
      });
}

}  // namespace anongame::testing

#endif  // ANONGAME_TESTS_TEST_GAMES_H_
