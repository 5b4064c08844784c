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

#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "anongame/game_io.h"
#include "anongame/report_io.h"
#include "anongame/solve_ptas.h"
#include "anongame/solve_pure.h"
#include "test_games.h"

namespace anongame {
namespace {

using nlohmann::json;

TEST(GameIoTest, RoundTrip) {
  const AnonymousGame g = GenerateLipschitzGame(4, 3, 0.1, 2);
  const json doc = GameToJson(g);
  EXPECT_EQ(doc["n"], 4);
  EXPECT_EQ(doc["utilities"].size(), 4u);
  EXPECT_EQ(doc["utilities"][0].size(), 3u);
  EXPECT_EQ(doc["utilities"][0][0].size(), NumPartitions(3, 3));
  std::istringstream in(doc.dump());
  const AnonymousGame back = ReadGame(in);
  EXPECT_EQ(back.utilities(), g.utilities());
  EXPECT_FALSE(back.declared_lambda().has_value());
}

TEST(GameIoTest, DeclaredLambda) {
  json doc = GameToJson(testing::MatchingPennies());
  doc["lambda"] = 0.5;
  const AnonymousGame g = GameFromJson(doc);
  ASSERT_TRUE(g.declared_lambda().has_value());
  EXPECT_EQ(*g.declared_lambda(), 0.5);
  EXPECT_EQ(GameToJson(g)["lambda"], 0.5);
}

TEST(GameIoTest, RejectsMalformedDocuments) {
  json doc = GameToJson(testing::MatchingPennies());
  doc["utilities"][0][0].push_back(0.5);
  EXPECT_THROW(GameFromJson(doc), std::invalid_argument);
  json missing = {{"n", 2}};
  EXPECT_ANY_THROW(GameFromJson(missing));
  std::istringstream garbage("{not json");
  EXPECT_ANY_THROW(ReadGame(garbage));
  EXPECT_THROW(ReadGameFile("/nonexistent/game.json"), std::invalid_argument);
}

TEST(VectorIoTest, Formats) {
  std::istringstream lines("0.1\n0.2\n\n0.3\n");
  EXPECT_EQ(ReadProbabilityVector(lines), (std::vector<double>{0.1, 0.2, 0.3}));
  std::istringstream spaces("0.05 0.05 0.05 0.05");
  EXPECT_EQ(ReadProbabilityVector(spaces).size(), 4u);
  std::istringstream array(" [0.5, 1, 0]");
  EXPECT_EQ(ReadProbabilityVector(array), (std::vector<double>{0.5, 1.0, 0.0}));
  std::istringstream bad("0.1 abc");
  EXPECT_THROW(ReadProbabilityVector(bad), std::invalid_argument);
}

TEST(ReportIoTest, PureReportRoundTripsAndReverifies) {
  const AnonymousGame g = GenerateLipschitzGame(8, 3, 0.02, 9);
  const PureSolveReport report = SolvePure(g, {.min_eps = true});
  const json doc = json::parse(ToJson(report).dump());
  EXPECT_EQ(doc["status"], "ok");
  const auto profile = PureProfileFromReport(doc);
  ASSERT_TRUE(profile.has_value());
  EXPECT_EQ(PureRegret(g, *profile).max_regret,
            doc["max_regret"].get<double>());
  EXPECT_EQ(doc["minimum_threshold"]["threshold"].get<double>(),
            report.minimum->threshold);

  const PureSolveReport none = SolvePure(testing::MatchingPennies(), {.eps = 0.1});
  EXPECT_FALSE(PureProfileFromReport(ToJson(none)).has_value());
}

TEST(ReportIoTest, PtasAndRoundingReportsRoundTrip) {
  const AnonymousGame g = testing::MatchingPennies();
  const PtasSolveReport report = SolvePtas(g, {.k = 4, .minimize = true});
  const json doc = json::parse(ToJson(report).dump());
  EXPECT_EQ(MixedRegretBinary(g, MixedFromReport(doc)).max_regret,
            doc["exact_regret"].get<double>());

  const RoundingResult r =
      RoundProbabilities(std::vector<double>{0.05, 0.15, 0.4, 0.97}, {.k = 10});
  const json rounded = json::parse(ToJson(r).dump());
  EXPECT_EQ(MixedFromReport(rounded), r.q);
  EXPECT_EQ(rounded["workspaces"].size(), 4u);
  EXPECT_EQ(rounded["workspaces"][0]["region"], "L");
  EXPECT_TRUE(rounded["workspaces"][3]["complemented"].get<bool>());
  EXPECT_THROW(MixedFromReport(json::object()), std::invalid_argument);
}

}  // namespace
}  // namespace anongame
