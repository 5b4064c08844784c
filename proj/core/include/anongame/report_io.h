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

#ifndef ANONGAME_REPORT_IO_H_
#define ANONGAME_REPORT_IO_H_

#include "json.hpp"

#include "anongame/rounding.h"
#include "anongame/solve_ptas.h"
#include "anongame/solve_pure.h"

namespace anongame {

// Every report becomes one JSON object. Profiles are emitted in full so a
// report can be re-read and its regret recomputed.
nlohmann::json ToJson(const IntervalWorkspace& workspace);
nlohmann::json ToJson(const RoundingResult& result);
nlohmann::json ToJson(const PureSolveReport& report);
nlohmann::json ToJson(const PtasSolveReport& report);
nlohmann::json ToJson(const RoundedEquilibrium& rounded);

// Inverse of the profile part of ToJson(PureSolveReport); nullopt when the
// report has no profile.
std::optional<PureProfile> PureProfileFromReport(const nlohmann::json& doc);
// The "mixed" field of a PtasSolveReport or the "q" field of a
// RoundingResult.
std::vector<double> MixedFromReport(const nlohmann::json& doc);

}  // namespace anongame

#endif  // ANONGAME_REPORT_IO_H_
