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

#include "anongame/report_io.h"

#include <stdexcept>

namespace anongame {

using nlohmann::json;

json ToJson(const IntervalWorkspace& workspace) {
  json intervals = json::array();
  for (const IntervalRecord& r : workspace.intervals) {
    json item = {{"j", r.j},
                 {"members", r.members},
                 {"offsets", r.offsets},
                 {"sum", r.sum},
                 {"promoted", r.promoted},
                 {"variance_in", r.variance_in},
                 {"variance_out", r.variance_out}};
    if (workspace.region == Region::kLow || workspace.region == Region::kHigh) {
      item["carry_in"] = r.carry_in;
      item["carry_out"] = r.carry_out;
    } else {
      item["discrepancy"] = r.discrepancy;
    }
    intervals.push_back(std::move(item));
  }
  json out = {{"region", RegionName(workspace.region)},
              {"complemented", workspace.complemented},
              {"intervals", std::move(intervals)},
              {"on_boundary", workspace.on_boundary}};
  if (workspace.region == Region::kLow || workspace.region == Region::kHigh) {
    out["final_carry"] = workspace.final_carry;
  }
  return out;
}

json ToJson(const RoundingResult& result) {
  json regions = json::array();
  for (Region r : result.region_of) regions.push_back(RegionName(r));
  return {{"k", result.config.k},
          {"alpha", result.config.alpha},
          {"beta", result.config.beta},
          {"small_cutoff", result.config.SmallCutoff()},
          {"p", result.p},
          {"q", result.q},
          {"levels", result.levels},
          {"region_of", std::move(regions)},
          {"fixed_points", result.fixed_points},
          {"workspaces",
           {ToJson(result.low), ToJson(result.medium_low),
            ToJson(result.medium_high), ToJson(result.high)}}};
}

json ToJson(const PureSolveReport& report) {
  json out = {{"status", report.status()},
              {"profile", report.profile ? json(report.profile->choices)
                                         : json(nullptr)},
              {"max_regret", report.max_regret},
              {"per_player", report.per_player},
              {"lambda", report.lambda},
              {"theoretical_bound", report.theoretical_bound},
              {"feasibility_threshold", report.feasibility_threshold},
              {"auto_threshold", report.auto_threshold},
              {"partitions_examined", report.partitions_examined},
              {"partitions_total", report.partitions_total}};
  if (report.minimum) {
    out["minimum_threshold"] = {{"threshold", report.minimum->threshold},
                                {"profile", report.minimum->profile.choices},
                                {"partition_rank", report.minimum->rank}};
  }
  return out;
}

json ToJson(const PtasSolveReport& report) {
  return {{"status", "ok"},
          {"mixed", report.mixed},
          {"levels", report.levels},
          {"exact_regret", report.exact_regret},
          {"per_player", report.per_player},
          {"k_used", report.k_used},
          {"threshold_used", report.threshold_used},
          {"first_feasible_threshold", report.first_feasible_threshold},
          {"escalations", report.escalations},
          {"partitions_examined", report.partitions_examined},
          {"partitions_total", report.partitions_total}};
}

json ToJson(const RoundedEquilibrium& rounded) {
  return {{"report", ToJson(rounded.report)},
          {"rounding", ToJson(rounded.rounding)},
          {"input_regret", rounded.input_regret},
          {"gap", rounded.gap}};
}

std::optional<PureProfile> PureProfileFromReport(const json& doc) {
  const json& profile = doc.at("profile");
  if (profile.is_null()) return std::nullopt;
  return PureProfile{profile.get<std::vector<int>>()};
}

std::vector<double> MixedFromReport(const json& doc) {
  if (doc.contains("mixed")) return doc.at("mixed").get<std::vector<double>>();
  if (doc.contains("q")) return doc.at("q").get<std::vector<double>>();
  throw std::invalid_argument("report has neither \"mixed\" nor \"q\"");
}

}  // namespace anongame
