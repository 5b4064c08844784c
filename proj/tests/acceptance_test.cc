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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any gating item fails. Optional argv[1] overrides the seed.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "anongame/harness.h"

namespace anongame {
namespace {

struct Criterion {
  int id;
  const char* title;
  std::function<SuiteResult(std::uint64_t)> run;
};

std::vector<Criterion> Criteria() {
  return {
      {1, "rounding grid and closeness", CheckRoundingGrid},
      {2, "rounding TV <= 3 k^-1/4", CheckRoundingTv},
      {3, "TV independent of n", CheckTvNIndependence},
      {4, "naive rounding counterexample",
       [](std::uint64_t) { return CheckNaiveCounterexample(); }},
      {5, "Poisson approximation bounds", CheckPoissonMachinery},
      {6, "pure equilibrium bound", CheckPureBound},
      {7, "PTAS soundness", CheckPtasSoundness},
      {8, "oracle equivalences", CheckOracleEquivalences},
  };
}

int Main(int argc, char** argv) {
  const std::uint64_t seed =
      argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
  int failures = 0;
  for (const Criterion& c : Criteria()) {
    const SuiteResult suite = c.run(seed);
    const bool ok = suite.passed();
    failures += ok ? 0 : 1;
    std::printf("criterion %d: %s  %s (%zu items, %.2f s)\n", c.id,
                ok ? "PASS" : "FAIL", c.title, suite.items.size(),
                suite.runtime_seconds);
    for (const OracleReport& item : suite.items) {
      if (item.pass) continue;
      std::printf("    %s %s: measured %.6g vs bound %.6g [%s]\n",
                  item.gating ? "failed" : "diagnostic",
                  item.claim.c_str(), item.measured, item.bound,
                  item.instance.c_str());
    }
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace anongame

int main(int argc, char** argv) { return anongame::Main(argc, argv); }
