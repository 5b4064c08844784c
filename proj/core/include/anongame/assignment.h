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

#ifndef ANONGAME_ASSIGNMENT_H_
#define ANONGAME_ASSIGNMENT_H_

#include <optional>
#include <span>
#include <vector>

namespace anongame {

// Rows (players) must each be assigned one column (strategy); column c must
// receive exactly demand[c] rows, with sum(demand) == rows. A row may go to
// a column only if cost(row, col) <= threshold. Costs of +infinity mark
// forbidden pairs.
class AssignmentProblem {
 public:
  AssignmentProblem(int rows, std::vector<int> demand);

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(demand_.size()); }
  const std::vector<int>& demand() const { return demand_; }

  void SetCost(int row, int col, double cost) {
    costs_[static_cast<std::size_t>(row) * cols() + col] = cost;
  }
  double Cost(int row, int col) const {
    return costs_[static_cast<std::size_t>(row) * cols() + col];
  }

  // Column per row, or nullopt when no assignment fits under `threshold`.
  // Augmenting paths on the unit-capacity row side, O(rows * edges).
  std::optional<std::vector<int>> Solve(double threshold) const;

  // The smallest threshold admitting an assignment (a bottleneck
  // assignment), found by binary search over the distinct finite costs.
  // Returns nullopt when even the largest finite cost is infeasible, or when
  // `ceiling` is given and the answer would exceed it.
  struct Bottleneck {
    double threshold = 0.0;
    std::vector<int> assignment;
  };
  std::optional<Bottleneck> SolveBottleneck(
      std::optional<double> ceiling = std::nullopt) const;

 private:
  int rows_;
  std::vector<int> demand_;
  std::vector<double> costs_;
};

}  // namespace anongame

#endif  // ANONGAME_ASSIGNMENT_H_
