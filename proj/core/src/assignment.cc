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

#include "anongame/assignment.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace anongame {

AssignmentProblem::AssignmentProblem(int rows, std::vector<int> demand)
    : rows_(rows),
      demand_(std::move(demand)),
      costs_(static_cast<std::size_t>(rows) * demand_.size(),
             std::numeric_limits<double>::infinity()) {
  if (rows < 0) throw std::invalid_argument("negative row count");
  long long total = 0;
  for (int d : demand_) {
    if (d < 0) throw std::invalid_argument("negative column demand");
    total += d;
  }
  if (total != rows) {
    throw std::invalid_argument("column demands must sum to the row count");
  }
}

namespace {

// Augmenting paths for a b-matching: a column with spare capacity ends a
// path, a full column is re-entered by displacing one of its rows.
class Matcher {
 public:
  Matcher(const AssignmentProblem& problem, double threshold)
      : problem_(problem),
        threshold_(threshold),
        row_to_col_(problem.rows(), -1),
        col_rows_(problem.cols()),
        visited_(problem.cols(), 0) {}

  std::optional<std::vector<int>> Run() {
    for (int r = 0; r < problem_.rows(); ++r) {
      ++stamp_;
      if (!Augment(r)) return std::nullopt;
    }
    return row_to_col_;
  }

 private:
  bool Augment(int row) {
    for (int c = 0; c < problem_.cols(); ++c) {
      if (visited_[c] == stamp_ || problem_.demand()[c] == 0 ||
          problem_.Cost(row, c) > threshold_) {
        continue;
      }
      visited_[c] = stamp_;
      if (static_cast<int>(col_rows_[c].size()) < problem_.demand()[c]) {
        Move(row, c);
        return true;
      }
      const std::vector<int> occupants = col_rows_[c];
      for (int other : occupants) {
        if (Augment(other)) {
          Move(row, c);
          return true;
        }
      }
    }
    return false;
  }

  void Move(int row, int col) {
    if (const int from = row_to_col_[row]; from >= 0) {
      auto& bucket = col_rows_[from];
      bucket.erase(std::find(bucket.begin(), bucket.end(), row));
    }
    row_to_col_[row] = col;
    col_rows_[col].push_back(row);
  }

  const AssignmentProblem& problem_;
  double threshold_;
  std::vector<int> row_to_col_;
  std::vector<std::vector<int>> col_rows_;
  std::vector<int> visited_;
  int stamp_ = 0;
};

}  // namespace

std::optional<std::vector<int>> AssignmentProblem::Solve(
    double threshold) const {
  // Cheap necessary condition: every row needs at least one admissible
  // column.
  for (int r = 0; r < rows_; ++r) {
    bool any = false;
    for (int c = 0; c < cols() && !any; ++c) {
      any = demand_[c] > 0 && Cost(r, c) <= threshold;
    }
    if (!any) return std::nullopt;
  }
  return Matcher(*this, threshold).Run();
}

std::optional<AssignmentProblem::Bottleneck>
AssignmentProblem::SolveBottleneck(std::optional<double> ceiling) const {
  std::vector<double> values;
  values.reserve(costs_.size());
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols(); ++c) {
      const double v = Cost(r, c);
      if (demand_[c] > 0 && std::isfinite(v) && (!ceiling || v <= *ceiling)) {
        values.push_back(v);
      }
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (rows_ == 0) return Bottleneck{0.0, {}};
  if (values.empty()) return std::nullopt;

  auto best = Solve(values.back());
  if (!best) return std::nullopt;
  std::size_t lo = 0;
  std::size_t hi = values.size() - 1;  // invariant: values[hi] is feasible
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (auto found = Solve(values[mid])) {
      best = std::move(found);
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return Bottleneck{values[hi], std::move(*best)};
}

}  // namespace anongame
