// Copyright 2026 The Secretive Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "secretive/matching.h"

#include <string>

#include "secretive/error.h"

namespace secretive {
namespace {

bool Augment(const BoolMatrix& edges, int row, std::vector<char>& visited,
             std::vector<int>& row_to_col, std::vector<int>& col_to_row) {
  for (int c = 0; c < edges.cols(); ++c) {
    if (!edges(row, c) || visited[c]) continue;
    visited[c] = 1;
    if (col_to_row[c] < 0 ||
        Augment(edges, col_to_row[c], visited, row_to_col, col_to_row)) {
      row_to_col[row] = c;
      col_to_row[c] = row;
      return true;
    }
  }
  return false;
}

}  // namespace

Matching MaxWeightPerfectMatching(const WeightMatrix& weights) {
  const int d = weights.rows();
  if (d != weights.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "weight matrix is " + std::to_string(weights.rows()) + "x" +
                    std::to_string(weights.cols()));
  }
  if (d == 0) throw Error(ErrorCode::kDimensionMismatch, "empty weight matrix");

  // Minimize cost = -weight. Row/column potentials u, v; 1-based with a
  // virtual column 0 as in the classic shortest-augmenting-path layout.
  std::vector<Rat> u(d + 1), v(d + 1);
  std::vector<int> match(d + 1, 0), way(d + 1, 0);
  for (int i = 1; i <= d; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<Rat> min_slack(d + 1);
    std::vector<char> used(d + 1, 0), seen(d + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = match[j0];
      int j1 = -1;
      Rat delta;
      for (int j = 1; j <= d; ++j) {
        if (used[j]) continue;
        Rat cur = -weights(i0 - 1, j - 1);
        cur -= u[i0];
        cur -= v[j];
        if (!seen[j] || cur < min_slack[j]) {
          min_slack[j] = std::move(cur);
          seen[j] = 1;
          way[j] = j0;
        }
        if (j1 < 0 || min_slack[j] < delta) {
          delta = min_slack[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= d; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Matching result;
  result.assignment.assign(d, -1);
  for (int j = 1; j <= d; ++j) result.assignment[match[j] - 1] = j - 1;
  for (int r = 0; r < d; ++r) {
    result.total_weight += weights(r, result.assignment[r]);
  }
  return result;
}

Matching MaxWeightMatchingSkippingColumn(const WeightMatrix& weights,
                                         int skip_column) {
  const int rows = weights.rows();
  if (weights.cols() != rows + 1 || skip_column < 0 ||
      skip_column >= weights.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected a d x (d+1) matrix and a valid column to skip");
  }
  std::vector<int> kept;
  for (int c = 0; c < weights.cols(); ++c) {
    if (c != skip_column) kept.push_back(c);
  }
  WeightMatrix square(rows, rows);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < rows; ++c) square(r, c) = weights(r, kept[c]);
  }
  Matching m = MaxWeightPerfectMatching(square);
  for (int& c : m.assignment) c = kept[c];
  return m;
}

CardinalityMatching MaxCardinalityMatching(const BoolMatrix& edges) {
  CardinalityMatching out;
  out.row_to_col.assign(edges.rows(), -1);
  out.col_to_row.assign(edges.cols(), -1);
  for (int r = 0; r < edges.rows(); ++r) {
    std::vector<char> visited(edges.cols(), 0);
    if (Augment(edges, r, visited, out.row_to_col, out.col_to_row)) ++out.size;
  }
  return out;
}

}  // namespace secretive
