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

#include "secretive/lp.h"

#include <string>

#include "secretive/error.h"

namespace secretive {
namespace {

// Standard-form tableau: rows are constraints A x = b with b >= 0, the last
// entry of each row is b. `cost` holds reduced costs with -z in its last
// entry.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : cols_(cols),
        rows_(rows, std::vector<Rat>(cols + 1)),
        basis_(rows, -1) {}

  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_cols() const { return cols_; }
  Rat& at(int r, int c) { return rows_[r][c]; }
  const Rat& at(int r, int c) const { return rows_[r][c]; }
  Rat& rhs(int r) { return rows_[r][cols_]; }
  const Rat& rhs(int r) const { return rows_[r][cols_]; }
  int& basis(int r) { return basis_[r]; }
  int basis(int r) const { return basis_[r]; }
  std::vector<Rat>& cost() { return cost_; }

  void SetCost(const std::vector<Rat>& c) {
    cost_.assign(cols_ + 1, Rat());
    for (int j = 0; j < cols_; ++j) cost_[j] = c[j];
    for (int r = 0; r < num_rows(); ++r) {
      const Rat cb = c[basis_[r]];
      if (cb.IsZero()) continue;
      for (int j = 0; j <= cols_; ++j) {
        if (!rows_[r][j].IsZero()) cost_[j] -= cb * rows_[r][j];
      }
    }
  }

  void Pivot(int r, int c) {
    std::vector<Rat>& prow = rows_[r];
    const Rat inv = Rat(1) / prow[c];
    std::vector<int> nz;
    for (int j = 0; j <= cols_; ++j) {
      if (prow[j].IsZero()) continue;
      prow[j] *= inv;
      nz.push_back(j);
    }
    auto eliminate = [&](std::vector<Rat>& row) {
      if (row[c].IsZero()) return;
      const Rat f = row[c];
      for (int j : nz) row[j] -= f * prow[j];
    };
    for (int i = 0; i < num_rows(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(cost_);
    basis_[r] = c;
    ++pivots_;
  }

  void EraseRow(int r) {
    rows_.erase(rows_.begin() + r);
    basis_.erase(basis_.begin() + r);
  }

  // Bland's rule on columns [0, eligible_cols). Returns false when the
  // objective is unbounded below.
  bool Optimize(int eligible_cols) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < eligible_cols; ++j) {
        if (cost_[j].Sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best_ratio;
      for (int i = 0; i < num_rows(); ++i) {
        if (rows_[i][enter].Sign() <= 0) continue;
        Rat ratio = rows_[i][cols_] / rows_[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
    }
  }

  int pivots() const { return pivots_; }

 private:
  int cols_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<int> basis_;
  std::vector<Rat> cost_;
  int pivots_ = 0;
};

}  // namespace

LpSolution SolveMin(const LinearProgram& lp) {
  const int n = lp.num_vars();
  if (static_cast<int>(lp.nonnegative.size()) != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "nonnegative flags do not match the objective width");
  }
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    if (static_cast<int>(lp.constraints[i].coefficients.size()) != n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "constraint " + std::to_string(i) + " has the wrong width");
    }
  }

  // Column layout: [x+ (and x- for free vars)] [slack/surplus] [artificial].
  std::vector<int> pos_col(n), neg_col(n, -1);
  int cols = 0;
  for (int j = 0; j < n; ++j) {
    pos_col[j] = cols++;
    if (!lp.nonnegative[j]) neg_col[j] = cols++;
  }
  const int structural = cols;

  struct Row {
    std::vector<Rat> coeffs;
    Relation rel;
    Rat rhs;
  };
  std::vector<Row> rows;
  rows.reserve(lp.constraints.size());
  for (const auto& con : lp.constraints) {
    Row row{con.coefficients, con.relation, con.rhs};
    // b >= 0, and a ">= 0" row becomes "<= 0" so it starts with a slack.
    const bool flip = row.rhs.Sign() < 0 ||
                      (row.rhs.IsZero() && row.rel == Relation::kGreaterEqual);
    if (flip) {
      for (auto& c : row.coeffs) c = -c;
      row.rhs = -row.rhs;
      if (row.rel == Relation::kLessEqual) {
        row.rel = Relation::kGreaterEqual;
      } else if (row.rel == Relation::kGreaterEqual) {
        row.rel = Relation::kLessEqual;
      }
    }
    rows.push_back(std::move(row));
  }

  const int m = static_cast<int>(rows.size());
  std::vector<int> slack_col(m, -1);
  for (int i = 0; i < m; ++i) {
    if (rows[i].rel != Relation::kEqual) slack_col[i] = cols++;
  }
  const int first_artificial = cols;
  std::vector<int> art_col(m, -1);
  for (int i = 0; i < m; ++i) {
    if (rows[i].rel != Relation::kLessEqual) art_col[i] = cols++;
  }

  Tableau t(m, cols);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rat& a = rows[i].coeffs[j];
      if (a.IsZero()) continue;
      t.at(i, pos_col[j]) = a;
      if (neg_col[j] >= 0) t.at(i, neg_col[j]) = -a;
    }
    if (slack_col[i] >= 0) {
      t.at(i, slack_col[i]) = rows[i].rel == Relation::kLessEqual ? 1 : -1;
    }
    if (art_col[i] >= 0) t.at(i, art_col[i]) = 1;
    t.rhs(i) = rows[i].rhs;
    t.basis(i) = art_col[i] >= 0 ? art_col[i] : slack_col[i];
  }

  // Phase 1: minimize the sum of artificials.
  if (first_artificial < cols) {
    std::vector<Rat> c1(cols);
    for (int j = first_artificial; j < cols; ++j) c1[j] = 1;
    t.SetCost(c1);
    t.Optimize(cols);
    Rat infeasibility;
    for (int i = 0; i < t.num_rows(); ++i) {
      if (t.basis(i) >= first_artificial) infeasibility += t.rhs(i);
    }
    if (infeasibility.Sign() > 0) {
      throw Error(ErrorCode::kInfeasible,
                  "linear program has no feasible point");
    }
    // Pivot zero-level artificials out of the basis; rows where that is
    // impossible are linearly dependent and can go.
    for (int i = t.num_rows() - 1; i >= 0; --i) {
      if (t.basis(i) < first_artificial) continue;
      int col = -1;
      for (int j = 0; j < first_artificial; ++j) {
        if (!t.at(i, j).IsZero()) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        t.Pivot(i, col);
      } else {
        t.EraseRow(i);
      }
    }
  }

  // Phase 2 on the original objective; artificial columns are never entered.
  std::vector<Rat> c2(cols);
  for (int j = 0; j < n; ++j) {
    c2[pos_col[j]] = lp.objective[j];
    if (neg_col[j] >= 0) c2[neg_col[j]] = -lp.objective[j];
  }
  t.SetCost(c2);
  if (!t.Optimize(first_artificial)) {
    throw Error(ErrorCode::kUnbounded, "objective is unbounded below");
  }

  std::vector<Rat> column_value(structural);
  for (int i = 0; i < t.num_rows(); ++i) {
    if (t.basis(i) < structural) column_value[t.basis(i)] = t.rhs(i);
  }
  LpSolution sol;
  sol.x.resize(n);
  for (int j = 0; j < n; ++j) {
    sol.x[j] = column_value[pos_col[j]];
    if (neg_col[j] >= 0) sol.x[j] -= column_value[neg_col[j]];
    sol.optimum += lp.objective[j] * sol.x[j];
  }
  sol.pivots = t.pivots();
  return sol;
}

bool IsFeasible(const LinearProgram& lp, const std::vector<Rat>& x) {
  if (static_cast<int>(x.size()) != lp.num_vars()) return false;
  for (int j = 0; j < lp.num_vars(); ++j) {
    if (lp.nonnegative[j] && x[j].Sign() < 0) return false;
  }
  for (const auto& con : lp.constraints) {
    Rat lhs;
    for (int j = 0; j < lp.num_vars(); ++j) {
      if (!con.coefficients[j].IsZero()) lhs += con.coefficients[j] * x[j];
    }
    switch (con.relation) {
      case Relation::kLessEqual:
        if (lhs > con.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < con.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != con.rhs) return false;
        break;
    }
  }
  return true;
}

}  // namespace secretive
