#pragma once

#include <unordered_set>
#include <vector>

#include "ualbp/instance.hpp"

namespace ualbp {

struct LpSolution {
  double objective = 0.0;
  std::vector<double> primal;  // per stored column
  std::vector<double> duals;   // per row task, indexed like rows()
};

// Restricted set-covering LP master: min 1'x  s.t.  A x >= 1, x >= 0, one row
// per task of the row set, one 0/1 column per stored load. Solved by a primal
// revised simplex (phase 1 with artificials at the first solve, warm started
// from the previous basis afterwards). Dantzig pricing, switching to Bland's
// rule after 50 consecutive degenerate pivots.
class MasterLp {
 public:
  MasterLp(const Instance& inst, const TaskSet& row_tasks);

  // Projects the load onto the row set and appends it as a column. Returns
  // false (no-op) for an empty projection or a duplicate of a stored column.
  bool add_column(const Load& load);

  int num_columns() const { return static_cast<int>(cols_.size()); }
  int num_rows() const { return m_; }
  const std::vector<int>& rows() const { return rows_; }          // task ids, ascending
  const std::vector<TaskSet>& columns() const { return cols_; }   // projected

  // Optimal solution with duals; throws std::runtime_error on an uncovered
  // row or if the pivot cap is hit.
  LpSolution solve();

  // Duals of the last solve, re-indexed by task id (0 elsewhere).
  std::vector<double> duals_by_task(const LpSolution& sol) const;

 private:
  void refactorize();
  void compute_xb();
  void drive_out_artificials();
  void run_simplex(bool phase1);
  void price_column(int var, std::vector<double>& out) const;

  const Instance* inst_;
  int m_ = 0;
  std::vector<int> rows_;           // row -> task id
  std::vector<int> row_of_task_;    // task id -> row or -1
  std::vector<TaskSet> cols_;       // projected columns (over task ids)
  std::vector<std::vector<int>> col_rows_;  // per column: covered row indices
  std::unordered_set<TaskSet, TaskSetHash> col_index_;

  // simplex state; variable ids: [0,N) columns, [N,N+m) surplus,
  // [N+m,N+2m) artificials (N = cols_.size(), artificials pinned after
  // kArtificialBase to survive column additions)
  static constexpr int kSurplusBase = 1 << 28;
  static constexpr int kArtificialBase = 1 << 29;
  bool phase1_done_ = false;
  std::vector<int> basis_;
  std::vector<double> binv_;  // m x m row-major
  std::vector<double> xb_;
  long long pivots_since_refactor_ = 0;
};

}  // namespace ualbp
