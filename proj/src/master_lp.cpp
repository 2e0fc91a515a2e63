#include "ualbp/master_lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ualbp {

namespace {
constexpr double kPivotTol = 1e-9;
constexpr double kFeasTol = 1e-7;
constexpr double kDegenTol = 1e-12;
constexpr int kBlandAfter = 50;
constexpr long long kMaxPivots = 200000;
constexpr long long kRefactorEvery = 512;
}  // namespace

MasterLp::MasterLp(const Instance& inst, const TaskSet& row_tasks) : inst_(&inst) {
  row_of_task_.assign(inst.task_count(), -1);
  row_tasks.for_each([&](int j) {
    row_of_task_[j] = static_cast<int>(rows_.size());
    rows_.push_back(j);
  });
  m_ = static_cast<int>(rows_.size());
}

bool MasterLp::add_column(const Load& load) {
  TaskSet proj(inst_->task_count());
  std::vector<int> covered;
  load.tasks.for_each([&](int j) {
    if (row_of_task_[j] >= 0) {
      proj.set(j);
      covered.push_back(row_of_task_[j]);
    }
  });
  if (covered.empty()) return false;
  if (!col_index_.insert(proj).second) return false;
  cols_.push_back(std::move(proj));
  col_rows_.push_back(std::move(covered));
  return true;
}

void MasterLp::price_column(int var, std::vector<double>& u) const {
  std::fill(u.begin(), u.end(), 0.0);
  if (var >= kArtificialBase) {
    int i = var - kArtificialBase;
    for (int r = 0; r < m_; ++r) u[r] = binv_[r * m_ + i];
  } else if (var >= kSurplusBase) {
    int i = var - kSurplusBase;
    for (int r = 0; r < m_; ++r) u[r] = -binv_[r * m_ + i];
  } else {
    for (int i : col_rows_[var])
      for (int r = 0; r < m_; ++r) u[r] += binv_[r * m_ + i];
  }
}

void MasterLp::refactorize() {
  // Rebuild B^-1 from the basis columns by Gauss-Jordan with partial
  // pivoting.
  std::vector<double> a(static_cast<size_t>(m_) * m_, 0.0);
  for (int k = 0; k < m_; ++k) {
    int var = basis_[k];
    if (var >= kArtificialBase) {
      a[(var - kArtificialBase) * m_ + k] = 1.0;
    } else if (var >= kSurplusBase) {
      a[(var - kSurplusBase) * m_ + k] = -1.0;
    } else {
      for (int i : col_rows_[var]) a[i * m_ + k] = 1.0;
    }
  }
  std::vector<double> inv(static_cast<size_t>(m_) * m_, 0.0);
  for (int i = 0; i < m_; ++i) inv[i * m_ + i] = 1.0;
  for (int col = 0; col < m_; ++col) {
    int piv = -1;
    double best = kPivotTol;
    for (int r = col; r < m_; ++r) {
      if (std::fabs(a[r * m_ + col]) > best) {
        best = std::fabs(a[r * m_ + col]);
        piv = r;
      }
    }
    if (piv < 0) throw std::runtime_error("singular basis during refactorization");
    if (piv != col) {
      for (int j = 0; j < m_; ++j) {
        std::swap(a[piv * m_ + j], a[col * m_ + j]);
        std::swap(inv[piv * m_ + j], inv[col * m_ + j]);
      }
    }
    double d = a[col * m_ + col];
    for (int j = 0; j < m_; ++j) {
      a[col * m_ + j] /= d;
      inv[col * m_ + j] /= d;
    }
    for (int r = 0; r < m_; ++r) {
      if (r == col) continue;
      double f = a[r * m_ + col];
      if (f == 0.0) continue;
      for (int j = 0; j < m_; ++j) {
        a[r * m_ + j] -= f * a[col * m_ + j];
        inv[r * m_ + j] -= f * inv[col * m_ + j];
      }
    }
  }
  binv_ = std::move(inv);
  pivots_since_refactor_ = 0;
}

void MasterLp::compute_xb() {
  xb_.assign(m_, 0.0);
  for (int r = 0; r < m_; ++r)
    for (int i = 0; i < m_; ++i) xb_[r] += binv_[r * m_ + i];
}

void MasterLp::run_simplex(bool phase1) {
  const int ncols = static_cast<int>(cols_.size());
  auto cost = [&](int var) -> double {
    if (phase1) return var >= kArtificialBase ? 1.0 : 0.0;
    return var < kSurplusBase ? 1.0 : 0.0;
  };

  std::vector<double> pi(m_), u(m_);
  int degenerate_streak = 0;
  for (long long iter = 0; iter < kMaxPivots; ++iter) {
    // pi = cB' B^-1
    std::fill(pi.begin(), pi.end(), 0.0);
    for (int r = 0; r < m_; ++r) {
      double cb = cost(basis_[r]);
      if (cb == 0.0) continue;
      for (int i = 0; i < m_; ++i) pi[i] += cb * binv_[r * m_ + i];
    }

    auto rc_of = [&](int var) -> double {
      if (var >= kSurplusBase) return pi[var - kSurplusBase];  // column -e_i, cost 0
      double s = 0.0;
      for (int i : col_rows_[var]) s += pi[i];
      return cost(var) - s;
    };

    const bool bland = degenerate_streak >= kBlandAfter;
    int enter = -1;
    double best_rc = -kPivotTol;
    for (int j = 0; j < ncols && !(bland && enter >= 0); ++j) {
      double rc = rc_of(j);
      if (rc < best_rc) {
        best_rc = rc;
        enter = j;
        if (bland) break;
      }
    }
    if (enter < 0 || !bland) {
      for (int i = 0; i < m_ && !(bland && enter >= 0); ++i) {
        double rc = rc_of(kSurplusBase + i);
        if (rc < best_rc) {
          best_rc = rc;
          enter = kSurplusBase + i;
          if (bland) break;
        }
      }
    }
    if (enter < 0) return;  // optimal for this phase

    price_column(enter, u);
    int leave = -1;
    double theta = 0.0;
    for (int r = 0; r < m_; ++r) {
      if (u[r] > kPivotTol) {
        double t = xb_[r] / u[r];
        if (leave < 0 || t < theta - kDegenTol ||
            (t < theta + kDegenTol && basis_[r] < basis_[leave])) {
          leave = r;
          theta = t;
        }
      }
    }
    if (leave < 0) throw std::runtime_error("covering LP reported unbounded: numerical failure");

    if (theta < kDegenTol)
      ++degenerate_streak;
    else
      degenerate_streak = 0;

    // elementary row transformation of B^-1 and xb
    double d = u[leave];
    for (int i = 0; i < m_; ++i) binv_[leave * m_ + i] /= d;
    xb_[leave] = theta;
    for (int r = 0; r < m_; ++r) {
      if (r == leave) continue;
      double f = u[r];
      if (f == 0.0) continue;
      for (int i = 0; i < m_; ++i) binv_[r * m_ + i] -= f * binv_[leave * m_ + i];
      xb_[r] -= f * theta;
      if (xb_[r] < 0.0 && xb_[r] > -kFeasTol) xb_[r] = 0.0;
    }
    basis_[leave] = enter;

    if (++pivots_since_refactor_ >= kRefactorEvery) {
      refactorize();
      compute_xb();
    }
  }
  throw std::runtime_error("simplex pivot cap exceeded (numerical stall)");
}

void MasterLp::drive_out_artificials() {
  // Basic artificials left at zero level after phase 1 could drift positive
  // during phase 2 pivots; replace them by degenerate pivots on any variable
  // with a nonzero component in their row. Rows with no such variable would
  // be redundant, which cannot happen with a full surplus block.
  std::vector<char> in_basis_surplus(m_, 0);
  for (int v : basis_)
    if (v >= kSurplusBase && v < kArtificialBase) in_basis_surplus[v - kSurplusBase] = 1;

  std::vector<double> u(m_);
  for (int r = 0; r < m_; ++r) {
    if (basis_[r] < kArtificialBase) continue;
    int found = -1;
    for (int i = 0; i < m_ && found < 0; ++i) {
      if (in_basis_surplus[i]) continue;
      if (std::fabs(binv_[r * m_ + i]) > kPivotTol) found = i;
    }
    if (found < 0) continue;
    price_column(kSurplusBase + found, u);
    double d = u[r];
    for (int i = 0; i < m_; ++i) binv_[r * m_ + i] /= d;
    double theta = xb_[r] / d;
    xb_[r] = theta;
    for (int rr = 0; rr < m_; ++rr) {
      if (rr == r) continue;
      double f = u[rr];
      if (f == 0.0) continue;
      for (int i = 0; i < m_; ++i) binv_[rr * m_ + i] -= f * binv_[r * m_ + i];
      xb_[rr] -= f * theta;
      if (xb_[rr] < 0.0 && xb_[rr] > -kFeasTol) xb_[rr] = 0.0;
    }
    basis_[r] = kSurplusBase + found;
    in_basis_surplus[found] = 1;
  }
}

LpSolution MasterLp::solve() {
  // feasibility precondition: every row covered by some column
  {
    std::vector<char> covered(m_, 0);
    for (const auto& cr : col_rows_)
      for (int i : cr) covered[i] = 1;
    for (int i = 0; i < m_; ++i)
      if (!covered[i])
        throw std::runtime_error("uncovered task " + std::to_string(rows_[i] + 1));
  }

  if (basis_.empty()) {
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) basis_[i] = kArtificialBase + i;
    binv_.assign(static_cast<size_t>(m_) * m_, 0.0);
    for (int i = 0; i < m_; ++i) binv_[i * m_ + i] = 1.0;
    compute_xb();
    run_simplex(/*phase1=*/true);
    double infeas = 0.0;
    for (int r = 0; r < m_; ++r)
      if (basis_[r] >= kArtificialBase) infeas += xb_[r];
    if (infeas > kFeasTol) throw std::runtime_error("phase 1 failed to reach feasibility");
    drive_out_artificials();
    phase1_done_ = true;
  } else {
    compute_xb();
  }
  run_simplex(/*phase1=*/false);

  LpSolution sol;
  sol.primal.assign(cols_.size(), 0.0);
  sol.duals.assign(m_, 0.0);
  for (int r = 0; r < m_; ++r) {
    int var = basis_[r];
    if (var < kSurplusBase) {
      double v = std::max(xb_[r], 0.0);
      sol.primal[var] = v;
      sol.objective += v;
    }
  }
  // pi = cB' B^-1 with phase 2 costs
  for (int r = 0; r < m_; ++r) {
    if (basis_[r] < kSurplusBase) {
      for (int i = 0; i < m_; ++i) sol.duals[i] += binv_[r * m_ + i];
    }
  }
  for (double& d : sol.duals)
    if (d < 0.0 && d > -kFeasTol) d = 0.0;
  return sol;
}

std::vector<double> MasterLp::duals_by_task(const LpSolution& sol) const {
  std::vector<double> out(inst_->task_count(), 0.0);
  for (int i = 0; i < m_; ++i) out[rows_[i]] = sol.duals[i];
  return out;
}

}  // namespace ualbp
