#include "ualbp/heuristic.hpp"

#include <algorithm>
#include <limits>

namespace ualbp {

namespace {

// Incremental availability bookkeeping plus the include/exclude DFS. The
// pivot at each step is the lowest-indexed assignable task that fits; the
// include branch places it, the exclude branch bars it for the rest of this
// load. That enumerates every reachable task set exactly once.
class Enumerator {
 public:
  Enumerator(const Instance& inst, const TaskSet& assigned, const HeuristicParams& params)
      : inst_(inst),
        params_(params),
        cur_(assigned),
        excluded_(inst.task_count()),
        fwd_(inst.task_count()),
        bwd_(inst.task_count()) {
    const int n = inst.task_count();
    pred_open_.assign(n, 0);
    succ_open_.assign(n, 0);
    for (int j = 0; j < n; ++j) {
      int p = 0, s = 0;
      inst.direct_pred(j).for_each([&](int k) { p += !assigned.test(k); });
      inst.direct_succ(j).for_each([&](int k) { s += !assigned.test(k); });
      pred_open_[j] = p;
      succ_open_[j] = s;
      if (!assigned.test(j)) {
        if (p == 0) fwd_.set(j);
        if (s == 0) bwd_.set(j);
      }
    }
  }

  std::vector<ScoredLoad> run() {
    residual_ = inst_.cycle_time();
    dfs();
    return std::move(out_);
  }

 private:
  double contribution(int j, bool forward) const {
    if (forward)
      return inst_.time(j) + params_.alpha * inst_.weight_fwd(j) +
             params_.beta * inst_.direct_succ(j).count() - params_.gamma;
    return inst_.time(j) + params_.alpha * inst_.weight_bwd(j) +
           params_.beta * inst_.direct_pred(j).count() - params_.gamma;
  }

  void place(int j) {
    cur_.set(j);
    fwd_.reset(j);
    bwd_.reset(j);
    inst_.direct_succ(j).for_each([&](int k) {
      if (--pred_open_[k] == 0 && !cur_.test(k)) fwd_.set(k);
    });
    inst_.direct_pred(j).for_each([&](int k) {
      if (--succ_open_[k] == 0 && !cur_.test(k)) bwd_.set(k);
    });
  }

  void unplace(int j) {
    cur_.reset(j);
    inst_.direct_succ(j).for_each([&](int k) {
      if (pred_open_[k]++ == 0) fwd_.reset(k);
    });
    inst_.direct_pred(j).for_each([&](int k) {
      if (succ_open_[k]++ == 0) bwd_.reset(k);
    });
    if (pred_open_[j] == 0) fwd_.set(j);
    if (succ_open_[j] == 0) bwd_.set(j);
  }

  bool any_assignable_fits() const {
    bool found = false;
    (fwd_ | bwd_).for_each([&](int j) {
      if (!found && inst_.time(j) <= residual_) found = true;
    });
    return found;
  }

  int pick_pivot() const {
    int pivot = -1;
    (fwd_ | bwd_).for_each([&](int j) {
      if (pivot < 0 && !excluded_.test(j) && inst_.time(j) <= residual_) pivot = j;
    });
    return pivot;
  }

  // returns false once the cap is hit, to unwind the recursion
  bool dfs() {
    int pivot = pick_pivot();
    if (pivot < 0) {
      if (any_assignable_fits()) return true;  // non-maximal leaf, superset exists elsewhere
      if (placed_.empty()) return true;        // assigned == all tasks
      ScoredLoad sl;
      sl.station.order = placed_;
      sl.station.load.tasks = TaskSet(inst_.task_count());
      for (const Placement& p : placed_) {
        sl.station.load.tasks.set(p.task);
        sl.station.load.total_time += inst_.time(p.task);
      }
      sl.score = score_;
      out_.push_back(std::move(sl));
      return static_cast<int>(out_.size()) < params_.load_cap;
    }

    // include branch
    bool f = fwd_.test(pivot), b = bwd_.test(pivot);
    Direction dir = Direction::forward;
    double contrib;
    if (f && b) {
      double cf = contribution(pivot, true), cb = contribution(pivot, false);
      dir = cf >= cb ? Direction::forward : Direction::backward;
      contrib = std::max(cf, cb);
    } else {
      dir = f ? Direction::forward : Direction::backward;
      contrib = contribution(pivot, f);
    }
    placed_.push_back({pivot, dir});
    score_ += contrib;
    residual_ -= inst_.time(pivot);
    place(pivot);
    bool go = dfs();
    unplace(pivot);
    residual_ += inst_.time(pivot);
    score_ -= contrib;
    placed_.pop_back();
    if (!go) return false;

    // exclude branch
    excluded_.set(pivot);
    go = dfs();
    excluded_.reset(pivot);
    return go;
  }

  const Instance& inst_;
  const HeuristicParams& params_;
  TaskSet cur_, excluded_, fwd_, bwd_;
  std::vector<int> pred_open_, succ_open_;
  std::vector<Placement> placed_;
  double score_ = 0.0;
  int residual_ = 0;
  std::vector<ScoredLoad> out_;
};

}  // namespace

std::vector<ScoredLoad> enumerate_loads(const Instance& inst, const TaskSet& assigned,
                                        const HeuristicParams& params) {
  return Enumerator(inst, assigned, params).run();
}

std::vector<HeuristicParams> default_param_grid() {
  std::vector<HeuristicParams> grid;
  for (double a : {0.0, 0.01, 0.02})
    for (double b : {0.0, 0.01})
      for (double g : {0.0, 0.02}) grid.push_back({a, b, g, 50000});
  return grid;
}

Solution mhhu(const Instance& inst, const TaskSet& start,
              const std::vector<HeuristicParams>& params_grid) {
  Solution best;
  bool have = false;
  for (const HeuristicParams& params : params_grid) {
    Solution sol;
    TaskSet cur = start;
    int remaining = inst.task_count() - cur.count();
    while (remaining > 0) {
      auto loads = enumerate_loads(inst, cur, params);
      if (loads.empty()) break;
      const ScoredLoad* pick = nullptr;
      for (const ScoredLoad& sl : loads)
        if (!pick || sl.score > pick->score) pick = &sl;
      cur |= pick->station.load.tasks;
      remaining -= pick->station.load.tasks.count();
      sol.stations.push_back(pick->station);
      if (have && sol.station_count() >= best.station_count()) break;  // cannot win
    }
    if (remaining > 0) continue;  // abandoned: already as long as the best
    if (!have || sol.station_count() < best.station_count()) {
      best = std::move(sol);
      have = true;
    }
  }
  return best;
}

}  // namespace ualbp
