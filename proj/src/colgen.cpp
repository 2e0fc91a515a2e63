#include "ualbp/colgen.hpp"

#include <algorithm>
#include <cmath>

#include "ualbp/bounds.hpp"

namespace ualbp {

bool ColumnPool::insert(const Load& load) {
  auto it = index_.find(load.tasks);
  if (it != index_.end()) {
    entries_.splice(entries_.begin(), entries_, it->second);
    return false;
  }
  entries_.push_front(load);
  index_.emplace(load.tasks, entries_.begin());
  ++total_inserted_;
  if (entries_.size() > capacity_) {
    index_.erase(entries_.back().tasks);
    entries_.pop_back();
  }
  return true;
}

CgResult cg_lower_bound(const Instance& inst, const TaskSet& unassigned, ColumnPool& pool,
                        const std::vector<Load>& seed_loads, int iteration_cap) {
  CgResult res;
  if (unassigned.empty()) return res;

  MasterLp master(inst, unassigned);
  pool.for_each([&](const Load& l) { master.add_column(l); });
  for (const Load& l : seed_loads) master.add_column(l);

  // fallback singletons keep the master feasible without a phase-1 LP on the
  // structural columns
  {
    TaskSet covered(inst.task_count());
    for (const TaskSet& col : master.columns()) covered |= col;
    unassigned.for_each([&](int j) {
      if (covered.test(j)) return;
      Load single{TaskSet(inst.task_count()), inst.time(j)};
      single.tasks.set(j);
      master.add_column(single);
    });
  }

  KnapsackPricer pricer;
  int floor_bound = lb1(inst, unassigned);  // always a valid fallback
  int best_lemma_bound = 0;
  double best_lemma_value = 0.0;

  for (int iter = 1; iter <= iteration_cap; ++iter) {
    res.iterations = iter;
    LpSolution sol = master.solve();
    std::vector<double> duals = master.duals_by_task(sol);
    PricingResult priced = pricer.solve(inst, unassigned, duals, inst.cycle_time());

    if (priced.reduced_cost >= -1e-6) {
      res.lower_bound = std::max(ceil_stations(sol.objective), floor_bound);
      res.lpm_value = sol.objective;
      res.terminated_by = CgTermination::converged;
      return res;
    }

    // Lemma-1 dual bound: v(LPM) >= v(RLPM) / (1 - v(PSP)), where v(PSP) is
    // the (negative) minimum reduced cost, so the denominator is the knapsack
    // value itself.
    double dual_bound = sol.objective / priced.value;
    if (ceil_stations(dual_bound) > best_lemma_bound) {
      best_lemma_bound = ceil_stations(dual_bound);
      best_lemma_value = dual_bound;
    }
    if (ceil_stations(sol.objective) == ceil_stations(dual_bound)) {
      res.lower_bound = std::max(ceil_stations(sol.objective), floor_bound);
      res.lpm_value = dual_bound;
      res.terminated_by = CgTermination::lemma1;
      return res;
    }

    bool added = master.add_column(priced.load);
    pool.insert(priced.load);
    if (!added) {
      // the pricer returned a column the master already has: the LP believes
      // it is improving but cannot be, so stop with the certified dual bound
      break;
    }
    ++res.columns_added;
  }

  res.lower_bound = std::max(best_lemma_bound, floor_bound);
  res.lpm_value = best_lemma_value;
  res.terminated_by = CgTermination::iteration_cap;
  return res;
}

}  // namespace ualbp
