#pragma once

#include <cmath>
#include <list>
#include <unordered_map>
#include <vector>

#include "ualbp/instance.hpp"
#include "ualbp/knapsack.hpp"
#include "ualbp/master_lp.hpp"

namespace ualbp {

// Cross-node cache of generated loads, deduplicated by task set and capped
// with least-recently-used eviction.
class ColumnPool {
 public:
  explicit ColumnPool(size_t capacity = 200000) : capacity_(capacity) {}

  // Returns false for a duplicate; a duplicate insert refreshes recency.
  bool insert(const Load& load);
  size_t size() const { return entries_.size(); }
  size_t total_inserted() const { return total_inserted_; }

  // Visits every pooled load, most recently used first, refreshing nothing.
  template <class F>
  void for_each(F&& f) const {
    for (const Load& l : entries_) f(l);
  }

 private:
  size_t capacity_;
  size_t total_inserted_ = 0;
  std::list<Load> entries_;  // front = most recently used
  std::unordered_map<TaskSet, std::list<Load>::iterator, TaskSetHash> index_;
};

enum class CgTermination { converged, lemma1, iteration_cap };

struct CgResult {
  int lower_bound = 0;   // stations needed for the unassigned set
  double lpm_value = 0;  // certificate value the bound was ceiled from
  int iterations = 0;
  int columns_added = 0;
  CgTermination terminated_by = CgTermination::converged;
};

// Rounds an LP value up to a station count, absorbing solver noise.
inline int ceil_stations(double x) { return static_cast<int>(std::ceil(x - 1e-6)); }

// Column generation lower bound on the bin packing relaxation of the
// unassigned set: iterate restricted master solves and knapsack pricing,
// terminating on convergence, on the dual-bound ceiling coincidence, or at
// the iteration cap (in which case the best dual-bound certificate seen so
// far is returned). Generated columns go to the pool and the pool's loads,
// projected onto the unassigned set, initialize the master.
CgResult cg_lower_bound(const Instance& inst, const TaskSet& unassigned, ColumnPool& pool,
                        const std::vector<Load>& seed_loads, int iteration_cap = 1000);

}  // namespace ualbp
