#pragma once

#include <vector>

#include "ualbp/instance.hpp"

namespace ualbp {

struct PricingResult {
  Load load;
  double value = 0.0;         // sum of duals over the chosen tasks
  double reduced_cost = 1.0;  // 1 - value
};

// Exact 0/1 knapsack over the candidate tasks: maximize the total dual value
// subject to the cycle time capacity. Capacity-indexed DP, O(|candidates| * c).
// Deterministic: among optimal subsets the lexicographically smallest task set
// is returned. Tasks with dual below 1e-12 never enter the load.
class KnapsackPricer {
 public:
  // duals is indexed by task id (0-based) and must be nonnegative on
  // candidates.
  PricingResult solve(const Instance& inst, const TaskSet& candidates,
                      const std::vector<double>& duals, int capacity);

 private:
  std::vector<double> row_;      // best value per capacity, reused
  std::vector<uint64_t> take_;   // per (item, capacity) decision bits, reused
  std::vector<int> items_;
};

}  // namespace ualbp
