#pragma once

#include <vector>

#include "ualbp/instance.hpp"

namespace ualbp {

struct HeuristicParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  int load_cap = 50000;  // max loads enumerated per station
};

struct ScoredLoad {
  Station station;
  double score = 0.0;
};

// Depth-first enumeration of the maximal feasible loads of the next station,
// starting from `assigned`. Availability is recomputed after every in-load
// placement, so a task may become assignable because an earlier in-load task
// enabled it. Only maximal loads are emitted: a load is maximal when no
// currently assignable task fits the residual time. Each emitted load carries
// placement order, per-task direction flags and the weighted score
//   sum over forward tasks of (t + alpha*w + beta*|F| - gamma)
// + sum over backward tasks of (t + alpha*w' + beta*|P| - gamma);
// a task assignable both ways is flagged by the higher contribution (tie:
// forward). Enumeration stops after load_cap loads.
std::vector<ScoredLoad> enumerate_loads(const Instance& inst, const TaskSet& assigned,
                                        const HeuristicParams& params);

// The 12-triple default coefficient grid, always containing (0,0,0).
std::vector<HeuristicParams> default_param_grid();

// Station-by-station greedy: per parameter triple, repeatedly fix the
// best-scored load until every task is assigned; the solution with the fewest
// stations wins (ties: first found). Covers only the tasks outside `start`;
// a caller sitting at a search node prepends its fixed stations.
Solution mhhu(const Instance& inst, const TaskSet& start,
              const std::vector<HeuristicParams>& params_grid);

}  // namespace ualbp
