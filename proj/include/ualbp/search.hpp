#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ualbp/colgen.hpp"
#include "ualbp/heuristic.hpp"
#include "ualbp/instance.hpp"

namespace ualbp {

enum class SolveStatus { optimal, feasible, timeout, memory_cap };

const char* to_string(SolveStatus s);

struct SolveLimits {
  double time_limit_seconds = 500.0;
  size_t memory_cap_entries = 20'000'000;
  bool use_cg = true;
  bool use_memory = true;
  bool use_jackson = true;
  std::vector<HeuristicParams> grid = default_param_grid();
};

struct SolveReport {
  int lb = 0;
  int ub = 0;
  SolveStatus status = SolveStatus::feasible;
  int mhhu_ub = 0;  // root heuristic value
  bool closed_at_root = false;
  uint64_t nodes_explored = 0;
  uint64_t nodes_pruned_lb123 = 0;
  uint64_t nodes_pruned_cg = 0;
  uint64_t nodes_pruned_memory = 0;
  uint64_t columns_generated = 0;
  double wall_time_seconds = 0.0;
  Solution best;  // attains ub
};

// Children station loads for the next station at `assigned`: every maximal
// feasible load, optionally filtered by the U-line Jackson-style task
// dominance rule.
std::vector<Station> branch_loads(const Instance& inst, const TaskSet& assigned,
                                  bool jackson_filter);

// Branch, price and remember driver: best-first search (more fixed stations
// first, then smaller lower bound, then creation order) with hash-table
// memory dominance over assigned sets, LB1-LB3 then column generation
// pruning, and MHHU upper bound updates at every node.
SolveReport solve(const Instance& inst, const SolveLimits& limits = {});

// Exact minimum station count by exhaustive state-space dynamic programming
// over assigned sets; transitions are all feasible loads (not only maximal
// ones), so it is independent of the dominance rules it is used to validate.
// Rejects n > 12.
int oracle_solve(const Instance& inst);

}  // namespace ualbp
