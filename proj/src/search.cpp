#include "ualbp/search.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "ualbp/bounds.hpp"

namespace ualbp {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::feasible: return "feasible";
    case SolveStatus::timeout: return "timeout";
    case SolveStatus::memory_cap: return "memory_cap";
  }
  return "?";
}

namespace {

// Jackson-style task dominance adapted to U-line availability: a load using
// task j is filtered when a station-start-available task i of the same
// direction, unused by the load, has t_i >= t_j, immediate successor
// (forward) or predecessor (backward) set containing j's, fits in j's place,
// and is precedence-unrelated to j. Strictness (or the index tie-break)
// keeps one of two mutually dominating tasks alive.
bool jackson_dominated(const Instance& inst, const Station& st, const TaskSet& fwd0,
                       const TaskSet& bwd0) {
  const int c = inst.cycle_time();
  for (const Placement& p : st.order) {
    int j = p.task;
    const TaskSet& avail = p.dir == Direction::forward ? fwd0 : bwd0;
    bool dominated = false;
    avail.for_each([&](int i) {
      if (dominated || i == j || st.load.tasks.test(i)) return;
      if (inst.time(i) < inst.time(j)) return;
      if (st.load.total_time - inst.time(j) + inst.time(i) > c) return;
      if (inst.all_pred(j).test(i) || inst.all_succ(j).test(i)) return;
      bool subset = p.dir == Direction::forward
                        ? inst.direct_succ(j).is_subset_of(inst.direct_succ(i))
                        : inst.direct_pred(j).is_subset_of(inst.direct_pred(i));
      if (!subset) return;
      bool strict = inst.time(i) > inst.time(j) ||
                    (p.dir == Direction::forward
                         ? inst.direct_succ(i) != inst.direct_succ(j)
                         : inst.direct_pred(i) != inst.direct_pred(j)) ||
                    i < j;
      if (strict) dominated = true;
    });
    if (dominated) return true;
  }
  return false;
}

struct NodeRec {
  TaskSet assigned;
  int m = 0;
  int lb = 0;
  uint64_t seq = 0;
  std::shared_ptr<const NodeRec> parent;
  Station station;  // the station that created this node; empty at the root
};

using NodePtr = std::shared_ptr<const NodeRec>;

struct NodeWorse {
  // priority: larger m, then smaller lb, then smaller creation sequence
  bool operator()(const NodePtr& a, const NodePtr& b) const {
    if (a->m != b->m) return a->m < b->m;
    if (a->lb != b->lb) return a->lb > b->lb;
    return a->seq > b->seq;
  }
};

Solution assemble_solution(const NodePtr& node, const Solution& tail) {
  std::vector<Station> chain;
  for (const NodeRec* p = node.get(); p && p->parent; p = p->parent.get())
    chain.push_back(p->station);
  std::reverse(chain.begin(), chain.end());
  Solution sol;
  sol.stations = std::move(chain);
  for (const Station& st : tail.stations) sol.stations.push_back(st);
  return sol;
}

}  // namespace

std::vector<Station> branch_loads(const Instance& inst, const TaskSet& assigned,
                                  bool jackson_filter) {
  HeuristicParams p;
  p.load_cap = std::numeric_limits<int>::max();  // exactness needs every maximal load
  auto scored = enumerate_loads(inst, assigned, p);
  std::vector<Station> out;
  out.reserve(scored.size());
  TaskSet fwd0 = inst.forward_available(assigned);
  TaskSet bwd0 = inst.backward_available(assigned);
  for (auto& sl : scored) {
    if (jackson_filter && jackson_dominated(inst, sl.station, fwd0, bwd0)) continue;
    out.push_back(std::move(sl.station));
  }
  return out;
}

SolveReport solve(const Instance& inst, const SolveLimits& limits) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(clock::now() - t0).count(); };

  SolveReport rep;
  const TaskSet full = inst.full_set();
  const TaskSet none = inst.empty_set();

  Solution root_sol = mhhu(inst, none, limits.grid);
  rep.ub = root_sol.station_count();
  rep.mhhu_ub = rep.ub;
  rep.best = root_sol;

  ColumnPool pool;
  std::vector<Load> seeds;
  for (const Station& st : root_sol.stations) {
    seeds.push_back(st.load);
    pool.insert(st.load);
  }

  int root_lb = lb123(inst, full);
  if (limits.use_cg && root_lb < rep.ub) {
    CgResult cg = cg_lower_bound(inst, full, pool, seeds);
    rep.columns_generated += cg.columns_added;
    root_lb = std::max(root_lb, cg.lower_bound);
  }
  rep.lb = std::min(root_lb, rep.ub);
  if (rep.lb >= rep.ub || inst.task_count() == 0) {
    rep.status = SolveStatus::optimal;
    rep.lb = rep.ub;
    rep.closed_at_root = true;
    rep.wall_time_seconds = elapsed();
    return rep;
  }

  std::priority_queue<NodePtr, std::vector<NodePtr>, NodeWorse> open;
  std::unordered_map<TaskSet, int, TaskSetHash> memory;
  bool memory_full = false;
  uint64_t seq = 0;

  auto root = std::make_shared<NodeRec>();
  root->assigned = none;
  root->m = 0;
  root->lb = rep.lb;
  root->seq = seq++;
  open.push(root);
  if (limits.use_memory) memory.emplace(none, 0);

  bool out_of_time = false;
  while (!open.empty()) {
    if (elapsed() > limits.time_limit_seconds) {
      out_of_time = true;
      break;
    }
    NodePtr node = open.top();
    open.pop();
    if (node->lb >= rep.ub) continue;  // lazily pruned after a ub improvement
    ++rep.nodes_explored;

    for (Station& st : branch_loads(inst, node->assigned, limits.use_jackson)) {
      TaskSet child_assigned = node->assigned | st.load.tasks;
      const int child_m = node->m + 1;

      if (child_assigned == full) {
        if (child_m < rep.ub) {
          auto leaf = std::make_shared<NodeRec>();
          leaf->parent = node;
          leaf->station = st;
          rep.best = assemble_solution(leaf, Solution{});
          rep.ub = child_m;
        }
        continue;
      }

      if (limits.use_memory) {
        auto it = memory.find(child_assigned);
        if (it != memory.end() && it->second <= child_m) {
          ++rep.nodes_pruned_memory;
          continue;
        }
      }

      TaskSet unassigned = full - child_assigned;
      int child_lb = child_m + lb123(inst, unassigned);
      if (child_lb >= rep.ub) {
        ++rep.nodes_pruned_lb123;
        continue;
      }
      if (limits.use_cg) {
        CgResult cg = cg_lower_bound(inst, unassigned, pool, {});
        rep.columns_generated += cg.columns_added;
        child_lb = std::max(child_lb, child_m + cg.lower_bound);
        if (child_lb >= rep.ub) {
          ++rep.nodes_pruned_cg;
          continue;
        }
      }

      auto child = std::make_shared<NodeRec>();
      child->assigned = child_assigned;
      child->m = child_m;
      child->lb = child_lb;
      child->seq = seq++;
      child->parent = node;
      child->station = std::move(st);

      Solution tail = mhhu(inst, child_assigned, limits.grid);
      if (child_m + tail.station_count() < rep.ub) {
        rep.ub = child_m + tail.station_count();
        rep.best = assemble_solution(child, tail);
      }
      if (child->lb >= rep.ub) continue;  // the ub update just closed it

      if (limits.use_memory) {
        auto it = memory.find(child_assigned);
        if (it != memory.end())
          it->second = std::min(it->second, child_m);
        else if (memory.size() < limits.memory_cap_entries)
          memory.emplace(child_assigned, child_m);
        else
          memory_full = true;
      }
      open.push(std::move(child));
    }
  }

  if (!out_of_time && open.empty()) {
    rep.status = SolveStatus::optimal;
    rep.lb = rep.ub;
  } else {
    int min_open = rep.ub;
    while (!open.empty()) {
      min_open = std::min(min_open, open.top()->lb);
      open.pop();
    }
    rep.lb = std::max(rep.lb, std::min(min_open, rep.ub));
    rep.status = memory_full ? SolveStatus::memory_cap : SolveStatus::timeout;
  }
  rep.wall_time_seconds = elapsed();
  return rep;
}

namespace {

// All feasible loads from `assigned` (not only maximal ones), each set once.
void oracle_enumerate(const Instance& inst, TaskSet& cur, TaskSet& excluded, TaskSet& placed,
                      int residual, std::vector<TaskSet>& out) {
  int pivot = -1;
  for (int j = 0; j < inst.task_count() && pivot < 0; ++j) {
    if (cur.test(j) || excluded.test(j) || inst.time(j) > residual) continue;
    if (inst.all_pred(j).is_subset_of(cur) || inst.all_succ(j).is_subset_of(cur)) pivot = j;
  }
  if (pivot < 0) return;

  cur.set(pivot);
  placed.set(pivot);
  out.push_back(placed);
  oracle_enumerate(inst, cur, excluded, placed, residual - inst.time(pivot), out);
  placed.reset(pivot);
  cur.reset(pivot);

  excluded.set(pivot);
  oracle_enumerate(inst, cur, excluded, placed, residual, out);
  excluded.reset(pivot);
}

int oracle_rec(const Instance& inst, const TaskSet& assigned, const TaskSet& full,
               std::unordered_map<TaskSet, int, TaskSetHash>& memo) {
  if (assigned == full) return 0;
  auto it = memo.find(assigned);
  if (it != memo.end()) return it->second;

  std::vector<TaskSet> loads;
  TaskSet cur = assigned, excluded = inst.empty_set(), placed = inst.empty_set();
  oracle_enumerate(inst, cur, excluded, placed, inst.cycle_time(), loads);

  int best = std::numeric_limits<int>::max() - 1;
  for (const TaskSet& load : loads)
    best = std::min(best, 1 + oracle_rec(inst, assigned | load, full, memo));
  memo.emplace(assigned, best);
  return best;
}

}  // namespace

int oracle_solve(const Instance& inst) {
  if (inst.task_count() > 12)
    throw std::invalid_argument("oracle_solve is limited to 12 tasks");
  std::unordered_map<TaskSet, int, TaskSetHash> memo;
  return oracle_rec(inst, inst.empty_set(), inst.full_set(), memo);
}

}  // namespace ualbp
