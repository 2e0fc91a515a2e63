#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ualbp/taskset.hpp"

namespace ualbp {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A set of tasks assignable to one station; one column of the master LP.
struct Load {
  TaskSet tasks;
  int total_time = 0;
};

enum class Direction : uint8_t { forward, backward };

struct Placement {
  int task = -1;  // 0-based
  Direction dir = Direction::forward;
};

// A station load together with the order and direction in which its tasks
// were assigned, so a solution can be replayed for verification.
struct Station {
  Load load;
  std::vector<Placement> order;
};

struct Solution {
  std::vector<Station> stations;
  int station_count() const { return static_cast<int>(stations.size()); }
};

class Instance {
 public:
  // Arcs are 1-based (i,j) pairs as they appear in the data files.
  static Instance build(int n, int cycle_time, std::vector<int> times,
                        const std::vector<std::pair<int, int>>& arcs);

  // Legacy precedence-graph format (.IN2): n, then n task times, then "i,j"
  // arc lines, terminated by the sentinel "-1,-1". Cycle time comes from the
  // caller.
  static Instance parse_in2(std::istream& in, int cycle_time);

  // Tagged-section format (.alb): <number of tasks>, <cycle time>,
  // <task times>, <precedence relations>, <end>. Unknown sections skipped.
  static Instance parse_alb(std::istream& in);

  int task_count() const { return n_; }
  int cycle_time() const { return c_; }
  int time(int j) const { return t_[j]; }
  long long total_time() const { return total_time_; }

  const TaskSet& direct_pred(int j) const { return direct_pred_[j]; }
  const TaskSet& direct_succ(int j) const { return direct_succ_[j]; }
  const TaskSet& all_pred(int j) const { return all_pred_[j]; }
  const TaskSet& all_succ(int j) const { return all_succ_[j]; }

  long long weight_fwd(int j) const { return w_fwd_[j]; }   // t_j + sum over all successors
  long long weight_bwd(int j) const { return w_bwd_[j]; }   // t_j + sum over all predecessors

  TaskSet empty_set() const { return TaskSet(n_); }
  TaskSet full_set() const;
  int set_time(const TaskSet& s) const;

  // Tasks not in `assigned` whose predecessors are all in `assigned`.
  TaskSet forward_available(const TaskSet& assigned) const;
  // Tasks not in `assigned` whose successors are all in `assigned`.
  TaskSet backward_available(const TaskSet& assigned) const;

 private:
  int n_ = 0;
  int c_ = 0;
  long long total_time_ = 0;
  std::vector<int> t_;
  std::vector<TaskSet> direct_pred_, direct_succ_, all_pred_, all_succ_;
  std::vector<long long> w_fwd_, w_bwd_;
};

struct Verification {
  bool ok = false;
  std::string violation;  // empty when ok
};

// Replays the stations in order, tasks within a station in recorded order;
// every task must be forward or backward available (per its flag) at its
// moment of assignment and every station must fit the cycle time.
Verification verify_solution(const Instance& inst, const Solution& sol);

}  // namespace ualbp
