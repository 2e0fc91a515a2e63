#pragma once

#include <random>
#include <vector>

#include "ualbp/instance.hpp"

namespace ualbp::testing {

// Hand-encoded 11-task example instance (sum of times 50). Validated by the
// checks in test_instance.cpp: the best straight-line solution uses 6
// stations while the U-line optimum is 5 at c = 10.
inline Instance fig1() {
  return Instance::build(11, 10, {7, 1, 4, 8, 1, 5, 5, 5, 5, 6, 3},
                         {{1, 3},
                          {2, 4},
                          {5, 4},
                          {4, 7},
                          {3, 6},
                          {7, 6},
                          {6, 8},
                          {6, 9},
                          {8, 10},
                          {9, 10},
                          {10, 11}});
}

// 1 -> 2 -> ... -> n with the given times.
inline Instance chain(std::vector<int> times, int c) {
  int n = static_cast<int>(times.size());
  std::vector<std::pair<int, int>> arcs;
  for (int i = 1; i < n; ++i) arcs.emplace_back(i, i + 1);
  return Instance::build(n, c, std::move(times), arcs);
}

// Random DAG instance: arcs only from lower to higher task id, density drawn
// from [0.1, 0.5], times from U[1, c].
inline Instance random_instance(std::mt19937& rng, int n_min = 3, int n_max = 11) {
  int n = std::uniform_int_distribution<int>(n_min, n_max)(rng);
  int c = std::uniform_int_distribution<int>(5, 25)(rng);
  std::vector<int> t(n);
  for (int& x : t) x = std::uniform_int_distribution<int>(1, c)(rng);
  double density = std::uniform_real_distribution<double>(0.1, 0.5)(rng);
  std::bernoulli_distribution arc(density);
  std::vector<std::pair<int, int>> arcs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (arc(rng)) arcs.emplace_back(i, j);
  return Instance::build(n, c, std::move(t), arcs);
}

// Same graph with every arc reversed.
inline Instance reversed(const Instance& inst) {
  std::vector<int> t(inst.task_count());
  std::vector<std::pair<int, int>> arcs;
  for (int j = 0; j < inst.task_count(); ++j) {
    t[j] = inst.time(j);
    inst.direct_succ(j).for_each([&](int k) { arcs.emplace_back(k + 1, j + 1); });
  }
  return Instance::build(inst.task_count(), inst.cycle_time(), std::move(t), arcs);
}

inline TaskSet make_set(const Instance& inst, std::initializer_list<int> tasks_1based) {
  TaskSet s = inst.empty_set();
  for (int j : tasks_1based) s.set(j - 1);
  return s;
}

}  // namespace ualbp::testing
