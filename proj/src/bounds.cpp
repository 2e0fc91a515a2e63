#include "ualbp/bounds.hpp"

#include <algorithm>

namespace ualbp {

int lb1(const Instance& inst, const TaskSet& tasks) {
  long long sum = 0;
  tasks.for_each([&](int j) { sum += inst.time(j); });
  long long c = inst.cycle_time();
  return static_cast<int>((sum + c - 1) / c);
}

int lb2(const Instance& inst, const TaskSet& tasks) {
  long long c = inst.cycle_time();
  long long above = 0, at_half = 0;
  tasks.for_each([&](int j) {
    long long twice = 2LL * inst.time(j);
    if (twice > c)
      ++above;
    else if (twice == c)
      ++at_half;
  });
  return static_cast<int>(above + (at_half + 1) / 2);
}

int lb3(const Instance& inst, const TaskSet& tasks) {
  long long c = inst.cycle_time();
  long long sixths = 0;  // weight * 6 per task: 6, 4, 3, 2 or 0
  tasks.for_each([&](int j) {
    long long three = 3LL * inst.time(j);
    if (three > 2 * c)
      sixths += 6;
    else if (three == 2 * c)
      sixths += 4;
    else if (three > c)
      sixths += 3;
    else if (three == c)
      sixths += 2;
  });
  return static_cast<int>((sixths + 5) / 6);
}

int lb123(const Instance& inst, const TaskSet& tasks) {
  return std::max({lb1(inst, tasks), lb2(inst, tasks), lb3(inst, tasks)});
}

}  // namespace ualbp
