#pragma once

#include "ualbp/instance.hpp"

namespace ualbp {

// Closed-form lower bounds on the number of stations needed for a task set,
// ignoring precedence. All exact integer arithmetic.

// ceil(sum of times / c)
int lb1(const Instance& inst, const TaskSet& tasks);

// |{t > c/2}| + ceil(|{t = c/2}| / 2)
int lb2(const Instance& inst, const TaskSet& tasks);

// ceil of the weight sum with weights 1, 2/3, 1/2, 1/3, 0 at the thirds
// breakpoints; accumulated in sixths so t = c/3 and t = 2c/3 classify exactly.
int lb3(const Instance& inst, const TaskSet& tasks);

int lb123(const Instance& inst, const TaskSet& tasks);  // max of the three

}  // namespace ualbp
