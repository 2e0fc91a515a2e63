#include "ualbp/knapsack.hpp"

#include <algorithm>
#include <cstring>

namespace ualbp {

namespace {
constexpr double kZeroDual = 1e-12;
}

PricingResult KnapsackPricer::solve(const Instance& inst, const TaskSet& candidates,
                                    const std::vector<double>& duals, int capacity) {
  items_.clear();
  candidates.for_each([&](int j) {
    if (duals[j] > kZeroDual) items_.push_back(j);
  });

  PricingResult res;
  res.load.tasks = TaskSet(inst.task_count());
  if (items_.empty()) return res;

  const int cap = capacity;
  const int nitems = static_cast<int>(items_.size());
  row_.assign(cap + 1, 0.0);
  const size_t words_per_item = (cap + 1 + 63) / 64;
  take_.assign(words_per_item * nitems, 0);

  // Suffix DP: process items in decreasing index so that when item i is
  // handled the row holds the optimum over items after it. The decision bit
  // for (i, w) records that including i attains the optimum of the suffix
  // starting at i with capacity w; ties prefer inclusion, which makes the
  // forward reconstruction pick the lexicographically smallest optimal set.
  for (int idx = nitems - 1; idx >= 0; --idx) {
    int j = items_[idx];
    int t = inst.time(j);
    double pi = duals[j];
    uint64_t* bits = take_.data() + words_per_item * idx;
    for (int w = cap; w >= t; --w) {
      double with = row_[w - t] + pi;
      if (with >= row_[w]) {
        row_[w] = with;
        bits[w >> 6] |= uint64_t{1} << (w & 63);
      }
    }
  }

  int w = cap;
  for (int idx = 0; idx < nitems; ++idx) {
    int j = items_[idx];
    int t = inst.time(j);
    if (t > w) continue;
    const uint64_t* bits = take_.data() + words_per_item * idx;
    if ((bits[w >> 6] >> (w & 63)) & 1u) {
      res.load.tasks.set(j);
      res.load.total_time += t;
      res.value += duals[j];
      w -= t;
    }
  }
  res.reduced_cost = 1.0 - res.value;
  return res;
}

}  // namespace ualbp
