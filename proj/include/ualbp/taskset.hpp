#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ualbp {

// Fixed-width bit set over the tasks of one instance. Task ids are 0-based
// internally; formatting is 1-based to match the data files.
class TaskSet {
 public:
  TaskSet() = default;
  explicit TaskSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }

  bool test(int j) const { return (bits_[j >> 6] >> (j & 63)) & 1u; }
  void set(int j) { bits_[j >> 6] |= uint64_t{1} << (j & 63); }
  void reset(int j) { bits_[j >> 6] &= ~(uint64_t{1} << (j & 63)); }

  bool empty() const {
    for (uint64_t w : bits_)
      if (w) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : bits_) c += __builtin_popcountll(w);
    return c;
  }

  TaskSet& operator|=(const TaskSet& o) {
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
  }
  TaskSet& operator&=(const TaskSet& o) {
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
    return *this;
  }
  // set difference
  TaskSet& operator-=(const TaskSet& o) {
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
    return *this;
  }

  friend TaskSet operator|(TaskSet a, const TaskSet& b) { return a |= b; }
  friend TaskSet operator&(TaskSet a, const TaskSet& b) { return a &= b; }
  friend TaskSet operator-(TaskSet a, const TaskSet& b) { return a -= b; }

  bool operator==(const TaskSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  bool operator!=(const TaskSet& o) const { return !(*this == o); }

  bool is_subset_of(const TaskSet& o) const {
    for (size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~o.bits_[i]) return false;
    return true;
  }

  bool intersects(const TaskSet& o) const {
    for (size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & o.bits_[i]) return true;
    return false;
  }

  // Calls f(j) for every member in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < bits_.size(); ++i) {
      uint64_t w = bits_[i];
      while (w) {
        int b = __builtin_ctzll(w);
        f(static_cast<int>(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for_each([&](int j) { v.push_back(j); });
    return v;
  }

  size_t hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(n_);
    for (uint64_t w : bits_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
  }

  // "{1,4,7}" with 1-based task ids.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for_each([&](int j) {
      if (!first) s += ',';
      s += std::to_string(j + 1);
      first = false;
    });
    s += '}';
    return s;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> bits_;
};

struct TaskSetHash {
  size_t operator()(const TaskSet& s) const { return s.hash(); }
};

}  // namespace ualbp
