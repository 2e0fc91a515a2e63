#include "ualbp/instance.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <optional>
#include <sstream>

namespace ualbp {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::optional<long long> parse_int(const std::string& tok) {
  std::string t = trim(tok);
  if (t.empty()) return std::nullopt;
  size_t pos = 0;
  long long v;
  try {
    v = std::stoll(t, &pos);
  } catch (...) {
    return std::nullopt;
  }
  if (pos != t.size()) return std::nullopt;
  return v;
}

long long require_int(const std::string& tok, int line, const char* what) {
  auto v = parse_int(tok);
  if (!v) throw ParseError(line, std::string("expected integer ") + what + ", got \"" + trim(tok) + "\"");
  return *v;
}

// Splits "i,j" on the first comma.
std::pair<std::string, std::string> split_arc(const std::string& s, int line) {
  size_t comma = s.find(',');
  if (comma == std::string::npos) throw ParseError(line, "expected \"i,j\" arc line, got \"" + trim(s) + "\"");
  return {s.substr(0, comma), s.substr(comma + 1)};
}

}  // namespace

Instance Instance::build(int n, int cycle_time, std::vector<int> times,
                         const std::vector<std::pair<int, int>>& arcs) {
  if (n <= 0) throw std::invalid_argument("task count must be positive");
  if (cycle_time <= 0) throw std::invalid_argument("cycle time must be positive");
  Instance inst;
  inst.n_ = n;
  inst.c_ = cycle_time;
  inst.t_ = std::move(times);
  for (int j = 0; j < n; ++j) {
    if (inst.t_[j] <= 0)
      throw std::invalid_argument("task " + std::to_string(j + 1) + " time " +
                                  std::to_string(inst.t_[j]) + " is not positive");
    if (inst.t_[j] > cycle_time)
      throw std::invalid_argument("task " + std::to_string(j + 1) + " time " +
                                  std::to_string(inst.t_[j]) + " exceeds cycle time " +
                                  std::to_string(cycle_time));
    inst.total_time_ += inst.t_[j];
  }
  inst.direct_pred_.assign(n, TaskSet(n));
  inst.direct_succ_.assign(n, TaskSet(n));
  for (auto [i1, j1] : arcs) {
    if (i1 < 1 || i1 > n || j1 < 1 || j1 > n)
      throw std::invalid_argument("arc (" + std::to_string(i1) + "," + std::to_string(j1) +
                                  ") endpoint outside 1.." + std::to_string(n));
    if (i1 == j1)
      throw std::invalid_argument("self-loop arc (" + std::to_string(i1) + "," +
                                  std::to_string(j1) + ")");
    inst.direct_succ_[i1 - 1].set(j1 - 1);   // duplicates collapse in the bit set
    inst.direct_pred_[j1 - 1].set(i1 - 1);
  }

  // Topological order (Kahn); a leftover task means a precedence cycle.
  std::vector<int> indeg(n, 0), topo;
  topo.reserve(n);
  for (int j = 0; j < n; ++j) indeg[j] = inst.direct_pred_[j].count();
  std::vector<int> stack;
  for (int j = 0; j < n; ++j)
    if (indeg[j] == 0) stack.push_back(j);
  while (!stack.empty()) {
    int j = stack.back();
    stack.pop_back();
    topo.push_back(j);
    inst.direct_succ_[j].for_each([&](int k) {
      if (--indeg[k] == 0) stack.push_back(k);
    });
  }
  if (static_cast<int>(topo.size()) != n) {
    for (int j = 0; j < n; ++j)
      if (indeg[j] > 0)
        throw std::invalid_argument("precedence cycle through task " + std::to_string(j + 1));
  }

  inst.all_pred_.assign(n, TaskSet(n));
  inst.all_succ_.assign(n, TaskSet(n));
  for (int j : topo) {
    inst.direct_pred_[j].for_each([&](int i) {
      inst.all_pred_[j] |= inst.all_pred_[i];
      inst.all_pred_[j].set(i);
    });
  }
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int j = *it;
    inst.direct_succ_[j].for_each([&](int k) {
      inst.all_succ_[j] |= inst.all_succ_[k];
      inst.all_succ_[j].set(k);
    });
  }

  inst.w_fwd_.assign(n, 0);
  inst.w_bwd_.assign(n, 0);
  for (int j = 0; j < n; ++j) {
    long long wf = inst.t_[j], wb = inst.t_[j];
    inst.all_succ_[j].for_each([&](int k) { wf += inst.t_[k]; });
    inst.all_pred_[j].for_each([&](int k) { wb += inst.t_[k]; });
    inst.w_fwd_[j] = wf;
    inst.w_bwd_[j] = wb;
  }
  return inst;
}

Instance Instance::parse_in2(std::istream& in, int cycle_time) {
  std::string line;
  int lineno = 0;
  auto next_nonblank = [&]() -> std::optional<std::string> {
    while (std::getline(in, line)) {
      ++lineno;
      if (!trim(line).empty()) return line;
    }
    return std::nullopt;
  };

  auto first = next_nonblank();
  if (!first) throw ParseError(lineno, "empty input, expected task count");
  long long n = require_int(*first, lineno, "task count");
  if (n <= 0) throw ParseError(lineno, "task count must be positive");

  std::vector<int> times;
  times.reserve(n);
  for (long long j = 0; j < n; ++j) {
    auto l = next_nonblank();
    if (!l) throw ParseError(lineno, "unexpected end of input, expected time of task " + std::to_string(j + 1));
    long long t = require_int(*l, lineno, "task time");
    if (t <= 0) throw ParseError(lineno, "task " + std::to_string(j + 1) + " time " + std::to_string(t) + " is not positive");
    if (t > cycle_time)
      throw ParseError(lineno, "task " + std::to_string(j + 1) + " time " + std::to_string(t) +
                                   " exceeds cycle time " + std::to_string(cycle_time));
    times.push_back(static_cast<int>(t));
  }

  std::vector<std::pair<int, int>> arcs;
  bool saw_sentinel = false;
  while (auto l = next_nonblank()) {
    auto [a, b] = split_arc(*l, lineno);
    long long i = require_int(a, lineno, "arc tail");
    long long j = require_int(b, lineno, "arc head");
    if (i == -1 && j == -1) {
      saw_sentinel = true;
      // anything but trailing blanks after the sentinel means a corrupt or
      // concatenated file
      if (auto extra = next_nonblank())
        throw ParseError(lineno, "unexpected content after sentinel: \"" + trim(*extra) + "\"");
      break;
    }
    if (i < 1 || i > n || j < 1 || j > n)
      throw ParseError(lineno, "arc (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") endpoint outside 1.." + std::to_string(n));
    if (i == j) throw ParseError(lineno, "self-loop arc (" + std::to_string(i) + "," + std::to_string(j) + ")");
    arcs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  if (!saw_sentinel) throw ParseError(lineno, "missing sentinel line \"-1,-1\"");

  try {
    return build(static_cast<int>(n), cycle_time, std::move(times), arcs);
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineno, e.what());
  }
}

Instance Instance::parse_alb(std::istream& in) {
  // Read the whole file as (lineno, text) records, then walk the sections.
  std::vector<std::pair<int, std::string>> lines;
  {
    std::string l;
    int no = 0;
    while (std::getline(in, l)) lines.emplace_back(++no, trim(l));
  }

  std::optional<long long> n, c;
  std::vector<int> times;
  std::vector<int> time_line;  // lineno per time, for late error reports
  std::vector<std::pair<int, int>> arcs;
  bool saw_tasks = false, saw_times = false, saw_end = false;

  size_t i = 0;
  auto is_section = [](const std::string& s) { return !s.empty() && s.front() == '<' && s.back() == '>'; };
  while (i < lines.size()) {
    const auto& [no, text] = lines[i];
    if (text.empty()) {
      ++i;
      continue;
    }
    if (!is_section(text)) throw ParseError(no, "expected a <section> header, got \"" + text + "\"");
    std::string section = text;
    ++i;
    auto body_next = [&]() -> std::optional<std::pair<int, std::string>> {
      while (i < lines.size() && lines[i].second.empty()) ++i;
      if (i >= lines.size() || is_section(lines[i].second)) return std::nullopt;
      return lines[i++];
    };
    if (section == "<number of tasks>") {
      auto l = body_next();
      if (!l) throw ParseError(no, "empty <number of tasks> section");
      n = require_int(l->second, l->first, "task count");
      saw_tasks = true;
    } else if (section == "<cycle time>") {
      auto l = body_next();
      if (!l) throw ParseError(no, "empty <cycle time> section");
      c = require_int(l->second, l->first, "cycle time");
    } else if (section == "<task times>") {
      while (auto l = body_next()) {
        std::istringstream ss(l->second);
        std::string a, b;
        if (!(ss >> a >> b)) throw ParseError(l->first, "expected \"task time\" pair, got \"" + l->second + "\"");
        long long id = require_int(a, l->first, "task id");
        long long t = require_int(b, l->first, "task time");
        if (id != static_cast<long long>(times.size()) + 1)
          throw ParseError(l->first, "task times out of order at task " + std::to_string(id));
        times.push_back(static_cast<int>(t));
        time_line.push_back(l->first);
      }
      saw_times = true;
    } else if (section == "<precedence relations>") {
      while (auto l = body_next()) {
        auto [a, b] = split_arc(l->second, l->first);
        arcs.emplace_back(static_cast<int>(require_int(a, l->first, "arc tail")),
                          static_cast<int>(require_int(b, l->first, "arc head")));
      }
    } else if (section == "<end>") {
      saw_end = true;
      break;
    } else {
      // unknown section (e.g. <order strength>): skip its body
      while (body_next()) {
      }
    }
  }

  int last = lines.empty() ? 0 : lines.back().first;
  if (!saw_tasks) throw ParseError(last, "missing section <number of tasks>");
  if (!c) throw ParseError(last, "missing section <cycle time>");
  if (!saw_times) throw ParseError(last, "missing section <task times>");
  if (!saw_end) throw ParseError(last, "missing section <end>");
  if (static_cast<long long>(times.size()) != *n)
    throw ParseError(last, "expected " + std::to_string(*n) + " task times, got " + std::to_string(times.size()));
  for (size_t j = 0; j < times.size(); ++j) {
    if (times[j] <= 0)
      throw ParseError(time_line[j], "task " + std::to_string(j + 1) + " time " + std::to_string(times[j]) + " is not positive");
    if (times[j] > *c)
      throw ParseError(time_line[j], "task " + std::to_string(j + 1) + " time " + std::to_string(times[j]) +
                                         " exceeds cycle time " + std::to_string(*c));
  }
  try {
    return build(static_cast<int>(*n), static_cast<int>(*c), std::move(times), arcs);
  } catch (const std::invalid_argument& e) {
    throw ParseError(last, e.what());
  }
}

TaskSet Instance::full_set() const {
  TaskSet s(n_);
  for (int j = 0; j < n_; ++j) s.set(j);
  return s;
}

int Instance::set_time(const TaskSet& s) const {
  int sum = 0;
  s.for_each([&](int j) { sum += t_[j]; });
  return sum;
}

TaskSet Instance::forward_available(const TaskSet& assigned) const {
  TaskSet out(n_);
  for (int j = 0; j < n_; ++j) {
    if (assigned.test(j)) continue;
    if (all_pred_[j].is_subset_of(assigned)) out.set(j);
  }
  return out;
}

TaskSet Instance::backward_available(const TaskSet& assigned) const {
  TaskSet out(n_);
  for (int j = 0; j < n_; ++j) {
    if (assigned.test(j)) continue;
    if (all_succ_[j].is_subset_of(assigned)) out.set(j);
  }
  return out;
}

Verification verify_solution(const Instance& inst, const Solution& sol) {
  const int n = inst.task_count();
  TaskSet assigned(n);
  int covered = 0;
  for (size_t s = 0; s < sol.stations.size(); ++s) {
    const Station& st = sol.stations[s];
    int time = 0;
    TaskSet seen(n);
    for (const Placement& p : st.order) {
      int j = p.task;
      if (j < 0 || j >= n) return {false, "station " + std::to_string(s + 1) + " names an invalid task"};
      if (assigned.test(j))
        return {false, "task " + std::to_string(j + 1) + " assigned more than once"};
      bool ok = p.dir == Direction::forward ? inst.all_pred(j).is_subset_of(assigned)
                                            : inst.all_succ(j).is_subset_of(assigned);
      if (!ok) {
        // report which sides were actually open
        bool f = inst.all_pred(j).is_subset_of(assigned);
        bool b = inst.all_succ(j).is_subset_of(assigned);
        if (!f && !b)
          return {false, "task " + std::to_string(j + 1) + " neither forward nor backward available"};
        return {false, "task " + std::to_string(j + 1) + " not " +
                           (p.dir == Direction::forward ? "forward" : "backward") + " available"};
      }
      assigned.set(j);
      seen.set(j);
      time += inst.time(j);
      ++covered;
    }
    if (seen != st.load.tasks)
      return {false, "station " + std::to_string(s + 1) + " order does not match its load"};
    if (time != st.load.total_time)
      return {false, "station " + std::to_string(s + 1) + " total_time mismatch"};
    if (time > inst.cycle_time())
      return {false, "station " + std::to_string(s + 1) + " time " + std::to_string(time) +
                         " exceeds cycle time " + std::to_string(inst.cycle_time())};
  }
  if (covered != n) return {false, "not all tasks assigned"};
  return {true, ""};
}

}  // namespace ualbp
