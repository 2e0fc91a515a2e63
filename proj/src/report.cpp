#include "ualbp/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ualbp {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << v;
  return os.str();
}

}  // namespace

std::string solve_csv_header() {
  return "name,n,c,lb,ub,status,nodes,nodes_pruned_lb123,nodes_pruned_cg,"
         "nodes_pruned_memory,columns,cpu_seconds,mhhu_ub,closed_at_root\n";
}

std::string solve_csv_row(const InstanceResult& r) {
  std::ostringstream os;
  if (r.parse_error) {
    os << r.name << ",,,,," << "parse_error" << ",,,,,,,,\n";
    return os.str();
  }
  os << r.name << ',' << r.n << ',' << r.c << ',' << r.rep.lb << ',' << r.rep.ub << ','
     << to_string(r.rep.status) << ',' << r.rep.nodes_explored << ','
     << r.rep.nodes_pruned_lb123 << ',' << r.rep.nodes_pruned_cg << ','
     << r.rep.nodes_pruned_memory << ',' << r.rep.columns_generated << ','
     << fmt(r.rep.wall_time_seconds) << ',' << r.rep.mhhu_ub << ','
     << (r.rep.closed_at_root ? 1 : 0) << '\n';
  return os.str();
}

std::string solve_aggregate_block(const std::vector<InstanceResult>& rows) {
  size_t solved = 0, verified = 0;
  double sum_rel = 0, max_rel = 0, sum_abs = 0, max_abs = 0;
  double cpu_verified = 0, cpu_all = 0;
  std::vector<double> times;
  size_t counted = 0;
  for (const auto& r : rows) {
    if (r.parse_error) continue;
    ++counted;
    double rel = 100.0 * (r.rep.ub - r.rep.lb) / std::max(r.rep.lb, 1);
    double abs = r.rep.ub - r.rep.lb;
    sum_rel += rel;
    max_rel = std::max(max_rel, rel);
    sum_abs += abs;
    max_abs = std::max(max_abs, abs);
    cpu_all += r.rep.wall_time_seconds;
    times.push_back(r.rep.wall_time_seconds);
    if (r.rep.status == SolveStatus::optimal) {
      ++verified;
      ++solved;
      cpu_verified += r.rep.wall_time_seconds;
    }
  }
  std::ostringstream os;
  os << "# instances," << counted << '\n';
  os << "# optimal_found," << solved << '\n';
  os << "# optimal_verified," << verified << '\n';
  if (counted) {
    os << "# avg_rel_dev_pct," << fmt(sum_rel / counted) << '\n';
    os << "# max_rel_dev_pct," << fmt(max_rel) << '\n';
    os << "# avg_abs_dev," << fmt(sum_abs / counted) << '\n';
    os << "# max_abs_dev," << fmt(max_abs) << '\n';
    os << "# avg_cpu_verified_s," << fmt(verified ? cpu_verified / verified : 0.0) << '\n';
    os << "# avg_cpu_all_s," << fmt(cpu_all / counted) << '\n';
    double mean = cpu_all / counted;
    double var = 0;
    for (double t : times) var += (t - mean) * (t - mean);
    var = times.size() > 1 ? var / (times.size() - 1) : 0.0;
    os << "# cpu_mean_s," << fmt(mean) << '\n';
    os << "# cpu_stddev_s," << fmt(std::sqrt(var)) << '\n';
    os << "# cpu_min_s," << fmt(*std::min_element(times.begin(), times.end())) << '\n';
    os << "# cpu_max_s," << fmt(*std::max_element(times.begin(), times.end())) << '\n';
  }
  return os.str();
}

std::string bounds_csv_header() { return "name,n,c,lb1,lb2,lb3,cg,cg_cpu_seconds\n"; }

std::string bounds_csv_row(const BoundsResult& r) {
  std::ostringstream os;
  if (r.parse_error) {
    os << r.name << ",,,,,,," << "\n";
    return os.str();
  }
  os << r.name << ',' << r.n << ',' << r.c << ',' << r.lb1 << ',' << r.lb2 << ',' << r.lb3 << ','
     << r.cg << ',' << fmt(r.cg_cpu_seconds) << '\n';
  return os.str();
}

std::string bounds_aggregate_block(const std::vector<BoundsResult>& rows,
                                   const std::vector<std::pair<std::string, int>>& best_known) {
  std::ostringstream os;
  size_t counted = 0;
  for (const auto& r : rows)
    if (!r.parse_error) ++counted;
  os << "# instances," << counted << '\n';
  if (best_known.empty()) return os.str();

  auto lookup = [&](const std::string& name) -> int {
    for (const auto& [k, v] : best_known)
      if (k == name) return v;
    return -1;
  };
  const char* labels[4] = {"lb1", "lb2", "lb3", "cg"};
  for (int b = 0; b < 4; ++b) {
    double sum_rel = 0, max_rel = 0, sum_abs = 0, max_abs = 0;
    size_t nfound = 0, nopt = 0;
    for (const auto& r : rows) {
      if (r.parse_error) continue;
      int ub = lookup(r.name);
      if (ub <= 0) continue;
      int lb = b == 0 ? r.lb1 : b == 1 ? r.lb2 : b == 2 ? r.lb3 : r.cg;
      ++nfound;
      if (lb >= ub) ++nopt;
      double rel = 100.0 * (ub - lb) / ub;
      sum_rel += rel;
      max_rel = std::max(max_rel, rel);
      sum_abs += ub - lb;
      max_abs = std::max<double>(max_abs, ub - lb);
    }
    if (!nfound) continue;
    os << "# " << labels[b] << "_avg_rel_dev_pct," << fmt(sum_rel / nfound) << '\n';
    os << "# " << labels[b] << "_max_rel_dev_pct," << fmt(max_rel) << '\n';
    os << "# " << labels[b] << "_avg_abs_dev," << fmt(sum_abs / nfound) << '\n';
    os << "# " << labels[b] << "_max_abs_dev," << fmt(max_abs) << '\n';
    os << "# " << labels[b] << "_opt_found," << nopt << '\n';
  }
  return os.str();
}

}  // namespace ualbp
