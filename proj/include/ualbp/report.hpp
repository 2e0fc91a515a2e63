#pragma once

#include <string>
#include <vector>

#include "ualbp/search.hpp"

namespace ualbp {

struct InstanceResult {
  std::string name;
  int n = 0;
  int c = 0;
  bool parse_error = false;
  std::string error;
  SolveReport rep;
};

struct BoundsResult {
  std::string name;
  int n = 0;
  int c = 0;
  bool parse_error = false;
  std::string error;
  int lb1 = 0, lb2 = 0, lb3 = 0, cg = 0;
  double cg_cpu_seconds = 0.0;
};

std::string solve_csv_header();
std::string solve_csv_row(const InstanceResult& r);
// "# key,value" lines: optimal counts, relative deviation (UB-LB)/LB*100,
// absolute deviation, CPU averages and run time statistics.
std::string solve_aggregate_block(const std::vector<InstanceResult>& rows);

std::string bounds_csv_header();
std::string bounds_csv_row(const BoundsResult& r);
// best_known maps instance name to its best known UB; empty map omits the
// deviation lines. Deviation here is (UB-LB)/UB*100.
std::string bounds_aggregate_block(const std::vector<BoundsResult>& rows,
                                   const std::vector<std::pair<std::string, int>>& best_known);

}  // namespace ualbp
