#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "support/fixtures.hpp"
#include "ualbp/bounds.hpp"
#include "ualbp/search.hpp"

using namespace ualbp;
using namespace ualbp::testing;

namespace {

void check_report(const Instance& inst, const SolveReport& r) {
  CHECK(r.lb <= r.ub);
  if (r.status == SolveStatus::optimal) CHECK(r.lb == r.ub);
  CHECK(r.ub == r.best.station_count());
  CHECK(verify_solution(inst, r.best).ok);
  TaskSet covered = inst.empty_set();
  for (const Station& st : r.best.stations) covered |= st.load.tasks;
  CHECK(covered == inst.full_set());
  CHECK(r.mhhu_ub >= r.ub);
  CHECK(r.lb >= lb1(inst, inst.full_set()));
  CHECK(r.wall_time_seconds >= 0.0);
}

}  // namespace

TEST_CASE("branch_loads on the 3-chain") {
  Instance inst = chain({4, 4, 4}, 8);
  for (bool jackson : {false, true}) {
    auto kids = branch_loads(inst, inst.empty_set(), jackson);
    // the three maximal first-station loads; {1} alone is not maximal
    REQUIRE(kids.size() == 3);
    std::vector<TaskSet> sets;
    for (const auto& k : kids) sets.push_back(k.load.tasks);
    CHECK(std::count(sets.begin(), sets.end(), make_set(inst, {1, 2})) == 1);
    CHECK(std::count(sets.begin(), sets.end(), make_set(inst, {2, 3})) == 1);
    CHECK(std::count(sets.begin(), sets.end(), make_set(inst, {1, 3})) == 1);
  }
  // one task left -> exactly one child
  auto last = branch_loads(inst, make_set(inst, {1, 2}), true);
  REQUIRE(last.size() == 1);
  CHECK(last[0].load.tasks == make_set(inst, {3}));
}

TEST_CASE("solve examples") {
  SUBCASE("eleven-task fixture is solved to 5 stations") {
    Instance inst = fig1();
    auto r = solve(inst);
    CHECK(r.status == SolveStatus::optimal);
    CHECK(r.lb == 5);
    CHECK(r.ub == 5);
    check_report(inst, r);
  }
  SUBCASE("everything fits into one station") {
    Instance inst = chain({2, 3, 4}, 20);
    auto r = solve(inst);
    CHECK(r.status == SolveStatus::optimal);
    CHECK(r.ub == 1);
    CHECK(r.closed_at_root);
  }
  SUBCASE("3-chain needs two stations") {
    Instance inst = chain({4, 4, 4}, 8);
    auto r = solve(inst);
    CHECK(r.status == SolveStatus::optimal);
    CHECK(r.ub == 2);
    check_report(inst, r);
  }
}

TEST_CASE("all four flag configurations agree with the oracle") {
  std::mt19937 rng(20240821);
  for (int trial = 0; trial < 30; ++trial) {
    Instance inst = random_instance(rng, 3, 10);
    int opt = oracle_solve(inst);
    for (bool cg : {true, false})
      for (bool memory : {true, false}) {
        SolveLimits lim;
        lim.use_cg = cg;
        lim.use_memory = memory;
        auto r = solve(inst, lim);
        CHECK(r.status == SolveStatus::optimal);
        CHECK(r.ub == opt);
        CHECK(r.lb == opt);
        check_report(inst, r);
      }
  }
}

TEST_CASE("memory dominance only prunes, never changes the answer") {
  std::mt19937 rng(20240822);
  for (int trial = 0; trial < 20; ++trial) {
    Instance inst = random_instance(rng, 6, 11);
    SolveLimits with, without;
    without.use_memory = false;
    auto a = solve(inst, with);
    auto b = solve(inst, without);
    CHECK(a.ub == b.ub);
    CHECK(a.lb == b.lb);
    CHECK(a.nodes_explored <= b.nodes_explored);
    CHECK(b.nodes_pruned_memory == 0);
  }
}

TEST_CASE("jackson filter never changes the answer on oracle instances") {
  std::mt19937 rng(20240823);
  for (int trial = 0; trial < 30; ++trial) {
    Instance inst = random_instance(rng, 3, 10);
    SolveLimits on, off;
    off.use_jackson = false;
    auto a = solve(inst, on);
    auto b = solve(inst, off);
    CHECK(a.ub == b.ub);
    CHECK(a.lb == b.lb);
    CHECK(a.ub == oracle_solve(inst));
  }
}

TEST_CASE("counters are consistent") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    Instance inst = random_instance(rng, 6, 11);
    auto r = solve(inst);
    check_report(inst, r);
    if (r.closed_at_root) CHECK(r.nodes_explored == 0);
    SolveLimits no_cg;
    no_cg.use_cg = false;
    auto r2 = solve(inst, no_cg);
    CHECK(r2.columns_generated == 0);
    CHECK(r2.nodes_pruned_cg == 0);
  }
}

TEST_CASE("a zero time limit still reports a valid bound pair") {
  Instance inst = fig1();
  SolveLimits lim;
  lim.time_limit_seconds = 0.0;
  auto r = solve(inst, lim);
  CHECK((r.status == SolveStatus::optimal || r.status == SolveStatus::timeout));
  check_report(inst, r);
}

TEST_CASE("oracle_solve rejects large instances and handles the trivial ones") {
  CHECK_THROWS_AS(oracle_solve(Instance::build(13, 5, std::vector<int>(13, 1), {})),
                  std::invalid_argument);
  Instance tiny = chain({2, 3}, 10);
  CHECK(oracle_solve(tiny) == 1);
  CHECK(oracle_solve(chain({4, 4, 4}, 8)) == 2);
  CHECK(oracle_solve(fig1()) == 5);
}
