// Batch solver CLI for type-1 U-shaped assembly line balancing.
//
//   ualbp solve <paths...> --cycle-time C [--time-limit S] [--no-cg]
//         [--no-memory] [--no-jackson] [--grid "a,b,g;..."] [--out FILE]
//         [--workers K]
//   ualbp bounds <paths...> [--cycle-time C] [--best-known FILE] [--out FILE]
//         [--workers K]
//
// Directories expand to their .in2/.alb files. Exit code 0 once the batch
// completes (per-file parse errors become CSV rows), 2 on a config error.

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ualbp/bounds.hpp"
#include "ualbp/report.hpp"

namespace fs = std::filesystem;
using namespace ualbp;

namespace {

std::string lower_ext(const fs::path& p) {
  std::string e = p.extension().string();
  for (char& ch : e) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return e;
}

bool is_instance_file(const fs::path& p) {
  std::string e = lower_ext(p);
  return e == ".in2" || e == ".alb";
}

std::vector<fs::path> expand_inputs(const std::vector<std::string>& paths) {
  std::vector<fs::path> files;
  for (const auto& raw : paths) {
    fs::path p(raw);
    if (fs::is_directory(p)) {
      std::vector<fs::path> dir_files;
      for (const auto& entry : fs::directory_iterator(p))
        if (entry.is_regular_file() && is_instance_file(entry.path()))
          dir_files.push_back(entry.path());
      std::sort(dir_files.begin(), dir_files.end());
      files.insert(files.end(), dir_files.begin(), dir_files.end());
    } else {
      files.push_back(p);
    }
  }
  return files;
}

Instance load_instance(const fs::path& path, int cycle_time) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  if (lower_ext(path) == ".alb") return Instance::parse_alb(in);
  if (cycle_time <= 0)
    throw std::runtime_error(path.string() + ": --cycle-time is required for .in2 inputs");
  return Instance::parse_in2(in, cycle_time);
}

std::vector<HeuristicParams> parse_grid(const std::string& spec) {
  std::vector<HeuristicParams> grid;
  std::istringstream ss(spec);
  std::string triple;
  while (std::getline(ss, triple, ';')) {
    if (triple.empty()) continue;
    HeuristicParams p;
    char c1, c2;
    std::istringstream ts(triple);
    if (!(ts >> p.alpha >> c1 >> p.beta >> c2 >> p.gamma) || c1 != ',' || c2 != ',')
      throw CLI::ValidationError("--grid", "expected \"a,b,g;a,b,g;...\"");
    grid.push_back(p);
  }
  if (grid.empty()) throw CLI::ValidationError("--grid", "empty grid");
  return grid;
}

template <class Row, class Work>
std::vector<Row> run_parallel(const std::vector<fs::path>& files, int workers, Work&& work) {
  std::vector<Row> rows(files.size());
  std::atomic<size_t> next{0};
  auto body = [&] {
    for (size_t i = next.fetch_add(1); i < files.size(); i = next.fetch_add(1))
      rows[i] = work(files[i]);
  };
  if (workers <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  return rows;
}

void write_out(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for type-1 U-shaped assembly line balancing"};
  app.require_subcommand(1);

  std::vector<std::string> paths;
  int cycle_time = 0;
  double time_limit = 500.0;
  bool no_cg = false, no_memory = false, no_jackson = false;
  std::string grid_spec, out_path, best_known_path;
  int workers = 1;

  auto* solve_cmd = app.add_subcommand("solve", "solve instances and emit a result CSV");
  solve_cmd->add_option("paths", paths, "instance files or directories")->required();
  solve_cmd->add_option("--cycle-time", cycle_time, "cycle time (required for .in2 files)");
  solve_cmd->add_option("--time-limit", time_limit, "per-instance limit in seconds")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--no-cg", no_cg, "disable the column generation bound");
  solve_cmd->add_flag("--no-memory", no_memory, "disable memory dominance");
  solve_cmd->add_flag("--no-jackson", no_jackson, "disable the Jackson-style filter");
  solve_cmd->add_option("--grid", grid_spec, "heuristic coefficient grid \"a,b,g;...\"");
  solve_cmd->add_option("--out", out_path, "output CSV path (default stdout)");
  solve_cmd->add_option("--workers", workers, "parallel instances")->check(CLI::PositiveNumber);

  auto* bounds_cmd = app.add_subcommand("bounds", "report LB1-LB3 and the root CG bound");
  bounds_cmd->add_option("paths", paths, "instance files or directories")->required();
  bounds_cmd->add_option("--cycle-time", cycle_time, "cycle time (required for .in2 files)");
  bounds_cmd->add_option("--best-known", best_known_path, "CSV of name,ub for deviations");
  bounds_cmd->add_option("--out", out_path, "output CSV path (default stdout)");
  bounds_cmd->add_option("--workers", workers, "parallel instances")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    std::vector<fs::path> files = expand_inputs(paths);
    if (files.empty()) {
      std::cerr << "no instance files found\n";
      return 2;
    }

    if (solve_cmd->parsed()) {
      SolveLimits limits;
      limits.time_limit_seconds = time_limit;
      limits.use_cg = !no_cg;
      limits.use_memory = !no_memory;
      limits.use_jackson = !no_jackson;
      if (!grid_spec.empty()) limits.grid = parse_grid(grid_spec);

      auto rows = run_parallel<InstanceResult>(files, workers, [&](const fs::path& f) {
        InstanceResult r;
        r.name = f.stem().string();
        try {
          Instance inst = load_instance(f, cycle_time);
          r.n = inst.task_count();
          r.c = inst.cycle_time();
          r.rep = solve(inst, limits);
        } catch (const std::exception& e) {
          r.parse_error = true;
          r.error = e.what();
          std::cerr << f.string() << ": " << e.what() << '\n';
        }
        return r;
      });

      std::string text = solve_csv_header();
      for (const auto& r : rows) text += solve_csv_row(r);
      text += solve_aggregate_block(rows);
      write_out(out_path, text);
      return 0;
    }

    // bounds subcommand
    std::vector<std::pair<std::string, int>> best_known;
    if (!best_known_path.empty()) {
      std::ifstream bk(best_known_path);
      if (!bk) {
        std::cerr << "warning: cannot open " << best_known_path << ", deviations omitted\n";
      } else {
        std::string line;
        while (std::getline(bk, line)) {
          auto comma = line.find(',');
          if (comma == std::string::npos) continue;
          try {
            best_known.emplace_back(line.substr(0, comma), std::stoi(line.substr(comma + 1)));
          } catch (...) {
          }
        }
      }
    }

    auto rows = run_parallel<BoundsResult>(files, workers, [&](const fs::path& f) {
      BoundsResult r;
      r.name = f.stem().string();
      try {
        Instance inst = load_instance(f, cycle_time);
        r.n = inst.task_count();
        r.c = inst.cycle_time();
        TaskSet all = inst.full_set();
        r.lb1 = lb1(inst, all);
        r.lb2 = lb2(inst, all);
        r.lb3 = lb3(inst, all);
        auto t0 = std::chrono::steady_clock::now();
        Solution seed_sol = mhhu(inst, inst.empty_set(), default_param_grid());
        ColumnPool pool;
        std::vector<Load> seeds;
        for (const Station& st : seed_sol.stations) seeds.push_back(st.load);
        r.cg = cg_lower_bound(inst, all, pool, seeds).lower_bound;
        r.cg_cpu_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      } catch (const std::exception& e) {
        r.parse_error = true;
        r.error = e.what();
        std::cerr << f.string() << ": " << e.what() << '\n';
      }
      return r;
    });

    std::string text = bounds_csv_header();
    for (const auto& r : rows) text += bounds_csv_row(r);
    text += bounds_aggregate_block(rows, best_known);
    write_out(out_path, text);
    return 0;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}
