#include "eikonal/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "eikonal/cells.hpp"
#include "eikonal/classic_solvers.hpp"
#include "eikonal/field_io.hpp"
#include "eikonal/fmsm.hpp"
#include "eikonal/heap_cell.hpp"
#include "eikonal/speed_fields.hpp"

namespace eikonal {

Method parse_method(const std::string& token) {
  if (token == "fmm") return Method::Fmm;
  if (token == "fsm") return Method::Fsm;
  if (token == "lsm") return Method::Lsm;
  if (token == "hcm") return Method::Hcm;
  if (token == "fhcm") return Method::Fhcm;
  if (token == "fmsm") return Method::Fmsm;
  throw ConfigError("unknown method '" + token + "'");
}

const char* method_name(Method m) {
  switch (m) {
    case Method::Fmm: return "fmm";
    case Method::Fsm: return "fsm";
    case Method::Lsm: return "lsm";
    case Method::Hcm: return "hcm";
    case Method::Fhcm: return "fhcm";
    case Method::Fmsm: return "fmsm";
  }
  return "?";
}

bool is_hybrid(Method m) {
  return m == Method::Hcm || m == Method::Fhcm || m == Method::Fmsm;
}

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad integer for " + what + ": '" + s + "'");
  }
}

void validate(const ExperimentSpec& spec) {
  if (spec.grids.empty()) throw ConfigError("no grids configured");
  if (spec.methods.empty()) throw ConfigError("no methods configured");
  for (int m : spec.grids)
    if (m < 2) throw ConfigError("grid size must be >= 2");
  bool any_hybrid = false;
  for (Method m : spec.methods) any_hybrid |= is_hybrid(m);
  if (any_hybrid && spec.cells.empty())
    throw ConfigError("hybrid methods need a cells list");
  for (int c : spec.cells)
    if (c < 1) throw ConfigError("cell counts must be positive");
  if (spec.refine < 1) throw ConfigError("refine must be >= 1");

  // Checkerboard grids must align with the checker pattern.
  NamedProblem np = named_problem(spec.problem);
  if (np.speed.kind == SpeedKind::Checkerboard) {
    for (int m : spec.grids)
      if (m % np.speed.checkers != 0)
        throw ConfigError("grid " + std::to_string(m) +
                          " not divisible by checker count " +
                          std::to_string(np.speed.checkers));
  }
}

}  // namespace

ExperimentSpec parse_experiment_config(const std::string& text) {
  ExperimentSpec spec;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("expected key=value, got '" + line + "'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));

    if (key == "problem") {
      named_problem(value);  // validates the token
      spec.problem = value;
    } else if (key == "grids") {
      for (const std::string& t : split_list(value))
        spec.grids.push_back(parse_int(t, "grids"));
    } else if (key == "methods") {
      for (const std::string& t : split_list(value))
        spec.methods.push_back(parse_method(t));
    } else if (key == "cells") {
      for (const std::string& t : split_list(value))
        spec.cells.push_back(parse_int(t, "cells"));
    } else if (key == "exit") {
      if (value == "point") spec.exit_mode = ExitKind::Point;
      else if (value == "boundary") spec.exit_mode = ExitKind::Boundary;
      else throw ConfigError("unknown exit mode '" + value + "'");
    } else if (key == "refine") {
      spec.refine = parse_int(value, "refine");
    } else if (key == "seed") {
      spec.seed = static_cast<unsigned>(parse_int(value, "seed"));
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  if (spec.problem.empty()) throw ConfigError("config missing 'problem'");
  validate(spec);
  return spec;
}

ExperimentSpec load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_experiment_config(ss.str());
}

Problem make_problem(const std::string& problem_name, int grid_m,
                     ExitKind exit_mode) {
  NamedProblem np = named_problem(problem_name);
  Grid grid = Grid::unit_square(grid_m);
  ExitSpec exits = exit_mode == ExitKind::Boundary
                       ? ExitSpec::full_boundary()
                       : ExitSpec::point_source(np.default_source);
  return build_problem(grid, np.speed.fn(), exits);
}

namespace {

struct GridContext {
  Problem problem;
  ValueField truth;
  ValueField exact;  // FMM baseline
};

struct RowTask {
  Method method;
  int grid_m;
  int cells = 0;  // 0 for exact methods
  const GridContext* ctx = nullptr;
};

SolverOutput run_method(const Problem& problem, Method method, int cells) {
  switch (method) {
    case Method::Fmm: return fmm_solve(problem);
    case Method::Fsm: return fsm_solve(problem);
    case Method::Lsm: return lsm_solve(problem);
    case Method::Hcm:
      return hcm_solve(problem, build_cells(problem.grid, cells, cells));
    case Method::Fhcm:
      return fhcm_solve(problem, build_cells(problem.grid, cells, cells));
    case Method::Fmsm:
      return fmsm_solve(problem, build_cells(problem.grid, cells, cells));
  }
  throw std::logic_error("unreachable");
}

ExperimentRow run_row(const ExperimentSpec& spec, const RowTask& task,
                      const RunOptions& opts) {
  const GridContext& ctx = *task.ctx;
  using clock = std::chrono::steady_clock;

  SolverOutput out;
  double best_ms = kInf;
  const int reps = std::max(1, opts.repeat);
  for (int rep = 0; rep < reps; ++rep) {
    auto t0 = clock::now();
    out = run_method(ctx.problem, task.method, task.cells);
    auto t1 = clock::now();
    best_ms = std::min(
        best_ms,
        std::chrono::duration<double, std::milli>(t1 - t0).count());
  }

  ExperimentRow row;
  row.problem = spec.problem;
  row.method = task.method;
  row.grid_m = task.grid_m;
  row.cells_x = task.cells;
  row.elapsed_ms = best_ms;
  row.sweeps = out.sweeps;
  row.node_updates = out.node_updates;
  row.heap_removals = out.heap_removals;
  row.avhr = out.hybrid.avhr;
  row.avs = out.hybrid.avs;
  row.mon_pct = out.hybrid.mon_pct;

  if (is_hybrid(task.method)) {
    MetricsReport rep = method_metrics(out.values, ctx.exact, ctx.truth,
                                       ctx.problem.exit_nodes);
    row.l_inf = rep.l_inf;
    row.l_1 = rep.l_1;
    row.max_ratio = rep.max_error_ratio;
    row.rho = rep.avg_error_ratio;
    row.ratio_of_max = rep.ratio_of_max;
  } else {
    // Exact solvers: errors vs truth are the discretization errors and the
    // ratio columns stay at 1.
    MetricsReport rep = method_metrics(out.values, out.values, ctx.truth,
                                       ctx.problem.exit_nodes);
    row.l_inf = rep.l_inf;
    row.l_1 = rep.l_1;
  }

  if (!opts.dump_dir.empty()) {
    std::string name = spec.problem + "_" + method_name(task.method) + "_m" +
                       std::to_string(task.grid_m);
    if (task.cells > 0) name += "_c" + std::to_string(task.cells);
    dump_field(out.values, ctx.problem.grid.h,
               opts.dump_dir + "/" + name + ".txt", DumpFormat::Ascii);
  }
  return row;
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec,
                                          const RunOptions& opts) {
  validate(spec);

  // Per-grid context (problem, ground truth, FMM baseline), computed once.
  std::map<int, GridContext> contexts;
  for (int m : spec.grids) {
    if (contexts.count(m)) continue;
    GridContext ctx;
    ctx.problem = make_problem(spec.problem, m, spec.exit_mode);
    ctx.truth = ground_truth(ctx.problem, spec.refine);
    ctx.exact = fmm_solve(ctx.problem).values;
    contexts.emplace(m, std::move(ctx));
  }

  std::vector<RowTask> tasks;
  for (int m : spec.grids) {
    for (Method method : spec.methods) {
      if (is_hybrid(method)) {
        for (int c : spec.cells)
          tasks.push_back({method, m, c, &contexts.at(m)});
      } else {
        tasks.push_back({method, m, 0, &contexts.at(m)});
      }
    }
  }

  std::vector<ExperimentRow> rows(tasks.size());
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (size_t t = 0; t < tasks.size(); ++t)
      rows[t] = run_row(spec, tasks[t], opts);
  } else {
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      for (;;) {
        size_t t = next.fetch_add(1);
        if (t >= tasks.size()) return;
        try {
          rows[t] = run_row(spec, tasks[t], opts);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }
  return rows;
}

std::string csv_header() {
  return "problem,method,grid_m,cells_x,elapsed_ms,l_inf,l_1,R_max_ratio,"
         "rho,R_ratio,avhr,avs,mon_pct,sweeps,node_updates,heap_removals";
}

std::string csv_line(const ExperimentRow& r) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "%s,%s,%d,%d,%.3f,%.6e,%.6e,%.6f,%.6f,%.6f,%.4f,%.4f,%.2f,"
                "%lld,%lld,%lld",
                r.problem.c_str(), method_name(r.method), r.grid_m, r.cells_x,
                r.elapsed_ms, r.l_inf, r.l_1, r.max_ratio, r.rho,
                r.ratio_of_max, r.avhr, r.avs, r.mon_pct, r.sweeps,
                r.node_updates, r.heap_removals);
  return buf;
}

}  // namespace eikonal
