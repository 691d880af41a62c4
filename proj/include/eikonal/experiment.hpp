#pragma once

#include <string>
#include <vector>

#include "eikonal/grid.hpp"
#include "eikonal/metrics.hpp"

namespace eikonal {

enum class Method { Fmm, Fsm, Lsm, Hcm, Fhcm, Fmsm };

Method parse_method(const std::string& token);  // throws ConfigError
const char* method_name(Method m);
bool is_hybrid(Method m);  // needs a cell decomposition

/// One benchmark matrix: a named problem run over grids x methods x cell
/// counts.  The seed field is reserved; every method is deterministic.
struct ExperimentSpec {
  std::string problem;
  std::vector<int> grids;
  std::vector<Method> methods;
  std::vector<int> cells;  // per-axis cell counts for hybrid methods
  ExitKind exit_mode = ExitKind::Point;  // Point uses the problem's source
  int refine = 4;
  unsigned seed = 0;
};

/// Parse the flat key=value config format ('#' comments, comma lists).
ExperimentSpec parse_experiment_config(const std::string& text);
ExperimentSpec load_experiment_config(const std::string& path);

struct RunOptions {
  int repeat = 1;        // solve repetitions; minimum elapsed reported
  int jobs = 1;          // worker threads over matrix tuples
  std::string dump_dir;  // when set, ascii field dump per row
};

struct ExperimentRow {
  std::string problem;
  Method method = Method::Fmm;
  int grid_m = 0;
  int cells_x = 0;  // 0 for exact methods
  double elapsed_ms = 0.0;
  double l_inf = 0.0, l_1 = 0.0;
  double max_ratio = 1.0, rho = 1.0, ratio_of_max = 1.0;
  double avhr = 0.0, avs = 0.0, mon_pct = 0.0;
  long long sweeps = 0, node_updates = 0, heap_removals = 0;
};

/// Run the matrix; rows come back in matrix order (grid, method, cells)
/// regardless of worker completion order.
std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec,
                                          const RunOptions& opts = {});

std::string csv_header();
std::string csv_line(const ExperimentRow& row);

/// Build the Problem instance a spec row refers to.
Problem make_problem(const std::string& problem_name, int grid_m,
                     ExitKind exit_mode);

}  // namespace eikonal
