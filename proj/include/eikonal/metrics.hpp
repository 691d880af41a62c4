#pragma once

#include <vector>

#include "eikonal/grid.hpp"

namespace eikonal {

struct MetricsReport {
  double l_inf = 0.0;
  double l_1 = 0.0;
  double max_error_ratio = 1.0;  // R-script: max E_i/e_i over X+
  double avg_error_ratio = 1.0;  // rho: mean E_i/e_i over X+
  double ratio_of_max = 1.0;     // R: max E_i / max e_i over X+
  long long m_plus = 0;          // |X+|
  bool x_plus_empty = false;
};

/// Discretization-vs-truth and method-vs-truth error fields:
/// e_i = |v_exact - v_truth|, E_i = |v_method - v_truth|,
/// X+ = non-exit nodes with e_i > 1e-14.
struct ErrorFields {
  std::vector<double> e;
  std::vector<double> E;
  std::vector<char> in_x_plus;
  std::vector<char> is_exit;
};

ErrorFields error_fields(const ValueField& v_method,
                         const ValueField& v_exact,
                         const ValueField& v_truth,
                         const std::vector<int>& exit_nodes);

/// Ratio statistics over X+; l_inf / l_1 of E over all non-exit nodes
/// (l_1 = mean absolute error).  Empty X+ reports ratios 1 with a flag.
MetricsReport error_ratios(const ErrorFields& fields);

/// Shorthand: full report for a method field against the exact solver
/// output and the refined-grid truth.
MetricsReport method_metrics(const ValueField& v_method,
                             const ValueField& v_exact,
                             const ValueField& v_truth,
                             const std::vector<int>& exit_nodes);

/// Ground truth on the problem's own grid: FMM on the refine-times finer
/// grid (same extent, spacing h/refine, exit node (i,j) -> (r*i, r*j)),
/// restricted back by index subsampling.
ValueField ground_truth(const Problem& problem, int refine = 4);

}  // namespace eikonal
