#include "eikonal/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eikonal/classic_solvers.hpp"

namespace eikonal {

ErrorFields error_fields(const ValueField& v_method,
                         const ValueField& v_exact,
                         const ValueField& v_truth,
                         const std::vector<int>& exit_nodes) {
  if (v_method.m != v_exact.m || v_method.n != v_exact.n ||
      v_method.m != v_truth.m || v_method.n != v_truth.n)
    throw std::invalid_argument("error_fields: shape mismatch");

  const int size = v_method.size();
  ErrorFields out;
  out.e.resize(size);
  out.E.resize(size);
  out.in_x_plus.assign(size, 0);
  out.is_exit.assign(size, 0);
  for (int idx : exit_nodes) out.is_exit[idx] = 1;

  for (int k = 0; k < size; ++k) {
    out.e[k] = std::abs(v_exact[k] - v_truth[k]);
    out.E[k] = std::abs(v_method[k] - v_truth[k]);
    out.in_x_plus[k] = !out.is_exit[k] && out.e[k] > 1e-14;
  }
  return out;
}

MetricsReport error_ratios(const ErrorFields& f) {
  MetricsReport r;
  double max_ratio = 0.0, sum_ratio = 0.0;
  double max_E_plus = 0.0, max_e_plus = 0.0;
  double max_E = 0.0, sum_E = 0.0;
  long long non_exit = 0;

  const int size = static_cast<int>(f.e.size());
  for (int k = 0; k < size; ++k) {
    if (f.is_exit[k]) continue;
    ++non_exit;
    max_E = std::max(max_E, f.E[k]);
    sum_E += f.E[k];
    if (!f.in_x_plus[k]) continue;
    ++r.m_plus;
    double ratio = f.E[k] / f.e[k];
    max_ratio = std::max(max_ratio, ratio);
    sum_ratio += ratio;
    max_E_plus = std::max(max_E_plus, f.E[k]);
    max_e_plus = std::max(max_e_plus, f.e[k]);
  }

  r.l_inf = max_E;
  r.l_1 = non_exit > 0 ? sum_E / non_exit : 0.0;
  if (r.m_plus == 0) {
    r.x_plus_empty = true;
    r.max_error_ratio = r.avg_error_ratio = r.ratio_of_max = 1.0;
  } else {
    r.max_error_ratio = max_ratio;
    r.avg_error_ratio = sum_ratio / r.m_plus;
    r.ratio_of_max = max_E_plus / max_e_plus;
  }
  return r;
}

MetricsReport method_metrics(const ValueField& v_method,
                             const ValueField& v_exact,
                             const ValueField& v_truth,
                             const std::vector<int>& exit_nodes) {
  return error_ratios(error_fields(v_method, v_exact, v_truth, exit_nodes));
}

ValueField ground_truth(const Problem& problem, int refine) {
  if (refine < 1) throw std::invalid_argument("refine must be >= 1");
  const Grid& g = problem.grid;

  Grid fine(refine * (g.m - 1) + 1, refine * (g.n - 1) + 1, g.h / refine,
            g.x0, g.y0);
  Problem fp;
  fp.grid = fine;
  fp.speed = problem.speed;
  for (size_t k = 0; k < problem.exit_nodes.size(); ++k) {
    NodeIndex nd = g.node(problem.exit_nodes[k]);
    fp.exit_nodes.push_back(fine.index(refine * nd.i, refine * nd.j));
    fp.exit_cost.push_back(problem.exit_cost[k]);
  }
  // exit_nodes stay sorted: the index map is monotone in (j, i)
  SolverOutput solved = fmm_solve(fp);

  ValueField out(g.m, g.n);
  for (int j = 0; j < g.n; ++j)
    for (int i = 0; i < g.m; ++i)
      out.at(i, j) = solved.values.at(refine * i, refine * j);
  return out;
}

}  // namespace eikonal
