#include "eikonal/speed_fields.hpp"

#include <algorithm>
#include <cmath>

namespace eikonal {

namespace {

constexpr double kPi = 3.14159265358979323846;

int checker_index(double t, int k) {
  return std::clamp(static_cast<int>(std::floor(t * k)), 0, k - 1);
}

}  // namespace

double SpeedSpec::operator()(double x, double y) const {
  switch (kind) {
    case SpeedKind::Constant:
      return 1.0;
    case SpeedKind::Checkerboard: {
      int a = checker_index(x, checkers);
      int b = checker_index(y, checkers);
      return ((a + b) % 2 == 0) ? slow : fast;
    }
    case SpeedKind::Sinusoid:
      return 1.0 + amplitude * std::sin(freq * kPi * x) *
                       std::sin(freq * kPi * y);
    case SpeedKind::CombMaze: {
      for (int b = 1; b <= n_barriers; ++b) {
        double xc = static_cast<double>(b) / (n_barriers + 1);
        if (x < xc - 0.5 * barrier_width || x > xc + 0.5 * barrier_width)
          continue;
        bool gap_at_top = (b % 2 == 1);
        bool in_barrier = gap_at_top ? (y <= 1.0 - gap_fraction)
                                     : (y >= gap_fraction);
        if (in_barrier) return barrier_speed;
      }
      return 1.0;
    }
  }
  return 1.0;
}

SpeedSpec speed_constant() {
  SpeedSpec s;
  s.kind = SpeedKind::Constant;
  return s;
}

SpeedSpec speed_checkerboard(int k, double slow, double fast) {
  if (k < 1 || k % 2 == 0)
    throw ConfigError("checkerboard needs an odd checker count");
  if (!(slow > 0.0) || !(fast > 0.0))
    throw ConfigError("checkerboard speeds must be positive");
  SpeedSpec s;
  s.kind = SpeedKind::Checkerboard;
  s.checkers = k;
  s.slow = slow;
  s.fast = fast;
  return s;
}

SpeedSpec speed_sinusoid(double amplitude, int freq) {
  if (!(std::abs(amplitude) < 1.0))
    throw ConfigError("sinusoid amplitude must satisfy |a| < 1");
  SpeedSpec s;
  s.kind = SpeedKind::Sinusoid;
  s.amplitude = amplitude;
  s.freq = freq;
  return s;
}

SpeedSpec speed_comb_maze(int n_barriers, double barrier_speed,
                          double barrier_width, double gap_fraction) {
  if (n_barriers < 1) throw ConfigError("comb maze needs >= 1 barrier");
  if (!(barrier_speed > 0.0))
    throw ConfigError("barrier speed must be positive");
  // Barriers must not overlap: spacing between centers is 1/(n+1).
  if (barrier_width >= 1.0 / (n_barriers + 1))
    throw ConfigError("comb barriers overlap");
  if (gap_fraction <= 0.0 || gap_fraction >= 1.0)
    throw ConfigError("gap fraction must lie in (0,1)");
  SpeedSpec s;
  s.kind = SpeedKind::CombMaze;
  s.n_barriers = n_barriers;
  s.barrier_speed = barrier_speed;
  s.barrier_width = barrier_width;
  s.gap_fraction = gap_fraction;
  return s;
}

NamedProblem named_problem(const std::string& name) {
  if (name == "constant")
    return {name, speed_constant(), {0.5, 0.5}};
  if (name == "checker11")
    return {name, speed_checkerboard(11), {0.5, 0.5}};
  if (name == "checker41")
    return {name, speed_checkerboard(41), {0.5, 0.5}};
  if (name == "sinusoidA")
    return {name, speed_sinusoid(0.5, 20), {0.5, 0.5}};
  if (name == "sinusoidB")
    return {name, speed_sinusoid(0.99, 2), {0.5, 0.5}};
  if (name == "comb4")
    return {name, speed_comb_maze(4), {0.0, 0.0}};
  if (name == "comb8")
    return {name, speed_comb_maze(8), {0.0, 0.0}};
  throw ConfigError("unknown problem '" + name + "'");
}

const std::vector<std::string>& problem_names() {
  static const std::vector<std::string> names = {
      "constant",  "checker11", "checker41", "sinusoidA",
      "sinusoidB", "comb4",     "comb8"};
  return names;
}

}  // namespace eikonal
