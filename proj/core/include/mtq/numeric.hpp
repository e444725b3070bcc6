#ifndef MTQ_NUMERIC_HPP
#define MTQ_NUMERIC_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace mtq {

/// Composite Simpson rule over [a, b] with `panels` three-point panels.
inline double simpson(const std::function<double(double)>& f, double a,
                      double b, std::size_t panels = 2048) {
  const double h = (b - a) / static_cast<double>(panels);
  double acc = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double x0 = a + h * static_cast<double>(i);
    const double x1 = x0 + h;
    acc += (h / 6.0) * (f(x0) + 4.0 * f(0.5 * (x0 + x1)) + f(x1));
  }
  return acc;
}

/// Cumulative integral of `f` along the strictly increasing `grid`.
/// Entry i holds the integral from grid[0] to grid[i]; each cell is
/// integrated with `panels_per_cell` Simpson panels.
inline std::vector<double>
cumulative_integral(const std::function<double(double)>& f,
                    const std::vector<double>& grid,
                    std::size_t panels_per_cell = 8) {
  std::vector<double> out(grid.size(), 0.0);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    out[i + 1] = out[i] + simpson(f, grid[i], grid[i + 1], panels_per_cell);
  }
  return out;
}

} // namespace mtq

#endif
