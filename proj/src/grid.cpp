#include "sloq/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace sloq {

namespace {

bool is_power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

// Nearest lattice index of x/step, or -1 when x is not on the lattice.
long lattice_index(double x, double step) {
  const double q = x / step;
  const double r = std::round(q);
  if (std::abs(q - r) > 1e-6) return -1;
  return static_cast<long>(r);
}

}  // namespace

TimeGrid::TimeGrid(double t_min_, double dt_, std::size_t n_)
    : t_min(t_min_), dt(dt_), n(n_) {
  if (!(dt > 0.0)) throw std::invalid_argument("TimeGrid: dt must be positive");
  if (!is_power_of_two(n))
    throw std::invalid_argument("TimeGrid: n must be a power of two >= 2");
  const double q = t_min / dt;
  if (std::abs(q - std::round(q)) > 1e-9 * std::max(1.0, std::abs(q)))
    throw std::invalid_argument("TimeGrid: t = 0 must lie on the grid lattice");
}

bool TimeGrid::contains(double time) const {
  const long i = lattice_index(time - t_min, dt);
  return i >= 0 && static_cast<std::size_t>(i) < n;
}

std::size_t TimeGrid::index_of(double time) const {
  const long i = lattice_index(time - t_min, dt);
  if (i < 0 || static_cast<std::size_t>(i) >= n)
    throw std::invalid_argument("TimeGrid: time not on grid");
  return static_cast<std::size_t>(i);
}

FrequencyGrid::FrequencyGrid(double w_min_, double dw_, std::size_t n_)
    : w_min(w_min_), dw(dw_), n(n_) {
  if (!(dw > 0.0))
    throw std::invalid_argument("FrequencyGrid: dw must be positive");
  if (!is_power_of_two(n))
    throw std::invalid_argument("FrequencyGrid: n must be a power of two >= 2");
  // w = 0 must sit exactly at bin n/2 so reflection stays an index map.
  if (std::abs(w_min + 0.5 * static_cast<double>(n) * dw) > 1e-9 * dw * n)
    throw std::invalid_argument("FrequencyGrid: w = 0 must be the center bin");
}

bool FrequencyGrid::contains(double freq) const {
  const long k = lattice_index(freq - w_min, dw);
  return k >= 0 && static_cast<std::size_t>(k) < n;
}

std::size_t FrequencyGrid::index_of(double freq) const {
  const long k = lattice_index(freq - w_min, dw);
  if (k < 0 || static_cast<std::size_t>(k) >= n)
    throw std::invalid_argument("FrequencyGrid: frequency not on grid");
  return static_cast<std::size_t>(k);
}

FrequencyGrid paired_frequency_grid(const TimeGrid& grid) {
  const double dw = 2.0 * kPi / (static_cast<double>(grid.n) * grid.dt);
  return FrequencyGrid(-0.5 * static_cast<double>(grid.n) * dw, dw, grid.n);
}

TimeGrid make_time_grid(double t_lo, double t_hi, std::size_t n,
                        double commensurate) {
  if (!(t_hi > t_lo)) throw std::invalid_argument("make_time_grid: empty span");
  if (!is_power_of_two(n))
    throw std::invalid_argument("make_time_grid: n must be a power of two");
  const double span = t_hi - t_lo;
  double dt;
  if (commensurate > 0.0) {
    const double m = std::floor(commensurate * static_cast<double>(n - 2) / span);
    if (m < 1.0)
      throw std::invalid_argument(
          "make_time_grid: grid too short to resolve the commensurate delay");
    dt = commensurate / m;
  } else {
    dt = span / static_cast<double>(n - 2);
  }
  const double t_min = std::floor(t_lo / dt) * dt;
  return TimeGrid(t_min, dt, n);
}

}  // namespace sloq
