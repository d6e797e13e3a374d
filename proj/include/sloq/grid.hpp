#pragma once

#include <cstddef>

namespace sloq {

inline constexpr double kPi = 3.14159265358979323846;

/// Uniform time grid. The sample count is a power of two and t = 0 always
/// falls on the grid lattice, so the discrete transform identities
/// (conjugation, reflection, shift) hold exactly.
struct TimeGrid {
  double t_min = 0.0;
  double dt = 0.0;
  std::size_t n = 0;

  TimeGrid() = default;
  TimeGrid(double t_min, double dt, std::size_t n);

  double t(std::size_t i) const { return t_min + static_cast<double>(i) * dt; }
  double t_max() const { return t(n - 1); }
  double span() const { return static_cast<double>(n) * dt; }

  bool contains(double time) const;
  std::size_t index_of(double time) const;  // throws when off-grid

  bool operator==(const TimeGrid&) const = default;
};

/// Frequency grid paired with a TimeGrid: dw = 2*pi/(n*dt), w = 0 at bin n/2.
struct FrequencyGrid {
  double w_min = 0.0;
  double dw = 0.0;
  std::size_t n = 0;

  FrequencyGrid() = default;
  FrequencyGrid(double w_min, double dw, std::size_t n);

  double w(std::size_t k) const { return w_min + static_cast<double>(k) * dw; }
  double w_max() const { return w(n - 1); }

  bool contains(double freq) const;
  std::size_t index_of(double freq) const;
  std::size_t zero_index() const { return n / 2; }

  /// Bin holding -w(k); the w_min bin maps to itself (band edge).
  std::size_t reflect(std::size_t k) const { return k == 0 ? 0 : n - k; }

  bool operator==(const FrequencyGrid&) const = default;
};

FrequencyGrid paired_frequency_grid(const TimeGrid& grid);

/// Grid of n samples (power of two) covering [t_lo, t_hi] with t = 0 on the
/// lattice. When commensurate > 0 the step divides it exactly, so delays that
/// are multiples of `commensurate` land on grid points.
TimeGrid make_time_grid(double t_lo, double t_hi, std::size_t n,
                        double commensurate = 0.0);

}  // namespace sloq
