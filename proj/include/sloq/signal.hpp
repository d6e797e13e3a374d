#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "sloq/grid.hpp"

namespace sloq {

using cplx = std::complex<double>;

struct SampledSignal {
  TimeGrid grid;
  std::vector<cplx> values;

  /// Value at an exact grid time; 0 outside the covered span.
  cplx value_at(double t) const;
};

/// Complex spectrum on the frequency grid paired with `time`; the paired
/// time grid fixes the phases of the inverse transform.
struct SpectralFunction {
  FrequencyGrid grid;
  TimeGrid time;
  std::vector<cplx> values;

  cplx value_at(double w) const;
};

struct GaussianSeed {
  double sigma = 1.0;
  double tau = 0.0;
  double omega0 = 1.0;
  double ramp_fraction = 0.1;
};

/// Causal Gaussian pulse with carrier exp(-i*omega0*t), centered at tau, with
/// a linear onset ramp over [0, ramp_fraction*sigma]. Zero for all t < 0 and
/// normalized to unit squared norm.
SampledSignal make_truncated_gaussian(const GaussianSeed& seed,
                                      const TimeGrid& grid);

/// G(w) = (1/sqrt(2 pi)) Int g(t) exp(+i w t) dt, so a carrier exp(-i w0 t)
/// peaks near +w0. Exact inverse pair with inverse_fourier.
SpectralFunction forward_fourier(const SampledSignal& s);

/// g(t) = (1/sqrt(2 pi)) Int G(w) exp(-i w t) dw on the paired time grid.
SampledSignal inverse_fourier(const SpectralFunction& G);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Trapezoid integral of |f|^2 over the full span or a sub-interval whose
/// endpoints are grid points.
double quadrature_norm2(const SampledSignal& f,
                        std::optional<Interval> range = std::nullopt);
double quadrature_norm2(const SpectralFunction& f,
                        std::optional<Interval> range = std::nullopt);

/// Unnormalized in-place DFT. sign = -1 applies the kernel
/// exp(-2 pi i j k / n), sign = +1 its conjugate.
void fft_in_place(std::vector<cplx>& data, int sign);

}  // namespace sloq
