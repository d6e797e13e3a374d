#include "sloq/signal.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include <fftw3.h>

namespace sloq {

namespace {

std::mutex g_fftw_mutex;  // FFTW planning is not thread-safe; execution is

// Shared trapezoid kernel over an index range of |v|^2.
double trapezoid_norm2(const std::vector<cplx>& v, double dx, std::size_t i0,
                       std::size_t i1) {
  if (i1 <= i0) throw std::invalid_argument("quadrature_norm2: empty range");
  double acc = 0.5 * (std::norm(v[i0]) + std::norm(v[i1]));
  for (std::size_t i = i0 + 1; i < i1; ++i) acc += std::norm(v[i]);
  return acc * dx;
}

cplx lattice_value(const std::vector<cplx>& v, double offset, double step,
                   double x) {
  const double q = (x - offset) / step;
  const double r = std::round(q);
  if (std::abs(q - r) > 1e-4)
    throw std::invalid_argument("value_at: point not on the grid lattice");
  if (r < 0.0 || r >= static_cast<double>(v.size())) return {0.0, 0.0};
  return v[static_cast<std::size_t>(r)];
}

}  // namespace

void fft_in_place(std::vector<cplx>& data, int sign) {
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  const int dir = sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD;
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(g_fftw_mutex);
    plan = fftw_plan_dft_1d(static_cast<int>(data.size()), buf, buf, dir,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(g_fftw_mutex);
    fftw_destroy_plan(plan);
  }
}

cplx SampledSignal::value_at(double t) const {
  return lattice_value(values, grid.t_min, grid.dt, t);
}

cplx SpectralFunction::value_at(double w) const {
  return lattice_value(values, grid.w_min, grid.dw, w);
}

SampledSignal make_truncated_gaussian(const GaussianSeed& seed,
                                      const TimeGrid& grid) {
  if (!(seed.sigma > 0.0))
    throw std::invalid_argument("seed: sigma must be positive");
  if (seed.tau < 0.0) throw std::invalid_argument("seed: tau must be >= 0");
  if (!(seed.ramp_fraction > 0.0) || seed.ramp_fraction > 1.0)
    throw std::invalid_argument("seed: ramp_fraction must lie in (0, 1]");
  const double reach = seed.tau + 8.0 * seed.sigma;
  if (grid.t_min > -reach || grid.t_max() < reach)
    throw std::invalid_argument(
        "seed: grid too short for the pulse support (aliasing risk)");

  const double ramp = seed.ramp_fraction * seed.sigma;
  SampledSignal s{grid, std::vector<cplx>(grid.n)};
  for (std::size_t i = 0; i < grid.n; ++i) {
    const double t = grid.t(i);
    if (t < 0.0) continue;
    const double u = t < ramp ? t / ramp : 1.0;
    const double x = (t - seed.tau) / seed.sigma;
    const double env = u * std::exp(-0.5 * x * x);
    s.values[i] = env * std::polar(1.0, -seed.omega0 * t);
  }
  const double nrm = std::sqrt(quadrature_norm2(s));
  if (!(nrm > 0.0)) throw std::invalid_argument("seed: zero norm");
  for (auto& v : s.values) v /= nrm;
  return s;
}

SpectralFunction forward_fourier(const SampledSignal& s) {
  const TimeGrid& tg = s.grid;
  FrequencyGrid fg = paired_frequency_grid(tg);
  std::vector<cplx> h(s.values);
  // Alternating signs re-center the DFT output to w_min = -n/2 * dw.
  for (std::size_t i = 1; i < h.size(); i += 2) h[i] = -h[i];
  fft_in_place(h, +1);
  const double scale = tg.dt / std::sqrt(2.0 * kPi);
  for (std::size_t k = 0; k < h.size(); ++k)
    h[k] *= scale * std::polar(1.0, fg.w(k) * tg.t_min);
  return {fg, tg, std::move(h)};
}

SampledSignal inverse_fourier(const SpectralFunction& G) {
  if (!(G.grid == paired_frequency_grid(G.time)) || G.values.size() != G.grid.n)
    throw std::invalid_argument("inverse_fourier: grids are not paired");
  std::vector<cplx> p(G.values);
  for (std::size_t k = 0; k < p.size(); ++k)
    p[k] *= std::polar(1.0, -G.grid.w(k) * G.time.t_min);
  fft_in_place(p, -1);
  const double scale = G.grid.dw / std::sqrt(2.0 * kPi);
  for (std::size_t i = 0; i < p.size(); ++i)
    p[i] *= (i & 1u) ? -scale : scale;
  return {G.time, std::move(p)};
}

double quadrature_norm2(const SampledSignal& f, std::optional<Interval> range) {
  std::size_t i0 = 0, i1 = f.grid.n - 1;
  if (range) {
    i0 = f.grid.index_of(range->lo);
    i1 = f.grid.index_of(range->hi);
  }
  return trapezoid_norm2(f.values, f.grid.dt, i0, i1);
}

double quadrature_norm2(const SpectralFunction& f,
                        std::optional<Interval> range) {
  std::size_t i0 = 0, i1 = f.grid.n - 1;
  if (range) {
    i0 = f.grid.index_of(range->lo);
    i1 = f.grid.index_of(range->hi);
  }
  return trapezoid_norm2(f.values, f.grid.dw, i0, i1);
}

}  // namespace sloq
