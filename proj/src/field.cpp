#include "sloq/field.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "sloq/errors.hpp"

namespace sloq {

SampledSignal pulse_mode_field(const SpectralFunction& xi, double K) {
  const FrequencyGrid& fg = xi.grid;
  const std::size_t z = fg.zero_index();

  double neg = 0.0;
  for (std::size_t k = 0; k < z; ++k) neg += std::norm(xi.values[k]);
  neg *= fg.dw;
  if (neg > 1e-10)
    throw std::invalid_argument(
        "pulse_mode_field: mode has negative-frequency content");
  const double nrm = quadrature_norm2(xi, Interval{0.0, fg.w_max()});
  if (std::abs(nrm - 1.0) > 1e-8)
    throw std::invalid_argument("pulse_mode_field: mode is not normalized");

  // Apply the spectral weight K sqrt(-i w) = K sqrt(w) e^{-i pi/4} (w > 0),
  // then invert. E carries no 1/sqrt(2 pi); undo the transform's.
  SpectralFunction weighted{fg, xi.time, std::vector<cplx>(fg.n)};
  const cplx phase = std::polar(1.0, -0.25 * kPi);
  for (std::size_t k = z; k < fg.n; ++k)
    weighted.values[k] = K * std::sqrt(fg.w(k)) * phase * xi.values[k];

  SampledSignal E = inverse_fourier(weighted);
  const double scale = std::sqrt(2.0 * kPi);
  for (auto& v : E.values) v *= scale;
  return E;
}

FieldFunctions make_field_functions(const PulseModePair& modes, double K) {
  return {pulse_mode_field(modes.xi1, K), pulse_mode_field(modes.xi2, K), K};
}

AuxiliaryFunctions build_f_functions(const FieldFunctions& fields, double C,
                                     double M) {
  if (!(C > 1.0))
    throw std::invalid_argument("build_f_functions: C must exceed 1");
  const TimeGrid& grid = fields.E1.grid;
  if (!(fields.E2.grid == grid))
    throw std::invalid_argument("build_f_functions: field grids differ");

  const double pref = C / std::sqrt(C * C - 1.0);
  AuxiliaryFunctions aux;
  aux.C = C;
  aux.M = M;
  aux.f0 = {grid, std::vector<cplx>(grid.n)};
  aux.f1 = {grid, std::vector<cplx>(grid.n)};
  aux.f2 = {grid, std::vector<cplx>(grid.n)};
  for (std::size_t i = 0; i < grid.n; ++i) {
    const cplx e1 = fields.E1.values[i];
    const cplx e2 = fields.E2.values[i];
    aux.f0.values[i] = pref * (std::conj(e1) - e2 / C);
    aux.f1.values[i] = pref * (e1 + std::conj(e2) / C);
    aux.f2.values[i] = pref * (e2 + std::conj(e1) / C);
  }

  double peak = 0.0, residual = 0.0;
  for (std::size_t i = 0; i < grid.n; ++i) {
    const double a = std::abs(aux.f1.values[i]);
    peak = std::max(peak, a);
    if (grid.t(i) < 0.0) residual = std::max(residual, a);
  }
  if (residual > 1e-6 * peak)
    throw InvariantError("build_f_functions: f1 does not vanish for t < 0");
  return aux;
}

double localized_two_time(const AuxiliaryFunctions& aux, double t1, double t2) {
  const cplx f1a = aux.f1.value_at(t1);
  const cplx f1b = aux.f1.value_at(t2);
  if (f1a == 0.0 && f1b == 0.0) return 0.0;
  const double c2 = aux.C * aux.C;
  const double alpha = 4.0 * c2 / (c2 - 1.0);
  const cplx ha = aux.f0.value_at(t1) + 2.0 * aux.M * aux.f2.value_at(t1);
  const cplx hb = aux.f0.value_at(t2) + 2.0 * aux.M * aux.f2.value_at(t2);
  return (alpha * f1a * std::conj(f1b) - f1a * hb - f1b * ha).real();
}

namespace {

class LocalizedKernel final : public TwoTimeKernel {
 public:
  explicit LocalizedKernel(AuxiliaryFunctions aux) : aux_(std::move(aux)) {
    const double c2 = aux_.C * aux_.C;
    alpha_ = 4.0 * c2 / (c2 - 1.0);
    h_.resize(aux_.f0.values.size());
    for (std::size_t i = 0; i < h_.size(); ++i)
      h_[i] = aux_.f0.values[i] + 2.0 * aux_.M * aux_.f2.values[i];
  }

  double eval(double t1, double t2) const override {
    const TimeGrid& g = aux_.f1.grid;
    const long i = lookup(t1, g);
    const long j = lookup(t2, g);
    const cplx f1a = i < 0 ? cplx{} : aux_.f1.values[i];
    const cplx f1b = j < 0 ? cplx{} : aux_.f1.values[j];
    if (f1a == 0.0 && f1b == 0.0) return 0.0;
    const cplx ha = i < 0 ? cplx{} : h_[i];
    const cplx hb = j < 0 ? cplx{} : h_[j];
    return (alpha_ * f1a * std::conj(f1b) - f1a * hb - f1b * ha).real();
  }

  Kind kind() const override { return Kind::localized_state; }
  const TimeGrid& grid() const override { return aux_.f1.grid; }

 private:
  static long lookup(double t, const TimeGrid& g) {
    const double q = (t - g.t_min) / g.dt;
    const double r = std::round(q);
    if (std::abs(q - r) > 1e-4)
      throw std::invalid_argument("kernel: time not on grid");
    if (r < 0.0 || r >= static_cast<double>(g.n)) return -1;
    return static_cast<long>(r);
  }

  AuxiliaryFunctions aux_;
  std::vector<cplx> h_;
  double alpha_ = 0.0;
};

class RankOneKernel final : public TwoTimeKernel {
 public:
  RankOneKernel(SampledSignal field, Kind kind)
      : field_(std::move(field)), kind_(kind) {}

  double eval(double t1, double t2) const override {
    const cplx a = field_.value_at(t1);
    if (a == 0.0) return 0.0;
    const cplx b = field_.value_at(t2);
    return 2.0 * (a * std::conj(b)).real();
  }

  Kind kind() const override { return kind_; }
  const TimeGrid& grid() const override { return field_.grid; }
  const SampledSignal* factor() const override { return &field_; }

 private:
  SampledSignal field_;
  Kind kind_;
};

}  // namespace

std::unique_ptr<TwoTimeKernel> make_localized_kernel(AuxiliaryFunctions aux) {
  return std::make_unique<LocalizedKernel>(std::move(aux));
}

std::unique_ptr<TwoTimeKernel> make_single_photon_kernel(
    const FieldFunctions& fields) {
  return std::make_unique<RankOneKernel>(fields.E1,
                                         TwoTimeKernel::Kind::single_photon);
}

std::unique_ptr<TwoTimeKernel> make_truncated_kernel(
    const FieldFunctions& fields) {
  SampledSignal cut = fields.E1;
  for (std::size_t i = 0; i < cut.grid.n; ++i)
    if (cut.grid.t(i) < 0.0) cut.values[i] = 0.0;
  return std::make_unique<RankOneKernel>(
      std::move(cut), TwoTimeKernel::Kind::truncated_approximation);
}

SampledSignal energy_density_trace(const TwoTimeKernel& kernel) {
  const TimeGrid& g = kernel.grid();
  SampledSignal trace{g, std::vector<cplx>(g.n)};
  for (std::size_t i = 0; i < g.n; ++i) {
    const double t = g.t(i);
    trace.values[i] = kernel.eval(t, t);
  }
  return trace;
}

}  // namespace sloq
