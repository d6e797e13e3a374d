#pragma once

#include <memory>

#include "sloq/state.hpp"

namespace sloq {

/// Time-domain mode fields E_n(t) for the two pulse modes. K is the overall
/// field scale (default 1, arbitrary units).
struct FieldFunctions {
  SampledSignal E1;
  SampledSignal E2;
  double K = 1.0;
};

/// E(t) = Int_0^inf K sqrt(-i w) xi(w) exp(-i w t) dw with the branch
/// sqrt(-i w) = sqrt(w) exp(-i pi/4) on w > 0.
SampledSignal pulse_mode_field(const SpectralFunction& xi, double K = 1.0);

FieldFunctions make_field_functions(const PulseModePair& modes, double K = 1.0);

/// f0 = (C/sqrt(C^2-1)) (conj(E1) - E2/C)
/// f1 = (C/sqrt(C^2-1)) (E1 + conj(E2)/C)   -- vanishes for t < 0
/// f2 = (C/sqrt(C^2-1)) (E2 + conj(E1)/C)
struct AuxiliaryFunctions {
  SampledSignal f0;
  SampledSignal f1;
  SampledSignal f2;
  double C = 0.0;
  double M = 0.0;
};

AuxiliaryFunctions build_f_functions(const FieldFunctions& fields, double C,
                                     double M);

/// Normal-ordered two-time correlation of the localized state,
///   Re{ 4C^2/(C^2-1) f1(t1) conj(f1(t2))
///       - f1(t1) (f0(t2) + 2 M f2(t2)) - f1(t2) (f0(t1) + 2 M f2(t1)) }.
double localized_two_time(const AuxiliaryFunctions& aux, double t1, double t2);

/// Evaluator of <:E(t1) E(t2):> for one representation of the input state.
class TwoTimeKernel {
 public:
  enum class Kind { localized_state, single_photon, truncated_approximation };

  virtual ~TwoTimeKernel() = default;
  virtual double eval(double t1, double t2) const = 0;
  virtual Kind kind() const = 0;
  virtual const TimeGrid& grid() const = 0;

  /// Rank-one factor E with kernel = 2 Re{E(t1) conj(E(t2))}, when the
  /// representation has one (single photon, truncated); nullptr otherwise.
  virtual const SampledSignal* factor() const { return nullptr; }

  double operator()(double t1, double t2) const { return eval(t1, t2); }
};

std::unique_ptr<TwoTimeKernel> make_localized_kernel(AuxiliaryFunctions aux);
std::unique_ptr<TwoTimeKernel> make_single_photon_kernel(
    const FieldFunctions& fields);
std::unique_ptr<TwoTimeKernel> make_truncated_kernel(
    const FieldFunctions& fields);

inline double energy_density(const TwoTimeKernel& kernel, double t) {
  return kernel.eval(t, t);
}

/// kernel(t, t) over the kernel's own grid.
SampledSignal energy_density_trace(const TwoTimeKernel& kernel);

}  // namespace sloq
