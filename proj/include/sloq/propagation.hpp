#pragma once

#include "sloq/field.hpp"
#include "sloq/filters.hpp"

namespace sloq {

/// out(t) = sum_nm c_n c_m kernel(t - tau_n, t - tau_m), the filtered
/// normal-ordered energy density. Kernel symmetry halves the pair loop.
/// Delays must land on the kernel/output lattice.
SampledSignal propagate_delta_train(const TwoTimeKernel& kernel,
                                    const DeltaTrain& train,
                                    const TimeGrid& out_grid);

/// Double quadrature of kappa(tau1) kappa(tau2) kernel(t - tau1, t - tau2)
/// over the sampled impulse response; reduces exactly to 2 |(kappa * E)(t)|^2
/// for rank-one kernels. kappa_t must vanish for t < 0.
SampledSignal propagate_convolution(const TwoTimeKernel& kernel,
                                    const SampledSignal& kappa_t,
                                    const TimeGrid& out_grid);

/// Places each train impulse on the grid as coeff/dt at its delay sample.
SampledSignal sampled_impulse_response(const DeltaTrain& train,
                                       const TimeGrid& grid);

double max_abs(const SampledSignal& trace);
double max_abs_before(const SampledSignal& trace, double t_cut);
double peak_time(const SampledSignal& trace);
/// First time the trace magnitude exceeds fraction * peak.
double leading_edge_time(const SampledSignal& trace, double fraction = 1e-4);

/// Filtered output traces for the three representations of the same pulse.
struct RepresentationComparison {
  SampledSignal localized;
  SampledSignal single_photon;
  SampledSignal truncated;
};

RepresentationComparison compare_representations(const TwoTimeKernel& localized,
                                                 const TwoTimeKernel& single_photon,
                                                 const TwoTimeKernel& truncated,
                                                 const DeltaTrain& train,
                                                 const TimeGrid& out_grid);

}  // namespace sloq
