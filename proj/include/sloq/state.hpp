#pragma once

#include "sloq/signal.hpp"

namespace sloq {

/// Spectrum after the modification G -> G - beta * conj(G(-w)), which zeroes
/// the plain overlap between the two frequency half-lines while keeping the
/// time-domain signal causal. Stored with unit full-line norm.
struct ModifiedSpectrum {
  SpectralFunction g_tilde;
  cplx beta;
  cplx overlap_input;     // I of the input spectrum
  cplx overlap_residual;  // I of g_tilde; ~0 by construction
};

/// I = [Int_0^inf G(w) G(-w) dw] / [Int |G|^2 dw]. Always |I| <= 1/2.
cplx compute_overlap_I(const SpectralFunction& G);

/// Smaller root of beta^2 conj(I) - beta + I = 0; the removable singularity
/// at I = 0 returns 0.
cplx compute_beta(cplx I);

ModifiedSpectrum modify_spectrum(const SpectralFunction& G);

/// Orthonormal positive-frequency mode pair carved out of a modified
/// spectrum, plus the negative-frequency norm fraction eta.
struct PulseModePair {
  SpectralFunction xi1;  // support w >= 0, unit norm
  SpectralFunction xi2;  // support w >= 0, unit norm
  double eta = 0.0;
  cplx mode_overlap;     // Int_0^inf conj(xi1) xi2 dw, diagnostic only
};

PulseModePair split_modes(const ModifiedSpectrum& mod);

struct SqueezeParameters {
  double gamma = 0.0;  // tanh(gamma) = sqrt(eta / (1 - eta))
  double C = 0.0;      // C^2 = (1 - eta) / eta
  double M = 0.0;      // ((C^2-1)/C^2) sum_n C^(1-2n) sqrt(n(n+1))
};

SqueezeParameters squeeze_parameters(double eta);

/// First-order fidelity expansion 1 - (3/2 - sqrt(2)) * eta.
double fidelity_approx(double eta);

struct LocalizedStateModel {
  PulseModePair modes;
  double gamma = 0.0;
  double C = 0.0;
  double M = 0.0;
  cplx beta;
  cplx overlap_input;
  cplx overlap_residual;
};

/// Runs the full construction chain on a causal seed signal.
LocalizedStateModel build_localized_state(const SampledSignal& seed);

}  // namespace sloq
