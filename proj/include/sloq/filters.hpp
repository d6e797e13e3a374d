#pragma once

#include <cstddef>
#include <vector>

#include "sloq/signal.hpp"

namespace sloq {

/// Causal impulse response as uniformly spaced weighted delays: coefficient
/// coeffs[k] at time k * spacing.
struct DeltaTrain {
  double spacing = 0.0;
  std::vector<double> coeffs;

  std::size_t size() const { return coeffs.size(); }
  double delay(std::size_t k) const { return spacing * static_cast<double>(k); }
  double duration() const {
    return coeffs.empty() ? 0.0 : delay(coeffs.size() - 1);
  }
  double coeff_sum() const;
  double power_sum() const;  // sum of c_k^2; <= 1 for a passive filter
};

/// Two identical lossless reflectors with power reflectance R separated by d
/// (c = 1), no phase shift on the interior reflections. Reference planes of
/// input and output coincide, so kappa(0) phase carries no transit delay.
class FabryPerot {
 public:
  FabryPerot(double reflectance, double spacing);

  double phase(double w) const { return 2.0 * w * d_; }  // round-trip phase
  cplx kappa(double w) const;                            // (1-R)/(1-R e^{i phi})
  cplx rho(double w) const;
  double group_delay(double w) const;     // d(arg kappa)/dw, closed form
  double group_velocity(double w) const;  // over the physical gap d
  DeltaTrain delta_train(double tol) const;

  double reflectance() const { return R_; }
  double spacing() const { return d_; }

 private:
  double R_;
  double d_;
};

struct Mat2 {
  cplx a, b, c, d;  // row-major [[a, b], [c, d]]
};

Mat2 operator*(const Mat2& x, const Mat2& y);

/// Characteristic matrix of a dielectric layer with refractive index n and
/// phase thickness delta: [[cos d, -i sin d / n], [-i n sin d, cos d]].
Mat2 layer_matrix(double n, double delta);

/// N-th power of a unimodular 2x2 matrix via second-kind Chebyshev
/// polynomials of a = (m11 + m22)/2, evaluated by their recurrence (exact in
/// the degenerate |a| = 1 case as well).
Mat2 unimodular_power(const Mat2& cell, int n_periods);

struct StackResponse {
  cplx kappa;
  cplx rho;
};

/// Quarter-wave stack of alternating indices n1, n2 between vacuum
/// half-spaces; every layer has phase thickness (pi/2)(w/w0). The returned
/// kappa has the pure forward-transit delay layers*pi/(2 w0) removed, which
/// makes the response periodic-in-w causal with its first impulse at t = 0.
class QuarterWaveStack {
 public:
  QuarterWaveStack(double n1, double n2, int layers, double omega0);

  double phase_thickness(double w) const {
    return 0.5 * kPi * w / omega0_;
  }
  double transit_delay() const;  // layers * pi / (2 w0)

  StackResponse response(double w) const;            // direct layer product
  StackResponse response_chebyshev(double w) const;  // pair-cell power form
  double group_delay(double w, double step = 1e-6) const;

  /// Fourier-series impulse response over one 2*w0 period: delays k*pi/w0.
  /// k_terms is the sampling size (power of two); coefficients below
  /// tol * max are trimmed from the tail.
  DeltaTrain delta_train(std::size_t k_terms, double tol) const;

  double n1() const { return n1_; }
  double n2() const { return n2_; }
  int layers() const { return layers_; }
  double omega0() const { return omega0_; }

 private:
  StackResponse from_matrix(const Mat2& m, double w) const;

  double n1_;
  double n2_;
  int layers_;
  double omega0_;
};

}  // namespace sloq
