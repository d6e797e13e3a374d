#pragma once

#include <Eigen/Dense>

#include "sloq/signal.hpp"

namespace sloq::fock {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline int dim(int n_max) { return (n_max + 1) * (n_max + 1); }
inline int index(int n1, int n2, int n_max) { return n1 * (n_max + 1) + n2; }

/// Annihilation operators on the two-mode number basis |n1 n2>.
Matrix ladder1(int n_max);
Matrix ladder2(int n_max);

/// Bare number-raising isometry sum_n |n+1><n| on mode 1 (top level dropped
/// at the truncation boundary).
Matrix raising_isometry1(int n_max);

/// S = exp(gamma a1 a2 - gamma a1† a2†). The generator conserves n1 - n2, so
/// each fixed-difference block is exponentiated separately (exactly
/// orthogonal on the retained space). Throws when n_max cannot hold the
/// squeezed vacuum within the truncation budget.
Matrix two_mode_squeeze(double gamma, int n_max);

struct FockState {
  int n_max = 0;
  Vector amplitudes;
  double truncation_loss = 0.0;

  /// Amplitude on the ladder state |k, k-1>, k >= 1.
  cplx ladder_coefficient(int k) const;
  /// Squared norm off the |k+1, k> ladder (should be ~0 for eta states).
  double off_ladder_norm2() const;
};

FockState vacuum_state(int n_max);

/// Brute-force amplitudes of S† A1† S |0>.
FockState build_eta_state(double eta, int n_max);

/// |c1| = |<1,0|eta state>|.
double fidelity_oracle(double eta, int n_max);

/// Quadratic moments of a two-mode state: s_ij = <a_i a_j>, n_ij = <a_i† a_j>.
struct QuadraticMoments {
  cplx s11, s12, s22;
  cplx n11, n12, n21, n22;
};

QuadraticMoments quadratic_moments(const FockState& psi);

/// <psi| :E(t1) E(t2): |psi> with E+(t) = E1(t) a1 + E2(t) a2, normal order
/// applied symbolically (daggers left of annihilators) before evaluation.
double oracle_two_time(const QuadraticMoments& m, cplx e1_t1, cplx e2_t1,
                       cplx e1_t2, cplx e2_t2);
double oracle_two_time(const FockState& psi, const SampledSignal& E1,
                       const SampledSignal& E2, double t1, double t2);

}  // namespace sloq::fock
