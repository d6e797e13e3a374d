#include "sloq/fock.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace sloq::fock {

namespace {

Eigen::MatrixXd single_mode_ladder(int n_max) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

// kron(x, y) on the |n1 n2> ordering with n2 fastest.
Matrix kron(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  const int p = static_cast<int>(x.rows());
  const int q = static_cast<int>(y.rows());
  Matrix out = Matrix::Zero(p * q, p * q);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      if (x(i, j) == 0.0) continue;
      for (int k = 0; k < q; ++k)
        for (int l = 0; l < q; ++l)
          if (y(k, l) != 0.0) out(i * q + k, j * q + l) = x(i, j) * y(k, l);
    }
  return out;
}

}  // namespace

Matrix ladder1(int n_max) {
  if (n_max < 1) throw std::invalid_argument("ladder1: n_max too small");
  return kron(single_mode_ladder(n_max),
              Eigen::MatrixXd::Identity(n_max + 1, n_max + 1));
}

Matrix ladder2(int n_max) {
  if (n_max < 1) throw std::invalid_argument("ladder2: n_max too small");
  return kron(Eigen::MatrixXd::Identity(n_max + 1, n_max + 1),
              single_mode_ladder(n_max));
}

Matrix raising_isometry1(int n_max) {
  if (n_max < 1) throw std::invalid_argument("raising_isometry1: n_max too small");
  const int d = dim(n_max);
  Matrix out = Matrix::Zero(d, d);
  for (int n1 = 0; n1 < n_max; ++n1)
    for (int n2 = 0; n2 <= n_max; ++n2)
      out(index(n1 + 1, n2, n_max), index(n1, n2, n_max)) = 1.0;
  return out;
}

Matrix two_mode_squeeze(double gamma, int n_max) {
  if (gamma < 0.0) throw std::invalid_argument("two_mode_squeeze: gamma < 0");
  if (n_max < 2) throw std::invalid_argument("two_mode_squeeze: n_max too small");
  const double th = std::tanh(gamma);
  if (std::pow(th, 2 * n_max) > 1e-10)
    throw std::invalid_argument(
        "two_mode_squeeze: n_max too small for gamma (squeezed-vacuum "
        "truncation loss exceeds budget)");

  // The generator gamma (a1 a2 - a1† a2†) conserves q = n1 - n2. Each fixed-q
  // block is a real antisymmetric tridiagonal matrix; exponentiate blockwise
  // (scaling-and-squaring per block) and scatter into the dense operator.
  const int d = dim(n_max);
  Matrix S = Matrix::Zero(d, d);
  for (int q = -n_max; q <= n_max; ++q) {
    const int lo1 = std::max(q, 0);  // smallest n1 in the block
    const int len = n_max - std::abs(q) + 1;
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(len, len);
    for (int j = 0; j + 1 < len; ++j) {
      const int n1 = lo1 + j + 1;  // upper state of the bond
      const int n2 = n1 - q;
      const double amp =
          gamma * std::sqrt(static_cast<double>(n1) * static_cast<double>(n2));
      gen(j, j + 1) = amp;    // a1 a2 lowers both modes
      gen(j + 1, j) = -amp;   // -a1† a2† raises both modes
    }
    const Eigen::MatrixXd block = gen.exp();
    for (int jj = 0; jj < len; ++jj) {
      const int col = index(lo1 + jj, lo1 - q + jj, n_max);
      for (int ii = 0; ii < len; ++ii)
        S(index(lo1 + ii, lo1 - q + ii, n_max), col) = block(ii, jj);
    }
  }
  return S;
}

cplx FockState::ladder_coefficient(int k) const {
  if (k < 1 || k > n_max) throw std::invalid_argument("ladder_coefficient: k");
  return amplitudes(index(k, k - 1, n_max));
}

double FockState::off_ladder_norm2() const {
  double acc = 0.0;
  for (int n1 = 0; n1 <= n_max; ++n1)
    for (int n2 = 0; n2 <= n_max; ++n2)
      if (n1 != n2 + 1) acc += std::norm(amplitudes(index(n1, n2, n_max)));
  return acc;
}

FockState vacuum_state(int n_max) {
  Vector v = Vector::Zero(dim(n_max));
  v(index(0, 0, n_max)) = 1.0;
  return {n_max, std::move(v), 0.0};
}

FockState build_eta_state(double eta, int n_max) {
  if (!(eta > 0.0) || eta >= 0.5)
    throw std::invalid_argument("build_eta_state: eta must lie in (0, 1/2)");
  const double gamma = std::atanh(std::sqrt(eta / (1.0 - eta)));
  const Matrix S = two_mode_squeeze(gamma, n_max);
  Vector v = S.col(index(0, 0, n_max));
  v = raising_isometry1(n_max) * v;
  v = S.adjoint() * v;
  const double loss = 1.0 - v.squaredNorm();
  if (loss > 1e-10)
    throw std::invalid_argument(
        "build_eta_state: truncation-loss budget exceeded; raise n_max");
  return {n_max, std::move(v), loss};
}

double fidelity_oracle(double eta, int n_max) {
  return std::abs(build_eta_state(eta, n_max).ladder_coefficient(1));
}

QuadraticMoments quadratic_moments(const FockState& psi) {
  const Matrix a1 = ladder1(psi.n_max);
  const Matrix a2 = ladder2(psi.n_max);
  const Vector v1 = a1 * psi.amplitudes;
  const Vector v2 = a2 * psi.amplitudes;
  const Vector v11 = a1 * v1;
  const Vector v12 = a1 * v2;  // equals a2 * v1 exactly
  const Vector v22 = a2 * v2;
  QuadraticMoments m;
  m.s11 = psi.amplitudes.dot(v11);
  m.s12 = psi.amplitudes.dot(v12);
  m.s22 = psi.amplitudes.dot(v22);
  m.n11 = v1.dot(v1);
  m.n12 = v1.dot(v2);
  m.n21 = std::conj(m.n12);
  m.n22 = v2.dot(v2);
  return m;
}

double oracle_two_time(const QuadraticMoments& m, cplx e1_t1, cplx e2_t1,
                       cplx e1_t2, cplx e2_t2) {
  // :E(t1)E(t2): = E+E+ + E-E- + E-(t1)E+(t2) + E-(t2)E+(t1); the E-E- term
  // conjugates E+E+ and the two cross terms conjugate each other.
  const cplx anomalous = e1_t1 * e1_t2 * m.s11 +
                         (e1_t1 * e2_t2 + e2_t1 * e1_t2) * m.s12 +
                         e2_t1 * e2_t2 * m.s22;
  const cplx normal = std::conj(e1_t1) * e1_t2 * m.n11 +
                      std::conj(e1_t1) * e2_t2 * m.n12 +
                      std::conj(e2_t1) * e1_t2 * m.n21 +
                      std::conj(e2_t1) * e2_t2 * m.n22;
  return 2.0 * (anomalous + normal).real();
}

double oracle_two_time(const FockState& psi, const SampledSignal& E1,
                       const SampledSignal& E2, double t1, double t2) {
  const QuadraticMoments m = quadratic_moments(psi);
  return oracle_two_time(m, E1.value_at(t1), E2.value_at(t1), E1.value_at(t2),
                         E2.value_at(t2));
}

}  // namespace sloq::fock
