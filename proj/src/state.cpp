#include "sloq/state.hpp"

#include <cmath>
#include <stdexcept>

#include "sloq/errors.hpp"

namespace sloq {

namespace {

// Trapezoid of w(k) * f(k) over the positive-frequency half [0, w_max].
template <typename F>
cplx positive_half_sum(const SpectralFunction& G, F&& term) {
  const std::size_t z = G.grid.zero_index();
  const std::size_t last = G.grid.n - 1;
  cplx acc = 0.5 * (term(z) + term(last));
  for (std::size_t k = z + 1; k < last; ++k) acc += term(k);
  return acc * G.grid.dw;
}

}  // namespace

cplx compute_overlap_I(const SpectralFunction& G) {
  const double denom = quadrature_norm2(G);
  if (!(denom > 0.0))
    throw std::invalid_argument("compute_overlap_I: zero-norm spectrum");
  const cplx num = positive_half_sum(G, [&](std::size_t k) {
    return G.values[k] * G.values[G.grid.reflect(k)];
  });
  return num / denom;
}

cplx compute_beta(cplx I) {
  const double m = std::abs(I);
  if (m > 0.5 + 1e-12)
    throw std::invalid_argument(
        "compute_beta: |I| > 1/2 signals a corrupted spectrum or quadrature "
        "failure");
  if (m < 1e-14) return {0.0, 0.0};
  const double disc = std::sqrt(std::max(0.0, 1.0 - 4.0 * m * m));
  return (1.0 - disc) / (2.0 * std::conj(I));
}

ModifiedSpectrum modify_spectrum(const SpectralFunction& G) {
  const cplx I = compute_overlap_I(G);
  const cplx beta = compute_beta(I);
  if (std::abs(beta) > 1.0 + 1e-12)
    throw InvariantError("modify_spectrum: |beta| exceeds 1");

  SpectralFunction gt = G;
  for (std::size_t k = 0; k < gt.grid.n; ++k)
    gt.values[k] = G.values[k] - beta * std::conj(G.values[G.grid.reflect(k)]);

  const double nrm = std::sqrt(quadrature_norm2(gt));
  if (!(nrm > 0.0))
    throw InvariantError("modify_spectrum: modification annihilated the spectrum");
  for (auto& v : gt.values) v /= nrm;

  const cplx residual = compute_overlap_I(gt);
  if (std::abs(residual) > 1e-10)
    throw InvariantError("modify_spectrum: overlap of the modified spectrum "
                         "did not vanish");
  return {std::move(gt), beta, I, residual};
}

PulseModePair split_modes(const ModifiedSpectrum& mod) {
  const SpectralFunction& gt = mod.g_tilde;
  const FrequencyGrid& fg = gt.grid;
  const std::size_t z = fg.zero_index();

  const double total = quadrature_norm2(gt);
  const double neg = quadrature_norm2(gt, Interval{fg.w_min, 0.0});
  const double eta = neg / total;
  if (eta < 1e-14)
    throw std::invalid_argument("split_modes: eta = 0 (degenerate seed; a "
                                "strictly causal spectrum cannot also be "
                                "one-sided)");
  if (eta >= 0.5)
    throw std::invalid_argument("split_modes: eta >= 1/2 lies outside the "
                                "squeezed-pair regime (C <= 1)");

  // xi1 keeps the positive half of g_tilde; xi2 is the conjugated reflection
  // of the negative half, which makes <xi1|xi2> vanish by the beta step and
  // keeps cosh(g) E1 + sinh(g) conj(E2) supported on t >= 0.
  const double s1 = std::sqrt((1.0 - eta) * total);
  const double s2 = std::sqrt(eta * total);
  SpectralFunction xi1{fg, gt.time, std::vector<cplx>(fg.n)};
  SpectralFunction xi2{fg, gt.time, std::vector<cplx>(fg.n)};
  for (std::size_t k = z; k < fg.n; ++k) {
    xi1.values[k] = gt.values[k] / s1;
    xi2.values[k] = std::conj(gt.values[fg.reflect(k)]) / s2;
  }

  const Interval pos{0.0, fg.w_max()};
  if (std::abs(quadrature_norm2(xi1, pos) - 1.0) > 1e-10 ||
      std::abs(quadrature_norm2(xi2, pos) - 1.0) > 1e-10)
    throw InvariantError("split_modes: pulse modes failed normalization");

  const cplx overlap = positive_half_sum(xi1, [&](std::size_t k) {
    return std::conj(xi1.values[k]) * xi2.values[k];
  });

  return {std::move(xi1), std::move(xi2), eta, overlap};
}

SqueezeParameters squeeze_parameters(double eta) {
  if (!(eta > 0.0) || eta >= 0.5)
    throw std::invalid_argument("squeeze_parameters: eta must lie in (0, 1/2)");
  const double C = std::sqrt((1.0 - eta) / eta);
  const double gamma = std::atanh(std::sqrt(eta / (1.0 - eta)));

  const double r = 1.0 / (C * C);
  double sum = 0.0;
  double power = C;  // C^(1-2n) at n = 0
  double term = 0.0;
  int n = 0;
  for (;; ++n) {
    term = power * std::sqrt(static_cast<double>(n) * (n + 1.0));
    sum += term;
    power *= r;
    if (n >= 2 && term < 1e-16 * sum) break;
    if (n > 200000)
      throw InvariantError("squeeze_parameters: M series failed to converge");
  }
  // Remaining terms are below term * ratio^k with ratio = r * sqrt(1 + 2/n).
  const double ratio = r * std::sqrt((n + 2.0) / n);
  const double tail = term * ratio / (1.0 - ratio);
  if (!(tail <= 1e-14 * sum))
    throw InvariantError("squeeze_parameters: M series tail bound exceeded");

  const double M = (1.0 - r) * sum;
  return {gamma, C, M};
}

double fidelity_approx(double eta) { return 1.0 - (1.5 - std::sqrt(2.0)) * eta; }

LocalizedStateModel build_localized_state(const SampledSignal& seed) {
  const SpectralFunction G = forward_fourier(seed);
  ModifiedSpectrum mod = modify_spectrum(G);
  PulseModePair modes = split_modes(mod);
  const SqueezeParameters sq = squeeze_parameters(modes.eta);
  return {std::move(modes), sq.gamma, sq.C,
          sq.M,             mod.beta, mod.overlap_input,
          mod.overlap_residual};
}

}  // namespace sloq
