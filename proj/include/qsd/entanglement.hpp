#pragma once

// Entanglement functionals: negativity and the negative-eigenvalue fraction
// of the partial transpose for mixed states, and the Tr sqrt(rho) negativity
// and G-concurrence for bipartite pure states.
//
// Negativity here is the standard (||rho^T_A||_1 - 1)/2 = sum of |negative
// eigenvalues|; the asymptotic c=1 value 0.080 and the pure-state rate
// (8/(3 pi))^2 / 2 both refer to this normalization.

#include <qsd/linalg.hpp>

#include <cmath>

namespace qsd {

inline RealVector partial_transpose_eigenvalues(const DensityMatrix& rho) {
  return eigenvalues(partial_transpose(rho).matrix());
}

inline double negativity(const DensityMatrix& rho) {
  RealVector vals = partial_transpose_eigenvalues(rho);
  double sum = 0.0;
  for (Index i = 0; i < vals.size(); ++i)
    if (vals[i] < 0.0) sum -= vals[i];
  return sum;
}

inline double negative_fraction(const DensityMatrix& rho) {
  RealVector vals = partial_transpose_eigenvalues(rho);
  const double tol = 1e-12 * std::max(1.0, vals.cwiseAbs().maxCoeff());
  Index count = 0;
  for (Index i = 0; i < vals.size(); ++i)
    if (vals[i] < -tol) ++count;
  return static_cast<double>(count) / static_cast<double>(vals.size());
}

// ((Tr sqrt(rho_A))^2 - 1)/2 with rho_A the reduction of psi.
inline double pure_negativity(const PureState& psi) {
  const DensityMatrix rho = reduce_to_a(psi);
  RealVector vals = eigenvalues(rho.matrix()).cwiseMax(0.0);
  const double tr_sqrt = vals.cwiseSqrt().sum();
  return 0.5 * (tr_sqrt * tr_sqrt - 1.0);
}

// G = N (det rho_A)^(1/N); zero for rank-deficient reductions.
inline double g_concurrence(const PureState& psi) {
  const DensityMatrix rho = reduce_to_a(psi);
  RealVector vals = eigenvalues(rho.matrix());
  const Index n = vals.size();
  double log_sum = 0.0;
  for (Index i = 0; i < n; ++i) {
    if (vals[i] <= psd_tol) return 0.0;
    log_sum += std::log(vals[i]);
  }
  return static_cast<double>(n) * std::exp(log_sum / static_cast<double>(n));
}

// 1/N sum_ij |ii><jj|.
inline DensityMatrix maximally_entangled_state(Index n) {
  Vector v = Vector::Zero(n * n);
  for (Index i = 0; i < n; ++i) v[i * n + i] = 1.0 / std::sqrt(static_cast<double>(n));
  return PureState(std::move(v), BipartiteSplit{n, n}).projector();
}

}  // namespace qsd
