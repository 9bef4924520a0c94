#pragma once

// Coherence functionals with respect to a fixed basis: the coarse-graining
// channel, relative entropy of coherence, L1 coherence, the contradiagonal
// form, and the pooled off-diagonal histogram of random mixed states.

#include <qsd/distances.hpp>
#include <qsd/ensembles.hpp>

#include <numbers>

namespace qsd {

// Deletes off-diagonal elements; idempotent full decoherence.
inline DensityMatrix coarse_grain(const DensityMatrix& rho) {
  Matrix d = rho.matrix().diagonal().asDiagonal();
  return DensityMatrix(std::move(d));
}

// S(diag rho) - S(rho) in nats; lies in [0, ln N].
inline double rel_ent_coherence(const DensityMatrix& rho) {
  RealVector diag = rho.matrix().diagonal().real();
  const double s_diag = entropy_of_values(diag);
  return std::max(s_diag - von_neumann_entropy(rho), 0.0);
}

// Sum of off-diagonal moduli.
inline double l1_coherence(const DensityMatrix& rho) {
  const Matrix& m = rho.matrix();
  double sum = 0.0;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (i != j) sum += std::abs(m(i, j));
  return sum;
}

// Unitary Fourier matrix F_jk = exp(2 pi i jk / n) / sqrt(n); the complex
// Hadamard used to build the contradiagonal basis.
inline Matrix fourier_matrix(Index n) {
  Matrix f(n, n);
  const double w = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (Index j = 0; j < n; ++j)
    for (Index k = 0; k < n; ++k)
      f(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(n)),
                           w * static_cast<double>(j) * static_cast<double>(k));
  return f;
}

// rho_C = U_max^dag rho U_max with U_max = U_min F: same spectrum, all
// diagonal entries 1/N, maximal relative entropy of coherence.
inline DensityMatrix contradiagonal_form(const DensityMatrix& rho) {
  const EigResult eig = eig_hermitian(rho);
  const Matrix umax = eig.vectors * fourier_matrix(rho.dim());
  Matrix out = umax.adjoint() * rho.matrix() * umax;
  return DensityMatrix(((out + out.adjoint()) / 2.0).eval(), rho.split(), 1e-9);
}

struct OffdiagHistogram {
  Histogram hist;
  double mean = 0.0;
  std::vector<double> pooled;  // rescaled moduli
};

// Pools y = sqrt(N) |(N rho)_ij|, i < j, over induced-measure states. The
// normalized state's off-diagonals scale as N^(-3/2); this rescaling makes
// the complex case |CN(0,1)| (density 2y exp(-y^2)) and the real case chi_1.
inline OffdiagHistogram offdiag_histogram(Field field, int n, int samples, RandomStream& stream,
                                          std::size_t bins = 60, double hi = 4.0) {
  OffdiagHistogram out{Histogram(0.0, hi, bins)};
  const double scale = std::pow(static_cast<double>(n), 1.5);
  for (int s = 0; s < samples; ++s) {
    RandomStream sub(stream.master_seed(), stream.stream_index() * 1000003ull + s);
    const DensityMatrix rho = sample_hs(n, sub, field);
    const Matrix& m = rho.matrix();
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j) {
        const double y = scale * std::abs(m(i, j));
        out.hist.add(y);
        out.pooled.push_back(y);
      }
  }
  out.mean = mean_stderr(out.pooled).mean;
  return out;
}

// Limit densities for the off-diagonal moduli.
inline double offdiag_density_complex(double y) {
  return y < 0.0 ? 0.0 : 2.0 * y * std::exp(-y * y);
}
inline double offdiag_density_real(double y) {
  return y < 0.0 ? 0.0 : std::sqrt(2.0 / std::numbers::pi) * std::exp(-y * y / 2.0);
}
inline double offdiag_cdf_complex(double y) { return y < 0.0 ? 0.0 : 1.0 - std::exp(-y * y); }
inline double offdiag_cdf_real(double y) {
  return y < 0.0 ? 0.0 : std::erf(y / std::sqrt(2.0));
}

}  // namespace qsd
