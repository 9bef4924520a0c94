#pragma once

// Distinguishability measures for density matrices and classical probability
// vectors: trace / Hilbert-Schmidt / operator-norm distances, fidelity and
// its relatives (Bures, Hellinger, entropic), quantum Jensen-Shannon
// divergence, relative entropy, and the Chernoff function.
//
// Natural logarithms throughout. Two Hilbert-Schmidt conventions are
// exposed under distinct names: hs_distance carries the 1/2 inside the
// square root, hs_norm_distance is the plain 2-norm of the difference.

#include <qsd/ensembles.hpp>
#include <qsd/limit_laws.hpp>
#include <qsd/stats.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace qsd {

namespace detail {

inline void require_same_dim(const DensityMatrix& rho, const DensityMatrix& sigma,
                             const char* where) {
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument(std::string(where) + ": dimension mismatch");
}

}  // namespace detail

inline double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::require_same_dim(rho, sigma, "trace_distance");
  return 0.5 * eigenvalues(rho.matrix() - sigma.matrix()).cwiseAbs().sum();
}

// Table convention: sqrt(Tr (rho-sigma)^2 / 2).
inline double hs_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::require_same_dim(rho, sigma, "hs_distance");
  return (rho.matrix() - sigma.matrix()).norm() / std::sqrt(2.0);
}

// ||rho - sigma||_2 without the 1/2.
inline double hs_norm_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::require_same_dim(rho, sigma, "hs_norm_distance");
  return (rho.matrix() - sigma.matrix()).norm();
}

inline double inf_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::require_same_dim(rho, sigma, "inf_distance");
  return eigenvalues(rho.matrix() - sigma.matrix()).cwiseAbs().maxCoeff();
}

// Tr sqrt(sqrt(rho) sigma sqrt(rho)), eigenvalues clipped at zero.
inline double root_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::require_same_dim(rho, sigma, "root_fidelity");
  const Matrix sr = matrix_sqrt(rho.matrix());
  RealVector vals = eigenvalues((sr * sigma.matrix() * sr).eval());
  double sum = 0.0;
  for (Index i = 0; i < vals.size(); ++i) sum += std::sqrt(std::max(vals[i], 0.0));
  return sum;
}

inline double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const double rf = root_fidelity(rho, sigma);
  return rf * rf;
}

inline double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return std::sqrt(std::max(2.0 * (1.0 - root_fidelity(rho, sigma)), 0.0));
}

// sqrt(2 - 2 Tr sqrt(rho) sqrt(sigma)).
inline double hellinger_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::require_same_dim(rho, sigma, "hellinger_distance");
  const double overlap =
      (matrix_sqrt(rho.matrix()) * matrix_sqrt(sigma.matrix())).trace().real();
  return std::sqrt(std::max(2.0 - 2.0 * overlap, 0.0));
}

inline double qjsd(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::require_same_dim(rho, sigma, "qjsd");
  const Matrix mix = (rho.matrix() + sigma.matrix()) / 2.0;
  const double s = entropy_of_values(eigenvalues(mix)) -
                   (von_neumann_entropy(rho) + von_neumann_entropy(sigma)) / 2.0;
  return std::max(s, 0.0);
}

inline double transmission_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return std::sqrt(qjsd(rho, sigma));
}

// Binary entropy (nats) of (1 - sqrt F)/2, square-rooted.
inline double entropic_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const double x = (1.0 - root_fidelity(rho, sigma)) / 2.0;
  if (x <= 0.0 || x >= 1.0) return x >= 1.0 ? std::sqrt(std::log(2.0)) : 0.0;
  const double h2 = -x * std::log(x) - (1.0 - x) * std::log(1.0 - x);
  return std::sqrt(h2);
}

// Tr rho (ln rho - ln sigma); +infinity when rho has weight outside the
// support of sigma.
inline double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::require_same_dim(rho, sigma, "relative_entropy");
  const EigResult er = eig_hermitian(rho);
  const EigResult es = eig_hermitian(sigma);
  const Matrix overlap = er.vectors.adjoint() * es.vectors;
  const Index n = rho.dim();
  double out = 0.0;
  double escaped_weight = 0.0;
  for (Index i = 0; i < n; ++i) {
    const double lam = er.values[i];
    if (lam <= psd_tol) continue;
    out += lam * std::log(lam);
    for (Index j = 0; j < n; ++j) {
      const double w = std::norm(overlap(i, j));
      const double mu = es.values[j];
      if (mu <= psd_tol) {
        escaped_weight += lam * w;
        continue;
      }
      out -= lam * w * std::log(mu);
    }
  }
  if (escaped_weight > 1e-8) return std::numeric_limits<double>::infinity();
  return std::max(out, 0.0);
}

// Q_s = Tr rho^s sigma^(1-s) from the cached eigensystems; O(n^2) per s.
class ChernoffFunction {
 public:
  ChernoffFunction(const DensityMatrix& rho, const DensityMatrix& sigma) {
    detail::require_same_dim(rho, sigma, "chernoff");
    const EigResult er = eig_hermitian(rho);
    const EigResult es = eig_hermitian(sigma);
    lam_ = er.values.cwiseMax(0.0);
    mu_ = es.values.cwiseMax(0.0);
    weights_ = (er.vectors.adjoint() * es.vectors).cwiseAbs2().real();
  }

  double operator()(double s) const {
    if (s < 0.0 || s > 1.0) throw std::invalid_argument("chernoff: s must be in [0,1]");
    const Index n = lam_.size();
    Eigen::VectorXd ls(n), ms(n);
    for (Index i = 0; i < n; ++i) {
      ls[i] = std::pow(lam_[i], s);
      ms[i] = std::pow(mu_[i], 1.0 - s);
    }
    return ls.transpose() * weights_ * ms;
  }

  // 21-point grid pre-scan guards against non-unimodal inputs, then
  // golden-section to tolerance in s.
  ChernoffPoint minimize(double s_tol = 1e-8) const {
    double best_s = 0.0, best_q = (*this)(0.0);
    for (int i = 1; i <= 20; ++i) {
      const double s = i / 20.0;
      const double q = (*this)(s);
      if (q < best_q) {
        best_q = q;
        best_s = s;
      }
    }
    const double a = std::max(0.0, best_s - 0.05);
    const double b = std::min(1.0, best_s + 0.05);
    return golden_minimize([this](double s) { return (*this)(s); }, a, b, s_tol);
  }

 private:
  Eigen::VectorXd lam_, mu_;
  Eigen::MatrixXd weights_;
};

inline double chernoff_q(const DensityMatrix& rho, const DensityMatrix& sigma, double s) {
  return ChernoffFunction(rho, sigma)(s);
}

inline ChernoffPoint chernoff_information(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return ChernoffFunction(rho, sigma).minimize();
}

// Success probability of the optimal two-outcome (Helstrom) measurement,
// computed from the projector onto the positive part of rho - sigma.
inline double helstrom_success(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::require_same_dim(rho, sigma, "helstrom_success");
  const EigResult eg = eig_hermitian((rho.matrix() - sigma.matrix()).eval());
  Matrix proj = Matrix::Zero(rho.dim(), rho.dim());
  for (Index i = 0; i < eg.values.size(); ++i)
    if (eg.values[i] > 0.0) proj += eg.vectors.col(i) * eg.vectors.col(i).adjoint();
  const double p_rho = (proj * rho.matrix()).trace().real();
  const double p_sigma = ((Matrix::Identity(rho.dim(), rho.dim()) - proj) * sigma.matrix())
                             .trace()
                             .real();
  return 0.5 * (p_rho + p_sigma);
}

// --- classical probability vectors -----------------------------------------

inline double l1_halved(const ProbabilityVector& p, const ProbabilityVector& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("l1_halved: dimension mismatch");
  return 0.5 * (p.values() - q.values()).cwiseAbs().sum();
}

inline double bhattacharyya(const ProbabilityVector& p, const ProbabilityVector& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("bhattacharyya: dimension mismatch");
  return (p.values().cwiseProduct(q.values())).cwiseSqrt().sum();
}

inline double classical_bures(const ProbabilityVector& p, const ProbabilityVector& q) {
  return std::sqrt(std::max(2.0 * (1.0 - bhattacharyya(p, q)), 0.0));
}

// --- metric dispatch ---------------------------------------------------------

enum class Metric { tr, hs, hs_norm, inf, transmission, bures, entropic, hellinger };

inline double distance_by_metric(Metric m, const DensityMatrix& rho, const DensityMatrix& sigma) {
  switch (m) {
    case Metric::tr: return trace_distance(rho, sigma);
    case Metric::hs: return hs_distance(rho, sigma);
    case Metric::hs_norm: return hs_norm_distance(rho, sigma);
    case Metric::inf: return inf_distance(rho, sigma);
    case Metric::transmission: return transmission_distance(rho, sigma);
    case Metric::bures: return bures_distance(rho, sigma);
    case Metric::entropic: return entropic_distance(rho, sigma);
    case Metric::hellinger: return hellinger_distance(rho, sigma);
  }
  throw std::invalid_argument("distance_by_metric: unknown metric");
}

struct DistanceReport {
  std::string metric;
  double value = 0.0;
  std::string lhs, rhs;
};

}  // namespace qsd
