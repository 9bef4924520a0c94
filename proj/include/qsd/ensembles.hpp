#pragma once

// Seeded samplers for every random object used here: induced-measure mixed
// states, Haar pure states and unitaries, symmetric Dirichlet vectors and
// uniform points in the n-ball.

#include <qsd/linalg.hpp>
#include <qsd/rng.hpp>

#include <stdexcept>
#include <vector>

namespace qsd {

enum class Field { complex_field, real_field };

class ProbabilityVector {
 public:
  explicit ProbabilityVector(RealVector p) : p_(std::move(p)) {
    double sum = 0.0;
    for (Index i = 0; i < p_.size(); ++i) {
      if (p_[i] < 0.0) throw std::invalid_argument("ProbabilityVector: negative component");
      sum += p_[i];
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("ProbabilityVector: components do not sum to 1");
  }

  Index dim() const { return p_.size(); }
  const RealVector& values() const { return p_; }
  double operator[](Index i) const { return p_[i]; }

  static ProbabilityVector uniform(Index n) {
    return ProbabilityVector(RealVector::Constant(n, 1.0 / static_cast<double>(n)));
  }

 private:
  RealVector p_;
};

inline Matrix ginibre(int n, int k, Field field, RandomStream& stream) {
  Matrix g(n, k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j)
      g(i, j) = field == Field::complex_field ? stream.gaussian_complex()
                                              : Complex(stream.gaussian(), 0.0);
  return g;
}

// rho = G G^dag / Tr G G^dag with G an n x k Ginibre matrix; K >= N gives an
// almost surely full-rank state. The optional split tags rho for later
// partial transpose / negativity use.
inline DensityMatrix sample_induced(int n, int k, RandomStream& stream,
                                    Field field = Field::complex_field,
                                    std::optional<BipartiteSplit> split = {}) {
  if (n < 1 || k < 1) throw std::invalid_argument("sample_induced: dimensions must be >= 1");
  Matrix g = ginibre(n, k, field, stream);
  Matrix w = g * g.adjoint();
  w /= w.trace().real();
  return DensityMatrix(((w + w.adjoint()) / 2.0).eval(), split);
}

inline DensityMatrix sample_hs(int n, RandomStream& stream, Field field = Field::complex_field,
                               std::optional<BipartiteSplit> split = {}) {
  return sample_induced(n, n, stream, field, split);
}

inline PureState sample_haar_pure(int n, Field field, RandomStream& stream,
                                  std::optional<BipartiteSplit> split = {}) {
  if (n < 1) throw std::invalid_argument("sample_haar_pure: dimension must be >= 1");
  Vector v(n);
  for (int i = 0; i < n; ++i)
    v[i] = field == Field::complex_field ? stream.gaussian_complex()
                                         : Complex(stream.gaussian(), 0.0);
  v /= v.norm();
  return PureState(std::move(v), split);
}

// QR of a complex Ginibre matrix with the R-diagonal phase correction;
// without the correction the result is not Haar.
inline Matrix sample_haar_unitary(int n, RandomStream& stream) {
  if (n < 1) throw std::invalid_argument("sample_haar_unitary: dimension must be >= 1");
  Matrix g = ginibre(n, n, Field::complex_field, stream);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    Complex d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= (a > 0.0 ? d / a : Complex(1.0, 0.0));
  }
  return q;
}

// Symmetric Dirichlet via normalized Gamma(s) variates; s = 1 is the flat
// measure on the simplex, s = 1/2 the statistical measure.
inline ProbabilityVector sample_dirichlet(int n, double s, RandomStream& stream) {
  if (n < 1) throw std::invalid_argument("sample_dirichlet: dimension must be >= 1");
  if (s <= 0.0) throw std::invalid_argument("sample_dirichlet: s must be positive");
  RealVector q(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    q[i] = stream.gamma(s);
    sum += q[i];
  }
  q /= sum;
  return ProbabilityVector(std::move(q));
}

// Uniform point in the unit n-ball: Gaussian direction times U^(1/n) radius.
inline RealVector sample_ball(int n, RandomStream& stream) {
  if (n < 1) throw std::invalid_argument("sample_ball: dimension must be >= 1");
  RealVector x(n);
  for (int i = 0; i < n; ++i) x[i] = stream.gaussian();
  const double norm = x.norm();
  const double radius = std::pow(stream.uniform_pos(), 1.0 / static_cast<double>(n));
  if (norm == 0.0) return RealVector::Zero(n);
  return x * (radius / norm);
}

struct EnsembleSpec {
  enum class Kind { induced, hs, haar_pure_complex, haar_pure_real, haar_unitary, dirichlet, ball };
  Kind kind = Kind::hs;
  int n = 2;
  int k = 2;        // induced only
  double s = 1.0;   // dirichlet only
  double c() const { return static_cast<double>(k) / static_cast<double>(n); }
};

}  // namespace qsd
