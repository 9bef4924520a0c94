#pragma once

// Dense complex Hermitian linear algebra: eigendecomposition, matrix
// functions, partial trace/transpose and the norms everything else is
// built on.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsd {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double herm_tol = 1e-12;   // relative conjugate-symmetry defect
inline constexpr double psd_tol = 1e-10;    // eigenvalue clipping floor
inline constexpr double unit_trace_tol = 1e-12;

// Numerical failure (eigensolver, quadrature, ...). Carries the module name
// so the CLI can report it.
class numerical_error : public std::runtime_error {
 public:
  numerical_error(std::string module, const std::string& what)
      : std::runtime_error(module + ": " + what), module_(std::move(module)) {}
  const std::string& module_name() const { return module_; }

 private:
  std::string module_;
};

struct BipartiteSplit {
  Index na = 0;
  Index nb = 0;
};

namespace detail {

inline double max_abs(const Matrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

inline double hermiticity_defect(const Matrix& a) {
  return max_abs(a - a.adjoint());
}

}  // namespace detail

// Hermitian matrix with the conjugate symmetry made exact at construction.
// Construction rejects inputs whose defect exceeds tol relative to the
// largest entry.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Matrix a, double tol = herm_tol) {
    if (a.rows() != a.cols())
      throw std::invalid_argument("HermitianMatrix: input is not square");
    const double scale = std::max(detail::max_abs(a), 1.0);
    if (detail::hermiticity_defect(a) > tol * scale)
      throw std::invalid_argument("HermitianMatrix: conjugate-symmetry defect above tolerance");
    mat_ = ((a + a.adjoint()) / 2.0).eval();
  }

  Index dim() const { return mat_.rows(); }
  const Matrix& matrix() const { return mat_; }
  double trace() const { return mat_.trace().real(); }

 private:
  Matrix mat_;
};

// Unit-trace Hermitian matrix, optionally carrying a bipartite split
// (na, nb) with na*nb = dim. Positivity up to -psd_tol is the caller's
// responsibility for bulk-sampled states; spectral consumers clip.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix a, std::optional<BipartiteSplit> split = {},
                         double tol = herm_tol)
      : herm_(std::move(a), tol), split_(split) {
    if (std::abs(herm_.trace() - 1.0) > unit_trace_tol)
      throw std::invalid_argument("DensityMatrix: trace differs from 1");
    if (split_ && split_->na * split_->nb != herm_.dim())
      throw std::invalid_argument("DensityMatrix: split does not factor the dimension");
  }

  Index dim() const { return herm_.dim(); }
  const Matrix& matrix() const { return herm_.matrix(); }
  const HermitianMatrix& hermitian() const { return herm_; }
  const std::optional<BipartiteSplit>& split() const { return split_; }

  static DensityMatrix maximally_mixed(Index n) {
    return DensityMatrix(Matrix::Identity(n, n) / static_cast<double>(n));
  }

  static DensityMatrix basis_state(Index n, Index i) {
    Matrix m = Matrix::Zero(n, n);
    m(i, i) = 1.0;
    return DensityMatrix(std::move(m));
  }

 private:
  HermitianMatrix herm_;
  std::optional<BipartiteSplit> split_;
};

// Normalized state vector, optionally with a bipartite split.
class PureState {
 public:
  explicit PureState(Vector v, std::optional<BipartiteSplit> split = {})
      : vec_(std::move(v)), split_(split) {
    if (std::abs(vec_.norm() - 1.0) > 1e-12)
      throw std::invalid_argument("PureState: vector is not normalized");
    if (split_ && split_->na * split_->nb != vec_.size())
      throw std::invalid_argument("PureState: split does not factor the dimension");
  }

  Index dim() const { return vec_.size(); }
  const Vector& vector() const { return vec_; }
  const std::optional<BipartiteSplit>& split() const { return split_; }

  DensityMatrix projector() const {
    return DensityMatrix((vec_ * vec_.adjoint()).eval(), split_);
  }

 private:
  Vector vec_;
  std::optional<BipartiteSplit> split_;
};

enum class Rescale { none, by_n, by_k };

// Sorted eigenvalue sample with the rescaling convention recorded.
struct Spectrum {
  std::vector<double> values;  // ascending
  Rescale rescale = Rescale::none;
  double scale = 1.0;
};

struct EigResult {
  RealVector values;  // ascending
  Matrix vectors;     // columns are eigenvectors
};

inline EigResult eig_hermitian(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
  if (solver.info() != Eigen::Success) {
    throw numerical_error("linalg",
                          "eigensolver failed to converge (dim " + std::to_string(a.rows()) +
                              ", max|a_ij| " + std::to_string(detail::max_abs(a)) + ")");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

inline EigResult eig_hermitian(const HermitianMatrix& a) { return eig_hermitian(a.matrix()); }
inline EigResult eig_hermitian(const DensityMatrix& a) { return eig_hermitian(a.matrix()); }

inline RealVector eigenvalues(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw numerical_error("linalg", "eigensolver failed to converge");
  return solver.eigenvalues();
}

inline Spectrum spectrum_of(const DensityMatrix& rho, Rescale rescale = Rescale::none,
                            double scale = 1.0) {
  RealVector v = eigenvalues(rho.matrix());
  Spectrum s;
  s.values.assign(v.data(), v.data() + v.size());
  s.rescale = rescale;
  s.scale = scale;
  if (rescale != Rescale::none)
    for (double& x : s.values) x *= scale;
  return s;
}

enum class MatrixFunc { sqrt, log, power };

// f applied on the spectrum in the eigenbasis. Eigenvalues below psd_tol are
// floored there before log/sqrt/power(s<1); inputs dipping below -psd_tol are
// rejected.
inline HermitianMatrix matrix_function(const DensityMatrix& rho, MatrixFunc f, double s = 0.5) {
  EigResult eig = eig_hermitian(rho);
  const bool needs_clip = f != MatrixFunc::power || s < 1.0;
  RealVector vals = eig.values;
  for (Index i = 0; i < vals.size(); ++i) {
    if (vals[i] < -psd_tol)
      throw std::invalid_argument("matrix_function: eigenvalue below -psd_tol, input is not PSD");
    if (needs_clip && vals[i] < psd_tol) vals[i] = psd_tol;
    switch (f) {
      case MatrixFunc::sqrt: vals[i] = std::sqrt(vals[i]); break;
      case MatrixFunc::log: vals[i] = std::log(vals[i]); break;
      case MatrixFunc::power: vals[i] = std::pow(vals[i], s); break;
    }
  }
  Matrix out = eig.vectors * vals.asDiagonal() * eig.vectors.adjoint();
  return HermitianMatrix(std::move(out), 1e-9);
}

inline Matrix matrix_sqrt(const Matrix& psd) {
  EigResult eig = eig_hermitian(psd);
  RealVector vals = eig.values.cwiseMax(0.0).cwiseSqrt();
  return eig.vectors * vals.asDiagonal() * eig.vectors.adjoint();
}

enum class Subsystem { a, b };

inline Matrix partial_trace_matrix(const Matrix& rho, BipartiteSplit split, Subsystem keep) {
  const Index na = split.na, nb = split.nb;
  if (keep == Subsystem::a) {
    Matrix out = Matrix::Zero(na, na);
    for (Index a1 = 0; a1 < na; ++a1)
      for (Index a2 = 0; a2 < na; ++a2) {
        Complex sum = 0.0;
        for (Index b = 0; b < nb; ++b) sum += rho(a1 * nb + b, a2 * nb + b);
        out(a1, a2) = sum;
      }
    return out;
  }
  Matrix out = Matrix::Zero(nb, nb);
  for (Index b1 = 0; b1 < nb; ++b1)
    for (Index b2 = 0; b2 < nb; ++b2) {
      Complex sum = 0.0;
      for (Index a = 0; a < na; ++a) sum += rho(a * nb + b1, a * nb + b2);
      out(b1, b2) = sum;
    }
  return out;
}

// Traces out the named subsystem (tracing out B keeps A and vice versa).
inline DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem traced_out) {
  if (!rho.split())
    throw std::invalid_argument("partial_trace: density matrix carries no bipartite split");
  const Subsystem keep = traced_out == Subsystem::a ? Subsystem::b : Subsystem::a;
  Matrix out = partial_trace_matrix(rho.matrix(), *rho.split(), keep);
  return DensityMatrix(((out + out.adjoint()) / 2.0).eval());
}

// Reduction of a bipartite pure state to subsystem A without forming the
// projector: reshape to na x nb and contract.
inline DensityMatrix reduce_to_a(const PureState& psi) {
  if (!psi.split()) throw std::invalid_argument("reduce_to_a: pure state carries no split");
  const Index na = psi.split()->na, nb = psi.split()->nb;
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> c(
      psi.vector().data(), na, nb);
  Matrix out = c * c.adjoint();
  return DensityMatrix(((out + out.adjoint()) / 2.0).eval());
}

// Transpose on subsystem A. Hermitian and unit trace, in general not PSD.
inline HermitianMatrix partial_transpose(const DensityMatrix& rho) {
  if (!rho.split())
    throw std::invalid_argument("partial_transpose: density matrix carries no bipartite split");
  const Index na = rho.split()->na, nb = rho.split()->nb;
  const Matrix& m = rho.matrix();
  Matrix out(m.rows(), m.cols());
  for (Index a1 = 0; a1 < na; ++a1)
    for (Index a2 = 0; a2 < na; ++a2)
      out.block(a1 * nb, a2 * nb, nb, nb) = m.block(a2 * nb, a1 * nb, nb, nb);
  return HermitianMatrix(std::move(out));
}

inline double trace_norm(const HermitianMatrix& a) {
  return eigenvalues(a.matrix()).cwiseAbs().sum();
}

inline double hs_norm(const HermitianMatrix& a) { return a.matrix().norm(); }

inline double op_norm(const HermitianMatrix& a) {
  RealVector v = eigenvalues(a.matrix());
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

// Von Neumann entropy in nats, 0 log 0 := 0.
inline double entropy_of_values(const RealVector& vals) {
  double s = 0.0;
  for (Index i = 0; i < vals.size(); ++i) {
    const double x = vals[i];
    if (x > psd_tol) s -= x * std::log(x);
  }
  return s;
}

inline double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_of_values(eigenvalues(rho.matrix()));
}

inline double purity(const DensityMatrix& rho) { return rho.matrix().squaredNorm(); }

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace qsd
