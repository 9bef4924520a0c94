#include <qsd/ensembles.hpp>
#include <qsd/linalg.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <cmath>

using namespace qsd;

namespace {

// Trigonometric closed-form eigenvalues of a 3x3 Hermitian matrix; an
// oracle independent of the iterative eigensolver.
std::array<double, 3> cubic_eigs(const Matrix& a) {
  const double q = a.trace().real() / 3.0;
  const double p1 = std::norm(a(0, 1)) + std::norm(a(0, 2)) + std::norm(a(1, 2));
  const double p2 = std::pow(a(0, 0).real() - q, 2) + std::pow(a(1, 1).real() - q, 2) +
                    std::pow(a(2, 2).real() - q, 2) + 2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);
  Matrix b = (a - q * Matrix::Identity(3, 3)) / p;
  const double r = std::clamp(b.determinant().real() / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double e1 = q + 2.0 * p * std::cos(phi);
  const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  const double e2 = 3.0 * q - e1 - e3;
  std::array<double, 3> out{e3, e2, e1};
  std::sort(out.begin(), out.end());
  return out;
}

Matrix random_hermitian(int n, RandomStream& s) {
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = s.gaussian_complex();
  return ((g + g.adjoint()) / 2.0).eval();
}

}  // namespace

TEST_CASE("hermitian construction enforces the symmetry defect") {
  Matrix ok(2, 2);
  ok << Complex(1.0, 0.0), Complex(0.25, 0.5), Complex(0.25, -0.5), Complex(0.5, 0.0);
  REQUIRE_NOTHROW(HermitianMatrix(ok));

  Matrix bad = ok;
  bad(0, 1) += Complex(1e-6, 0.0);
  REQUIRE_THROWS_AS(HermitianMatrix(bad), std::invalid_argument);
}

TEST_CASE("density matrix validates trace and split") {
  REQUIRE_THROWS_AS(DensityMatrix(Matrix::Identity(2, 2)), std::invalid_argument);
  REQUIRE_NOTHROW(DensityMatrix(Matrix::Identity(2, 2) / 2.0));
  REQUIRE_THROWS_AS(DensityMatrix(Matrix::Identity(4, 4) / 4.0, BipartiteSplit{3, 2}),
                    std::invalid_argument);
}

TEST_CASE("eig_hermitian on identity and diagonal inputs") {
  auto id = eig_hermitian(Matrix::Identity(2, 2).eval());
  REQUIRE(id.values[0] == Catch::Approx(1.0));
  REQUIRE(id.values[1] == Catch::Approx(1.0));

  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 0.7;
  d(1, 1) = 0.3;
  auto eg = eig_hermitian(d);
  REQUIRE(eg.values[0] == Catch::Approx(0.3));
  REQUIRE(eg.values[1] == Catch::Approx(0.7));
}

TEST_CASE("eigenvalues of random 3x3 Hermitian match the cubic-root oracle") {
  RandomStream s(101, 7);
  for (int rep = 0; rep < 25; ++rep) {
    const Matrix a = random_hermitian(3, s);
    const auto oracle = cubic_eigs(a);
    const RealVector got = eigenvalues(a);
    for (int i = 0; i < 3; ++i) REQUIRE(got[i] == Catch::Approx(oracle[i]).margin(1e-10));
  }
}

TEST_CASE("eigen reconstruction error stays below 1e-9 of the sup norm") {
  RandomStream s(11, 0);
  for (int n : {2, 5, 17, 40}) {
    const Matrix a = random_hermitian(n, s);
    const auto eg = eig_hermitian(a);
    const Matrix back = eg.vectors * eg.values.asDiagonal() * eg.vectors.adjoint();
    const double scale = a.cwiseAbs().maxCoeff();
    REQUIRE((back - a).cwiseAbs().maxCoeff() <= 1e-9 * scale);
  }
}

TEST_CASE("matrix functions on diagonal inputs") {
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 0.25;
  d(1, 1) = 0.75;
  const DensityMatrix rho(d);
  const Matrix root = matrix_function(rho, MatrixFunc::sqrt).matrix();
  REQUIRE(root(0, 0).real() == Catch::Approx(0.5));
  REQUIRE(root(1, 1).real() == Catch::Approx(std::sqrt(0.75)));

  const Matrix half = matrix_function(DensityMatrix::maximally_mixed(2), MatrixFunc::power, 0.5)
                          .matrix();
  REQUIRE(half(0, 0).real() == Catch::Approx(1.0 / std::sqrt(2.0)));
  REQUIRE(half(1, 1).real() == Catch::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("matrix log reconstructs from the eigendecomposition") {
  RandomStream s(5, 1);
  const DensityMatrix rho = sample_hs(4, s);
  const auto eg = eig_hermitian(rho);
  RealVector logs = eg.values;
  for (int i = 0; i < 4; ++i) logs[i] = std::log(std::max(logs[i], psd_tol));
  const Matrix expected = eg.vectors * logs.asDiagonal() * eg.vectors.adjoint();
  const Matrix got = matrix_function(rho, MatrixFunc::log).matrix();
  REQUIRE((got - expected).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("partial trace of a Bell projector is maximally mixed") {
  Vector bell = Vector::Zero(4);
  bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
  const DensityMatrix rho = PureState(bell, BipartiteSplit{2, 2}).projector();
  const DensityMatrix red = partial_trace(rho, Subsystem::b);
  REQUIRE((red.matrix() - Matrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("partial trace of a product state recovers the factor") {
  RandomStream s(21, 3);
  const DensityMatrix a = sample_hs(3, s);
  const DensityMatrix b = sample_hs(2, s);
  const DensityMatrix prod(kron(a.matrix(), b.matrix()), BipartiteSplit{3, 2});
  const DensityMatrix red_a = partial_trace(prod, Subsystem::b);
  const DensityMatrix red_b = partial_trace(prod, Subsystem::a);
  REQUIRE((red_a.matrix() - a.matrix()).cwiseAbs().maxCoeff() <= 1e-12);
  REQUIRE((red_b.matrix() - b.matrix()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("partial trace matches the index-summation oracle on a random 3x2 pure state") {
  RandomStream s(33, 4);
  const PureState psi = sample_haar_pure(6, Field::complex_field, s, BipartiteSplit{3, 2});
  const DensityMatrix rho = psi.projector();
  const DensityMatrix red = partial_trace(rho, Subsystem::b);

  Matrix oracle = Matrix::Zero(3, 3);
  for (int a1 = 0; a1 < 3; ++a1)
    for (int a2 = 0; a2 < 3; ++a2)
      for (int b = 0; b < 2; ++b)
        oracle(a1, a2) += psi.vector()[a1 * 2 + b] * std::conj(psi.vector()[a2 * 2 + b]);
  REQUIRE((red.matrix() - oracle).cwiseAbs().maxCoeff() <= 1e-12);
  REQUIRE(red.matrix().trace().real() == Catch::Approx(1.0).margin(1e-12));
  REQUIRE(eigenvalues(red.matrix()).minCoeff() >= -psd_tol);
}

TEST_CASE("reduction of random Haar vectors is always a state") {
  RandomStream s(77, 0);
  for (int rep = 0; rep < 10; ++rep) {
    const PureState psi = sample_haar_pure(12, Field::complex_field, s, BipartiteSplit{4, 3});
    const DensityMatrix red = reduce_to_a(psi);
    REQUIRE(red.matrix().trace().real() == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(eigenvalues(red.matrix()).minCoeff() >= -psd_tol);
  }
}

TEST_CASE("partial transpose of a product state keeps the spectrum") {
  RandomStream s(9, 2);
  const DensityMatrix a = sample_hs(2, s);
  const DensityMatrix b = sample_hs(2, s);
  const DensityMatrix prod(kron(a.matrix(), b.matrix()), BipartiteSplit{2, 2});
  const HermitianMatrix pt = partial_transpose(prod);

  const Matrix expected = kron(a.matrix().transpose().eval(), b.matrix());
  REQUIRE((pt.matrix() - expected).cwiseAbs().maxCoeff() <= 1e-12);

  RealVector before = eigenvalues(prod.matrix());
  RealVector after = eigenvalues(pt.matrix());
  for (int i = 0; i < before.size(); ++i)
    REQUIRE(before[i] == Catch::Approx(after[i]).margin(1e-12));
}

TEST_CASE("partial transpose of the Bell projector has the explicit spectrum") {
  Vector bell = Vector::Zero(4);
  bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
  const DensityMatrix rho = PureState(bell, BipartiteSplit{2, 2}).projector();
  RealVector vals = eigenvalues(partial_transpose(rho).matrix());
  REQUIRE(vals[0] == Catch::Approx(-0.5).margin(1e-12));
  REQUIRE(vals[1] == Catch::Approx(0.5).margin(1e-12));
  REQUIRE(vals[2] == Catch::Approx(0.5).margin(1e-12));
  REQUIRE(vals[3] == Catch::Approx(0.5).margin(1e-12));
}

TEST_CASE("partial transpose preserves the trace for random 3x3 states") {
  RandomStream s(13, 8);
  const DensityMatrix rho = sample_hs(9, s, Field::complex_field, BipartiteSplit{3, 3});
  REQUIRE(partial_transpose(rho).trace() == Catch::Approx(1.0).margin(1e-12));
  REQUIRE_THROWS_AS(partial_transpose(sample_hs(4, s)), std::invalid_argument);
}

TEST_CASE("norms of simple matrices") {
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 0.5;
  d(1, 1) = -0.5;
  const HermitianMatrix h(d);
  REQUIRE(trace_norm(h) == Catch::Approx(1.0));
  REQUIRE(hs_norm(h) == Catch::Approx(std::sqrt(0.5)));
  REQUIRE(op_norm(h) == Catch::Approx(0.5));

  const HermitianMatrix zero(Matrix::Zero(3, 3).eval());
  REQUIRE(trace_norm(zero) == 0.0);
  REQUIRE(hs_norm(zero) == 0.0);
  REQUIRE(op_norm(zero) == 0.0);
}

TEST_CASE("norm ordering and tracelessness of Helstrom differences") {
  RandomStream s(55, 6);
  for (int rep = 0; rep < 10; ++rep) {
    const DensityMatrix rho = sample_hs(8, s);
    const DensityMatrix sigma = sample_hs(8, s);
    const HermitianMatrix gamma((rho.matrix() - sigma.matrix()).eval());
    const RealVector vals = eigenvalues(gamma.matrix());
    REQUIRE(vals.sum() == Catch::Approx(0.0).margin(1e-12));
    const double tn = trace_norm(gamma);
    double pos = 0.0, neg = 0.0;
    for (int i = 0; i < vals.size(); ++i) (vals[i] > 0 ? pos : neg) += vals[i];
    REQUIRE(tn == Catch::Approx(pos - neg).margin(1e-12));
    REQUIRE(tn >= hs_norm(gamma) - 1e-12);
    REQUIRE(hs_norm(gamma) >= op_norm(gamma) - 1e-12);
  }
}
