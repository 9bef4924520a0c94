#include <qsd/kicked_top.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace qsd;

TEST_CASE("spin operators for small j") {
  const SpinOperators half = build_spin_ops(0.5);
  REQUIRE(half.jy(0, 1) == Complex(0.0, -0.5));
  REQUIRE(half.jy(1, 0) == Complex(0.0, 0.5));

  const SpinOperators one = build_spin_ops(1.0);
  REQUIRE(one.jz(0, 0).real() == Catch::Approx(-1.0));
  REQUIRE(one.jz(1, 1).real() == Catch::Approx(0.0));
  REQUIRE(one.jz(2, 2).real() == Catch::Approx(1.0));

  const SpinOperators two = build_spin_ops(2.0);
  const RealVector spec = eigenvalues(two.jy);
  for (int i = 0; i < 5; ++i) REQUIRE(spec[i] == Catch::Approx(-2.0 + i).margin(1e-10));

  REQUIRE_THROWS_AS(build_spin_ops(0.7), std::invalid_argument);
  REQUIRE_THROWS_AS(build_spin_ops(0.0), std::invalid_argument);
}

TEST_CASE("factored Floquet application equals the dense unitary") {
  for (double j : {1.0, 1.5, 2.0}) {
    KickedTopConfig cfg;
    cfg.j1 = cfg.j2 = j;
    cfg.kick = 3.1;
    cfg.eps = 0.7;
    const CoupledTops tops(cfg);
    const int n1 = cfg.dim1(), n2 = cfg.dim2();
    const Matrix dense = tops.dense_floquet();
    REQUIRE((dense * dense.adjoint() - Matrix::Identity(n1 * n2, n1 * n2))
                .cwiseAbs()
                .maxCoeff() <= 1e-10);

    RandomStream s(200 + static_cast<int>(2 * j), 0);
    const PureState psi = sample_haar_pure(n1 * n2, Field::complex_field, s);
    Matrix coeff(n1, n2);
    for (int a = 0; a < n1; ++a)
      for (int b = 0; b < n2; ++b) coeff(a, b) = psi.vector()[a * n2 + b];
    tops.apply_floquet(coeff);

    const Vector dense_out = dense * psi.vector();
    double max_err = 0.0;
    for (int a = 0; a < n1; ++a)
      for (int b = 0; b < n2; ++b)
        max_err = std::max(max_err, std::abs(coeff(a, b) - dense_out[a * n2 + b]));
    REQUIRE(max_err <= 1e-10);
  }
}

TEST_CASE("uncoupled evolution preserves product structure") {
  KickedTopConfig cfg;
  cfg.j1 = cfg.j2 = 4.0;
  cfg.eps = 0.0;
  cfg.kick = 5.0;
  const CoupledTops tops(cfg);
  Matrix coeff = tops.basis_product_state(2);
  for (int t = 0; t < 20; ++t) tops.apply_floquet(coeff);
  const Eigen::JacobiSVD<Matrix> svd(coeff);
  REQUIRE(svd.singularValues()[0] == Catch::Approx(1.0).margin(1e-10));
  REQUIRE(svd.singularValues()[1] <= 1e-10);
}

TEST_CASE("norm is preserved over a thousand steps at j = 49.5") {
  KickedTopConfig cfg;
  cfg.j1 = cfg.j2 = 49.5;
  cfg.kick = 6.0;
  cfg.eps = 0.01;
  const CoupledTops tops(cfg);
  Matrix coeff = tops.basis_product_state(7);
  for (int t = 0; t < 1000; ++t) tops.apply_floquet(coeff);
  REQUIRE(std::abs(coeff.norm() - 1.0) <= 1e-8);
}

TEST_CASE("reduced-pair trajectory starts orthogonal and stays a distance") {
  KickedTopConfig cfg;
  cfg.j1 = cfg.j2 = 12.0;
  cfg.kick = 4.0;
  cfg.eps = 0.5;
  cfg.steps = 40;
  cfg.initial_pair = {1, 4};
  const auto series = evolve_reduced_pair(cfg);
  REQUIRE(series.size() == 41);
  REQUIRE(series[0].trace_distance == Catch::Approx(1.0).margin(1e-12));
  for (const auto& p : series) {
    REQUIRE(p.trace_distance >= 0.0);
    REQUIRE(p.trace_distance <= 1.0 + 1e-11);
  }
  KickedTopConfig bad = cfg;
  bad.initial_pair = {3, 3};
  REQUIRE_THROWS_AS(evolve_reduced_pair(bad), std::invalid_argument);
}

TEST_CASE("Helstrom difference is traceless with symmetric equilibrated spectra") {
  KickedTopConfig cfg;
  cfg.j1 = cfg.j2 = 14.5;
  cfg.kick = 6.0;
  cfg.eps = 0.5;
  RandomStream s(77, 0);
  const Spectrum spec = helstrom_spectrum(cfg, 24, 60, s, 2);
  REQUIRE(spec.values.size() == 24u * cfg.dim1());
  double sum = 0.0, sumabs = 0.0;
  for (double v : spec.values) {
    sum += v;
    sumabs += std::abs(v);
  }
  // Tr Gamma = 0 per realization, so the pooled mean vanishes
  REQUIRE(std::abs(sum) / spec.values.size() <= 1e-10);
  REQUIRE(sumabs > 0.0);
  // pooled mean within 3 standard errors of zero, trivially satisfied here
  std::vector<double> copy(spec.values.begin(), spec.values.end());
  const auto ms = mean_stderr(copy);
  REQUIRE(std::abs(ms.mean) <= 3.0 * std::max(ms.se, 1e-12));
}

TEST_CASE("uncoupled tops give rank-two Helstrom spectra") {
  KickedTopConfig cfg;
  cfg.j1 = cfg.j2 = 6.0;
  cfg.kick = 6.0;
  cfg.eps = 0.0;
  RandomStream s(78, 0);
  const Spectrum spec = helstrom_spectrum(cfg, 4, 25, s);
  const double n2 = cfg.dim2();
  for (std::size_t i = 0; i < spec.values.size(); ++i) {
    const double v = spec.values[i] / n2;  // undo the rescaling
    const bool near_zero = std::abs(v) <= 1e-9;
    const bool near_unit = std::abs(std::abs(v) - 1.0) <= 1e-9;
    REQUIRE((near_zero || near_unit));
  }
}

TEST_CASE("spectrum pooling is deterministic for a fixed seed") {
  KickedTopConfig cfg;
  cfg.j1 = cfg.j2 = 9.5;
  cfg.kick = 6.0;
  cfg.eps = 0.3;
  RandomStream s1(5, 0), s2(5, 0);
  const Spectrum a = helstrom_spectrum(cfg, 6, 30, s1, 1);
  const Spectrum b = helstrom_spectrum(cfg, 6, 30, s2, 2);
  REQUIRE(a.values.size() == b.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i) REQUIRE(a.values[i] == b.values[i]);
}
