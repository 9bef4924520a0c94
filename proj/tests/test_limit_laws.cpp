#include <qsd/constants.hpp>
#include <qsd/ensembles.hpp>
#include <qsd/limit_laws.hpp>
#include <qsd/stats.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

using namespace qsd;

namespace {

// Density of the symmetrized MP law from the resolvent cubic
// z G^3 + (2c-1) G^2 - z G + 1 = 0 at z = y on the real axis: the imaginary
// part of the complex-pair root over pi. Companion-matrix roots polished by
// Newton; independent of the closed-form radical expression.
double smp_pdf_oracle(double c, double y) {
  const Complex a(std::abs(y), 0.0), b(2.0 * c - 1.0, 0.0), d(1.0, 0.0);
  Eigen::Matrix3cd companion = Eigen::Matrix3cd::Zero();
  companion(0, 2) = -d / a;
  companion(1, 2) = a / a;  // -(-z)/z
  companion(2, 2) = -b / a;
  companion(1, 0) = 1.0;
  companion(2, 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::Matrix3cd> solver(companion);
  double best = 0.0;
  for (int i = 0; i < 3; ++i) {
    Complex g = solver.eigenvalues()[i];
    for (int it = 0; it < 4; ++it) {
      const Complex f = a * g * g * g + b * g * g - a * g + d;
      const Complex df = 3.0 * a * g * g + 2.0 * b * g - a;
      g -= f / df;
    }
    best = std::max(best, std::abs(g.imag()));
  }
  return best / std::numbers::pi;
}

}  // namespace

TEST_CASE("normalization: atom plus continuous mass is one") {
  for (double c : {0.2, 0.5, 1.0, 4.0}) {
    const LimitLaw mp = LimitLaw::marchenko_pastur(c);
    REQUIRE(mp.expectation([](double) { return 1.0; }) == Catch::Approx(1.0).margin(1e-8));
    const LimitLaw smp = LimitLaw::symmetrized_mp(c);
    REQUIRE(smp.expectation([](double) { return 1.0; }) == Catch::Approx(1.0).margin(1e-8));
  }
  REQUIRE(LimitLaw::fuss_catalan2().expectation([](double) { return 1.0; }) ==
          Catch::Approx(1.0).margin(1e-8));
  for (double c : {0.5, 1.0, 2.0}) {
    REQUIRE(LimitLaw::aubrun(c).expectation([](double) { return 1.0; }) ==
            Catch::Approx(1.0).margin(1e-8));
  }
  REQUIRE(LimitLaw::semicircle(0.0, 2.0).expectation([](double) { return 1.0; }) ==
          Catch::Approx(1.0).margin(1e-8));
}

TEST_CASE("SMP continuous mass equals min(1, 2c) at c = 0.2") {
  const LimitLaw smp = LimitLaw::symmetrized_mp(0.2);
  REQUIRE(smp.atom0() == Catch::Approx(0.6).margin(1e-12));
  const double cont = smp.expectation([](double) { return 1.0; }) - smp.atom0();
  REQUIRE(cont == Catch::Approx(0.4).margin(1e-6));
}

TEST_CASE("MP mean equals c and entropy integral matches the closed form") {
  for (double c : {0.2, 0.5, 1.0, 2.0, 4.0}) {
    const LimitLaw mp = LimitLaw::marchenko_pastur(c);
    REQUIRE(mp.expectation([](double x) { return x; }) == Catch::Approx(c).margin(1e-8));
  }
  // int x ln x dMP_c = 1/2 + c ln c for c >= 1
  for (double c : {1.0, 2.0}) {
    const LimitLaw mp = LimitLaw::marchenko_pastur(c);
    REQUIRE(mp.expectation([](double x) { return x * std::log(x); }) ==
            Catch::Approx(0.5 + c * std::log(c)).margin(1e-8));
  }
}

TEST_CASE("MP(1) density values") {
  const LimitLaw mp = LimitLaw::marchenko_pastur(1.0);
  REQUIRE(mp.pdf(2.0) == Catch::Approx(1.0 / (2.0 * std::numbers::pi)).epsilon(1e-12));
  REQUIRE(mp.pdf(4.0) == 0.0);
  REQUIRE(mp.pdf(4.5) == 0.0);
  REQUIRE(mp.pdf(-0.1) == 0.0);
}

TEST_CASE("SMP is symmetric with the documented support") {
  const LimitLaw smp = LimitLaw::symmetrized_mp(1.0);
  REQUIRE(smp.hi() ==
          Catch::Approx(std::sqrt((11.0 + 5.0 * std::sqrt(5.0)) / 2.0)).epsilon(1e-12));
  for (double y : {0.1, 0.5, 1.0, 2.0, 3.0}) REQUIRE(smp.pdf(-y) == smp.pdf(y));
  // soft vanishing at the edge
  REQUIRE(smp.pdf(smp.hi() * 0.999999) < 2e-2);
  REQUIRE(smp.pdf(smp.hi()) == 0.0);
}

TEST_CASE("SMP closed form matches the resolvent-cubic oracle") {
  for (double c : {0.2, 0.35, 0.5, 0.75, 1.0, 4.0, 50.0}) {
    const LimitLaw smp = LimitLaw::symmetrized_mp(c);
    const double lo = smp.inner_edge();
    const double hi = smp.hi();
    for (int i = 1; i < 60; ++i) {
      const double y = lo + (hi - lo) * i / 60.0;
      REQUIRE(smp.pdf(y) == Catch::Approx(smp_pdf_oracle(c, y)).margin(1e-8));
    }
    // zero inside the gap for c < 1/2
    if (lo > 0.0) {
      REQUIRE(smp.pdf(lo / 2.0) == 0.0);
      REQUIRE(smp_pdf_oracle(c, lo / 2.0) <= 1e-9);
    }
  }
}

TEST_CASE("SMP odd moments vanish and the second moment is 2c") {
  for (double c : {0.2, 1.0, 4.0}) {
    const LimitLaw smp = LimitLaw::symmetrized_mp(c);
    REQUIRE(std::abs(smp.expectation([](double y) { return y; }, {0.0})) <= 1e-8);
    REQUIRE(std::abs(smp.expectation([](double y) { return y * y * y; }, {0.0})) <= 1e-8);
    REQUIRE(smp.expectation([](double y) { return y * y; }, {0.0}) ==
            Catch::Approx(2.0 * c).margin(1e-7));
  }
}

TEST_CASE("headline functionals") {
  const LimitLaw mp = LimitLaw::marchenko_pastur(1.0);
  const LimitLaw smp = LimitLaw::symmetrized_mp(1.0);
  const LimitLaw fc = LimitLaw::fuss_catalan2();

  REQUIRE(mp.expectation([](double t) { return std::abs(t - 1.0) / 2.0; }, {1.0}) ==
          Catch::Approx(constant("trace-star")).margin(1e-8));
  REQUIRE(smp.expectation([](double y) { return std::abs(y) / 2.0; }, {0.0}) ==
          Catch::Approx(constant("trace-generic")).margin(1e-8));
  REQUIRE(fc.expectation([](double x) { return std::sqrt(x); }) ==
          Catch::Approx(0.75).margin(1e-8));
  REQUIRE(mp.expectation([](double t) { return std::sqrt(t); }) ==
          Catch::Approx(constant("root-fidelity-star")).margin(1e-8));
  REQUIRE(mp.expectation([](double t) { return t * std::log(t); }) ==
          Catch::Approx(0.5).margin(1e-8));
  REQUIRE(mp.expectation([](double t) { return std::log(t); }) ==
          Catch::Approx(-1.0).margin(1e-7));
}

TEST_CASE("Fuss-Catalan moments are the Fuss-Catalan numbers") {
  const LimitLaw fc = LimitLaw::fuss_catalan2();
  REQUIRE(fc.expectation([](double x) { return x; }) == Catch::Approx(1.0).margin(1e-8));
  REQUIRE(fc.expectation([](double x) { return x * x; }) == Catch::Approx(3.0).margin(1e-7));
  REQUIRE(fc.expectation([](double x) { return x * x * x; }) ==
          Catch::Approx(12.0).margin(1e-6));
}

TEST_CASE("median and orbit diameter of MP(1)") {
  const auto md = mp_median_and_diameter();
  const LimitLaw mp = LimitLaw::marchenko_pastur(1.0);
  REQUIRE(mp.cdf(md.median) == Catch::Approx(0.5).margin(1e-9));
  REQUIRE(md.median > 0.0);
  REQUIRE(md.median < 4.0);
  REQUIRE(md.diameter == Catch::Approx(0.7875).margin(5e-4));
  REQUIRE(md.median == Catch::Approx(constant("mp-median")).margin(1e-8));
  REQUIRE(md.diameter == Catch::Approx(constant("orbit-diameter")).margin(1e-8));
}

TEST_CASE("Cauchy transform satisfies the R-transform inversion identity") {
  const LimitLaw mp = LimitLaw::marchenko_pastur(1.0);
  const LimitLaw smp = LimitLaw::symmetrized_mp(1.0);
  for (Complex z : {Complex(1.0, 1.0), Complex(2.0, 0.5)}) {
    const Complex gm = mp.cauchy_transform(z);
    REQUIRE(std::abs(mp_r_transform(1.0, gm) + 1.0 / gm - z) < 1e-6);
    const Complex gs = smp.cauchy_transform(z);
    REQUIRE(std::abs(smp_r_transform(1.0, gs) + 1.0 / gs - z) < 1e-6);
  }
  // total mass: G(z) -> 1/z far from the support
  const Complex far(0.0, 100.0);
  REQUIRE(std::abs(mp.cauchy_transform(far) - 1.0 / far) < 1e-3 / 100.0);
  REQUIRE_THROWS_AS(mp.cauchy_transform(Complex(1.0, -1.0)), std::invalid_argument);
}

TEST_CASE("rescaled SMP approaches the semicircle for large c") {
  const double c = 50.0;
  const LimitLaw smp = LimitLaw::symmetrized_mp(c);
  const LimitLaw sc = LimitLaw::semicircle(0.0, 2.0);
  const double scale = std::sqrt(2.0 * c);
  double sup = 0.0;
  for (double x = -2.1; x <= 2.1; x += 0.1)
    sup = std::max(sup, std::abs(smp.cdf(x * scale) - sc.cdf(x)));
  REQUIRE(sup < 0.02);
}

TEST_CASE("chernoff function values and minimum") {
  REQUIRE(chernoff_limit(0.5) == Catch::Approx(constant("chernoff-q")).epsilon(1e-12));
  REQUIRE(chernoff_limit(0.0) == Catch::Approx(1.0).epsilon(1e-12));
  REQUIRE(chernoff_limit(1.0) == Catch::Approx(1.0).epsilon(1e-12));
  for (double s : {0.1, 0.25, 0.4})
    REQUIRE(chernoff_limit(s) == Catch::Approx(chernoff_limit(1.0 - s)).epsilon(1e-12));
  const auto min = chernoff_min();
  REQUIRE(min.s_star == Catch::Approx(0.5).margin(1e-6));
  REQUIRE(min.q == Catch::Approx(constant("chernoff-q")).margin(1e-8));
}

TEST_CASE("appendix constants against their quadrature definitions") {
  const auto appc = appendix_constants();
  REQUIRE(appc.t1 == Catch::Approx(0.368).margin(1e-3));
  REQUIRE(appc.e1 == Catch::Approx(0.518).margin(1e-3));

  // T1^2 = 1/4 - int ((t+1)/2) ln((t+1)/2) dMP1
  const LimitLaw mp = LimitLaw::marchenko_pastur(1.0);
  const double integral = mp.expectation(
      [](double t) { return (t + 1.0) / 2.0 * std::log((t + 1.0) / 2.0); });
  REQUIRE(appc.t1 * appc.t1 == Catch::Approx(0.25 - integral).margin(1e-8));

  // E1 is the entropic distance at root fidelity 8/(3 pi)
  const double x = (1.0 - constant("root-fidelity-star")) / 2.0;
  const double h2 = -x * std::log(x) - (1.0 - x) * std::log(1.0 - x);
  REQUIRE(appc.e1 == Catch::Approx(std::sqrt(h2)).margin(1e-12));
}

TEST_CASE("Aubrun negativity closed forms") {
  const auto v1 = aubrun_negativity(1.0);
  REQUIRE(v1.negative_fraction == Catch::Approx(0.1955).margin(5e-5));
  REQUIRE(v1.negativity == Catch::Approx(0.080).margin(5e-4));
  REQUIRE(aubrun_negativity(3.999).negative_fraction < 1e-3);
  REQUIRE(aubrun_negativity(4.0).negative_fraction == 0.0);
  REQUIRE_THROWS_AS(aubrun_negativity(-1.0), std::invalid_argument);

  // the fraction also equals the mass of the shifted semicircle below zero
  for (double c : {0.5, 1.0, 2.0}) {
    const LimitLaw law = LimitLaw::aubrun(c);
    REQUIRE(law.cdf(0.0) == Catch::Approx(aubrun_negativity(c).negative_fraction).margin(1e-7));
  }
}

TEST_CASE("SMP density matches a sampled induced-measure histogram at c = 0.5") {
  // branch-choice validation versus Monte Carlo
  RandomStream stream(2024, 0);
  std::vector<double> pooled;
  const int n = 80, k = 40;
  for (int rep = 0; rep < 60; ++rep) {
    const Matrix diff =
        sample_induced(n, k, stream).matrix() - sample_induced(n, k, stream).matrix();
    const RealVector vals = eigenvalues(diff);
    for (int i = 0; i < n; ++i) pooled.push_back(vals[i] * k);
  }
  const double ks = ks_distance_to_law(pooled, LimitLaw::symmetrized_mp(0.5));
  REQUIRE(ks < 0.05);
}

TEST_CASE("pdf rejects invalid parameters") {
  REQUIRE_THROWS_AS(LimitLaw::marchenko_pastur(0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(LimitLaw::symmetrized_mp(-2.0), std::invalid_argument);
}
