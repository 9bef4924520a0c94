#include <qsd/quadrature.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace qsd;

TEST_CASE("polynomials integrate exactly") {
  REQUIRE(integrate([](double x) { return x * x; }, 0.0, 1.0) == Catch::Approx(1.0 / 3.0));
  REQUIRE(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi) ==
          Catch::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("kinked integrands converge under adaptive bisection") {
  const double got = integrate([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0,
                               {1e-10, 20000});
  // split into two triangles
  REQUIRE(got == Catch::Approx(0.5 * 0.09 + 0.5 * 0.49).epsilon(1e-9));
}

TEST_CASE("sqrt substitution tames endpoint singularities") {
  // 1/sqrt(x) on (0,1] becomes 2 after x = u^2
  const double got =
      integrate([](double u) { return 2.0; }, 0.0, 1.0, {1e-12});
  REQUIRE(got == Catch::Approx(2.0));
  // and the raw singular integrand still converges adaptively to ~1e-6
  const double raw =
      integrate([](double x) { return 1.0 / std::sqrt(std::max(x, 1e-300)); }, 1e-12, 1.0,
                {1e-6, 20000});
  REQUIRE(raw == Catch::Approx(2.0).margin(1e-4));
}

TEST_CASE("unreachable tolerance reports the achieved error") {
  bool threw = false;
  try {
    // noisy-looking integrand with a hard budget
    integrate([](double x) { return 1.0 / std::sqrt(std::abs(x - 0.5) + 1e-14); }, 0.0, 1.0,
              {1e-14, 8});
  } catch (const quadrature_error& e) {
    threw = true;
    REQUIRE(e.achieved() > 1e-14);
    REQUIRE(e.module_name() == "quadrature");
  }
  REQUIRE(threw);
}

TEST_CASE("complex-valued integration") {
  const Complex got = integrate_complex(
      [](double x) { return Complex(std::cos(x), std::sin(x)); }, 0.0, std::numbers::pi / 2);
  REQUIRE(got.real() == Catch::Approx(1.0));
  REQUIRE(got.imag() == Catch::Approx(1.0));
}
