#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "wgt/correlation.hpp"

using namespace wgt;

TEST_CASE("lorentzian correlation: normalization, half width, tail") {
  CHECK(lorentzian_correlation(0.0, 2.0) == 1.0);
  CHECK(lorentzian_correlation(2.0, 2.0) == doctest::Approx(0.5));
  CHECK(lorentzian_correlation(1e8, 2.0) < 1e-12);
  CHECK(lorentzian_correlation(-3.0, 2.0) ==
        doctest::Approx(lorentzian_correlation(3.0, 2.0)));
}

TEST_CASE("lorentzian model evaluates the closed form") {
  auto c = CorrelationModel::lorentzian(0.5);
  CHECK(c(0.0) == 1.0);
  CHECK(c(0.5) == doctest::Approx(0.5));
  CHECK(c.correlation_length() == 0.5);
  CHECK(c.is_lorentzian());
}

TEST_CASE("tabulated model interpolates and extrapolates flat") {
  auto c = CorrelationModel::tabulated({0.0, 1.0, 2.0}, {1.0, 0.5, 0.2});
  CHECK(c(0.0) == 1.0);
  CHECK(c(0.5) == doctest::Approx(0.75));
  CHECK(c(1.5) == doctest::Approx(0.35));
  CHECK(c(5.0) == doctest::Approx(0.2));  // flat beyond the last sample
  CHECK(c(-0.5) == doctest::Approx(0.75));  // even in s
  CHECK(c.correlation_length() == doctest::Approx(1.0));
  CHECK_FALSE(c.is_lorentzian());
}

TEST_CASE("tabulated model rejects malformed tables") {
  CHECK_THROWS_AS(CorrelationModel::tabulated({0.0}, {1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(CorrelationModel::tabulated({0.0, 1.0}, {0.9, 0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(CorrelationModel::tabulated({0.0, 1.0}, {1.0, 1.1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(CorrelationModel::tabulated({0.0, 1.0, 0.5}, {1.0, 0.5, 0.2}),
                  std::invalid_argument);
}

TEST_CASE("elastic kernel: value at zero, half point, symmetry") {
  ScatteringKernel k{2.0, 0.5, false};
  CHECK(elastic_rate(0.0, k) == doctest::Approx(2.0));
  CHECK(elastic_rate(std::log(2.0) / 0.5, k) == doctest::Approx(1.0));
  for (double p : {0.3, 1.0, 4.2})
    CHECK(elastic_rate(p, k) == doctest::Approx(elastic_rate(-p, k)));
}

TEST_CASE("elastic kernel cutoff: below gamma0/e beyond 1/l_c") {
  ScatteringKernel k{1.0, 0.4, false};
  CHECK(elastic_rate(1.0 / k.l_c, k) == doctest::Approx(std::exp(-1.0)));
  CHECK(elastic_rate(1.5 / k.l_c, k) < std::exp(-1.0));
}

TEST_CASE("white-noise kernel is momentum independent") {
  ScatteringKernel k{3.0, 0.5, true};
  CHECK(elastic_rate(0.0, k) == 3.0);
  CHECK(elastic_rate(17.0, k) == 3.0);
}

TEST_CASE("half-space two-point correlation: frozen oracle values") {
  double z = 1.0;
  CHECK(halfspace_correlation_numeric(z, 0.0, 1e-4) == 1.0);
  // Slow ~1/s lateral tail of the magnetostatic two-point trace:
  // these values were frozen from a converged independent evaluation.
  CHECK(halfspace_correlation_numeric(z, 1.0, 1e-4) ==
        doctest::Approx(0.8945).epsilon(5e-3));
  CHECK(halfspace_correlation_numeric(z, 10.0, 1e-4) ==
        doctest::Approx(0.1961).epsilon(0.02));
  // Half-value separation sits near 3.5 z.
  CHECK(halfspace_correlation_numeric(z, 3.5, 1e-4) ==
        doctest::Approx(0.496).epsilon(0.03));
}

TEST_CASE("half-space two-point correlation decays monotonically") {
  double z = 1.0, prev = 1.0;
  for (double s : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    double c = halfspace_correlation_numeric(z, s, 1e-4);
    CHECK(c < prev);
    CHECK(c > 0.0);
    prev = c;
  }
}
