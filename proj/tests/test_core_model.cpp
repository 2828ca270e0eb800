#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <doctest.h>

#include "qheat/core_model.hpp"
#include "qheat/errors.hpp"

using namespace qheat;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
} // namespace

TEST_CASE("gamma_of matches direct substitution") {
  constexpr double pi = std::numbers::pi;
  CHECK(gamma_of(0.5, pi) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gamma_of(1.0, 1.0) == doctest::Approx(4.9348022005446793).epsilon(1e-15));
  CHECK(gamma_of(1.0, 2.0) == doctest::Approx(pi * pi / 8.0).epsilon(1e-15));
  CHECK(rel(gamma_of(1.0, 1.0) / gamma_of(1.0, 2.0), 4.0) < 1e-15);
}

TEST_CASE("gamma_of is strictly decreasing in width and mass") {
  CHECK(gamma_of(1.0, 1.1) < gamma_of(1.0, 1.0));
  CHECK(gamma_of(1.1, 1.0) < gamma_of(1.0, 1.0));
}

TEST_CASE("gamma_of rejects non-finite or non-positive inputs") {
  constexpr double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(gamma_of(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(gamma_of(1.0, -1.0), DomainError);
  CHECK_THROWS_AS(gamma_of(std::nan(""), 1.0), DomainError);
  CHECK_THROWS_AS(gamma_of(1.0, inf), DomainError);
  CHECK_THROWS_AS(WellSubstance(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(ThermalPoint(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(ThermalPoint(1.0, inf), DomainError);
}

TEST_CASE("gamma_of scales as width^-2") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mass(0.1, 10.0), width(0.1, 10.0), scale(0.1, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const double m = mass(rng), l = width(rng), a = scale(rng);
    CHECK(rel(gamma_of(m, a * l) * a * a, gamma_of(m, l)) < 1e-14);
  }
}

TEST_CASE("energy levels") {
  CHECK(energy_level(1.0, 3) == 9.0);
  CHECK(energy_level(2.5, 1) == 2.5);
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  CHECK(energy_level(pi2 / 2.0, 2) == doctest::Approx(2.0 * pi2).epsilon(1e-15));
  CHECK(energy_level(1.0, 4) > energy_level(1.0, 3));
  CHECK_THROWS_AS(energy_level(1.0, 0), DomainError);

  CHECK(energy_level_gup(1.0, 0.0, 5) == 25.0);
  CHECK(energy_level_gup(1.0, 1e-4, 2) == doctest::Approx(4.0016).epsilon(1e-15));
  CHECK(energy_level_gup(2.0, 1e-3, 1) == doctest::Approx(2.002).epsilon(1e-15));
  CHECK(energy_level_gup(1.0, 1e-6, 3) > energy_level(1.0, 3));
  CHECK_THROWS_AS(energy_level_gup(1.0, -1e-3, 1), DomainError);
  CHECK_THROWS_AS(energy_level_gup(1.0, 0.0, 0), DomainError);
}

TEST_CASE("GUP spectrum agrees with the two-term mass/width form") {
  // Choose m, L so that gamma = 2 and delta = 1e-3, then evaluate
  // n^2 pi^2 / (2 m L^2) + n^4 beta_G pi^4 / (L^4 m) directly.
  constexpr double pi = std::numbers::pi;
  const double m = 1.3;
  const double L = pi / std::sqrt(2.0 * m * 2.0);
  const double beta_g = 1e-3 / (4.0 * m * 2.0);
  for (std::uint64_t n : {1u, 2u, 7u}) {
    const double x = static_cast<double>(n);
    const double two_term = x * x * pi * pi / (2.0 * m * L * L) +
                            std::pow(x, 4) * beta_g * std::pow(pi, 4) / (std::pow(L, 4) * m);
    const double delta = GupParams(beta_g, m).delta(gamma_of(m, L));
    CHECK(rel(energy_level_gup(gamma_of(m, L), delta, n), two_term) < 1e-14);
  }
  CHECK(rel(energy_level_gup(2.0, 1e-3, 1), 2.002) < 1e-14);
}

TEST_CASE("GUP shift of each level is gamma delta n^4") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> g(0.01, 10.0), d(1e-8, 1e-3);
  std::uniform_int_distribution<std::uint64_t> nn(1, 200);
  for (int i = 0; i < 1000; ++i) {
    const double gamma = g(rng), delta = d(rng);
    const std::uint64_t n = nn(rng);
    const double x = static_cast<double>(n);
    const double shift = energy_level_gup(gamma, delta, n) - energy_level(gamma, n);
    // Subtraction of two O(gamma n^2) numbers; compare at the scale of the level.
    CHECK(std::abs(shift - gamma * delta * x * x * x * x) <= 1e-14 * energy_level_gup(gamma, delta, n));
  }
}

TEST_CASE("gup coefficients") {
  SUBCASE("switched off") {
    const auto c = gup_coefficients(GupParams(0.0, 1.0), 1.0);
    CHECK(c.delta == 0.0);
    CHECK(c.K == 0.0);
    CHECK(c.lambda == 0.0);
  }
  SUBCASE("beta_G = 1e-4") {
    // K frozen from the mpmath oracle (tests/oracles/freeze_values.py).
    const auto c = gup_coefficients(GupParams(1e-4, 1.0), 1.0);
    CHECK(rel(c.delta, 4e-4) < 1e-14);
    CHECK(rel(c.K, 2.658680776358274e-4) < 1e-14);
    CHECK(rel(c.lambda, 6e-4) < 1e-14);
    CHECK(rel(c.lambda, 4.0 * c.K / std::sqrt(std::numbers::pi)) < 1e-14);
  }
  SUBCASE("delta depends on mass * gamma only") {
    CHECK(rel(gup_coefficients(GupParams(1e-4, 2.0), 0.5).delta, 4e-4) < 1e-14);
  }
}

TEST_CASE("lambda = 4K/sqrt(pi) for random parameters") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> bg(0.0, 1e-2), m(0.01, 100.0);
  for (int i = 0; i < 1000; ++i) {
    const GupParams p(bg(rng), m(rng));
    if (p.K() == 0.0)
      continue;
    CHECK(rel(p.lambda(), 4.0 * p.K() / std::sqrt(std::numbers::pi)) < 1e-14);
  }
}

TEST_CASE("delta quadruples when the width halves") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double m = u(rng), L = u(rng);
    const GupParams p(1e-5, m);
    CHECK(rel(p.delta(gamma_of(m, L / 2.0)), 4.0 * p.delta(gamma_of(m, L))) < 1e-14);
  }
}

TEST_CASE("GUP validity gate") {
  const GupParams p(1e-4, 1.0);
  CHECK_NOTHROW(p.check_gate(2.5)); // delta = 1e-3, at the threshold
  CHECK_THROWS_AS(p.check_gate(2.6), RegimeError);
  try {
    p.check_gate(5.0);
  } catch (const RegimeError& e) {
    CHECK(e.delta() == doctest::Approx(2e-3));
    CHECK(e.threshold() == 1e-3);
  }
  CHECK_NOTHROW(GupParams(1e-4, 1.0, 1e-2).check_gate(5.0));
  CHECK_THROWS_AS(GupParams(-1e-4, 1.0), DomainError);
}
