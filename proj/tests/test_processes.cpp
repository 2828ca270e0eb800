#include <array>
#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "qheat/errors.hpp"
#include "qheat/processes.hpp"

using namespace qheat;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
constexpr double kLn2 = 0.69314718055994531;
} // namespace

TEST_CASE("Process constraints") {
  CHECK_NOTHROW(Process::isothermal(1.0, 1.0, 0.25));
  CHECK_NOTHROW(Process::isochoric(1.0, 2.0, 0.5));
  CHECK_NOTHROW(Process::adiabatic(ThermalPoint(0.5, 2.0), 1.0));
  CHECK_THROWS_AS(Process(ProcessKind::Isothermal, ThermalPoint(1.0, 1.0), ThermalPoint(1.1, 1.0)),
                  ContractError);
  CHECK_THROWS_AS(Process(ProcessKind::Isochoric, ThermalPoint(1.0, 1.0), ThermalPoint(2.0, 1.1)),
                  ContractError);
  CHECK_THROWS_AS(Process(ProcessKind::Adiabatic, ThermalPoint(1.0, 1.0), ThermalPoint(2.0, 0.6)),
                  ContractError);
  // Within the 1e-12 relative band.
  CHECK_NOTHROW(
      Process(ProcessKind::Adiabatic, ThermalPoint(1.0, 1.0), ThermalPoint(2.0, 0.5 * (1 + 1e-13))));

  const auto leg = Process::adiabatic(ThermalPoint(0.5, 2.0), 1.0);
  CHECK(leg.end().gamma() == doctest::Approx(1.0).epsilon(1e-15));
  const auto back = leg.reversed();
  CHECK(back.start() == leg.end());
  CHECK(back.end() == leg.start());
}

TEST_CASE("heat_isothermal") {
  CHECK(heat_isothermal(1.0, 3.0, 3.0) == 0.0);
  CHECK(rel(heat_isothermal(1.0, 1.0, 0.25), kLn2) < 1e-15);
  CHECK(heat_isothermal(2.0, 1.0, 0.5) > 0.0);  // expansion absorbs heat
  CHECK(heat_isothermal(2.0, 0.5, 1.0) < 0.0);
  CHECK_THROWS_AS(heat_isothermal(1.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(heat_isothermal(-1.0, 1.0, 1.0), DomainError);
}

TEST_CASE("heat_isochoric") {
  CHECK(heat_isochoric(1.0, 0.7, 0.7) == 0.0);
  CHECK(heat_isochoric(1.0, 2.0, 0.5) == 0.75);
  CHECK(heat_isochoric(1.0, 2.0, 0.5) > 0.0);
  CHECK_THROWS_AS(heat_isochoric(1.0, 0.0, 1.0), DomainError);

  SUBCASE("matches the gamma-scaled corner form") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int i = 0; i < 1000; ++i) {
      const double beta_h = u(rng), beta_l = u(rng), gamma_h = u(rng), gamma_l = u(rng);
      const double beta_a = beta_l * gamma_l / gamma_h;
      const double direct = heat_isochoric(gamma_h, beta_a, beta_h);
      const double scaled = gamma_h / 2.0 * (1.0 / (beta_h * gamma_h) - 1.0 / (beta_l * gamma_l));
      CHECK(std::abs(direct - scaled) <= 1e-14 * std::max({std::abs(direct), 1.0 / beta_a, 1.0 / beta_h}));
    }
  }
}

TEST_CASE("heat_adiabatic and heat_general") {
  const auto adiabat = Process::adiabatic(ThermalPoint(0.5, 2.0), 3.0);
  CHECK(heat_adiabatic(adiabat) == 0.0);
  CHECK(heat_adiabatic(Process::adiabatic(ThermalPoint(0.5, 2.0), 0.5)) == 0.0);
  CHECK(heat_general(adiabat) == 0.0);
  CHECK(heat_general(Process::isothermal(1.0, 1.0, 0.25)) == heat_isothermal(1.0, 1.0, 0.25));
  CHECK(heat_general(Process::isochoric(1.0, 2.0, 0.5)) == heat_isochoric(1.0, 2.0, 0.5));
  CHECK_THROWS_AS(heat_adiabatic(Process::isochoric(1.0, 2.0, 0.5)), ContractError);
}

TEST_CASE("GUP heat correction") {
  const GupParams g(1e-4, 1.0);
  SUBCASE("isothermal legs carry no correction") {
    const auto h = heat_gup(Process::isothermal(1.0, 1.0, 0.25), g);
    CHECK(h.correction == 0.0);
    CHECK(h.QG == h.Q);
  }
  SUBCASE("hot to cold adiabat absorbs heat") {
    const auto h = heat_gup(Process::adiabatic(ThermalPoint(0.5, 1.0), 1.0), g);
    CHECK(h.Q == 0.0);
    CHECK(rel(h.correction, 9e-4) < 1e-14);
    CHECK(h.QG > 0.0);
  }
  SUBCASE("switched off") {
    for (const auto& leg : {Process::isothermal(1.0, 1.0, 0.25), Process::isochoric(1.0, 2.0, 0.5),
                            Process::adiabatic(ThermalPoint(0.5, 1.0), 1.0)}) {
      const auto h = heat_gup(leg, GupParams::none(1.0));
      CHECK(h.QG == h.Q);
      CHECK(h.correction == 0.0);
    }
  }
  SUBCASE("gate at both endpoints") {
    // start delta = 4e-4 * 2 = 8e-4 passes, end delta = 4e-4 * 4 fails
    CHECK_THROWS_AS(heat_gup(Process::adiabatic(ThermalPoint(1.0, 2.0), 0.5), g), RegimeError);
  }
  SUBCASE("closed sequences telescope") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int i = 0; i < 200; ++i) {
      std::array<double, 6> betas{};
      for (auto& b : betas)
        b = u(rng);
      double total = 0.0, scale = 0.0;
      for (std::size_t k = 0; k < betas.size(); ++k) {
        total += gup_heat_correction(6e-4, betas[k], betas[(k + 1) % betas.size()]);
        scale = std::max(scale, 6e-4 / (betas[k] * betas[k]));
      }
      CHECK(std::abs(total) <= 1e-14 * scale);
    }
  }
}

TEST_CASE("path_heat_oracle") {
  SUBCASE("isothermal") {
    const std::array path = {ThermalPoint(1.0, 1.0), ThermalPoint(1.0, 0.25)};
    CHECK(rel(path_heat_oracle(path, 10'000), kLn2) < 1e-8);
  }
  SUBCASE("isochoric") {
    const std::array path = {ThermalPoint(2.0, 1.0), ThermalPoint(0.5, 1.0)};
    CHECK(rel(path_heat_oracle(path, 10'000), 0.75) < 1e-8);
  }
  SUBCASE("adiabatic (log-linear segment of the hyperbola)") {
    const auto leg = Process::adiabatic(ThermalPoint(0.5, 2.0), 2.0);
    const auto pts = sample_leg(leg, 10'000);
    CHECK(std::abs(path_heat_oracle(pts, 2)) <= 1e-8 / 0.5);
  }
  SUBCASE("reversal negates the heat") {
    const std::array fwd = {ThermalPoint(2.0, 1.0), ThermalPoint(1.0, 0.3), ThermalPoint(0.5, 0.3)};
    const std::array bwd = {fwd[2], fwd[1], fwd[0]};
    const double q = path_heat_oracle(fwd, 1000);
    CHECK(std::abs(q + path_heat_oracle(bwd, 1000)) <= 1e-12 * std::abs(q));
  }
  SUBCASE("additive over concatenated paths") {
    const std::array first = {ThermalPoint(2.0, 1.0), ThermalPoint(1.0, 0.3)};
    const std::array second = {ThermalPoint(1.0, 0.3), ThermalPoint(0.5, 0.3)};
    const std::array both = {first[0], first[1], second[1]};
    const double sum = path_heat_oracle(first, 500) + path_heat_oracle(second, 500);
    CHECK(std::abs(path_heat_oracle(both, 500) - sum) <= 1e-13 * std::abs(sum));
  }
  SUBCASE("second-order convergence") {
    const std::array path = {ThermalPoint(2.0, 1.0), ThermalPoint(0.5, 1.0)};
    const double e1 = std::abs(path_heat_oracle(path, 10) - 0.75);
    const double e4 = std::abs(path_heat_oracle(path, 40) - 0.75);
    CHECK(e1 / e4 >= 8.0);
  }
  SUBCASE("errors") {
    const std::array one = {ThermalPoint(1.0, 1.0)};
    const std::array two = {ThermalPoint(1.0, 1.0), ThermalPoint(1.0, 0.5)};
    CHECK_THROWS_AS(path_heat_oracle(one, 10), DomainError);
    CHECK_THROWS_AS(path_heat_oracle(two, 1), DomainError);
  }
}

TEST_CASE("leg_heat_oracle follows each constraint curve") {
  const GupParams g(1e-4, 1.0);
  const std::vector<Process> legs = {
      Process::isothermal(1.0, 1.0, 0.25),
      Process::isochoric(1.0, 2.0, 0.5),
      Process::adiabatic(ThermalPoint(0.5, 1.0), 1.0),
      Process::adiabatic(ThermalPoint(2.0, 0.1), 0.25),
  };
  for (const auto& leg : legs) {
    const auto closed = heat_gup(leg, g);
    const auto oracle = leg_heat_oracle(leg, g, 10'000);
    const double scale = 1.0 / std::min(leg.start().beta(), leg.end().beta());
    CHECK(std::abs(oracle.Q - closed.Q) <= 1e-8 * scale);
    CHECK(std::abs(oracle.QG - closed.QG) <= 1e-8 * scale);
  }
}

TEST_CASE("random adiabats carry no heat") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> lb(-1.0, 1.0), lg(-4.0, 0.0);
  for (int i = 0; i < 20; ++i) {
    const ThermalPoint start(std::pow(10.0, lb(rng)), std::pow(10.0, lg(rng)));
    const auto leg = Process::adiabatic(start, std::pow(10.0, lb(rng)));
    const double beta_min = std::min(leg.start().beta(), leg.end().beta());
    CHECK(std::abs(leg_heat_oracle(leg, GupParams::none(1.0), 10'000).Q) <= 1e-8 / beta_min);
  }
}
