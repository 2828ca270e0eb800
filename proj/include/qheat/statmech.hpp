#pragma once

// Partition functions and thermodynamic potentials of the square-well
// particle: closed forms from the integral approximation of the lattice
// sum, their first-order GUP corrections, and brute-force lattice-sum
// oracles used for verification.

#include <cstdint>
#include <string_view>

#include "qheat/core_model.hpp"

namespace qheat::statmech {

/// S_0 = 1/2 + ln(sqrt(pi)/2). Reported, never used in heat calculations.
double entropy_constant();

/// Trust level of the integral approximation, keyed on beta*gamma.
enum class Quality { Ok, Marginal, Invalid };

inline constexpr double kQualityOkMax = 1e-3;
inline constexpr double kQualityMarginalMax = 0.1;

Quality approximation_quality(double beta_gamma) noexcept;
std::string_view to_string(Quality q) noexcept;

struct Quantities {
  double Z;
  double F;
  double U;
  double S;
  double S0;
  Quality quality = Quality::Ok;
};

/// GUP-corrected potentials. The shifts are carried explicitly so that
/// SG - S is available without cancellation.
struct GupQuantities {
  double ZG;
  double FG;
  double UG;
  double SG;
  double dF; ///< FG - F = +2K / (sqrt(pi) beta^2)
  double dU; ///< UG - U = -2K / (sqrt(pi) beta^2)
  double dS; ///< SG - S = -4K / (sqrt(pi) beta) = -lambda / beta
};

/// Z ~ (1/2) sqrt(pi / (beta gamma)).
double partition_approx(const ThermalPoint& point);

/// Sum_{n>=1} n^4 exp(-beta gamma n^2) ~ (3 sqrt(pi) / 8) (beta gamma)^(-5/2).
double n4_moment_approx(const ThermalPoint& point);

/// Z^G ~ Z - K (beta^3 gamma)^(-1/2). Enforces the GUP validity gate.
double partition_gup(const ThermalPoint& point, const GupParams& params);

Quantities thermo_closed_form(const ThermalPoint& point);

GupQuantities thermo_gup(const ThermalPoint& point, const GupParams& params);

// ---------------------------------------------------------------------------
// Oracles

inline constexpr std::uint64_t kMaxLatticeTerms = 100'000'000;

struct LatticeSum {
  double value;
  std::uint64_t terms; ///< N, the last index summed
};

/// Sum_{n=1..N} n^power exp(-beta E_n) over the (optionally GUP) spectrum,
/// with N the smallest index at which the analytic Gaussian tail bound of the
/// undeformed spectrum drops below tail_tol. Supported powers: 0, 2, 4.
LatticeSum lattice_sum(const ThermalPoint& point, double delta, int power, double tail_tol);

/// Exact Z = Sum_n exp(-beta gamma n^2), truncated by the tail bound.
double partition_sum_oracle(const ThermalPoint& point, double tail_tol);

/// Sum_n n^4 exp(-beta gamma n^2), truncated by the tail bound.
double n4_moment_sum_oracle(const ThermalPoint& point, double tail_tol);

/// Exact GUP-spectrum sum Sum_n exp(-beta gamma n^2 (1 + delta n^2)).
double partition_gup_sum_oracle(const ThermalPoint& point, const GupParams& params,
                                double tail_tol);

/// Default relative finite-difference step, eps^(1/3).
double default_fd_step();

/// Potentials from exact lattice sums: Z by summation (GUP spectrum when
/// beta_G > 0), U = -d ln Z / d beta by a central difference with step
/// h * beta, F = -ln Z / beta, S = beta (U - F).
Quantities thermo_oracle(const ThermalPoint& point, const GupParams& params, double tail_tol,
                         double h);

} // namespace qheat::statmech
