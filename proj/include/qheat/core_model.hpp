#pragma once

// Working substance (particle in an infinite square well), thermodynamic
// state points and GUP parameters.
//
// Units: hbar = k_B = 1 throughout, so beta = 1/T exactly and every public
// quantity is a dimensionless number.

#include <cstdint>
#include <string_view>

namespace qheat {

namespace units {
inline constexpr std::string_view kConvention = "natural units: hbar = 1, k_B = 1, beta = 1/T";
inline constexpr double kHbar = 1.0;
inline constexpr double kBoltzmann = 1.0;
} // namespace units

/// Default upper bound on delta = 4 m beta_G gamma for the first-order GUP
/// expansion to be accepted.
inline constexpr double kDefaultGupThreshold = 1e-3;

/// gamma = pi^2 / (2 m L^2), the spectral scale of the well.
double gamma_of(double mass, double width);

/// Particle of mass `mass` in a well of width `width`.
class WellSubstance {
public:
  WellSubstance(double mass, double width);

  double mass() const noexcept { return mass_; }
  double width() const noexcept { return width_; }
  double gamma() const noexcept { return gamma_of(mass_, width_); }

private:
  double mass_;
  double width_;
};

/// A (beta, gamma) state of the working substance.
class ThermalPoint {
public:
  ThermalPoint(double beta, double gamma);

  double beta() const noexcept { return beta_; }
  double gamma() const noexcept { return gamma_; }
  double temperature() const noexcept { return 1.0 / beta_; }
  /// beta * gamma; the adiabatic invariant and the only argument of the
  /// dimensionless closed-form thermodynamics.
  double beta_gamma() const noexcept { return beta_ * gamma_; }

  friend bool operator==(const ThermalPoint&, const ThermalPoint&) = default;

private:
  double beta_;
  double gamma_;
};

struct GupCoefficients {
  double delta;  ///< 4 m beta_G gamma
  double K;      ///< (3 sqrt(pi) / 2) beta_G m
  double lambda; ///< 6 beta_G m
};

/// GUP strength beta_G for a particle of the given mass. beta_G = 0 turns the
/// correction off through the same code paths.
class GupParams {
public:
  GupParams(double beta_g, double mass, double threshold = kDefaultGupThreshold);

  /// beta_G = 0 for the given mass.
  static GupParams none(double mass) { return GupParams(0.0, mass); }

  double beta_g() const noexcept { return beta_g_; }
  double mass() const noexcept { return mass_; }
  double threshold() const noexcept { return threshold_; }

  double K() const noexcept;
  double lambda() const noexcept;
  double delta(double gamma) const noexcept;

  /// Throws RegimeError when delta(gamma) exceeds the threshold.
  void check_gate(double gamma) const;

private:
  double beta_g_;
  double mass_;
  double threshold_;
};

/// E_n = gamma n^2, n >= 1.
double energy_level(double gamma, std::uint64_t n);

/// E_n^G = gamma n^2 (1 + delta n^2), n >= 1, delta >= 0.
double energy_level_gup(double gamma, double delta, std::uint64_t n);

GupCoefficients gup_coefficients(const GupParams& params, double gamma);

namespace detail {
/// Throws DomainError unless x is finite and strictly positive.
void require_positive(double x, const char* what);
} // namespace detail

} // namespace qheat
