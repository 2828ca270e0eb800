#pragma once

// Heat exchanged along quasi-static legs. Sign convention: Q > 0 is heat
// absorbed by the working substance.

#include <span>
#include <string_view>
#include <vector>

#include "qheat/core_model.hpp"

namespace qheat {

enum class ProcessKind { Isothermal, Adiabatic, Isochoric };

std::string_view to_string(ProcessKind kind) noexcept;

/// Relative tolerance on beta*gamma constancy for an adiabatic leg.
inline constexpr double kAdiabaticTolerance = 1e-12;

/// One leg of a cycle. Construction enforces the leg's constraint:
/// isothermal legs share beta exactly, isochoric legs share gamma exactly,
/// adiabatic legs share beta*gamma to kAdiabaticTolerance.
class Process {
public:
  Process(ProcessKind kind, ThermalPoint start, ThermalPoint end);

  static Process isothermal(double beta, double gamma_i, double gamma_f);
  static Process isochoric(double gamma, double beta_i, double beta_f);
  /// Adiabat from `start` to inverse temperature beta_f; gamma_f follows from
  /// beta * gamma = const.
  static Process adiabatic(ThermalPoint start, double beta_f);

  ProcessKind kind() const noexcept { return kind_; }
  const ThermalPoint& start() const noexcept { return start_; }
  const ThermalPoint& end() const noexcept { return end_; }

  Process reversed() const { return Process(kind_, end_, start_); }

private:
  ProcessKind kind_;
  ThermalPoint start_;
  ThermalPoint end_;
};

struct HeatResult {
  double Q;          ///< heat without GUP correction
  double QG;         ///< GUP-corrected heat
  double correction; ///< QG - Q
};

/// -(1/(2 beta)) ln(gamma_f / gamma_i)
double heat_isothermal(double beta, double gamma_i, double gamma_f);

/// Exactly zero for a valid adiabat.
double heat_adiabatic(const Process& leg);

/// (1/2)(1/beta_f - 1/beta_i)
double heat_isochoric(double gamma, double beta_i, double beta_f);

/// Closed-form heat for any supported leg.
double heat_general(const Process& leg);

/// -(lambda/2)(1/beta_f^2 - 1/beta_i^2); depends on the endpoint
/// temperatures only.
double gup_heat_correction(double lambda, double beta_i, double beta_f);

/// Closed-form heat plus the first-order GUP correction. Enforces the GUP
/// validity gate at both endpoints.
HeatResult heat_gup(const Process& leg, const GupParams& params);

// ---------------------------------------------------------------------------
// Path-integration oracle: Q = Integral dS / beta with the closed-form
// entropy, midpoint rule.

/// Integrates dQ along the polyline through `path`, splitting each segment
/// into `steps` equal pieces in (beta, gamma). Each piece contributes
/// Delta S * (1 / beta at its midpoint). `lambda` adds the GUP entropy shift
/// -lambda/beta to S.
double path_heat_oracle(std::span<const ThermalPoint> path, int steps, double lambda = 0.0);

/// `steps + 1` points on the leg's own constraint curve: linear in gamma for
/// isothermal legs, linear in beta for isochoric legs, and geometric in gamma
/// with beta = (beta*gamma)/gamma for adiabats.
std::vector<ThermalPoint> sample_leg(const Process& leg, int steps);

/// Oracle heat of a leg, integrated along its constraint curve with `steps`
/// pieces. QG integrates dS^G / beta directly rather than applying the
/// closed-form correction.
HeatResult leg_heat_oracle(const Process& leg, const GupParams& params, int steps);

} // namespace qheat
