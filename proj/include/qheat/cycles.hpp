#pragma once

// Quantum Carnot and Otto cycles of the square-well particle: construction
// from endpoint specifications, heat/work/efficiency ledgers with and
// without the GUP correction, and the stripped deficit functions that the
// figure sweeps plot.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "qheat/core_model.hpp"
#include "qheat/processes.hpp"
#include "qheat/statmech.hpp"

namespace qheat {

enum class RegimeFlag : unsigned {
  NonPositiveHeatInput = 1u << 0, ///< Q_in <= 0
  NonPositiveWork = 1u << 1,      ///< W <= 0
  CornerOrdering = 1u << 2,       ///< Otto corners violate T_B > T_A > T_C > T_D
  FirstOrderDeviation = 1u << 3,  ///< exact and first-order deficits differ by > 1e-6 relative
};

std::string_view to_string(RegimeFlag flag) noexcept;

class RegimeFlags {
public:
  void set(RegimeFlag f) noexcept { bits_ |= static_cast<unsigned>(f); }
  bool has(RegimeFlag f) const noexcept { return (bits_ & static_cast<unsigned>(f)) != 0; }
  bool empty() const noexcept { return bits_ == 0; }
  /// Flag names joined with ';', in declaration order; empty when none.
  std::string to_string() const;

private:
  unsigned bits_ = 0;
};

/// Relative gap between exact and first-order deficits above which
/// RegimeFlag::FirstOrderDeviation is raised.
inline constexpr double kFirstOrderDeviationTolerance = 1e-6;

/// Figure functions reject |r * r_L - 1| below this.
inline constexpr double kPoleExclusion = 1e-9;

inline constexpr std::array<std::string_view, 4> kLegNames = {"AB", "BC", "CD", "DA"};
inline constexpr std::array<char, 4> kCornerNames = {'A', 'B', 'C', 'D'};

struct CycleLedger {
  std::array<HeatResult, 4> legs; ///< AB, BC, CD, DA
  double Q_in;   ///< Q_AB + Q_BC
  double Q_out;  ///< Q_CD + Q_DA (signed; negative for an engine)
  double W;      ///< sum of signed leg heats
  double eta;    ///< W / Q_in
  double Q_inG;
  double Q_outG;
  double WG;
  double etaG;   ///< WG / Q_inG, exact
  double deltaQ; ///< Q_inG - Q_in, summed from the leg corrections
  double deltaEta;           ///< eta - etaG
  double deltaEtaFirstOrder; ///< W deltaQ / Q_in^2
  RegimeFlags flags;
  statmech::Quality approximation = statmech::Quality::Ok; ///< worst corner

  /// Q_in > 0, W > 0 and no ordering violation.
  bool engine_regime() const noexcept {
    return !flags.has(RegimeFlag::NonPositiveHeatInput) &&
           !flags.has(RegimeFlag::NonPositiveWork) && !flags.has(RegimeFlag::CornerOrdering);
  }
};

/// A closed four-leg cycle A -> B -> C -> D -> A.
struct Cycle {
  std::array<ThermalPoint, 4> corners; ///< A, B, C, D
  std::array<double, 4> widths;        ///< well width at each corner
  std::array<Process, 4> legs;         ///< AB, BC, CD, DA
  RegimeFlags flags;
};

// ---------------------------------------------------------------------------
// Carnot

struct CarnotSpec {
  double t_hot;
  double t_cold;
  double l_a; ///< width at A, start of the hot isothermal expansion
  double l_b; ///< width at B
  double mass;
  double beta_g = 0.0;
  double gup_threshold = kDefaultGupThreshold;

  GupParams gup() const { return GupParams(beta_g, mass, gup_threshold); }
};

struct CarnotRatios {
  double r;   ///< T_cold / T_hot
  double r_L; ///< L_C^2 / L_A^2
};

/// Validates and builds the cycle: AB isothermal at T_hot, BC adiabatic,
/// CD isothermal at T_cold, DA adiabatic, with L_C = L_B sqrt(T_hot/T_cold)
/// and L_D = L_A sqrt(T_hot/T_cold).
Cycle carnot_build(const CarnotSpec& spec);

CycleLedger carnot_ledger(const CarnotSpec& spec);

CarnotRatios carnot_ratios(const CarnotSpec& spec);

/// Spec realizing (r, r_L) with L_A = l_a: T_cold = r T_hot and
/// L_B = L_A sqrt(r r_L). Requires r r_L > 1.
CarnotSpec carnot_spec_from_ratios(double r, double r_L, double t_hot, double l_a, double mass,
                                   double beta_g);

/// (1 - r^2) / ln(r r_L), the Carnot deficit (delta_eta / eta_C) / (lambda T_h).
double carnot_figure_f(double r, double r_L);

// ---------------------------------------------------------------------------
// Otto

struct OttoSpec {
  double t_hot;   ///< temperature at B
  double t_cold;  ///< temperature at D
  double l_small; ///< width of the hot isochore AB
  double l_large; ///< width of the cold isochore CD
  double mass;
  double beta_g = 0.0;
  /// beta_A = f_AD beta_cold and beta_C = f_CB beta_hot for the GUP corner
  /// temperatures; default to gamma_l/gamma_h and gamma_h/gamma_l.
  std::optional<double> f_ad{};
  std::optional<double> f_cb{};
  double gup_threshold = kDefaultGupThreshold;

  GupParams gup() const { return GupParams(beta_g, mass, gup_threshold); }
  double gamma_hot() const { return gamma_of(mass, l_small); }
  double gamma_cold() const { return gamma_of(mass, l_large); }
  double effective_f_ad() const;
  double effective_f_cb() const;
};

struct OttoRatios {
  double r;     ///< T_cold / T_hot
  double r_L_O; ///< gamma_h / gamma_l = L_large^2 / L_small^2
};

/// Validates and builds the cycle: AB isochoric at L_small, BC adiabatic,
/// CD isochoric at L_large, DA adiabatic, with beta_A = beta_l gamma_l/gamma_h
/// and beta_C = beta_h gamma_h/gamma_l. Raises CornerOrdering when the
/// corners do not satisfy T_B > T_A > T_C > T_D.
Cycle otto_build(const OttoSpec& spec);

CycleLedger otto_ledger(const OttoSpec& spec);

OttoRatios otto_ratios(const OttoSpec& spec);

/// Stripped Otto deficit (delta_eta_O / eta_O) beta_A^2 / (lambda beta_h),
/// evaluated from the per-corner temperatures with beta_A = f_AD beta_l and
/// beta_C = f_CB beta_h.
double otto_figure_f(double r, double r_L_O, double f_ad, double f_cb);

/// The same quantity in the rearranged closed form
/// (1 - (f_AD/f_CB)^2 / r^2) / (1 - r_L_O r).
double otto_figure_f_rearranged(double r, double r_L_O, double f_ad, double f_cb);

/// The closed form with 1/r in place of 1/r^2, as it appears in print.
double otto_figure_f_printed(double r, double r_L_O, double f_ad, double f_cb);

// ---------------------------------------------------------------------------
// Ledger assembly and oracle

/// Assembles a ledger from signed per-leg heats. `corner_betas` sets the
/// scale below which Q_in counts as zero.
CycleLedger assemble_ledger(const std::array<HeatResult, 4>& legs,
                            const std::array<double, 4>& corner_betas);

/// Recomputes every leg by path integration along its constraint curve
/// (leg_heat_oracle) and reassembles the ledger. Legs must close.
CycleLedger cycle_ledger_oracle(const std::array<Process, 4>& legs, const GupParams& params,
                                int steps);

} // namespace qheat
