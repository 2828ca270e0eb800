#pragma once

// Figure-data sweeps of the stripped GUP efficiency deficits.
//
//   fig3  Carnot f(r)      at fixed r_L          (default r_L = 2,   r in [0.55, 0.95])
//   fig4  Carnot f(r_L)    at fixed r            (default r = 0.5,   r_L in [2.1, 10])
//   fig5  Otto   f(r)      at fixed f_AD, f_CB, r_L_O (0.5, 2, 5;    r in [0.205, 0.245])
//   fig6  Otto   f(r_L_O)  at fixed f_AD, f_CB, r     (0.5, 2, 0.1;  r_L_O in [10, 50])

#include <optional>
#include <string_view>

#include "qheat/report.hpp"

namespace qheat::sweep {

enum class Target { Fig3, Fig4, Fig5, Fig6 };

std::optional<Target> parse_target(std::string_view name) noexcept;
std::string_view to_string(Target t) noexcept;
/// Column name of the swept variable: "r", "r_L" or "r_L_O".
std::string_view swept_variable(Target t) noexcept;

/// Physical parameters that turn the stripped value into delta_eta / eta.
struct Prefactor {
  double t_hot;
  double mass;
  double beta_g;
};

struct SweepSpec {
  Target target = Target::Fig3;
  double r_L = 2.0;   ///< fig3
  double r = 0.5;     ///< fig4 (fig6 default is 0.1)
  double f_ad = 0.5;  ///< fig5, fig6
  double f_cb = 2.0;  ///< fig5, fig6
  double r_L_O = 5.0; ///< fig5
  double min = 0.55;
  double max = 0.95;
  int steps = 41; ///< grid points, endpoints included
  std::optional<Prefactor> prefactor;
};

/// Caption parameters and default window for a target.
SweepSpec default_spec(Target t);

/// Grid value i of `steps` points spanning [min, max] inclusively.
double grid_point(const SweepSpec& spec, int i);

/// Throws DomainError when the range is empty, steps < 2, or a grid point
/// violates the figure function's preconditions (poles excepted).
void validate(const SweepSpec& spec);

/// One row per grid point: swept value, f, marker ("pos", "neg" or "pole"),
/// plus rel_deficit = delta_eta / eta when a prefactor is given. Pole rows
/// carry empty numeric cells.
report::Table run(const SweepSpec& spec);

} // namespace qheat::sweep
