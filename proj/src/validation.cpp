#include "qheat/validation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "qheat/cycles.hpp"
#include "qheat/processes.hpp"
#include "qheat/statmech.hpp"
#include "qheat/sweep.hpp"

namespace qheat::validation {

namespace {

Check at_most(std::string name, double measured, double tolerance) {
  return {std::move(name), measured, tolerance, Comparison::AtMost, measured <= tolerance};
}

Check above(std::string name, double measured, double tolerance) {
  return {std::move(name), measured, tolerance, Comparison::Above, measured > tolerance};
}

double rel(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

std::string tagged(const char* base, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_bg=%g", base, x);
  return buf;
}

void statmech_checks(const Options& o, std::vector<Check>& out) {
  using namespace statmech;
  for (double bg : {1e-5, 1e-4, 1e-3}) {
    const ThermalPoint p(1.0, bg);
    const double offset = partition_approx(p) - partition_sum_oracle(p, o.tail_tol);
    out.push_back(at_most(tagged("lattice_offset", bg), std::abs(offset - 0.5), 0.01));
  }

  const ThermalPoint probe(1.0, o.beta_gamma);
  const Quality q = approximation_quality(o.beta_gamma);
  if (q == Quality::Marginal) {
    const double offset = partition_approx(probe) - partition_sum_oracle(probe, o.tail_tol);
    out.push_back(at_most(tagged("closed_form_validity_offset", o.beta_gamma),
                          std::abs(offset - 0.5), 0.01));
  } else {
    const Quantities closed = thermo_closed_form(probe);
    const Quantities exact =
        thermo_oracle(probe, GupParams::none(1.0), o.tail_tol, default_fd_step());
    if (q == Quality::Ok) {
      out.push_back(at_most(tagged("closed_form_validity_S", o.beta_gamma), rel(exact.S, closed.S), 0.01));
      out.push_back(at_most(tagged("closed_form_validity_U", o.beta_gamma), rel(exact.U, closed.U), 0.01));
    } else {
      out.push_back(above(tagged("closed_form_validity_S_disagreement", o.beta_gamma),
                          rel(exact.S, closed.S), 0.1));
    }
  }

  {
    const ThermalPoint p(1.0, 0.01);
    const GupParams gup(1e-4, 1.0);
    const double gap =
        rel(partition_gup_sum_oracle(p, gup, o.tail_tol), partition_gup(p, gup));
    const double tol = std::max(0.6 * std::sqrt(p.beta_gamma()), 10.0 * gup.delta(p.gamma()));
    out.push_back(at_most("gup_partition_oracle", gap, tol));
  }
  {
    const ThermalPoint p(1.0, 0.04);
    out.push_back(at_most("n4_moment_oracle",
                          rel(n4_moment_sum_oracle(p, o.tail_tol), n4_moment_approx(p)), 0.02));
  }
  {
    const GupParams gup(1e-4, 1.0);
    const double d1 = thermo_gup(ThermalPoint(1.0, 0.01), gup).dS;
    const double d4 = thermo_gup(ThermalPoint(1.0, 0.04), gup).dS;
    out.push_back(at_most("gup_entropy_width_independence", std::abs(d1 - d4) / std::abs(d1), 1e-14));
  }
}

void path_checks(const Options& o, std::vector<Check>& out) {
  const auto none = GupParams::none(1.0);
  {
    const Process leg = Process::isothermal(1.0, 1.0, 0.25);
    out.push_back(at_most("path_isothermal",
                          rel(leg_heat_oracle(leg, none, o.steps).Q, heat_general(leg)), 1e-8));
  }
  {
    const Process leg = Process::isochoric(1.0, 2.0, 0.5);
    out.push_back(at_most("path_isochoric",
                          rel(leg_heat_oracle(leg, none, o.steps).Q, heat_general(leg)), 1e-8));
  }
  {
    const Process leg = Process::adiabatic(ThermalPoint(0.5, 2.0), 1.0);
    const double beta_min = std::min(leg.start().beta(), leg.end().beta());
    out.push_back(at_most("path_adiabatic",
                          std::abs(leg_heat_oracle(leg, none, o.steps).Q) * beta_min, 1e-8));
  }
  {
    const std::array path = {ThermalPoint(0.5, 2.0), ThermalPoint(0.8, 1.5), ThermalPoint(1.2, 0.7)};
    const std::array back = {path[2], path[1], path[0]};
    out.push_back(at_most("path_reversal",
                          std::abs(path_heat_oracle(path, o.steps) + path_heat_oracle(back, o.steps)),
                          1e-12));
  }
}

void cycle_checks(const Options& o, std::vector<Check>& out) {
  const CarnotSpec carnot{.t_hot = 2.0, .t_cold = 1.0, .l_a = 1.0, .l_b = 2.0, .mass = 1.0};
  {
    const Cycle c = carnot_build(carnot);
    const CycleLedger l = cycle_ledger_oracle(c.legs, carnot.gup(), o.steps);
    out.push_back(at_most("carnot_oracle_eta", std::abs(l.eta - 0.5), 1e-7));
  }
  const OttoSpec otto{.t_hot = 10.0, .t_cold = 1.0, .l_small = 1.0, .l_large = 2.0, .mass = 1.0};
  {
    const Cycle c = otto_build(otto);
    const CycleLedger l = cycle_ledger_oracle(c.legs, otto.gup(), o.steps);
    out.push_back(at_most("otto_oracle_eta", std::abs(l.eta - 0.75), 1e-7));
  }
  {
    CarnotSpec spec = carnot;
    spec.l_a = 2.0;
    spec.l_b = 4.0;
    spec.beta_g = 1e-4;
    const Cycle c = carnot_build(spec);
    const CycleLedger l = cycle_ledger_oracle(c.legs, spec.gup(), o.steps);
    const double lambda = spec.gup().lambda();
    const double bh = 1.0 / spec.t_hot;
    const double bl = 1.0 / spec.t_cold;
    const double expected = 0.5 * lambda * (1.0 / (bh * bh) - 1.0 / (bl * bl));
    out.push_back(at_most("carnot_gup_hot_adiabat_heat", std::abs(l.legs[1].QG - expected), 1e-10));

    const CycleLedger closed = carnot_ledger(spec);
    out.push_back(at_most("carnot_gup_work_invariance", rel(closed.WG, closed.W), 1e-14));
  }
  {
    OttoSpec spec = otto;
    spec.l_small = 2.0;
    spec.l_large = 4.0;
    spec.beta_g = 1e-4;
    const CycleLedger closed = otto_ledger(spec);
    out.push_back(at_most("otto_gup_work_invariance", rel(closed.WG, closed.W), 1e-14));
    const CycleLedger oracle = cycle_ledger_oracle(otto_build(spec).legs, spec.gup(), o.steps);
    out.push_back(at_most("otto_gup_oracle_etaG", std::abs(oracle.etaG - closed.etaG), 1e-7));
  }
}

void otto_form_checks(std::vector<Check>& out) {
  const sweep::SweepSpec fig5 = sweep::default_spec(sweep::Target::Fig5);
  double printed_gap = 0.0;
  double rearranged_gap = 0.0;
  for (int i = 0; i < fig5.steps; ++i) {
    const double r = sweep::grid_point(fig5, i);
    const double direct = otto_figure_f(r, fig5.r_L_O, fig5.f_ad, fig5.f_cb);
    const double printed = otto_figure_f_printed(r, fig5.r_L_O, fig5.f_ad, fig5.f_cb);
    const double rearranged = otto_figure_f_rearranged(r, fig5.r_L_O, fig5.f_ad, fig5.f_cb);
    printed_gap = std::max(printed_gap, std::abs(printed - direct) / std::abs(direct));
    rearranged_gap =
        std::max(rearranged_gap, std::abs(rearranged - direct) / std::max(1.0, std::abs(direct)));
  }
  out.push_back(above("otto_deficit_printed_form_discrepancy", printed_gap, 0.1));
  out.push_back(at_most("otto_deficit_rearranged_form_agreement", rearranged_gap, 1e-12));
}

} // namespace

std::vector<Check> run(const Options& options) {
  std::vector<Check> checks;
  statmech_checks(options, checks);
  path_checks(options, checks);
  cycle_checks(options, checks);
  otto_form_checks(checks);
  return checks;
}

report::Table to_table(const std::vector<Check>& checks) {
  report::Table t;
  t.columns = {"check", "measured", "comparison", "tolerance", "status"};
  for (const auto& c : checks)
    t.add_row({c.name, c.measured, std::string(c.comparison == Comparison::AtMost ? "<=" : ">"),
               c.tolerance, std::string(c.passed ? "pass" : "FAIL")});
  return t;
}

bool all_passed(const std::vector<Check>& checks) noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

} // namespace qheat::validation
