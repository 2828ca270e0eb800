#include "qheat/sweep.hpp"

#include <cmath>
#include <string>

#include "qheat/cycles.hpp"
#include "qheat/errors.hpp"

namespace qheat::sweep {

std::optional<Target> parse_target(std::string_view name) noexcept {
  if (name == "fig3") return Target::Fig3;
  if (name == "fig4") return Target::Fig4;
  if (name == "fig5") return Target::Fig5;
  if (name == "fig6") return Target::Fig6;
  return std::nullopt;
}

std::string_view to_string(Target t) noexcept {
  switch (t) {
  case Target::Fig3: return "fig3";
  case Target::Fig4: return "fig4";
  case Target::Fig5: return "fig5";
  case Target::Fig6: return "fig6";
  }
  return "fig3";
}

std::string_view swept_variable(Target t) noexcept {
  switch (t) {
  case Target::Fig3:
  case Target::Fig5: return "r";
  case Target::Fig4: return "r_L";
  case Target::Fig6: return "r_L_O";
  }
  return "r";
}

SweepSpec default_spec(Target t) {
  SweepSpec s;
  s.target = t;
  switch (t) {
  case Target::Fig3: s.min = 0.55; s.max = 0.95; break;
  case Target::Fig4: s.min = 2.1; s.max = 10.0; break;
  case Target::Fig5: s.min = 0.205; s.max = 0.245; break;
  case Target::Fig6: s.r = 0.1; s.min = 10.0; s.max = 50.0; break;
  }
  return s;
}

double grid_point(const SweepSpec& spec, int i) {
  if (i == spec.steps - 1)
    return spec.max;
  return spec.min + (spec.max - spec.min) * static_cast<double>(i) / (spec.steps - 1);
}

namespace {

struct Point {
  double r;
  double ratio; ///< r_L or r_L_O
};

Point at(const SweepSpec& spec, double x) {
  switch (spec.target) {
  case Target::Fig3: return {x, spec.r_L};
  case Target::Fig4: return {spec.r, x};
  case Target::Fig5: return {x, spec.r_L_O};
  case Target::Fig6: return {spec.r, x};
  }
  return {x, spec.r_L};
}

bool is_carnot(Target t) { return t == Target::Fig3 || t == Target::Fig4; }

bool is_pole(const Point& p) { return std::abs(p.r * p.ratio - 1.0) < kPoleExclusion; }

double evaluate(const SweepSpec& spec, const Point& p) {
  return is_carnot(spec.target) ? carnot_figure_f(p.r, p.ratio)
                                : otto_figure_f(p.r, p.ratio, spec.f_ad, spec.f_cb);
}

} // namespace

void validate(const SweepSpec& spec) {
  if (!std::isfinite(spec.min) || !std::isfinite(spec.max) || !(spec.min < spec.max))
    throw DomainError("sweep range needs finite min < max");
  if (spec.steps < 2)
    throw DomainError("sweep needs at least 2 grid points");
  if (spec.prefactor) {
    detail::require_positive(spec.prefactor->t_hot, "T_hot");
    GupParams(spec.prefactor->beta_g, spec.prefactor->mass);
  }
  for (int i = 0; i < spec.steps; ++i) {
    const Point p = at(spec, grid_point(spec, i));
    if (is_pole(p))
      continue;
    try {
      (void)evaluate(spec, p);
    } catch (const DomainError& e) {
      throw DomainError(std::string(to_string(spec.target)) + " grid point " +
                        report::format_number(grid_point(spec, i)) + ": " + e.what());
    }
  }
}

report::Table run(const SweepSpec& spec) {
  validate(spec);
  report::Table table;
  table.columns = {std::string(swept_variable(spec.target)), "f", "marker"};
  if (spec.prefactor)
    table.columns.emplace_back("rel_deficit");

  for (int i = 0; i < spec.steps; ++i) {
    const double x = grid_point(spec, i);
    const Point p = at(spec, x);
    std::vector<report::Cell> row{x};
    if (is_pole(p)) {
      row.emplace_back(std::monostate{});
      row.emplace_back(std::string("pole"));
      if (spec.prefactor)
        row.emplace_back(std::monostate{});
    } else {
      const double f = evaluate(spec, p);
      row.emplace_back(f);
      row.emplace_back(std::string(f > 0.0 ? "pos" : "neg"));
      if (spec.prefactor) {
        const auto& pf = *spec.prefactor;
        const double lambda = GupParams(pf.beta_g, pf.mass).lambda();
        const double scale = is_carnot(spec.target)
                                 ? lambda * pf.t_hot
                                 : lambda * pf.t_hot * p.r * p.r / (spec.f_ad * spec.f_ad);
        row.emplace_back(f * scale);
      }
    }
    table.add_row(std::move(row));
  }
  return table;
}

} // namespace qheat::sweep
