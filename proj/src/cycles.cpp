#include "qheat/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qheat/errors.hpp"

namespace qheat {

std::string_view to_string(RegimeFlag flag) noexcept {
  switch (flag) {
  case RegimeFlag::NonPositiveHeatInput: return "non_positive_heat_input";
  case RegimeFlag::NonPositiveWork: return "non_positive_work";
  case RegimeFlag::CornerOrdering: return "corner_ordering";
  case RegimeFlag::FirstOrderDeviation: return "first_order_deviation";
  }
  return "unknown";
}

std::string RegimeFlags::to_string() const {
  constexpr std::array all = {RegimeFlag::NonPositiveHeatInput, RegimeFlag::NonPositiveWork,
                              RegimeFlag::CornerOrdering, RegimeFlag::FirstOrderDeviation};
  std::string out;
  for (RegimeFlag f : all) {
    if (!has(f))
      continue;
    if (!out.empty())
      out += ';';
    out += qheat::to_string(f);
  }
  return out;
}

namespace {

std::string describe(const char* what, double a, const char* rel, double b) {
  std::ostringstream os;
  os << what << ": " << a << ' ' << rel << ' ' << b;
  return os.str();
}

statmech::Quality worst_quality(const std::array<ThermalPoint, 4>& corners) {
  auto q = statmech::Quality::Ok;
  for (const auto& c : corners)
    q = std::max(q, statmech::approximation_quality(c.beta_gamma()));
  return q;
}

void check_gate(const GupParams& gup, const std::array<ThermalPoint, 4>& corners) {
  for (const auto& c : corners)
    gup.check_gate(c.gamma());
}

} // namespace

CycleLedger assemble_ledger(const std::array<HeatResult, 4>& legs,
                            const std::array<double, 4>& corner_betas) {
  CycleLedger l{};
  l.legs = legs;
  l.Q_in = legs[0].Q + legs[1].Q;
  l.Q_out = legs[2].Q + legs[3].Q;
  l.W = l.Q_in + l.Q_out;
  l.Q_inG = legs[0].QG + legs[1].QG;
  l.Q_outG = legs[2].QG + legs[3].QG;
  l.WG = l.Q_inG + l.Q_outG;
  l.deltaQ = legs[0].correction + legs[1].correction;

  double scale = 0.0;
  for (double b : corner_betas)
    scale = std::max(scale, 1.0 / b);
  const double zero = 1e-14 * scale;
  if (std::abs(l.Q_in) <= zero || std::abs(l.Q_inG) <= zero)
    throw DegenerateCycleError("heat input vanishes; efficiency undefined");

  l.eta = l.W / l.Q_in;
  l.etaG = l.WG / l.Q_inG;
  l.deltaEta = l.eta - l.etaG;
  l.deltaEtaFirstOrder = l.W * l.deltaQ / (l.Q_in * l.Q_in);

  if (!(l.Q_in > 0.0))
    l.flags.set(RegimeFlag::NonPositiveHeatInput);
  if (!(l.W > 0.0))
    l.flags.set(RegimeFlag::NonPositiveWork);
  const double gap = std::abs(l.deltaEta - l.deltaEtaFirstOrder);
  if (gap > kFirstOrderDeviationTolerance * std::abs(l.deltaEta))
    l.flags.set(RegimeFlag::FirstOrderDeviation);
  return l;
}

// ---------------------------------------------------------------------------
// Carnot

Cycle carnot_build(const CarnotSpec& spec) {
  detail::require_positive(spec.t_hot, "T_hot");
  detail::require_positive(spec.t_cold, "T_cold");
  detail::require_positive(spec.l_a, "L_A");
  detail::require_positive(spec.l_b, "L_B");
  detail::require_positive(spec.mass, "mass");
  if (!(spec.t_hot > spec.t_cold))
    throw SpecError(describe("Carnot cycle requires T_hot > T_cold", spec.t_hot, "<=", spec.t_cold));
  if (!(spec.l_b > spec.l_a))
    throw SpecError(describe("Carnot cycle requires L_B > L_A", spec.l_b, "<=", spec.l_a));

  const double beta_h = 1.0 / spec.t_hot;
  const double beta_l = 1.0 / spec.t_cold;
  const double stretch = std::sqrt(spec.t_hot / spec.t_cold);
  const double l_c = spec.l_b * stretch;
  const double l_d = spec.l_a * stretch;

  const ThermalPoint a(beta_h, gamma_of(spec.mass, spec.l_a));
  const ThermalPoint b(beta_h, gamma_of(spec.mass, spec.l_b));
  // C and D sit on the adiabats through B and A.
  const ThermalPoint c(beta_l, b.beta_gamma() / beta_l);
  const ThermalPoint d(beta_l, a.beta_gamma() / beta_l);

  return Cycle{
      .corners = {a, b, c, d},
      .widths = {spec.l_a, spec.l_b, l_c, l_d},
      .legs = {Process(ProcessKind::Isothermal, a, b), Process(ProcessKind::Adiabatic, b, c),
               Process(ProcessKind::Isothermal, c, d), Process(ProcessKind::Adiabatic, d, a)},
      .flags = {},
  };
}

CycleLedger carnot_ledger(const CarnotSpec& spec) {
  const Cycle cycle = carnot_build(spec);
  const GupParams gup = spec.gup();
  check_gate(gup, cycle.corners);

  std::array<HeatResult, 4> heats{};
  for (std::size_t k = 0; k < 4; ++k)
    heats[k] = heat_gup(cycle.legs[k], gup);

  std::array<double, 4> betas{};
  for (std::size_t k = 0; k < 4; ++k)
    betas[k] = cycle.corners[k].beta();
  CycleLedger l = assemble_ledger(heats, betas);
  l.approximation = worst_quality(cycle.corners);
  return l;
}

CarnotRatios carnot_ratios(const CarnotSpec& spec) {
  const Cycle cycle = carnot_build(spec);
  const double ratio = cycle.widths[2] / cycle.widths[0];
  return {spec.t_cold / spec.t_hot, ratio * ratio};
}

CarnotSpec carnot_spec_from_ratios(double r, double r_L, double t_hot, double l_a, double mass,
                                   double beta_g) {
  if (!(r > 0.0 && r < 1.0))
    throw DomainError("r must lie in (0, 1)");
  if (!(r * r_L > 1.0))
    throw DomainError("a Carnot cycle with L_B > L_A needs r * r_L > 1");
  return CarnotSpec{
      .t_hot = t_hot,
      .t_cold = r * t_hot,
      .l_a = l_a,
      .l_b = l_a * std::sqrt(r * r_L),
      .mass = mass,
      .beta_g = beta_g,
  };
}

namespace {

void check_pole(double r, double ratio) {
  if (std::abs(r * ratio - 1.0) < kPoleExclusion)
    throw PoleError("figure function evaluated at its pole r * r_L = 1");
}

void check_otto_figure_args(double r, double r_L_O, double f_ad, double f_cb) {
  if (!(r > 0.0 && r < 1.0))
    throw DomainError("r must lie in (0, 1)");
  if (!(r_L_O > 1.0) || !std::isfinite(r_L_O))
    throw DomainError("r_L_O must exceed 1");
  if (!(f_ad > 0.0 && f_ad < 1.0))
    throw DomainError("f_AD must lie in (0, 1)");
  if (!(f_cb > 1.0) || !std::isfinite(f_cb))
    throw DomainError("f_CB must exceed 1");
  check_pole(r, r_L_O);
}

} // namespace

double carnot_figure_f(double r, double r_L) {
  if (!(r > 0.0 && r < 1.0))
    throw DomainError("r must lie in (0, 1)");
  if (!(r_L > 1.0) || !std::isfinite(r_L))
    throw DomainError("r_L must exceed 1");
  check_pole(r, r_L);
  return (1.0 - r * r) / std::log(r * r_L);
}

// ---------------------------------------------------------------------------
// Otto

double OttoSpec::effective_f_ad() const { return f_ad.value_or(gamma_cold() / gamma_hot()); }

double OttoSpec::effective_f_cb() const { return f_cb.value_or(gamma_hot() / gamma_cold()); }

namespace {

void validate(const OttoSpec& spec) {
  detail::require_positive(spec.t_hot, "T_hot");
  detail::require_positive(spec.t_cold, "T_cold");
  detail::require_positive(spec.l_small, "L_small");
  detail::require_positive(spec.l_large, "L_large");
  detail::require_positive(spec.mass, "mass");
  if (!(spec.t_hot > spec.t_cold))
    throw SpecError(describe("Otto cycle requires T_hot > T_cold", spec.t_hot, "<=", spec.t_cold));
  if (!(spec.l_large > spec.l_small))
    throw SpecError(
        describe("Otto cycle requires L_large > L_small", spec.l_large, "<=", spec.l_small));
  const double f_ad = spec.effective_f_ad();
  const double f_cb = spec.effective_f_cb();
  if (!(f_ad > 0.0 && f_ad < 1.0))
    throw SpecError(describe("f_AD must lie in (0, 1)", f_ad, "is", f_ad));
  if (!(f_cb > 1.0) || !std::isfinite(f_cb))
    throw SpecError(describe("f_CB must exceed 1", f_cb, "<=", 1.0));
}

} // namespace

Cycle otto_build(const OttoSpec& spec) {
  validate(spec);
  const double beta_h = 1.0 / spec.t_hot;
  const double beta_l = 1.0 / spec.t_cold;
  const double gamma_h = spec.gamma_hot();
  const double gamma_l = spec.gamma_cold();

  const ThermalPoint b(beta_h, gamma_h);
  const ThermalPoint d(beta_l, gamma_l);
  const ThermalPoint a(d.beta_gamma() / gamma_h, gamma_h);
  const ThermalPoint c(b.beta_gamma() / gamma_l, gamma_l);

  Cycle cycle{
      .corners = {a, b, c, d},
      .widths = {spec.l_small, spec.l_small, spec.l_large, spec.l_large},
      .legs = {Process(ProcessKind::Isochoric, a, b), Process(ProcessKind::Adiabatic, b, c),
               Process(ProcessKind::Isochoric, c, d), Process(ProcessKind::Adiabatic, d, a)},
      .flags = {},
  };
  // T_B > T_A > T_C > T_D  <=>  beta_B < beta_A < beta_C < beta_D
  if (!(b.beta() < a.beta() && a.beta() < c.beta() && c.beta() < d.beta()))
    cycle.flags.set(RegimeFlag::CornerOrdering);
  return cycle;
}

CycleLedger otto_ledger(const OttoSpec& spec) {
  const Cycle cycle = otto_build(spec);
  const GupParams gup = spec.gup();
  check_gate(gup, cycle.corners);

  const double beta_h = cycle.corners[1].beta();
  const double beta_l = cycle.corners[3].beta();
  // GUP corner temperatures; B and D are pinned to the baths.
  const std::array<double, 4> gup_betas = {spec.effective_f_ad() * beta_l, beta_h,
                                           spec.effective_f_cb() * beta_h, beta_l};
  const double lambda = gup.lambda();

  std::array<HeatResult, 4> heats{};
  for (std::size_t k = 0; k < 4; ++k) {
    const double q = heat_general(cycle.legs[k]);
    const double c = gup_heat_correction(lambda, gup_betas[k], gup_betas[(k + 1) % 4]);
    heats[k] = {q, q + c, c};
  }

  std::array<double, 4> betas{};
  for (std::size_t k = 0; k < 4; ++k)
    betas[k] = cycle.corners[k].beta();
  CycleLedger l = assemble_ledger(heats, betas);
  if (cycle.flags.has(RegimeFlag::CornerOrdering))
    l.flags.set(RegimeFlag::CornerOrdering);
  l.approximation = worst_quality(cycle.corners);
  return l;
}

OttoRatios otto_ratios(const OttoSpec& spec) {
  validate(spec);
  return {spec.t_cold / spec.t_hot, spec.gamma_hot() / spec.gamma_cold()};
}

double otto_figure_f(double r, double r_L_O, double f_ad, double f_cb) {
  check_otto_figure_args(r, r_L_O, f_ad, f_cb);
  // Unit hot bath and unit lambda; both cancel in the stripped quantity.
  const double beta_h = 1.0;
  const double beta_l = beta_h / r;
  const double beta_a = f_ad * beta_l;
  const double beta_c = f_cb * beta_h;
  const double relative_deficit =
      beta_h * (1.0 / (beta_a * beta_a) - 1.0 / (beta_c * beta_c)) / (1.0 - r_L_O * r);
  return relative_deficit * beta_a * beta_a / beta_h;
}

double otto_figure_f_rearranged(double r, double r_L_O, double f_ad, double f_cb) {
  check_otto_figure_args(r, r_L_O, f_ad, f_cb);
  const double q = f_ad / f_cb;
  return (1.0 - q * q / (r * r)) / (1.0 - r_L_O * r);
}

double otto_figure_f_printed(double r, double r_L_O, double f_ad, double f_cb) {
  check_otto_figure_args(r, r_L_O, f_ad, f_cb);
  const double q = f_ad / f_cb;
  return (1.0 - q * q / r) / (1.0 - r_L_O * r);
}

// ---------------------------------------------------------------------------
// Oracle

CycleLedger cycle_ledger_oracle(const std::array<Process, 4>& legs, const GupParams& params,
                                int steps) {
  for (std::size_t k = 0; k < 4; ++k) {
    const ThermalPoint& end = legs[k].end();
    const ThermalPoint& next = legs[(k + 1) % 4].start();
    const bool closes = std::abs(end.beta() - next.beta()) <= 1e-12 * end.beta() &&
                        std::abs(end.gamma() - next.gamma()) <= 1e-12 * end.gamma();
    if (!closes)
      throw ContractError("cycle legs do not close");
  }
  std::array<HeatResult, 4> heats{};
  std::array<double, 4> betas{};
  std::array<ThermalPoint, 4> corners = {legs[0].start(), legs[1].start(), legs[2].start(),
                                         legs[3].start()};
  for (std::size_t k = 0; k < 4; ++k) {
    heats[k] = leg_heat_oracle(legs[k], params, steps);
    betas[k] = corners[k].beta();
  }
  CycleLedger l = assemble_ledger(heats, betas);
  l.approximation = worst_quality(corners);
  return l;
}

} // namespace qheat
