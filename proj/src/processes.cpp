#include "qheat/processes.hpp"

#include <cmath>
#include <sstream>

#include "qheat/errors.hpp"

namespace qheat {

std::string_view to_string(ProcessKind kind) noexcept {
  switch (kind) {
  case ProcessKind::Isothermal: return "isothermal";
  case ProcessKind::Adiabatic: return "adiabatic";
  case ProcessKind::Isochoric: return "isochoric";
  }
  return "unknown";
}

Process::Process(ProcessKind kind, ThermalPoint start, ThermalPoint end)
    : kind_(kind), start_(start), end_(end) {
  switch (kind) {
  case ProcessKind::Isothermal:
    if (start.beta() != end.beta())
      throw ContractError("isothermal leg requires equal beta at both ends");
    break;
  case ProcessKind::Isochoric:
    if (start.gamma() != end.gamma())
      throw ContractError("isochoric leg requires equal gamma at both ends");
    break;
  case ProcessKind::Adiabatic: {
    const double k0 = start.beta_gamma();
    const double k1 = end.beta_gamma();
    if (std::abs(k1 - k0) > kAdiabaticTolerance * k0) {
      std::ostringstream os;
      os.precision(17);
      os << "adiabatic leg requires constant beta*gamma: " << k0 << " -> " << k1;
      throw ContractError(os.str());
    }
    break;
  }
  default: throw ContractError("unsupported process kind");
  }
}

Process Process::isothermal(double beta, double gamma_i, double gamma_f) {
  return Process(ProcessKind::Isothermal, ThermalPoint(beta, gamma_i), ThermalPoint(beta, gamma_f));
}

Process Process::isochoric(double gamma, double beta_i, double beta_f) {
  return Process(ProcessKind::Isochoric, ThermalPoint(beta_i, gamma), ThermalPoint(beta_f, gamma));
}

Process Process::adiabatic(ThermalPoint start, double beta_f) {
  detail::require_positive(beta_f, "beta_f");
  return Process(ProcessKind::Adiabatic, start, ThermalPoint(beta_f, start.beta_gamma() / beta_f));
}

double heat_isothermal(double beta, double gamma_i, double gamma_f) {
  detail::require_positive(beta, "beta");
  detail::require_positive(gamma_i, "gamma_i");
  detail::require_positive(gamma_f, "gamma_f");
  return -std::log(gamma_f / gamma_i) / (2.0 * beta);
}

double heat_adiabatic(const Process& leg) {
  if (leg.kind() != ProcessKind::Adiabatic)
    throw ContractError("heat_adiabatic called on a non-adiabatic leg");
  return 0.0;
}

double heat_isochoric(double gamma, double beta_i, double beta_f) {
  detail::require_positive(gamma, "gamma");
  detail::require_positive(beta_i, "beta_i");
  detail::require_positive(beta_f, "beta_f");
  return 0.5 * (1.0 / beta_f - 1.0 / beta_i);
}

double heat_general(const Process& leg) {
  switch (leg.kind()) {
  case ProcessKind::Isothermal:
    return heat_isothermal(leg.start().beta(), leg.start().gamma(), leg.end().gamma());
  case ProcessKind::Adiabatic: return heat_adiabatic(leg);
  case ProcessKind::Isochoric:
    return heat_isochoric(leg.start().gamma(), leg.start().beta(), leg.end().beta());
  }
  throw ContractError("unsupported leg shape");
}

double gup_heat_correction(double lambda, double beta_i, double beta_f) {
  return -0.5 * lambda * (1.0 / (beta_f * beta_f) - 1.0 / (beta_i * beta_i));
}

HeatResult heat_gup(const Process& leg, const GupParams& params) {
  params.check_gate(leg.start().gamma());
  params.check_gate(leg.end().gamma());
  const double q = heat_general(leg);
  const double c = gup_heat_correction(params.lambda(), leg.start().beta(), leg.end().beta());
  return {q, q + c, c};
}

namespace {

// Midpoint-rule sum of Delta S / beta over consecutive nodes, with
// S = 1/2 + ln((1/2) sqrt(pi / (beta gamma))) - lambda / beta.
double integrate_nodes(std::span<const ThermalPoint> nodes, double lambda) {
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    const ThermalPoint& a = nodes[k];
    const ThermalPoint& b = nodes[k + 1];
    const double ka = a.beta_gamma();
    const double dS = -0.5 * std::log1p((b.beta_gamma() - ka) / ka) -
                      lambda * (1.0 / b.beta() - 1.0 / a.beta());
    const double beta_mid = 0.5 * (a.beta() + b.beta());
    total += dS / beta_mid;
  }
  return total;
}

void require_steps(int steps) {
  if (steps < 2)
    throw DomainError("path integration needs at least 2 steps");
}

} // namespace

double path_heat_oracle(std::span<const ThermalPoint> path, int steps, double lambda) {
  require_steps(steps);
  if (path.size() < 2)
    throw DomainError("path needs at least two points");

  std::vector<ThermalPoint> nodes;
  nodes.reserve((path.size() - 1) * static_cast<std::size_t>(steps) + 1);
  nodes.push_back(path.front());
  for (std::size_t s = 0; s + 1 < path.size(); ++s) {
    const ThermalPoint& a = path[s];
    const ThermalPoint& b = path[s + 1];
    for (int k = 1; k < steps; ++k) {
      const double t = static_cast<double>(k) / steps;
      nodes.emplace_back(a.beta() + t * (b.beta() - a.beta()),
                         a.gamma() + t * (b.gamma() - a.gamma()));
    }
    nodes.push_back(b);
  }
  return integrate_nodes(nodes, lambda);
}

std::vector<ThermalPoint> sample_leg(const Process& leg, int steps) {
  require_steps(steps);
  const ThermalPoint& a = leg.start();
  const ThermalPoint& b = leg.end();
  std::vector<ThermalPoint> nodes;
  nodes.reserve(static_cast<std::size_t>(steps) + 1);
  nodes.push_back(a);
  for (int k = 1; k < steps; ++k) {
    const double t = static_cast<double>(k) / steps;
    switch (leg.kind()) {
    case ProcessKind::Isothermal:
      nodes.emplace_back(a.beta(), a.gamma() + t * (b.gamma() - a.gamma()));
      break;
    case ProcessKind::Isochoric:
      nodes.emplace_back(a.beta() + t * (b.beta() - a.beta()), a.gamma());
      break;
    case ProcessKind::Adiabatic: {
      const double g = a.gamma() * std::pow(b.gamma() / a.gamma(), t);
      nodes.emplace_back(a.beta_gamma() / g, g);
      break;
    }
    }
  }
  nodes.push_back(b);
  return nodes;
}

HeatResult leg_heat_oracle(const Process& leg, const GupParams& params, int steps) {
  params.check_gate(leg.start().gamma());
  params.check_gate(leg.end().gamma());
  const std::vector<ThermalPoint> nodes = sample_leg(leg, steps);
  const double q = integrate_nodes(nodes, 0.0);
  const double qg = integrate_nodes(nodes, params.lambda());
  return {q, qg, qg - q};
}

} // namespace qheat
