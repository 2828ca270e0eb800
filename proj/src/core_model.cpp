#include "qheat/core_model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "qheat/errors.hpp"

namespace qheat {

RegimeError::RegimeError(double delta, double threshold)
    : std::runtime_error([&] {
        std::ostringstream os;
        os.precision(6);
        os << "GUP validity gate violated: delta = " << delta << " exceeds threshold " << threshold;
        return os.str();
      }()),
      delta_(delta), threshold_(threshold) {}

ConvergenceError::ConvergenceError(std::uint64_t terms_reached)
    : std::runtime_error("lattice sum did not converge after " + std::to_string(terms_reached) +
                         " terms"),
      terms_(terms_reached) {}

namespace detail {
void require_positive(double x, const char* what) {
  if (!std::isfinite(x) || !(x > 0.0)) {
    std::ostringstream os;
    os << what << " must be finite and positive, got " << x;
    throw DomainError(os.str());
  }
}
} // namespace detail

double gamma_of(double mass, double width) {
  detail::require_positive(mass, "mass");
  detail::require_positive(width, "width");
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  const double g = pi2 * units::kHbar * units::kHbar / (2.0 * mass * width * width);
  detail::require_positive(g, "gamma");
  return g;
}

WellSubstance::WellSubstance(double mass, double width) : mass_(mass), width_(width) {
  detail::require_positive(mass, "mass");
  detail::require_positive(width, "width");
}

ThermalPoint::ThermalPoint(double beta, double gamma) : beta_(beta), gamma_(gamma) {
  detail::require_positive(beta, "beta");
  detail::require_positive(gamma, "gamma");
}

GupParams::GupParams(double beta_g, double mass, double threshold)
    : beta_g_(beta_g), mass_(mass), threshold_(threshold) {
  if (!std::isfinite(beta_g) || beta_g < 0.0)
    throw DomainError("beta_G must be finite and non-negative");
  detail::require_positive(mass, "mass");
  detail::require_positive(threshold, "GUP threshold");
}

double GupParams::K() const noexcept {
  return 1.5 * std::sqrt(std::numbers::pi) * beta_g_ * mass_;
}

double GupParams::lambda() const noexcept { return 6.0 * beta_g_ * mass_; }

double GupParams::delta(double gamma) const noexcept { return 4.0 * mass_ * beta_g_ * gamma; }

void GupParams::check_gate(double gamma) const {
  const double d = delta(gamma);
  if (d > threshold_)
    throw RegimeError(d, threshold_);
}

double energy_level(double gamma, std::uint64_t n) {
  return energy_level_gup(gamma, 0.0, n);
}

double energy_level_gup(double gamma, double delta, std::uint64_t n) {
  detail::require_positive(gamma, "gamma");
  if (n == 0)
    throw DomainError("quantum number n starts at 1");
  if (!std::isfinite(delta) || delta < 0.0)
    throw DomainError("delta must be finite and non-negative");
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  return gamma * n2 * (1.0 + delta * n2);
}

GupCoefficients gup_coefficients(const GupParams& params, double gamma) {
  detail::require_positive(gamma, "gamma");
  return {params.delta(gamma), params.K(), params.lambda()};
}

} // namespace qheat
