#include "qheat/statmech.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qheat/errors.hpp"

namespace qheat::statmech {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273; // sqrt(pi)

double checked(double value, const char* what) {
  if (!std::isfinite(value) || value == 0.0)
    throw DomainError(std::string(what) + " is not representable for this beta*gamma");
  return value;
}

// Neumaier compensated accumulator.
class Accumulator {
public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Upper bound on Integral_N^inf x^power exp(-a x^2) dx, or +inf where the
// bound is not yet valid (integrand still increasing at N).
double gaussian_tail_bound(double a, double n, int power) {
  const double e = std::exp(-a * n * n);
  if (power == 0)
    return e / (2.0 * a * n);
  if (a * n * n < static_cast<double>(power - 1))
    return std::numeric_limits<double>::infinity();
  return std::pow(n, power - 1) * e / a;
}

} // namespace

double entropy_constant() { return 0.5 + std::log(kSqrtPi / 2.0); }

Quality approximation_quality(double beta_gamma) noexcept {
  if (beta_gamma <= kQualityOkMax)
    return Quality::Ok;
  if (beta_gamma <= kQualityMarginalMax)
    return Quality::Marginal;
  return Quality::Invalid;
}

std::string_view to_string(Quality q) noexcept {
  switch (q) {
  case Quality::Ok: return "ok";
  case Quality::Marginal: return "marginal";
  case Quality::Invalid: return "invalid";
  }
  return "invalid";
}

double partition_approx(const ThermalPoint& point) {
  const double bg = checked(point.beta_gamma(), "beta*gamma");
  return checked(0.5 * std::sqrt(std::numbers::pi / bg), "Z");
}

double n4_moment_approx(const ThermalPoint& point) {
  const double bg = checked(point.beta_gamma(), "beta*gamma");
  return checked(3.0 * kSqrtPi / 8.0 * std::pow(bg, -2.5), "n^4 moment");
}

double partition_gup(const ThermalPoint& point, const GupParams& params) {
  params.check_gate(point.gamma());
  const double b = point.beta();
  const double shift = params.K() / std::sqrt(b * b * b * point.gamma());
  return partition_approx(point) - shift;
}

Quantities thermo_closed_form(const ThermalPoint& point) {
  const double z = partition_approx(point);
  const double ln_z = std::log(z);
  const double beta = point.beta();
  return {
      .Z = z,
      .F = -ln_z / beta,
      .U = 0.5 / beta,
      .S = 0.5 + ln_z,
      .S0 = entropy_constant(),
      .quality = approximation_quality(point.beta_gamma()),
  };
}

GupQuantities thermo_gup(const ThermalPoint& point, const GupParams& params) {
  const double zg = partition_gup(point, params);
  const Quantities base = thermo_closed_form(point);
  const double beta = point.beta();
  const double k_over_root_pi = params.K() / kSqrtPi;
  const double df = 2.0 * k_over_root_pi / (beta * beta);
  const double ds = -4.0 * k_over_root_pi / beta;
  return {
      .ZG = zg,
      .FG = base.F + df,
      .UG = base.U - df,
      .SG = base.S + ds,
      .dF = df,
      .dU = -df,
      .dS = ds,
  };
}

LatticeSum lattice_sum(const ThermalPoint& point, double delta, int power, double tail_tol) {
  detail::require_positive(tail_tol, "tail tolerance");
  if (power != 0 && power != 2 && power != 4)
    throw DomainError("lattice_sum supports powers 0, 2 and 4");
  if (!std::isfinite(delta) || delta < 0.0)
    throw DomainError("delta must be finite and non-negative");

  const double a = checked(point.beta_gamma(), "beta*gamma");
  Accumulator acc;
  for (std::uint64_t n = 1; n <= kMaxLatticeTerms; ++n) {
    const double x = static_cast<double>(n);
    const double x2 = x * x;
    const double weight = power == 0 ? 1.0 : (power == 2 ? x2 : x2 * x2);
    acc.add(weight * std::exp(-a * x2 * (1.0 + delta * x2)));
    if (gaussian_tail_bound(a, x, power) < tail_tol)
      return {acc.value(), n};
  }
  throw ConvergenceError(kMaxLatticeTerms);
}

double partition_sum_oracle(const ThermalPoint& point, double tail_tol) {
  return lattice_sum(point, 0.0, 0, tail_tol).value;
}

double n4_moment_sum_oracle(const ThermalPoint& point, double tail_tol) {
  return lattice_sum(point, 0.0, 4, tail_tol).value;
}

double partition_gup_sum_oracle(const ThermalPoint& point, const GupParams& params,
                                double tail_tol) {
  params.check_gate(point.gamma());
  return lattice_sum(point, params.delta(point.gamma()), 0, tail_tol).value;
}

double default_fd_step() { return std::cbrt(std::numeric_limits<double>::epsilon()); }

Quantities thermo_oracle(const ThermalPoint& point, const GupParams& params, double tail_tol,
                         double h) {
  detail::require_positive(h, "finite-difference step");
  if (h >= 0.5)
    throw DomainError("finite-difference step must be below 0.5");
  params.check_gate(point.gamma());
  const double delta = params.delta(point.gamma());
  const double beta = point.beta();
  const double gamma = point.gamma();

  auto ln_z = [&](double b) {
    return std::log(checked(lattice_sum(ThermalPoint(b, gamma), delta, 0, tail_tol).value, "Z"));
  };

  const double step = h * beta;
  const double z = lattice_sum(point, delta, 0, tail_tol).value;
  const double u = -(ln_z(beta + step) - ln_z(beta - step)) / (2.0 * step);
  const double f = -std::log(z) / beta;
  return {
      .Z = z,
      .F = f,
      .U = u,
      .S = beta * (u - f),
      .S0 = entropy_constant(),
      .quality = Quality::Ok,
  };
}

} // namespace qheat::statmech
