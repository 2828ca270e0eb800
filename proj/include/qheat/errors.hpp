#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qheat {

/// Non-finite, non-positive or otherwise out-of-domain argument.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A cycle specification that cannot describe the requested cycle
/// (temperature or width ordering, bad f_AD/f_CB, ...).
class SpecError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A process or ledger whose structural invariant does not hold.
class ContractError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// The first-order GUP expansion is outside its validity gate.
class RegimeError : public std::runtime_error {
public:
  RegimeError(double delta, double threshold);

  double delta() const noexcept { return delta_; }
  double threshold() const noexcept { return threshold_; }

private:
  double delta_;
  double threshold_;
};

/// A truncated lattice sum hit its hard iteration cap.
class ConvergenceError : public std::runtime_error {
public:
  explicit ConvergenceError(std::uint64_t terms_reached);

  std::uint64_t terms_reached() const noexcept { return terms_; }

private:
  std::uint64_t terms_;
};

/// Q_in vanishes, so no efficiency can be formed.
class DegenerateCycleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Figure function evaluated at (or within 1e-9 of) its pole r * r_L = 1.
class PoleError : public DomainError {
public:
  using DomainError::DomainError;
};

} // namespace qheat
