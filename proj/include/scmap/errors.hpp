#pragma once

#include <stdexcept>
#include <string>

namespace scmap {

/// Argument outside the mathematical domain of an operation (angle of zero,
/// hypergeometric argument outside the unit disk, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Evaluation requested exactly at a singular point of a map or integrand.
class SingularPointError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Invalid structural input: bad index, malformed specification.
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A series or integral that does not converge for the given parameters.
class DivergenceError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

} // namespace scmap
