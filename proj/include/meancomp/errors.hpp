#pragma once

#include <stdexcept>
#include <string>

namespace meancomp {

// Bad arguments or values outside a declared domain.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A required ingredient is missing: derivative callables, regularity class,
// or a normal form the operation depends on.
class CapabilityError : public std::logic_error {
 public:
  explicit CapabilityError(const std::string& what) : std::logic_error(what) {}
};

// Numerical failure at run time: lost root bracket, failed monotone
// inversion, non-finite integrand.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// A pair or generator degenerated at a sample point (vanishing Wronskian,
// vanishing first derivative).
class DegeneracyError : public NumericError {
 public:
  explicit DegeneracyError(const std::string& what) : NumericError(what) {}
};

}  // namespace meancomp
