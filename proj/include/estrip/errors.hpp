#pragma once

#include <stdexcept>
#include <string>

namespace estrip {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Request exceeds a configured memory or size budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Valid request the implementation does not support.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation at a pole (s = 1 for principal L-functions, Gamma at non-positive integers).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Phase tracking could not resolve the branch of an argument.
class AmbiguityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A root bracket could not be established.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// log zeta(n s) hit (numerically) a zero or pole of zeta.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace estrip
