#pragma once

#include <stdexcept>
#include <string>

namespace kbp {

// Argument outside the mathematical domain of an operation (x <= 0 for
// log-gamma, t outside [0,1] for a profile, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Index pair or construction parameters violate a documented invariant.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation is not defined for this profile variant or index.
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Adaptive quadrature (or a derived round trip) did not reach its tolerance.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double last_estimate)
      : std::runtime_error(what), last_estimate_(last_estimate) {}

  double last_estimate() const noexcept { return last_estimate_; }

 private:
  double last_estimate_;
};

// A construction did not pass its own claim verification.
class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CertificateNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value that a verified construction guarantees (e.g. a non-negative dual
// transform) came out wrong.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kbp
