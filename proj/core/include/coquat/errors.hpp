#pragma once

#include <stdexcept>
#include <string>

namespace coquat {

// Base of every error the library throws. Each subclass names the
// failing condition so callers can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inverting a zero divisor.
class SingularElement : public Error {
 public:
  using Error::Error;
};

// The polynomial's leading coefficient is a zero divisor; it cannot be
// made monic and its companion polynomial may degenerate.
class SingularLeadingCoefficient : public Error {
 public:
  using Error::Error;
};

// A real polynomial with no roots to extract (constant or empty).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// P-bar * P produced a coefficient with a non-negligible vector part.
class NonRealCompanion : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace coquat
