#pragma once

#include <stdexcept>
#include <string>

namespace trirec {

// Error taxonomy shared by all modules. `kind()` is stable and is what the
// CLI maps to exit codes.
enum class ErrorKind {
  PoleAtIndex,       // recurrence denominator vanishes at an integer index
  UnsupportedShape,  // degree pattern matches neither theorem shape
  NotInDisc,         // evaluation point on/outside the disc of convergence
  NoConvergence,     // tolerance not reached within the term budget
  WitnessNotFound,   // inequality scan exhausted without a valid witness
  ZeroDenominator,   // Pochhammer ratio with a vanishing factor
  DomainError,       // gamma pole or otherwise out-of-domain argument
  TruncationMismatch,// decomposition truncations cannot be aligned
  NonRealFamily,     // exact modulus arithmetic needs real coefficients
  Overflow,          // scaled representation exponent out of range
  ParseError         // malformed number / family / config input
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct PoleAtIndex : Error {
  long index;
  PoleAtIndex(long n, const std::string& what)
      : Error(ErrorKind::PoleAtIndex,
              what + " at n = " + std::to_string(n)),
        index(n) {}
};

struct WitnessNotFound : Error {
  long first_violating_n;
  WitnessNotFound(long n, const std::string& what)
      : Error(ErrorKind::WitnessNotFound,
              what + " (first violating n = " + std::to_string(n) + ")"),
        first_violating_n(n) {}
};

inline Error make_error(ErrorKind kind, const std::string& message) {
  return Error(kind, message);
}

}  // namespace trirec
