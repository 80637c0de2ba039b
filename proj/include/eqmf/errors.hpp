#pragma once

#include <stdexcept>
#include <string>

namespace eqmf {

// (weight, depth) pair for which no quasimodular form of exactly that depth exists.
class NonexistentForm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Existent pair outside what the library computes in full (depth 4, weight not 0 mod 12).
class UnsupportedClass : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownIdentifier : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Hypothesis of a solver or oracle does not hold for the given input.
class PreconditionViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A mechanical certificate (sweep bound, identity) failed to verify.
class CertificateFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eqmf
