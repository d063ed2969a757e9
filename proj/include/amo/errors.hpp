#ifndef AMO_ERRORS_HPP
#define AMO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace amo {

// Base for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid construction input: parameter out of range, malformed config value.
class BadParameter : public Error {
 public:
  using Error::Error;
};

// Parts of a model that do not fit together (distortion domain shorter than
// the generator's, hazard range inconsistent with x_G).
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

// Root finder could not enclose the target value.
class NoBracket : public Error {
 public:
  using Error::Error;
};

class MaxIterExceeded : public Error {
 public:
  using Error::Error;
};

// Quadrature failed to reach its error target.
class NonConvergent : public Error {
 public:
  using Error::Error;
};

// Sampling requested for a generator with no frailty representation.
class UnsupportedGenerator : public Error {
 public:
  using Error::Error;
};

class TooFewSamples : public Error {
 public:
  using Error::Error;
};

// Config file / CLI level problems. Message names the offending field.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace amo

#endif
