#pragma once

#include <stdexcept>
#include <string>

namespace focksim {

/// Operand dimensions or lengths do not line up.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// A probability vector does not sum to one within tolerance.
class NormalizationError : public std::domain_error {
 public:
  explicit NormalizationError(const std::string& what) : std::domain_error(what) {}
};

/// All weights vanish, the mean is undefined.
class DegenerateWeightsError : public std::domain_error {
 public:
  explicit DegenerateWeightsError(const std::string& what) : std::domain_error(what) {}
};

/// A scenario violates its own invariants (step guards, dimensions).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A scenario file could not be parsed.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// The integrator produced a state outside its validity bounds.
class IntegrationError : public std::runtime_error {
 public:
  explicit IntegrationError(const std::string& what) : std::runtime_error(what) {}
};

/// Population escaped past the truncation edge of the basis.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace focksim
