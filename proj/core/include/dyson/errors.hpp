#pragma once

#include <stdexcept>
#include <string>

namespace dyson {

// Thrown by projections, curvature and Hadamard formulas when the spectrum
// has a gap at or below the collision threshold; the orbit geometry is
// undefined there.
class DegenerateSpectrum : public std::runtime_error {
 public:
  explicit DegenerateSpectrum(const std::string& what)
      : std::runtime_error(what) {}
};

class EigensolverFailure : public std::runtime_error {
 public:
  explicit EigensolverFailure(const std::string& what)
      : std::runtime_error(what) {}
};

class EmptySample : public std::runtime_error {
 public:
  explicit EmptySample(const std::string& what) : std::runtime_error(what) {}
};

class ZeroVector : public std::runtime_error {
 public:
  explicit ZeroVector(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dyson
