#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flowerkit {

// Numeric-domain failures. Argument validation uses std::invalid_argument.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested quantity is not available for this body representation
// (e.g. the radial function of sampled support data).
class UnsupportedRepresentation : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

// Zero or infinite radial values where a finite positive value is required.
class DegenerateInput : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

// Volume-type functionals of bodies with +inf support or radial values.
class UnboundedBody : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class TypeMismatch : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace flowerkit
