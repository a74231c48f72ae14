#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace platjones {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class GeneratorOutOfRange : public Error {
 public:
  GeneratorOutOfRange(int generator, int strands)
      : Error("generator s" + std::to_string(generator) + " out of range for " +
              std::to_string(strands) + " strands (valid: 1.." +
              std::to_string(strands - 1) + ")"),
        generator_(generator),
        strands_(strands) {}

  int generator() const noexcept { return generator_; }
  int strands() const noexcept { return strands_; }

 private:
  int generator_;
  int strands_;
};

class InvalidStrandCount : public Error {
 public:
  explicit InvalidStrandCount(int strands)
      : Error("strand count must be even and >= 2, got " + std::to_string(strands)) {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonQuarticExponent : public Error {
 public:
  explicit NonQuarticExponent(int exponent)
      : Error("exponent " + std::to_string(exponent) + " is not divisible by 4"),
        exponent_(exponent) {}

  int exponent() const noexcept { return exponent_; }

 private:
  int exponent_;
};

/// The plat closure has more than one component.
class IsLinkError : public Error {
 public:
  explicit IsLinkError(int components)
      : Error("plat closure is a link with " + std::to_string(components) +
              " components, not a knot"),
        components_(components) {}

  int components() const noexcept { return components_; }

 private:
  int components_;
};

class TooManyCrossings : public Error {
 public:
  TooManyCrossings(int crossings, int limit)
      : Error("state sum over " + std::to_string(crossings) +
              " crossings exceeds the limit of " + std::to_string(limit)),
        crossings_(crossings),
        limit_(limit) {}

  int crossings() const noexcept { return crossings_; }
  int limit() const noexcept { return limit_; }

 private:
  int crossings_;
  int limit_;
};

}  // namespace platjones
