#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsg {

enum class ErrorKind {
  EmptyInput,
  NonPositiveGenerator,
  GeneratorTooLarge,
  GcdNotOne,
  NotAMember,
  InvalidGluingData,
  DimensionMismatch,
  TrivialSemigroup,
  ScanBoundTooSmall,
  UnsupportedDimension,
  NotSingleBetti,
  NotTwoBetti,
  NotThreeBetti,
  NoValidParametrization,
  InvalidArithmeticData,
  // A closed form and a direct computation disagreed, or a theorem-level
  // invariant failed. Never expected on valid input.
  InternalInconsistency,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nsg
