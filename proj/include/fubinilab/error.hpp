#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fubinilab {

enum class ErrorKind {
  NonPrimeCharacteristic,
  BoundExceeded,
  NotContinuous,
  NotLinearizable,
  MismatchedConstructions,
  EnrichmentMismatch,
  IterationBudgetExhausted,
  DimensionMismatch,
  InvalidArgument,
  InvalidConfig,
  Parse,
};

std::string_view to_string(ErrorKind kind);

class LabError : public std::runtime_error {
 public:
  LabError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw LabError(kind, what); }

}  // namespace fubinilab
