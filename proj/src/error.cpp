#include "fubinilab/error.hpp"

namespace fubinilab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NotContinuous: return "NotContinuous";
    case ErrorKind::NotLinearizable: return "NotLinearizable";
    case ErrorKind::MismatchedConstructions: return "MismatchedConstructions";
    case ErrorKind::EnrichmentMismatch: return "EnrichmentMismatch";
    case ErrorKind::IterationBudgetExhausted: return "IterationBudgetExhausted";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace fubinilab
