#include "hyptile/error.hpp"

namespace hyptile {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::CoverViolation: return "CoverViolation";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace hyptile
