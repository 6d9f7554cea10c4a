#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyptile {

enum class Errc {
  InvalidParams,
  DimensionMismatch,
  SingularMatrix,
  RankDeficient,
  TooLarge,
  BudgetExceeded,
  CoverViolation,
  Parse,
};

std::string_view errc_name(Errc code) noexcept;

/// Single exception type for the library; `code()` says which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hyptile
