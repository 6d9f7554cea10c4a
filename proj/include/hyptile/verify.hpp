#pragma once

// Property checks over one parameter set, aggregated into a pass/fail report.

#include "hyptile/tiling.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hyptile {

/// Random rational with denominator in [1, max_den] and |value| <= bound.
Rational random_rational(std::mt19937_64& rng, std::int64_t bound, std::int64_t max_den);
RatVec random_point(std::mt19937_64& rng, std::size_t n, std::int64_t bound, std::int64_t max_den);
/// A point of the half-open domain C, drawn from the big or the small box.
RatVec random_domain_point(std::mt19937_64& rng, const TilingParams& params, std::int64_t max_den);

struct VerifyOptions {
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 20240917;
  bool stabilizer = true;  // brute-force cross-check, only for n <= 6
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
  std::optional<std::string> counterexample;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
};

CheckResult check_determinant(const TilingParams& params);
CheckResult check_round_trip(const TilingParams& params, std::uint64_t samples, std::uint64_t seed);
CheckResult check_representative_uniqueness(const TilingParams& params, std::uint64_t samples, std::uint64_t seed);
CheckResult check_unilaterality(const TilingParams& params);
CheckResult check_stabilizer(const TilingParams& params);

VerifyReport run_verification(const TilingParams& params, const VerifyOptions& options = {});

}  // namespace hyptile
