#pragma once

// Versioned JSON documents for torus reports and shared JSON helpers.

#include "hyptile/torus.hpp"
#include "hyptile/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hyptile {

inline constexpr int kReportVersion = 1;

struct SurvivorRecord {
  std::vector<std::vector<std::int64_t>> hnf;  // rows
  bool is_reference = false;
  std::optional<std::string> equivalence;  // serialized signed permutation

  friend bool operator==(const SurvivorRecord&, const SurvivorRecord&) = default;
};

struct TorusReport {
  int n = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t m = 0;
  std::uint64_t residue_count = 0;
  std::uint64_t big_count = 0;
  std::uint64_t small_count = 0;
  bool exact_cover = false;
  bool unilateral = false;
  std::int64_t min_period = 0;
  std::vector<std::int64_t> min_period_per_axis;
  std::optional<std::uint64_t> scan_candidates;
  std::vector<SurvivorRecord> survivors;
  std::optional<std::string> counterexample;

  friend bool operator==(const TorusReport&, const TorusReport&) = default;
};

/// Builds the torus, audits it and, with `scan`, runs the lattice scan.
TorusReport make_torus_report(const TorusParams& params, std::uint64_t cell_budget, bool scan,
                              std::uint64_t hnf_budget = kDefaultHnfBudget);

nlohmann::json to_json(const TorusReport& report);
/// Throws Errc::Parse on a schema or version mismatch.
TorusReport torus_report_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const VerifyReport& report);

/// {"schema": "hyptile.<kind>", "version": kReportVersion}
nlohmann::json report_header(const std::string& kind);

nlohmann::json to_json(const RatVec& v);
nlohmann::json to_json(const IntVec& v);
nlohmann::json to_json(const RatMat& m);
nlohmann::json to_json(const IntMat& m);

}  // namespace hyptile
