#pragma once

// Integer instances of the tiling on the discrete torus (Z/m)^n, m = p^n + q^n.

#include "hyptile/symmetry.hpp"
#include "hyptile/tiling.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hyptile {

/// n >= 2 and coprime integers 0 < p < q; m = p^n + q^n.
class TorusParams {
 public:
  TorusParams(int n, std::int64_t p, std::int64_t q);

  int n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(n_); }
  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  std::int64_t m() const noexcept { return m_; }

  TilingParams tiling() const { return TilingParams(n_, Rational(p_), Rational(q_)); }

 private:
  int n_;
  std::int64_t p_;
  std::int64_t q_;
  std::int64_t m_;
};

inline constexpr std::uint64_t kDefaultCellBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultHnfBudget = 10'000;

using Cell = std::vector<std::int64_t>;

/// Least l > 0 with l e_axis in A Z^n (axis is 1-based). Computed as
/// m / gcd(m, g) with g the gcd of column `axis` of adj(A).
std::int64_t minimal_axis_period(const TorusParams& params, int axis);

/// |det(A_i)| = q^{n-1} for every Cramer matrix A_i (column i of A replaced
/// by e_i), and gcd(m, q^{n-1}) = 1.
bool adjugate_entry_check(const TorusParams& params);

/// Cell-to-tile assignment on (Z/m)^n. Owner ids are 2*r for the big cube at
/// residue r and 2*r + 1 for its small cube; -1 marks an unassigned cell.
struct TorusTiling {
  TorusParams params;
  std::vector<Cell> residues;
  std::vector<std::int32_t> owner;

  std::uint64_t cell_count() const noexcept { return owner.size(); }
  std::uint64_t index_of(const Cell& c) const;
  Cell cell_at(std::uint64_t index) const;
  std::uint64_t big_count() const noexcept { return residues.size(); }
  std::uint64_t small_count() const noexcept { return residues.size(); }
};

/// Outcome of placing the domain C at every residue of a lattice mod m.
struct CoverResult {
  std::vector<Cell> residues;
  std::vector<std::int32_t> owner;
  std::optional<std::string> violation;  // first doubly covered or uncovered cell

  bool exact() const noexcept { return !violation.has_value(); }
};

/// Generates the residue subgroup of (Z/m)^n from `generators` by BFS, then
/// places a big cube (side q) and a small cube (side p, stacked on the big
/// cube's last axis) at each residue.
CoverResult cover_torus(int n, std::int64_t p, std::int64_t q, std::int64_t m, const std::vector<Cell>& generators,
                        std::uint64_t cell_budget = kDefaultCellBudget);

/// Throws Errc::BudgetExceeded when m^n > cell_budget and Errc::CoverViolation
/// if the cover is not exact or the residue group has the wrong order.
TorusTiling build_torus_tiling(const TorusParams& params, std::uint64_t cell_budget = kDefaultCellBudget);

struct UnilateralAudit {
  bool residue_check = true;  // p e_i, q e_i are not residues mod m
  bool facet_scan = true;     // no equal cubes share a facet in the assignment itself
  std::optional<std::string> counterexample;

  bool ok() const noexcept { return residue_check && facet_scan; }
};

UnilateralAudit audit_unilateral_torus(const TorusTiling& tiling);
bool verify_unilateral_torus(const TorusTiling& tiling);

struct PackingReport {
  int n = 0;
  std::int64_t modulus = 0;
  std::int64_t side = 0;  // q
  std::uint64_t cube_count = 0;
  std::uint64_t cell_count = 0;
  /// p = 1, q = 2: side-2 cubes in (Z/(2^n+1))^n.
  bool odd_cycle_case = false;
};

PackingReport packing_report(const TorusParams& params, std::uint64_t cell_budget = kDefaultCellBudget);

/// All HNF bases (lower triangular, see hnf()) of index-`index` sublattices of Z^n.
std::vector<IntMat> enumerate_hnf_sublattices(int n, std::int64_t index, std::uint64_t budget = kDefaultHnfBudget);

struct ScanSurvivor {
  IntMat hnf;
  bool is_reference = false;  // equals the HNF of A
  std::optional<SignedPermutation> equivalence;
};

struct ScanReport {
  std::uint64_t candidates = 0;
  std::vector<ScanSurvivor> survivors;
};

/// Tests every index-m sublattice of Z^n for an exact cover of (Z/m)^n by
/// translates of C. Requires n <= 3; throws Errc::BudgetExceeded past the budgets.
ScanReport scan_candidate_lattices(const TorusParams& params, std::uint64_t hnf_budget = kDefaultHnfBudget,
                                   std::uint64_t cell_budget = kDefaultCellBudget);

}  // namespace hyptile
