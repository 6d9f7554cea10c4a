#pragma once

// The two-size hypercube lattice tiling of R^n.
//
// Side lengths satisfy 0 < p < q: q is the big cube. The lattice is A Z^n with
//   a_k = q e_k - p e_{k+1}  (k < n),   a_n = p e_1 + q e_n,
// and the half-open fundamental domain
//   C = [0,q)^n  u  [0,p)^{n-1} x [q, q+p)
// holds one big cube and one small cube. Every point of R^n is owned by exactly
// one tile; boundary points go to the tile whose half-open box contains them.

#include "hyptile/ratlin.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hyptile {

/// Dimension n >= 2 and side lengths 0 < p < q. Validated on construction.
class TilingParams {
 public:
  TilingParams(int n, Rational p, Rational q);

  int n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(n_); }
  const Rational& p() const noexcept { return p_; }
  const Rational& q() const noexcept { return q_; }

  friend bool operator==(const TilingParams&, const TilingParams&) = default;

 private:
  int n_;
  Rational p_;
  Rational q_;
};

/// The lattice basis A together with what membership and symmetry tests need.
struct BasisA {
  RatMat matrix;     // columns a_1..a_n
  Rational det;      // p^n + q^n
  RatMat adjugate;   // adj(A)
  BigInt scale;      // smallest D with D*A integral
  IntMat scaled;     // D*A
  IntMat scaled_adjugate;
  BigInt scaled_det;
};

/// Columns b_1 = a_n, b_k = b_{k-1} - a_{k-1}, plus each column's
/// coordinates in the a-basis.
struct ReductionBasis {
  RatMat matrix;
  std::vector<IntVec> coefficients;
};

struct CanonicalPoint {
  RatVec c;  // representative in C
  IntVec k;  // x = c + A k
  /// Passes through the x_n-reduction loops; bounded by ceil(|x_n|/q) + 1
  /// where x_n is taken after the first sweep.
  std::size_t reductions = 0;
  RatVec x_after_sweep;
};

enum class TileKind : std::uint8_t { Big, Small };

std::string to_string(TileKind kind);

struct TileRef {
  TileKind kind;
  IntVec anchor;  // lattice coordinates k; the tile sits at A k

  friend bool operator==(const TileRef&, const TileRef&) = default;
};

/// Deterministic order: anchor lexicographically, then Big before Small.
bool operator<(const TileRef& a, const TileRef& b);

/// Closed axis-aligned box.
struct Box {
  RatVec lo;
  RatVec hi;
};

BasisA build_basis(const TilingParams& params);
ReductionBasis build_reduction_basis(const TilingParams& params);

bool in_big_box(const RatVec& x, const TilingParams& params);
bool in_small_box(const RatVec& x, const TilingParams& params);
bool in_fundamental_domain(const RatVec& x, const TilingParams& params);

/// vol(C) = q^n + p^n.
Rational fundamental_domain_volume(const TilingParams& params);

/// Reduce x modulo the lattice into C. Throws Errc::DimensionMismatch.
CanonicalPoint canonicalize(const RatVec& x, const TilingParams& params);

TileRef locate(const RatVec& x, const TilingParams& params);

bool is_lattice_member(const RatVec& v, const BasisA& basis);

/// No p e_i and no q e_i is a lattice vector, so equal cubes never share a full facet.
bool check_unilateral(const TilingParams& params);

/// A k + [0,q]^n for Big, A k + [0,p]^{n-1} x [q,q+p] for Small.
Box tile_box(const TileRef& tile, const TilingParams& params, const BasisA& basis);

/// Every tile whose closed box meets [lo, hi] in positive volume, sorted.
/// Requires lo < hi componentwise (Errc::InvalidParams otherwise).
std::vector<TileRef> tiles_in_box(const RatVec& lo, const RatVec& hi, const TilingParams& params);

/// Upper bound on lattice candidates tiles_in_box is willing to enumerate.
inline constexpr std::uint64_t kTilesInBoxCandidateCap = 20'000'000;

}  // namespace hyptile
