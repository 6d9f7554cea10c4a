#include "hyptile/tiling.hpp"

#include "hyptile/error.hpp"

#include <algorithm>
#include <optional>

namespace hyptile {

TilingParams::TilingParams(int n, Rational p, Rational q) : n_(n), p_(std::move(p)), q_(std::move(q)) {
  if (n_ < 2) throw Error(Errc::InvalidParams, "dimension must be at least 2, got " + std::to_string(n_));
  if (p_ <= 0) throw Error(Errc::InvalidParams, "small side p must be positive, got " + to_string(p_));
  if (p_ >= q_)
    throw Error(Errc::InvalidParams,
                "small side p must be less than big side q (p=" + to_string(p_) + ", q=" + to_string(q_) + ")");
}

std::string to_string(TileKind kind) { return kind == TileKind::Big ? "Big" : "Small"; }

bool operator<(const TileRef& a, const TileRef& b) {
  if (a.anchor != b.anchor) return a.anchor < b.anchor;
  return a.kind == TileKind::Big && b.kind == TileKind::Small;
}

namespace {

RatMat basis_matrix(const TilingParams& params) {
  const std::size_t n = params.dim();
  RatMat a(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    a(k, k) = params.q();
    a(k + 1, k) = -params.p();
  }
  a(0, n - 1) = params.p();
  a(n - 1, n - 1) = params.q();
  return a;
}

}  // namespace

BasisA build_basis(const TilingParams& params) {
  BasisA basis;
  basis.matrix = basis_matrix(params);

  basis.det = det(basis.matrix);
  basis.adjugate = adjugate(basis.matrix);
  basis.scale = lcm_of_denominators(basis.matrix);
  basis.scaled = scale_to_integer(basis.matrix, basis.scale);
  basis.scaled_adjugate = adjugate(basis.scaled);
  basis.scaled_det = det(basis.scaled);
  return basis;
}

ReductionBasis build_reduction_basis(const TilingParams& params) {
  const std::size_t n = params.dim();
  const RatMat a = basis_matrix(params);
  ReductionBasis rb;
  rb.matrix = RatMat(n);
  rb.coefficients.assign(n, IntVec(n, BigInt(0)));

  RatVec b = a.column(n - 1);
  IntVec coef(n, BigInt(0));
  coef[n - 1] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      b = b - a.column(k - 1);
      coef[k - 1] -= 1;
    }
    rb.matrix.set_column(k, b);
    rb.coefficients[k] = coef;
  }
  return rb;
}

bool in_big_box(const RatVec& x, const TilingParams& params) {
  if (x.size() != params.dim()) throw Error(Errc::DimensionMismatch, "point has wrong dimension");
  return std::all_of(x.begin(), x.end(), [&](const Rational& xi) { return xi >= 0 && xi < params.q(); });
}

bool in_small_box(const RatVec& x, const TilingParams& params) {
  if (x.size() != params.dim()) throw Error(Errc::DimensionMismatch, "point has wrong dimension");
  const std::size_t n = params.dim();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (x[i] < 0 || x[i] >= params.p()) return false;
  return x[n - 1] >= params.q() && x[n - 1] < params.q() + params.p();
}

bool in_fundamental_domain(const RatVec& x, const TilingParams& params) {
  return in_big_box(x, params) || in_small_box(x, params);
}

Rational fundamental_domain_volume(const TilingParams& params) {
  return pow(params.q(), params.n()) + pow(params.p(), params.n());
}

CanonicalPoint canonicalize(const RatVec& x, const TilingParams& params) {
  const std::size_t n = params.dim();
  if (x.size() != n)
    throw Error(Errc::DimensionMismatch,
                "point has dimension " + std::to_string(x.size()) + ", expected " + std::to_string(n));
  const Rational& p = params.p();
  const Rational& q = params.q();
  const ReductionBasis rb = build_reduction_basis(params);

  CanonicalPoint out;
  RatVec& c = out.c;
  IntVec& k = out.k;
  c = x;
  k.assign(n, BigInt(0));

  auto subtract_b = [&](std::size_t l) {
    for (std::size_t i = 0; i < n; ++i) c[i] -= rb.matrix(i, l);
    for (std::size_t i = 0; i < n; ++i) k[i] += rb.coefficients[l][i];
  };
  auto add_b = [&](std::size_t l) {
    for (std::size_t i = 0; i < n; ++i) c[i] += rb.matrix(i, l);
    for (std::size_t i = 0; i < n; ++i) k[i] -= rb.coefficients[l][i];
  };

  // Sweep coordinates 1..n-1 into [0, q) with multiples of a_j; a_j pushes
  // its excess into the next coordinate.
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const BigInt f = floor(Rational(c[j] / q));
    if (f == 0) continue;
    const Rational fr(f);
    c[j] -= fr * q;
    c[j + 1] += fr * p;
    k[j] += f;
  }
  out.x_after_sweep = c;

  const Rational top = p + q;
  // Lower x_n by at least q per pass, keeping the other coordinates in [0, q).
  while (c[n - 1] >= top) {
    std::size_t l = 0;
    while (l + 1 < n && c[l] < p) ++l;
    subtract_b(l);
    ++out.reductions;
  }
  // Raise x_n by at least q per pass.
  const Rational gap = q - p;
  while (c[n - 1] < 0) {
    std::size_t l = 0;
    while (l + 1 < n && c[l] >= gap) ++l;
    add_b(l);
    ++out.reductions;
  }
  // Now c is in [0,q)^{n-1} x [0,p+q). Points above the big cube that miss
  // the small box drop into the big cube.
  if (c[n - 1] >= q) {
    std::size_t l = 0;
    while (l + 1 < n && c[l] < p) ++l;
    if (l + 1 < n) subtract_b(l);
  }

  if (!in_fundamental_domain(c, params))
    throw Error(Errc::CoverViolation, "canonicalize left the fundamental domain at " + to_string(c));
  return out;
}

TileRef locate(const RatVec& x, const TilingParams& params) {
  CanonicalPoint cp = canonicalize(x, params);
  return TileRef{in_big_box(cp.c, params) ? TileKind::Big : TileKind::Small, std::move(cp.k)};
}

bool is_lattice_member(const RatVec& v, const BasisA& basis) {
  if (v.size() != basis.matrix.size()) throw Error(Errc::DimensionMismatch, "vector has wrong dimension");
  const RatVec scaled = basis.adjugate * v;
  return std::all_of(scaled.begin(), scaled.end(),
                     [&](const Rational& x) { return denominator_of(Rational(x / basis.det)) == 1; });
}

bool check_unilateral(const TilingParams& params) {
  const BasisA basis = build_basis(params);
  for (std::size_t i = 0; i < params.dim(); ++i) {
    const RatVec e = unit_vector(params.dim(), i);
    if (is_lattice_member(params.p() * e, basis)) return false;
    if (is_lattice_member(params.q() * e, basis)) return false;
  }
  return true;
}

Box tile_box(const TileRef& tile, const TilingParams& params, const BasisA& basis) {
  const std::size_t n = params.dim();
  if (tile.anchor.size() != n) throw Error(Errc::DimensionMismatch, "tile anchor has wrong dimension");
  const RatVec corner = basis.matrix * to_rational(tile.anchor);
  Box box{corner, corner};
  if (tile.kind == TileKind::Big) {
    for (auto& h : box.hi) h += params.q();
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i) box.hi[i] += params.p();
    box.lo[n - 1] += params.q();
    box.hi[n - 1] += params.q() + params.p();
  }
  return box;
}

namespace {

bool overlaps_with_volume(const Box& a, const RatVec& lo, const RatVec& hi) {
  for (std::size_t i = 0; i < lo.size(); ++i) {
    const Rational& l = std::max(a.lo[i], lo[i]);
    const Rational& h = std::min(a.hi[i], hi[i]);
    if (!(l < h)) return false;
  }
  return true;
}

}  // namespace

std::vector<TileRef> tiles_in_box(const RatVec& lo, const RatVec& hi, const TilingParams& params) {
  const std::size_t n = params.dim();
  if (lo.size() != n || hi.size() != n) throw Error(Errc::DimensionMismatch, "box has wrong dimension");
  for (std::size_t i = 0; i < n; ++i)
    if (!(lo[i] < hi[i])) throw Error(Errc::InvalidParams, "box must satisfy lo < hi in every coordinate");

  const BasisA basis = build_basis(params);
  // Any tile meeting the box has its lattice point A k inside [lo - (p+q), hi].
  const Rational reach = params.p() + params.q();
  std::vector<BigInt> kmin(n), kmax(n);
  std::uint64_t candidates = 1;
  for (std::size_t j = 0; j < n; ++j) {
    Rational mn = 0, mx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational coef = basis.adjugate(j, i) / basis.det;
      const Rational a = coef * (lo[i] - reach);
      const Rational b = coef * hi[i];
      mn += std::min(a, b);
      mx += std::max(a, b);
    }
    kmin[j] = ceil(mn);
    kmax[j] = floor(mx);
    if (kmax[j] < kmin[j]) return {};
    const BigInt span = kmax[j] - kmin[j] + 1;
    if (span > BigInt(kTilesInBoxCandidateCap) ||
        candidates * span.convert_to<std::uint64_t>() > kTilesInBoxCandidateCap)
      throw Error(Errc::BudgetExceeded, "box too large for tile enumeration");
    candidates *= span.convert_to<std::uint64_t>();
  }

  std::vector<TileRef> result;
  IntVec k = kmin;
  while (true) {
    for (TileKind kind : {TileKind::Big, TileKind::Small}) {
      TileRef tile{kind, k};
      if (overlaps_with_volume(tile_box(tile, params, basis), lo, hi)) result.push_back(std::move(tile));
    }
    std::size_t j = 0;
    while (j < n && k[j] == kmax[j]) {
      k[j] = kmin[j];
      ++j;
    }
    if (j == n) break;
    ++k[j];
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace hyptile
