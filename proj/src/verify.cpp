#include "hyptile/verify.hpp"

#include "hyptile/symmetry.hpp"

#include <algorithm>

namespace hyptile {

Rational random_rational(std::mt19937_64& rng, std::int64_t bound, std::int64_t max_den) {
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  const std::int64_t d = den(rng);
  std::uniform_int_distribution<std::int64_t> num(-bound * d, bound * d);
  return Rational(num(rng), d);
}

RatVec random_point(std::mt19937_64& rng, std::size_t n, std::int64_t bound, std::int64_t max_den) {
  RatVec v(n);
  for (auto& x : v) x = random_rational(rng, bound, max_den);
  return v;
}

RatVec random_domain_point(std::mt19937_64& rng, const TilingParams& params, std::int64_t max_den) {
  const std::size_t n = params.dim();
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  // Fraction in [0, 1).
  auto unit = [&] {
    const std::int64_t d = den(rng);
    std::uniform_int_distribution<std::int64_t> num(0, d - 1);
    return Rational(num(rng), d);
  };
  // Pick a box in proportion to its volume, at 2^-53 resolution.
  const Rational big = pow(params.q(), params.n());
  const Rational total = big + pow(params.p(), params.n());
  constexpr std::uint64_t kResolution = std::uint64_t{1} << 53;
  std::uniform_int_distribution<std::uint64_t> pick(0, kResolution - 1);
  const bool small = Rational(BigInt(pick(rng)), BigInt(kResolution)) * total >= big;
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = unit() * (small ? params.p() : params.q());
  if (small) x[n - 1] = params.q() + unit() * params.p();
  return x;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CheckResult check_determinant(const TilingParams& params) {
  CheckResult r{"determinant", true, {}, {}};
  const Rational d = det(build_basis(params).matrix);
  const Rational expected = fundamental_domain_volume(params);
  r.passed = d == expected;
  r.detail = "det(A) = " + to_string(d) + ", p^n + q^n = " + to_string(expected);
  if (!r.passed) r.counterexample = to_string(d);
  return r;
}

CheckResult check_round_trip(const TilingParams& params, std::uint64_t samples, std::uint64_t seed) {
  CheckResult r{"round_trip", true, {}, {}};
  std::mt19937_64 rng(seed);
  const BasisA basis = build_basis(params);
  for (std::uint64_t s = 0; s < samples && r.passed; ++s) {
    const RatVec x = random_point(rng, params.dim(), 50, 30);
    const CanonicalPoint cp = canonicalize(x, params);
    const RatVec back = cp.c + basis.matrix * to_rational(cp.k);
    const CanonicalPoint again = canonicalize(cp.c, params);
    const bool idempotent =
        again.c == cp.c && std::all_of(again.k.begin(), again.k.end(), [](const BigInt& v) { return v == 0; });
    const Rational xn = abs(cp.x_after_sweep.back());
    const bool bounded = BigInt(cp.reductions) <= ceil(Rational(xn / params.q())) + 1;
    if (back != x || !in_fundamental_domain(cp.c, params) || !idempotent || !bounded) {
      r.passed = false;
      r.counterexample = to_string(x);
    }
  }
  r.detail = std::to_string(samples) + " random points: x = c + A k, c in C, canonicalize(c) = (c, 0)";
  return r;
}

CheckResult check_representative_uniqueness(const TilingParams& params, std::uint64_t samples, std::uint64_t seed) {
  CheckResult r{"representative_uniqueness", true, {}, {}};
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  const BasisA basis = build_basis(params);
  std::uint64_t tested = 0;
  while (tested < samples && r.passed) {
    const RatVec a = random_domain_point(rng, params, 40);
    const RatVec b = random_domain_point(rng, params, 40);
    if (a == b) continue;
    ++tested;
    if (is_lattice_member(a - b, basis)) {
      r.passed = false;
      r.counterexample = to_string(a) + " - " + to_string(b);
    }
  }
  r.detail = std::to_string(tested) + " distinct pairs in C with non-lattice difference";
  return r;
}

CheckResult check_unilaterality(const TilingParams& params) {
  CheckResult r{"unilateral", true, {}, {}};
  const BasisA basis = build_basis(params);
  for (std::size_t i = 0; i < params.dim() && r.passed; ++i) {
    const RatVec e = unit_vector(params.dim(), i);
    for (const Rational* side : {&params.p(), &params.q()}) {
      if (is_lattice_member(*side * e, basis)) {
        r.passed = false;
        r.counterexample = to_string(*side) + "*e_" + std::to_string(i + 1);
        break;
      }
    }
  }
  r.detail = "p e_i and q e_i are not lattice vectors";
  return r;
}

CheckResult check_stabilizer(const TilingParams& params) {
  CheckResult r{"stabilizer", true, {}, {}};
  const int n = params.n();
  const auto closed = stabilizer_closed_form(n);
  const auto brute = stabilizer_brute_force(n, build_basis(params));
  if (closed != brute) {
    r.passed = false;
    for (const auto& s : brute)
      if (std::find(closed.begin(), closed.end(), s) == closed.end()) r.counterexample = s.to_string();
    if (!r.counterexample)
      for (const auto& s : closed)
        if (std::find(brute.begin(), brute.end(), s) == brute.end()) r.counterexample = s.to_string();
  }
  // Closure under products and inverses; g^n = -I.
  for (const auto& a : closed) {
    if (std::find(closed.begin(), closed.end(), a.inverse()) == closed.end()) r.passed = false;
    for (const auto& b : closed)
      if (std::find(closed.begin(), closed.end(), a * b) == closed.end()) r.passed = false;
  }
  const SignedPermutation g = negacyclic_shift(n);
  SignedPermutation power = SignedPermutation::identity(params.dim());
  for (int i = 0; i < n; ++i) power = power * g;
  const SignedPermutation minus_identity(SignedPermutation::identity(params.dim()).image(),
                                         std::vector<int>(params.dim(), -1));
  if (power != minus_identity) r.passed = false;
  r.detail = "brute force found " + std::to_string(brute.size()) + " of " + std::to_string(closed.size()) +
             " closed-form elements; group closed; g^n = -I";
  return r;
}

VerifyReport run_verification(const TilingParams& params, const VerifyOptions& options) {
  VerifyReport report;
  report.checks.push_back(check_determinant(params));
  report.checks.push_back(check_round_trip(params, options.samples, options.seed));
  report.checks.push_back(check_representative_uniqueness(params, options.samples, options.seed));
  report.checks.push_back(check_unilaterality(params));
  if (options.stabilizer && params.n() <= kMaxBruteForceDimension) report.checks.push_back(check_stabilizer(params));
  return report;
}

}  // namespace hyptile
