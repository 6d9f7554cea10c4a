#pragma once

// Slow, independent reference implementations used as test oracles.

#include "hyptile/ratlin.hpp"
#include "hyptile/tiling.hpp"

#include <optional>
#include <random>

namespace oracle {

using hyptile::BigInt;
using hyptile::Rational;
using hyptile::RatMat;
using hyptile::RatVec;

inline Rational laplace_det(const RatMat& m) {
  const std::size_t n = m.size();
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    RatMat minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    const Rational term = m(0, j) * laplace_det(minor);
    total += (j % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

/// Gauss-Jordan with row pivoting; nullopt if singular.
inline std::optional<RatVec> gauss_solve(RatMat m, RatVec v) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      std::swap(v[piv], v[col]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col) == 0) continue;
      const Rational f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
      v[i] -= f * v[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) v[i] /= m(i, i);
  return v;
}

inline bool gauss_member(const RatMat& a, const RatVec& v) {
  const auto x = gauss_solve(a, v);
  if (!x) return false;
  for (const auto& c : *x)
    if (hyptile::denominator_of(c) != 1) return false;
  return true;
}

/// Basis A written out entry by entry.
inline RatMat basis_by_hand(int n, const Rational& p, const Rational& q) {
  RatMat a(static_cast<std::size_t>(n));
  for (int k = 0; k + 1 < n; ++k) {
    a(k, k) = q;
    a(k + 1, k) = -p;
  }
  a(0, n - 1) = p;
  a(n - 1, n - 1) = q;
  return a;
}

inline hyptile::IntMat random_int_matrix(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  hyptile::IntMat m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

/// Product of random elementary column operations.
inline hyptile::IntMat random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
  hyptile::IntMat u = hyptile::IntMat::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> mult(-3, 3);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) {
      for (std::size_t r = 0; r < n; ++r) u(r, i) = -u(r, i);
    } else {
      const int f = mult(rng);
      for (std::size_t r = 0; r < n; ++r) u(r, j) += f * u(r, i);
    }
  }
  return u;
}

}  // namespace oracle
