#pragma once

// Exact linear algebra over Q and Z: determinants, adjugates, exact solves and
// the column Hermite normal form used to compare integer lattices.

#include "hyptile/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace hyptile {

namespace detail {
[[noreturn]] void throw_not_square();
}

/// Dense square matrix, row-major.
template <class T>
class SquareMatrix {
 public:
  using value_type = T;

  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static SquareMatrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    std::vector<std::vector<T>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v);
  }
  /// Throws Errc::DimensionMismatch unless the rows form a square grid.
  static SquareMatrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t n = rows.size();
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) detail::throw_not_square();
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static SquareMatrix from_columns(const std::vector<std::vector<T>>& columns) {
    return from_rows(columns).transpose();
  }

  std::size_t size() const noexcept { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(n_);
    for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_column(std::size_t j, const std::vector<T>& c) {
    for (std::size_t i = 0; i < n_; ++i) (*this)(i, j) = c[i];
  }

  SquareMatrix transpose() const {
    SquareMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using RatMat = SquareMatrix<Rational>;
using IntMat = SquareMatrix<BigInt>;

RatMat operator*(const RatMat& a, const RatMat& b);
IntMat operator*(const IntMat& a, const IntMat& b);
RatVec operator*(const RatMat& m, const RatVec& v);
IntVec operator*(const IntMat& m, const IntVec& v);
RatMat operator*(const Rational& s, const RatMat& m);

RatMat to_rational(const IntMat& m);

/// Exact determinant: rows are scaled to integers, then fraction-free
/// (Bareiss) elimination.
Rational det(const RatMat& m);
BigInt det(const IntMat& m);

/// adj(M) with M * adj(M) = det(M) * I; defined for singular M as well.
RatMat adjugate(const RatMat& m);
IntMat adjugate(const IntMat& m);

/// Unique x with M x = v. Throws Errc::SingularMatrix when det(M) = 0.
RatVec solve_exact(const RatMat& m, const RatVec& v);

/// Column Hermite normal form: H = M U for unimodular U, H lower triangular,
/// positive diagonal, and every entry left of the diagonal reduced into
/// [0, H(i,i)). Two full-rank matrices span the same lattice iff their HNFs
/// are equal. Throws Errc::RankDeficient when rank < n.
IntMat hnf(const IntMat& m);

bool is_integral(const RatVec& v);
bool is_integral(const RatMat& m);

/// Smallest positive D with D * M integral, and that integral matrix.
BigInt lcm_of_denominators(const RatMat& m);
IntMat scale_to_integer(const RatMat& m, const BigInt& factor);

/// Extended gcd: returns g = gcd(a, b) >= 0 and sets s, t with s*a + t*b = g.
BigInt extended_gcd(const BigInt& a, const BigInt& b, BigInt& s, BigInt& t);

}  // namespace hyptile
