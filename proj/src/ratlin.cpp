#include "hyptile/ratlin.hpp"

#include "hyptile/error.hpp"

#include <utility>

namespace hyptile {

namespace detail {
void throw_not_square() { throw Error(Errc::DimensionMismatch, "matrix rows do not form a square grid"); }
}  // namespace detail

namespace {

template <class T>
SquareMatrix<T> multiply(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "matrix sizes differ");
  const std::size_t n = a.size();
  SquareMatrix<T> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

template <class T>
std::vector<T> multiply(const SquareMatrix<T>& m, const std::vector<T>& v) {
  if (m.size() != v.size()) throw Error(Errc::DimensionMismatch, "matrix/vector sizes differ");
  std::vector<T> r(v.size(), T(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r[i] += m(i, j) * v[j];
  return r;
}

template <class T>
SquareMatrix<T> minor_of(const SquareMatrix<T>& m, std::size_t row, std::size_t col) {
  const std::size_t n = m.size();
  SquareMatrix<T> r(n - 1);
  for (std::size_t i = 0, ri = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, rj = 0; j < n; ++j) {
      if (j == col) continue;
      r(ri, rj++) = m(i, j);
    }
    ++ri;
  }
  return r;
}

template <class T>
SquareMatrix<T> adjugate_impl(const SquareMatrix<T>& m) {
  const std::size_t n = m.size();
  SquareMatrix<T> adj(n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      T cofactor = det(minor_of(m, i, j));
      adj(j, i) = ((i + j) % 2 == 0) ? cofactor : T(-cofactor);
    }
  }
  return adj;
}

}  // namespace

RatMat operator*(const RatMat& a, const RatMat& b) { return multiply(a, b); }
IntMat operator*(const IntMat& a, const IntMat& b) { return multiply(a, b); }
RatVec operator*(const RatMat& m, const RatVec& v) { return multiply(m, v); }
IntVec operator*(const IntMat& m, const IntVec& v) { return multiply(m, v); }

RatMat operator*(const Rational& s, const RatMat& m) {
  RatMat r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = s * m(i, j);
  return r;
}

RatMat to_rational(const IntMat& m) {
  RatMat r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

BigInt det(const IntMat& input) {
  const std::size_t n = input.size();
  if (n == 0) throw Error(Errc::DimensionMismatch, "0x0 matrix has no determinant here");
  IntMat m = input;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss: the division is always exact.
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rational det(const RatMat& m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(Errc::DimensionMismatch, "0x0 matrix has no determinant here");
  IntMat scaled(n);
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) row_lcm = boost::multiprecision::lcm(row_lcm, denominator_of(m(i, j)));
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) = numerator_of(m(i, j)) * (row_lcm / denominator_of(m(i, j)));
    scale *= row_lcm;
  }
  return Rational(det(scaled), scale);
}

RatMat adjugate(const RatMat& m) { return adjugate_impl(m); }
IntMat adjugate(const IntMat& m) { return adjugate_impl(m); }

RatVec solve_exact(const RatMat& m, const RatVec& v) {
  if (m.size() != v.size()) throw Error(Errc::DimensionMismatch, "matrix/vector sizes differ");
  const Rational d = det(m);
  if (d == 0) throw Error(Errc::SingularMatrix, "determinant is zero");
  RatVec x = adjugate(m) * v;
  for (auto& xi : x) xi /= d;
  return x;
}

BigInt extended_gcd(const BigInt& a, const BigInt& b, BigInt& s, BigInt& t) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, cur_s = 0;
  BigInt old_t = 0, cur_t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = tmp;
    tmp = old_t - q * cur_t;
    old_t = cur_t;
    cur_t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

IntMat hnf(const IntMat& input) {
  const std::size_t n = input.size();
  IntMat h = input;
  auto combine = [&](std::size_t ci, std::size_t cj, const BigInt& s, const BigInt& t, const BigInt& u,
                     const BigInt& v) {
    // (col_i, col_j) <- (s col_i + t col_j, u col_i + v col_j)
    for (std::size_t r = 0; r < n; ++r) {
      BigInt xi = h(r, ci), xj = h(r, cj);
      h(r, ci) = s * xi + t * xj;
      h(r, cj) = u * xi + v * xj;
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (h(i, j) == 0) continue;
      const BigInt a = h(i, i), b = h(i, j);
      BigInt s, t;
      const BigInt g = extended_gcd(a, b, s, t);
      // [[s, -b/g], [t, a/g]] has determinant 1.
      combine(i, j, s, t, BigInt(-b / g), BigInt(a / g));
    }
    if (h(i, i) == 0) throw Error(Errc::RankDeficient, "matrix does not have full rank");
    if (h(i, i) < 0)
      for (std::size_t r = 0; r < n; ++r) h(r, i) = -h(r, i);
    for (std::size_t j = 0; j < i; ++j) {
      const BigInt f = floor_div(h(i, j), h(i, i));
      if (f == 0) continue;
      for (std::size_t r = 0; r < n; ++r) h(r, j) -= f * h(r, i);
    }
  }
  return h;
}

bool is_integral(const RatVec& v) {
  for (const auto& x : v)
    if (denominator_of(x) != 1) return false;
  return true;
}

bool is_integral(const RatMat& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (denominator_of(m(i, j)) != 1) return false;
  return true;
}

BigInt lcm_of_denominators(const RatMat& m) {
  BigInt l = 1;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) l = boost::multiprecision::lcm(l, denominator_of(m(i, j)));
  return l;
}

IntMat scale_to_integer(const RatMat& m, const BigInt& factor) {
  IntMat r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      Rational x = m(i, j) * Rational(factor);
      if (denominator_of(x) != 1) throw Error(Errc::InvalidParams, "scale factor does not clear denominators");
      r(i, j) = numerator_of(x);
    }
  }
  return r;
}

}  // namespace hyptile
