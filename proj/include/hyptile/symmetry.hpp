#pragma once

// Symmetries of the tiling inside the hyperoctahedral group B'_n (signed
// permutation matrices), and lattice equivalence up to such symmetries.

#include "hyptile/tiling.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyptile {

/// S e_j = signs[j] * e_{image[j]} (0-based internally, 1-based when printed).
class SignedPermutation {
 public:
  /// Throws Errc::InvalidParams unless `image` is a permutation and every sign is +-1.
  SignedPermutation(std::vector<int> image, std::vector<int> signs);

  static SignedPermutation identity(std::size_t n);
  /// Throws Errc::InvalidParams unless m has exactly one +-1 per row and column.
  static SignedPermutation from_matrix(const IntMat& m);
  /// Accepts "perm=[2,3,1], signs=[+,+,-]".
  static SignedPermutation parse(std::string_view text);

  std::size_t size() const noexcept { return image_.size(); }
  const std::vector<int>& image() const noexcept { return image_; }
  const std::vector<int>& signs() const noexcept { return signs_; }

  IntMat matrix() const;
  RatMat rational_matrix() const;
  SignedPermutation inverse() const;

  /// Matrix product (*this) * rhs.
  SignedPermutation operator*(const SignedPermutation& rhs) const;

  std::string to_string() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> image_;
  std::vector<int> signs_;
};

/// Report order: row of the first column's entry, then + before -, then the
/// remaining columns lexicographically.
bool report_order_less(const SignedPermutation& a, const SignedPermutation& b);

/// True iff the entries follow the shift pattern
///   s(i,j) = s(i+1,j+1),  s(i,n) = -s(i+1,1),  s(n,j) = -s(1,j+1),  s(n,n) = s(1,1).
bool has_stabilizer_pattern(const SignedPermutation& s);

/// A^{-1} S^{-1} A is integral.
bool is_stabilizer(const SignedPermutation& s, const BasisA& basis);

/// The 2n elements of the pattern above, in report order. They are the powers
/// of the negacyclic shift g (g e_i = e_{i+1}, g e_n = -e_1).
std::vector<SignedPermutation> stabilizer_closed_form(int n);

SignedPermutation negacyclic_shift(int n);

inline constexpr int kMaxBruteForceDimension = 6;

/// Filters all 2^n n! signed permutations through is_stabilizer. Result in
/// report order. Throws Errc::TooLarge for n > 6.
std::vector<SignedPermutation> stabilizer_brute_force(int n, const BasisA& basis);

/// Calls `visit` for every element of B'_n in enumeration order (identity
/// first); stops early when `visit` returns false.
template <class Visit>
void for_each_signed_permutation(int n, Visit&& visit);

/// Some S in B'_n with S A Z^n = Bc Z^n, if one exists.
/// Throws Errc::SingularMatrix, Errc::DimensionMismatch, Errc::TooLarge (n > 6).
std::optional<SignedPermutation> lattice_equivalent(const RatMat& bc, const TilingParams& params);

/// a Z^n = b Z^n, compared by HNF after clearing a common denominator.
bool same_lattice(const RatMat& a, const RatMat& b);

template <class Visit>
void for_each_signed_permutation(int n, Visit&& visit) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> signs(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) signs[static_cast<std::size_t>(j)] = (mask >> j) & 1u ? -1 : 1;
      if (!visit(SignedPermutation(image, std::move(signs)))) return;
    }
  } while (std::next_permutation(image.begin(), image.end()));
}

}  // namespace hyptile
