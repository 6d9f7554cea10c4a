#include "hyptile/symmetry.hpp"

#include "hyptile/error.hpp"

#include <sstream>

namespace hyptile {

SignedPermutation::SignedPermutation(std::vector<int> image, std::vector<int> signs)
    : image_(std::move(image)), signs_(std::move(signs)) {
  const std::size_t n = image_.size();
  if (n == 0 || signs_.size() != n) throw Error(Errc::InvalidParams, "signed permutation needs n images and n signs");
  std::vector<bool> seen(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    const int r = image_[j];
    if (r < 0 || static_cast<std::size_t>(r) >= n || seen[static_cast<std::size_t>(r)])
      throw Error(Errc::InvalidParams, "image is not a permutation");
    seen[static_cast<std::size_t>(r)] = true;
    if (signs_[j] != 1 && signs_[j] != -1) throw Error(Errc::InvalidParams, "signs must be +1 or -1");
  }
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  return SignedPermutation(std::move(image), std::vector<int>(n, 1));
}

SignedPermutation SignedPermutation::from_matrix(const IntMat& m) {
  const std::size_t n = m.size();
  std::vector<int> image(n, -1), signs(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const BigInt& v = m(i, j);
      if (v == 0) continue;
      if ((v != 1 && v != -1) || image[j] != -1)
        throw Error(Errc::InvalidParams, "matrix is not a signed permutation");
      image[j] = static_cast<int>(i);
      signs[j] = v == 1 ? 1 : -1;
    }
    if (image[j] == -1) throw Error(Errc::InvalidParams, "matrix is not a signed permutation");
  }
  return SignedPermutation(std::move(image), std::move(signs));
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
  auto bracket = [&](std::string_view key) {
    const auto at = text.find(key);
    if (at == std::string_view::npos) throw Error(Errc::Parse, "missing '" + std::string(key) + "'");
    const auto open = text.find('[', at);
    const auto close = text.find(']', open);
    if (open == std::string_view::npos || close == std::string_view::npos)
      throw Error(Errc::Parse, "missing brackets after '" + std::string(key) + "'");
    return text.substr(open + 1, close - open - 1);
  };
  auto split = [](std::string_view body) {
    std::vector<std::string> items;
    std::string cur;
    for (char ch : body) {
      if (ch == ',') {
        items.push_back(cur);
        cur.clear();
      } else if (ch != ' ') {
        cur += ch;
      }
    }
    items.push_back(cur);
    return items;
  };

  std::vector<int> image, signs;
  for (const auto& item : split(bracket("perm="))) {
    try {
      image.push_back(std::stoi(item) - 1);
    } catch (const std::exception&) {
      throw Error(Errc::Parse, "bad permutation entry '" + item + "'");
    }
  }
  for (const auto& item : split(bracket("signs="))) {
    if (item == "+" || item == "+1" || item == "1") {
      signs.push_back(1);
    } else if (item == "-" || item == "-1" || item == "−") {
      signs.push_back(-1);
    } else {
      throw Error(Errc::Parse, "bad sign entry '" + item + "'");
    }
  }
  return SignedPermutation(std::move(image), std::move(signs));
}

IntMat SignedPermutation::matrix() const {
  IntMat m(size());
  for (std::size_t j = 0; j < size(); ++j) m(static_cast<std::size_t>(image_[j]), j) = signs_[j];
  return m;
}

RatMat SignedPermutation::rational_matrix() const { return to_rational(matrix()); }

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> image(size()), signs(size());
  for (std::size_t j = 0; j < size(); ++j) {
    const auto r = static_cast<std::size_t>(image_[j]);
    image[r] = static_cast<int>(j);
    signs[r] = signs_[j];
  }
  return SignedPermutation(std::move(image), std::move(signs));
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& rhs) const {
  if (rhs.size() != size()) throw Error(Errc::DimensionMismatch, "signed permutations of different size");
  std::vector<int> image(size()), signs(size());
  for (std::size_t j = 0; j < size(); ++j) {
    const auto mid = static_cast<std::size_t>(rhs.image_[j]);
    image[j] = image_[mid];
    signs[j] = signs_[mid] * rhs.signs_[j];
  }
  return SignedPermutation(std::move(image), std::move(signs));
}

std::string SignedPermutation::to_string() const {
  std::ostringstream os;
  os << "perm=[";
  for (std::size_t j = 0; j < size(); ++j) os << (j ? "," : "") << image_[j] + 1;
  os << "], signs=[";
  for (std::size_t j = 0; j < size(); ++j) os << (j ? "," : "") << (signs_[j] > 0 ? '+' : '-');
  os << "]";
  return os.str();
}

bool report_order_less(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.image()[0] != b.image()[0]) return a.image()[0] < b.image()[0];
  if (a.signs()[0] != b.signs()[0]) return a.signs()[0] > b.signs()[0];
  if (a.image() != b.image()) return a.image() < b.image();
  return a.signs() > b.signs();
}

bool has_stabilizer_pattern(const SignedPermutation& s) {
  const IntMat m = s.matrix();
  const std::size_t n = m.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j)
      if (m(i, j) != m(i + 1, j + 1)) return false;
    if (m(i, n - 1) != -m(i + 1, 0)) return false;
    if (m(n - 1, i) != -m(0, i + 1)) return false;
  }
  return m(n - 1, n - 1) == m(0, 0);
}

bool is_stabilizer(const SignedPermutation& s, const BasisA& basis) {
  const std::size_t n = basis.scaled.size();
  if (s.size() != n) throw Error(Errc::DimensionMismatch, "signed permutation has wrong dimension");
  // A^{-1} S^{-1} A = adj(D A) (S^T D A) / det(D A); row i of S^T M is signs[i] * row image[i] of M.
  IntMat rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto src = static_cast<std::size_t>(s.image()[i]);
    for (std::size_t j = 0; j < n; ++j)
      rows(i, j) = s.signs()[i] > 0 ? basis.scaled(src, j) : BigInt(-basis.scaled(src, j));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      BigInt acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += basis.scaled_adjugate(i, k) * rows(k, j);
      if (acc % basis.scaled_det != 0) return false;
    }
  }
  return true;
}

SignedPermutation negacyclic_shift(int n) {
  if (n < 2) throw Error(Errc::InvalidParams, "dimension must be at least 2");
  const auto size = static_cast<std::size_t>(n);
  std::vector<int> image(size), signs(size, 1);
  for (std::size_t j = 0; j + 1 < size; ++j) image[j] = static_cast<int>(j + 1);
  image[size - 1] = 0;
  signs[size - 1] = -1;
  return SignedPermutation(std::move(image), std::move(signs));
}

std::vector<SignedPermutation> stabilizer_closed_form(int n) {
  if (n < 2) throw Error(Errc::InvalidParams, "dimension must be at least 2");
  const auto size = static_cast<std::size_t>(n);
  std::vector<SignedPermutation> out;
  out.reserve(2 * size);
  for (std::size_t row = 0; row < size; ++row) {
    for (int sign : {1, -1}) {
      // Fix column 1, then each next column is the previous one shifted down
      // by one row with the wrapped entry negated.
      IntMat m(size);
      m(row, 0) = sign;
      for (std::size_t j = 0; j + 1 < size; ++j) {
        for (std::size_t i = 0; i + 1 < size; ++i) m(i + 1, j + 1) = m(i, j);
        m(0, j + 1) = -m(size - 1, j);
      }
      out.push_back(SignedPermutation::from_matrix(m));
    }
  }
  return out;
}

std::vector<SignedPermutation> stabilizer_brute_force(int n, const BasisA& basis) {
  if (n > kMaxBruteForceDimension)
    throw Error(Errc::TooLarge, "brute force over B'_n is capped at n = " + std::to_string(kMaxBruteForceDimension));
  if (n < 2) throw Error(Errc::InvalidParams, "dimension must be at least 2");
  if (basis.matrix.size() != static_cast<std::size_t>(n))
    throw Error(Errc::DimensionMismatch, "basis dimension does not match n");
  std::vector<SignedPermutation> out;
  for_each_signed_permutation(n, [&](SignedPermutation s) {
    if (is_stabilizer(s, basis)) out.push_back(std::move(s));
    return true;
  });
  std::sort(out.begin(), out.end(), report_order_less);
  return out;
}

namespace {

IntMat lattice_form(const RatMat& m, const BigInt& scale) { return hnf(scale_to_integer(m, scale)); }

}  // namespace

bool same_lattice(const RatMat& a, const RatMat& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "matrices of different size");
  const BigInt scale = boost::multiprecision::lcm(lcm_of_denominators(a), lcm_of_denominators(b));
  return lattice_form(a, scale) == lattice_form(b, scale);
}

std::optional<SignedPermutation> lattice_equivalent(const RatMat& bc, const TilingParams& params) {
  const int n = params.n();
  if (bc.size() != params.dim()) throw Error(Errc::DimensionMismatch, "candidate basis has wrong dimension");
  if (n > kMaxBruteForceDimension)
    throw Error(Errc::TooLarge, "equivalence search is capped at n = " + std::to_string(kMaxBruteForceDimension));
  const Rational d = det(bc);
  if (d == 0) throw Error(Errc::SingularMatrix, "candidate basis is singular");

  const BasisA basis = build_basis(params);
  if (abs(d) != basis.det) return std::nullopt;

  const BigInt scale = boost::multiprecision::lcm(basis.scale, lcm_of_denominators(bc));
  const IntMat target = lattice_form(bc, scale);
  std::optional<SignedPermutation> found;
  for_each_signed_permutation(n, [&](SignedPermutation s) {
    if (lattice_form(s.rational_matrix() * basis.matrix, scale) == target) {
      found = std::move(s);
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace hyptile
