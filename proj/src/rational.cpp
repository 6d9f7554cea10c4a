#include "hyptile/rational.hpp"

#include "hyptile/error.hpp"

#include <cctype>
#include <sstream>

namespace hyptile {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw Error(Errc::SingularMatrix, "division by zero");
  BigInt q = a / b;  // truncates toward zero
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt floor(const Rational& r) { return floor_div(numerator_of(r), denominator_of(r)); }

BigInt ceil(const Rational& r) { return -floor(-r); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

BigInt pow(const BigInt& base, unsigned exponent) {
  BigInt result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

BigInt lcm_of_denominators(const RatVec& v) {
  BigInt l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator_of(x));
  return l;
}

RatVec unit_vector(std::size_t n, std::size_t index) {
  RatVec e(n, Rational(0));
  e.at(index) = 1;
  return e;
}

RatVec to_rational(const IntVec& v) {
  RatVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) throw Error(Errc::Parse, "not a rational: '" + std::string(whole) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw Error(Errc::Parse, "not a rational: '" + std::string(whole) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error(Errc::Parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

RatVec parse_vector(std::string_view text) {
  RatVec v;
  text = trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  if (trim(text).empty()) throw Error(Errc::Parse, "empty vector");
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    v.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return v;
}

std::string to_string(const Rational& r) {
  if (denominator_of(r) == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

std::string to_string(const RatVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += to_string(v[i]);
  }
  return out + ")";
}

std::string to_string(const IntVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].str();
  }
  return out + ")";
}

RatVec operator+(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector sizes differ");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector sizes differ");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec operator*(const Rational& s, const RatVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

}  // namespace hyptile
