#pragma once

// Exact scalar and vector types shared by every module.
//
// Rationals are always stored reduced with a positive denominator (GMP keeps
// mpq values canonical), so structural equality is value equality.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hyptile {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using RatVec = std::vector<Rational>;
using IntVec = std::vector<BigInt>;

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Floor of a / b for b != 0.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);

Rational pow(const Rational& base, unsigned exponent);
BigInt pow(const BigInt& base, unsigned exponent);

BigInt lcm_of_denominators(const RatVec& v);

RatVec unit_vector(std::size_t n, std::size_t index);
RatVec to_rational(const IntVec& v);

// Parsing: "a/b", "-a/b" or an integer string. Vectors are comma separated.
Rational parse_rational(std::string_view text);
RatVec parse_vector(std::string_view text);

std::string to_string(const Rational& r);
/// "(a,b,c)" with no spaces.
std::string to_string(const RatVec& v);
std::string to_string(const IntVec& v);

RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rational& s, const RatVec& v);

}  // namespace hyptile
