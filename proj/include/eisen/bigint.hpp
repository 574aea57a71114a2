#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace eisen {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

// Floor of the square root of a nonnegative integer.
inline BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

inline bool is_square(const BigInt& n, BigInt* root = nullptr) {
  if (n < 0) return false;
  BigInt r = isqrt(n);
  if (root) *root = r;
  return r * r == n;
}

inline BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline std::string to_string(const BigInt& v) { return v.str(); }

// Nonnegative residue of a modulo m (m > 0).
inline BigInt mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  return r < 0 ? BigInt(r + m) : r;
}

}  // namespace eisen
