#pragma once

#include "eisen/bigint.hpp"

#include <cstdint>
#include <ostream>

namespace eisen {

/// Element re + om*w of the Eisenstein integers Z[w], w = (1 + sqrt(-3)) / 2.
///
/// Coefficients are kept in the (1, w) basis; multiplication reduces with
/// w^2 = w - 1. The norm is the quadratic form re^2 + re*om + om^2.
class EisensteinInt {
 public:
  EisensteinInt() = default;
  EisensteinInt(BigInt re, BigInt om) : re_(std::move(re)), om_(std::move(om)) {}

  static EisensteinInt one() { return {1, 0}; }
  static EisensteinInt omega() { return {0, 1}; }

  const BigInt& re() const { return re_; }
  const BigInt& om() const { return om_; }

  bool is_zero() const { return re_ == 0 && om_ == 0; }

  friend bool operator==(const EisensteinInt&, const EisensteinInt&) = default;

 private:
  BigInt re_{0};
  BigInt om_{0};
};

EisensteinInt add(const EisensteinInt& u, const EisensteinInt& v);
EisensteinInt sub(const EisensteinInt& u, const EisensteinInt& v);
EisensteinInt mul(const EisensteinInt& u, const EisensteinInt& v);

/// Complex conjugate; conj(a + b*w) = (a + b) - b*w since conj(w) = 1 - w.
EisensteinInt conj(const EisensteinInt& u);

BigInt norm(const EisensteinInt& u);

/// u^n by binary exponentiation; pow(u, 0) is one.
EisensteinInt pow(const EisensteinInt& u, std::uint64_t n);

inline EisensteinInt operator+(const EisensteinInt& u, const EisensteinInt& v) { return add(u, v); }
inline EisensteinInt operator-(const EisensteinInt& u, const EisensteinInt& v) { return sub(u, v); }
inline EisensteinInt operator*(const EisensteinInt& u, const EisensteinInt& v) { return mul(u, v); }

std::ostream& operator<<(std::ostream& os, const EisensteinInt& u);

}  // namespace eisen
