#pragma once

#include "eisen/bigint.hpp"

#include <ostream>

namespace eisen {

/// Exact element r + s*sqrt(3) of the field Q(sqrt(3)).
struct QSqrt3 {
  Rational r{0};
  Rational s{0};

  QSqrt3() = default;
  QSqrt3(Rational rational_part, Rational sqrt3_part = 0)
      : r(std::move(rational_part)), s(std::move(sqrt3_part)) {}
  QSqrt3(int v) : r(v) {}

  bool is_rational() const { return s == 0; }

  friend bool operator==(const QSqrt3&, const QSqrt3&) = default;

  QSqrt3& operator+=(const QSqrt3& o) { r += o.r; s += o.s; return *this; }
  QSqrt3& operator-=(const QSqrt3& o) { r -= o.r; s -= o.s; return *this; }
  QSqrt3& operator*=(const QSqrt3& o);
  QSqrt3& operator/=(const QSqrt3& o);
};

QSqrt3 operator+(QSqrt3 a, const QSqrt3& b);
QSqrt3 operator-(QSqrt3 a, const QSqrt3& b);
QSqrt3 operator-(const QSqrt3& a);
QSqrt3 operator*(QSqrt3 a, const QSqrt3& b);
QSqrt3 operator/(QSqrt3 a, const QSqrt3& b);

/// r - s*sqrt(3).
QSqrt3 conjugate(const QSqrt3& v);

/// Field norm r^2 - 3 s^2.
Rational field_norm(const QSqrt3& v);

/// Exact sign of the real number r + s*sqrt(3): -1, 0 or 1.
int sign(const QSqrt3& v);

/// Multiplies by sqrt(3): 3s + r*sqrt(3).
QSqrt3 times_sqrt3(const QSqrt3& v);

double to_double(const QSqrt3& v);

/// Exact rational square root if one exists.
bool rational_sqrt(const Rational& q, Rational* root);

std::ostream& operator<<(std::ostream& os, const QSqrt3& v);

}  // namespace eisen
