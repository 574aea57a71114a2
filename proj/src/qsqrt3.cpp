#include "eisen/qsqrt3.hpp"

#include "eisen/error.hpp"

#include <cmath>

namespace eisen {

QSqrt3& QSqrt3::operator*=(const QSqrt3& o) {
  Rational nr = r * o.r + 3 * s * o.s;
  s = r * o.s + s * o.r;
  r = std::move(nr);
  return *this;
}

QSqrt3& QSqrt3::operator/=(const QSqrt3& o) {
  const Rational n = field_norm(o);
  if (n == 0) throw Error(Errc::InvalidArgument, "division by zero in Q(sqrt 3)");
  *this *= conjugate(o);
  r /= n;
  s /= n;
  return *this;
}

QSqrt3 operator+(QSqrt3 a, const QSqrt3& b) { return a += b; }
QSqrt3 operator-(QSqrt3 a, const QSqrt3& b) { return a -= b; }
QSqrt3 operator-(const QSqrt3& a) { return {-a.r, -a.s}; }
QSqrt3 operator*(QSqrt3 a, const QSqrt3& b) { return a *= b; }
QSqrt3 operator/(QSqrt3 a, const QSqrt3& b) { return a /= b; }

QSqrt3 conjugate(const QSqrt3& v) { return {v.r, -v.s}; }

Rational field_norm(const QSqrt3& v) { return v.r * v.r - 3 * v.s * v.s; }

int sign(const QSqrt3& v) {
  const int sr = v.r.sign();
  const int ss = v.s.sign();
  if (ss == 0) return sr;
  if (sr == 0 || sr == ss) return ss;
  // Opposite signs: the term with the larger square dominates.
  const Rational diff = v.r * v.r - 3 * v.s * v.s;
  return diff.sign() > 0 ? sr : ss;
}

QSqrt3 times_sqrt3(const QSqrt3& v) { return {3 * v.s, v.r}; }

double to_double(const QSqrt3& v) {
  return v.r.convert_to<double>() + v.s.convert_to<double>() * std::sqrt(3.0);
}

bool rational_sqrt(const Rational& q, Rational* root) {
  if (q < 0) return false;
  BigInt n_root, d_root;
  if (!is_square(boost::multiprecision::numerator(q), &n_root)) return false;
  if (!is_square(boost::multiprecision::denominator(q), &d_root)) return false;
  if (root) *root = Rational(n_root, d_root);
  return true;
}

std::ostream& operator<<(std::ostream& os, const QSqrt3& v) {
  if (v.s == 0) return os << v.r;
  return os << v.r << (v.s < 0 ? " - " : " + ") << (v.s < 0 ? Rational(-v.s) : v.s) << "*sqrt(3)";
}

}  // namespace eisen
