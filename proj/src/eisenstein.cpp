#include "eisen/eisenstein.hpp"

namespace eisen {

EisensteinInt add(const EisensteinInt& u, const EisensteinInt& v) {
  return {u.re() + v.re(), u.om() + v.om()};
}

EisensteinInt sub(const EisensteinInt& u, const EisensteinInt& v) {
  return {u.re() - v.re(), u.om() - v.om()};
}

// (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, and w^2 = w - 1.
EisensteinInt mul(const EisensteinInt& u, const EisensteinInt& v) {
  const BigInt bd = u.om() * v.om();
  return {u.re() * v.re() - bd, u.re() * v.om() + u.om() * v.re() + bd};
}

EisensteinInt conj(const EisensteinInt& u) {
  return {u.re() + u.om(), -u.om()};
}

BigInt norm(const EisensteinInt& u) {
  return u.re() * u.re() + u.re() * u.om() + u.om() * u.om();
}

EisensteinInt pow(const EisensteinInt& u, std::uint64_t n) {
  EisensteinInt result = EisensteinInt::one();
  EisensteinInt base = u;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const EisensteinInt& u) {
  return os << '(' << u.re() << ", " << u.om() << ')';
}

}  // namespace eisen
