#include "eisen/solvers.hpp"

#include "eisen/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>

namespace eisen {

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::EisensteinPower: return "power";
    case Method::Recurrence: return "recurrence";
    case Method::Descent: return "descent";
  }
  return "unknown";
}

BigInt form(const BigInt& a, const BigInt& b) { return a * a + a * b + b * b; }

BigInt SolutionPair::form_value() const { return form(a, b); }

BigInt SolutionPair::target() const { return ipow(base, exponent); }

namespace {

// Positive root b of b^2 + a b + (a^2 - N) = 0, if integral.
bool solve_for_b(const BigInt& N, const BigInt& a, BigInt* b) {
  const BigInt disc = 4 * N - 3 * a * a;
  BigInt root;
  if (!is_square(disc, &root)) return false;
  const BigInt twice_b = root - a;
  if (twice_b <= 0 || (twice_b & 1) != 0) return false;
  *b = twice_b >> 1;
  return true;
}

std::uint64_t isqrt64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::vector<OraclePair> brute_force_small(std::uint64_t N) {
  std::vector<OraclePair> out;
  for (std::uint64_t a = 1; 3 * a * a <= N; ++a) {
    const std::uint64_t disc = 4 * N - 3 * a * a;
    const std::uint64_t root = isqrt64(disc);
    if (root * root != disc || root <= a || ((root - a) & 1) != 0) continue;
    const std::uint64_t b = (root - a) / 2;
    if (b < a) continue;
    out.push_back({a, b, gcd64(a, b)});
  }
  return out;
}

constexpr std::uint64_t kSmallLimit = std::uint64_t{1} << 60;

void require_positive(const BigInt& v, const char* what) {
  if (v <= 0) throw Error(Errc::InvalidArgument, std::string(what) + " must be positive");
}

}  // namespace

std::vector<OraclePair> brute_force_solutions(const BigInt& N) {
  require_positive(N, "N");
  if (N < kSmallLimit) return brute_force_small(N.convert_to<std::uint64_t>());
  return detail::brute_force_wide(N);
}

std::vector<OraclePair> detail::brute_force_wide(const BigInt& N) {
  require_positive(N, "N");
  std::vector<OraclePair> out;
  for (BigInt a = 1; 3 * a * a <= N; ++a) {
    BigInt b;
    if (solve_for_b(N, a, &b) && b >= a) out.push_back({a, b, gcd(a, b)});
  }
  return out;
}

std::pair<BigInt, BigInt> base_solution(const BigInt& r) {
  if (r < 3) throw Error(Errc::InvalidArgument, "base must be at least 3");
  for (BigInt a = 1; 3 * a * a <= r; ++a) {
    BigInt b;
    if (solve_for_b(r, a, &b) && b >= a && gcd(a, b) == 1) return {a, b};
  }
  throw Error(Errc::NoRepresentation,
              to_string(r) + " has no coprime representation a^2 + ab + b^2");
}

EisensteinInt base_element(const BigInt& p) {
  if (p == 7) return {2, 1};
  auto [a, b] = base_solution(p);
  return {a, b};
}

SolutionPair eisenstein_solution(const BigInt& p, std::uint32_t n) {
  const EisensteinInt z = pow(base_element(p), n);
  return {p, n, z.re(), z.om(), Method::EisensteinPower};
}

SolutionPair recurrence_solution(std::uint32_t n) {
  BigInt a = 1, b = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    BigInt next_a = 2 * a - b;
    b = a + 3 * b;
    a = std::move(next_a);
  }
  return {7, n, std::move(a), std::move(b), Method::Recurrence};
}

bool second_order_check(std::span<const BigInt> seq) {
  if (seq.size() < 3) throw Error(Errc::InvalidArgument, "need at least three terms");
  for (std::size_t i = 0; i + 2 < seq.size(); ++i) {
    if (seq[i + 2] != 5 * seq[i + 1] - 7 * seq[i]) return false;
  }
  return true;
}

PositivePair normalize_positive(const SolutionPair& s) {
  const BigInt& a = s.a;
  const BigInt& b = s.b;
  if (a == 0 && b == 0) throw Error(Errc::InvalidArgument, "(0, 0) has form value 0");
  if (a >= 0 && b >= 0) return {a, b, s};
  if (a <= 0 && b <= 0) return {abs(a), abs(b), s};

  // Mixed signs: negate both if needed so the larger magnitude is positive,
  // then (pos, -m) -> (pos - m, m).
  const BigInt& pos = a > 0 ? a : b;
  const BigInt& neg = a > 0 ? b : a;
  const BigInt m = abs(neg);
  if (pos == m) {
    throw Error(Errc::Degenerate, "mixed signs with equal magnitude " + to_string(m));
  }
  if (pos > m) return {pos - m, m, s};
  return {m - pos, pos, s};
}

PositivePair normalize_positive(const BigInt& a, const BigInt& b) {
  return normalize_positive(SolutionPair{0, 0, a, b, Method::EisensteinPower});
}

std::pair<BigInt, BigInt> descent_step(const BigInt& a_in, const BigInt& b_in) {
  require_positive(a_in, "a");
  require_positive(b_in, "b");
  const BigInt& a = a_in <= b_in ? a_in : b_in;
  const BigInt& b = a_in <= b_in ? b_in : a_in;

  BigInt c, d;
  const BigInt c1 = 2 * b - a;
  if (mod(c1, 7) != 0) {
    c = c1;
    d = 3 * a + b;
  } else if (2 * a - b < 0) {
    c = b - 2 * a;
    d = 3 * a + 2 * b;
  } else if (2 * a - b > 0) {
    c = 2 * a - b;
    d = a + 3 * b;
  } else {
    throw Error(Errc::InvariantViolation,
                "no transformation applies to (" + to_string(a) + ", " + to_string(b) + ")");
  }

  if (c <= 0 || d <= 0 || mod(c, 7) == 0 || gcd(c, d) != 1 || form(c, d) != 7 * form(a, b)) {
    throw Error(Errc::InvariantViolation,
                "step from (" + to_string(a) + ", " + to_string(b) + ") produced (" + to_string(c) +
                    ", " + to_string(d) + ")");
  }
  return {std::move(c), std::move(d)};
}

SolutionPair ascend(const BigInt& r, std::uint32_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "exponent must be positive");
  auto [a0, b0] = base_solution(r);

  if (r == 7) {
    BigInt a = a0, b = b0;
    for (std::uint32_t k = 1; k < n; ++k) std::tie(a, b) = descent_step(a, b);
    return {r, n, std::move(a), std::move(b), Method::Descent};
  }

  const EisensteinInt beta{a0, b0};
  const EisensteinInt candidates_from[2] = {beta, conj(beta)};
  BigInt a = a0, b = b0;
  for (std::uint32_t k = 1; k < n; ++k) {
    const EisensteinInt alpha{a, b};
    bool advanced = false;
    for (const auto& factor : candidates_from) {
      const EisensteinInt prod = mul(alpha, factor);
      PositivePair cand;
      try {
        cand = normalize_positive(prod.re(), prod.om());
      } catch (const Error&) {
        continue;
      }
      if (cand.A > 0 && cand.B > 0 && gcd(cand.A, cand.B) == 1) {
        a = std::move(cand.A);
        b = std::move(cand.B);
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      throw Error(Errc::InvariantViolation, "no coprime candidate for " + to_string(r) + "^" +
                                                std::to_string(k + 1) + " from (" + to_string(a) +
                                                ", " + to_string(b) + ")");
    }
  }
  return {r, n, std::move(a), std::move(b), Method::Descent};
}

std::vector<PositivePair> corollary_solutions(std::uint32_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be positive");
  std::vector<PositivePair> pairs;
  for (std::uint32_t k = 1; k <= n; ++k) {
    for (auto& p : pairs) {
      p.A *= 7;
      p.B *= 7;
      p.provenance.a *= 7;
      p.provenance.b *= 7;
      p.provenance.exponent = 2 * k;
    }
    SolutionPair coprime = ascend(7, 2 * k);
    pairs.push_back({coprime.a, coprime.b, coprime});
  }
  return pairs;
}

}  // namespace eisen
