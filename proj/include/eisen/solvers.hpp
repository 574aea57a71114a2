#pragma once

#include "eisen/bigint.hpp"
#include "eisen/eisenstein.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace eisen {

enum class Method { EisensteinPower, Recurrence, Descent };

std::string_view method_name(Method m) noexcept;

/// Integer pair (a, b) with a^2 + ab + b^2 = base^exponent.
struct SolutionPair {
  BigInt base;
  std::uint32_t exponent = 0;
  BigInt a;
  BigInt b;
  Method method = Method::EisensteinPower;

  BigInt form_value() const;  // a^2 + ab + b^2
  BigInt target() const;      // base^exponent
  bool satisfies_form() const { return form_value() == target(); }
};

/// Pair with nonnegative entries carrying the raw pair it was derived from.
struct PositivePair {
  BigInt A;
  BigInt B;
  SolutionPair provenance;

  bool coprime() const { return gcd(A, B) == 1; }
};

struct OraclePair {
  BigInt a;
  BigInt b;
  BigInt gcd;

  friend bool operator==(const OraclePair&, const OraclePair&) = default;
};

BigInt form(const BigInt& a, const BigInt& b);

/// Lexicographically smallest coprime positive (a, b), a <= b, with
/// a^2 + ab + b^2 = r. Throws Errc::NoRepresentation when none exists.
std::pair<BigInt, BigInt> base_solution(const BigInt& r);

/// Generator of Z[w] used for the base p: 2 + w for p = 7, otherwise the
/// element built from base_solution(p).
EisensteinInt base_element(const BigInt& p);

SolutionPair eisenstein_solution(const BigInt& p, std::uint32_t n);

/// Iterates a' = 2a - b, b' = a + 3b from (1, 0); the coefficients of (2 + w)^n.
SolutionPair recurrence_solution(std::uint32_t n);

/// True iff every window of three satisfies x[i+2] = 5 x[i+1] - 7 x[i].
bool second_order_check(std::span<const BigInt> seq);

/// Maps a nonzero integer pair to a nonnegative pair with the same form value.
/// Mixed signs with equal magnitudes throw Errc::Degenerate.
PositivePair normalize_positive(const BigInt& a, const BigInt& b);
PositivePair normalize_positive(const SolutionPair& s);

/// One step of the elementary ascent from 7^n to 7^(n+1).
///
/// With a <= b (swapped if needed), tries (2b - a, 3a + b); if 7 divides the
/// first entry, falls back to (b - 2a, 3a + 2b) when 2a < b and to
/// (2a - b, a + 3b) when 2a > b. The result is positive, coprime and its first
/// entry is prime to 7; anything else throws Errc::InvariantViolation.
std::pair<BigInt, BigInt> descent_step(const BigInt& a, const BigInt& b);

/// Coprime positive solution of a^2 + ab + b^2 = r^n, n >= 1.
///
/// For r = 7 this chains descent_step from (1, 2). Otherwise each step
/// multiplies by the base element or its conjugate in Z[w] and keeps the
/// first normalized candidate that is coprime.
SolutionPair ascend(const BigInt& r, std::uint32_t n);

/// n distinct positive pairs for 7^(2n), exactly one of them coprime.
std::vector<PositivePair> corollary_solutions(std::uint32_t n);

/// All unordered positive pairs a <= b with a^2 + ab + b^2 = N, sorted by a.
std::vector<OraclePair> brute_force_solutions(const BigInt& N);

namespace detail {
// Arbitrary-precision scan; brute_force_solutions uses a 64-bit scan below 2^60.
std::vector<OraclePair> brute_force_wide(const BigInt& N);
}  // namespace detail

}  // namespace eisen
