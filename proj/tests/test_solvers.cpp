#include "eisen/solvers.hpp"

#include "eisen/error.hpp"
#include "random_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

namespace eisen {
namespace {

using Pairs = std::vector<std::pair<long, long>>;

// Independent oracle: plain double loop over a <= b.
Pairs double_loop(long N) {
  Pairs out;
  for (long a = 1; a * a <= N; ++a)
    for (long b = a; a * a + a * b + b * b <= N; ++b)
      if (a * a + a * b + b * b == N) out.emplace_back(a, b);
  return out;
}

Pairs as_pairs(const std::vector<OraclePair>& v) {
  Pairs out;
  for (const auto& p : v) out.emplace_back(p.a.convert_to<long>(), p.b.convert_to<long>());
  return out;
}

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no eisen::Error thrown";
  return Errc::InvalidArgument;
}

std::pair<BigInt, BigInt> unordered(BigInt a, BigInt b) {
  if (b < a) std::swap(a, b);
  return {a, b};
}

TEST(BaseSolution, SmallestCoprimePair) {
  EXPECT_EQ(base_solution(7), std::make_pair(BigInt(1), BigInt(2)));
  EXPECT_EQ(as_pairs(brute_force_solutions(13)), (Pairs{{1, 3}}));
  EXPECT_EQ(base_solution(13), std::make_pair(BigInt(1), BigInt(3)));
  EXPECT_EQ(error_of([] { base_solution(5); }), Errc::NoRepresentation);
  EXPECT_EQ(error_of([] { base_solution(2); }), Errc::InvalidArgument);
  // 49 = 3^2 + 3*5 + 5^2 is coprime; 4 = 2^2 only as (2, 0).
  EXPECT_EQ(base_solution(49), std::make_pair(BigInt(3), BigInt(5)));
  EXPECT_EQ(error_of([] { base_solution(4); }), Errc::NoRepresentation);
}

TEST(BaseSolution, AgreesWithDoubleLoop) {
  for (long r = 3; r <= 2000; ++r) {
    std::optional<std::pair<long, long>> expected;
    for (auto [a, b] : double_loop(r)) {
      if (std::gcd(a, b) == 1) {
        expected = std::make_pair(a, b);
        break;
      }
    }
    if (expected) {
      const auto got = base_solution(r);
      ASSERT_EQ(got.first, expected->first) << r;
      ASSERT_EQ(got.second, expected->second) << r;
    } else {
      ASSERT_EQ(error_of([&] { base_solution(r); }), Errc::NoRepresentation) << r;
    }
  }
}

TEST(EisensteinSolution, TableRows) {
  auto s = eisenstein_solution(7, 5);
  EXPECT_EQ(s.a, -87);
  EXPECT_EQ(s.b, 149);
  EXPECT_EQ(s.method, Method::EisensteinPower);
  s = eisenstein_solution(7, 1);
  EXPECT_EQ(s.a, 2);
  EXPECT_EQ(s.b, 1);
}

TEST(EisensteinSolution, OtherPrimes) {
  const auto s = eisenstein_solution(13, 2);
  EXPECT_EQ(s.form_value(), 169);
  EXPECT_EQ(gcd(s.a, s.b), 1);
  EXPECT_EQ(error_of([] { eisenstein_solution(5, 3); }), Errc::NoRepresentation);
}

TEST(RecurrenceSolution, TableRows) {
  EXPECT_EQ(recurrence_solution(0).a, 1);
  EXPECT_EQ(recurrence_solution(0).b, 0);
  EXPECT_EQ(recurrence_solution(4).a, -16);
  EXPECT_EQ(recurrence_solution(4).b, 55);
  EXPECT_EQ(recurrence_solution(6).a, -323);
  EXPECT_EQ(recurrence_solution(6).b, 360);
}

TEST(SecondOrderCheck, Windows) {
  const std::vector<BigInt> a_seq{2, 3, 1, -16};
  const std::vector<BigInt> b_seq{0, 1, 5, 18, 55};
  const std::vector<BigInt> flat{1, 1, 1};
  EXPECT_TRUE(second_order_check(a_seq));
  EXPECT_TRUE(second_order_check(b_seq));
  EXPECT_FALSE(second_order_check(flat));
  const std::vector<BigInt> shortseq{1, 2};
  EXPECT_EQ(error_of([&] { second_order_check(shortseq); }), Errc::InvalidArgument);
}

TEST(NormalizePositive, TableRows) {
  auto p = normalize_positive(-16, 55);
  EXPECT_EQ(p.A, 39);
  EXPECT_EQ(p.B, 16);
  p = normalize_positive(-323, 360);
  EXPECT_EQ(p.A, 37);
  EXPECT_EQ(p.B, 323);
  p = normalize_positive(3, 5);
  EXPECT_EQ(p.A, 3);
  EXPECT_EQ(p.B, 5);
  p = normalize_positive(-87, 149);
  EXPECT_EQ(p.A, 62);
  EXPECT_EQ(p.B, 87);
}

TEST(NormalizePositive, SignCases) {
  auto p = normalize_positive(-3, -5);
  EXPECT_EQ(p.A, 3);
  EXPECT_EQ(p.B, 5);
  // positive entry smaller in magnitude: (-55, 16) ~ (55, -16)
  p = normalize_positive(-55, 16);
  EXPECT_EQ(p.A, 39);
  EXPECT_EQ(p.B, 16);
  p = normalize_positive(1, 0);
  EXPECT_EQ(p.A, 1);
  EXPECT_EQ(p.B, 0);
  EXPECT_EQ(error_of([] { normalize_positive(-4, 4); }), Errc::Degenerate);
  EXPECT_EQ(error_of([] { normalize_positive(0, 0); }), Errc::InvalidArgument);
}

TEST(NormalizePositiveProperty, PreservesFormAndCoprimality) {
  std::mt19937_64 rng(2024);
  int checked = 0;
  while (checked < 20000) {
    const BigInt a = testing::random_int(rng, -1'000'000, 1'000'000);
    const BigInt b = testing::random_int(rng, -1'000'000, 1'000'000);
    if ((a == 0 && b == 0) || (a.sign() * b.sign() < 0 && abs(a) == abs(b))) continue;
    const auto p = normalize_positive(a, b);
    ASSERT_GE(p.A, 0);
    ASSERT_GE(p.B, 0);
    ASSERT_EQ(form(p.A, p.B), form(a, b)) << a << ' ' << b;
    ASSERT_EQ(gcd(p.A, p.B), gcd(a, b));
    ++checked;
  }
}

TEST(DescentStep, PaperCases) {
  EXPECT_EQ(descent_step(1, 2), std::make_pair(BigInt(3), BigInt(5)));
  // c1 = 7: falls through to (2a - b, a + 3b).
  EXPECT_EQ(descent_step(3, 5), std::make_pair(BigInt(1), BigInt(18)));
  EXPECT_EQ(as_pairs(brute_force_solutions(343)), (Pairs{{1, 18}, {7, 14}}));
  // c1 = 35: 2a - b < 0, so (b - 2a, 3a + 2b).
  EXPECT_EQ(descent_step(1, 18), std::make_pair(BigInt(16), BigInt(39)));
  EXPECT_EQ(form(16, 39), 2401);
  // order of the input does not matter
  EXPECT_EQ(descent_step(18, 1), descent_step(1, 18));
}

TEST(DescentStep, RejectsNonPositive) {
  EXPECT_EQ(error_of([] { descent_step(0, 5); }), Errc::InvalidArgument);
  EXPECT_EQ(error_of([] { descent_step(-1, 2); }), Errc::InvalidArgument);
  // (7, 14) is a solution for 343 but 7 | a: no candidate is prime to 7.
  EXPECT_EQ(error_of([] { descent_step(7, 14); }), Errc::InvariantViolation);
}

TEST(DescentStep, ChainStaysInOracle) {
  BigInt a = 1, b = 2;
  BigInt seven_n = 7;
  for (unsigned n = 1; n <= 50; ++n) {
    if (n > 1) {
      std::tie(a, b) = descent_step(a, b);
      seven_n *= 7;
    }
    ASSERT_GT(a, 0);
    ASSERT_GT(b, 0);
    ASSERT_EQ(form(a, b), seven_n) << n;
    ASSERT_EQ(gcd(a, b), 1) << n;
    ASSERT_NE(mod(a, 7), 0) << n;
    if (n <= 12) {
      const auto oracle = brute_force_solutions(seven_n);
      const auto key = unordered(a, b);
      const bool found = std::any_of(oracle.begin(), oracle.end(), [&](const OraclePair& p) {
        return p.a == key.first && p.b == key.second && p.gcd == 1;
      });
      ASSERT_TRUE(found) << n;
    }
  }
}

TEST(Ascend, SevenFollowsPaper) {
  auto s = ascend(7, 1);
  EXPECT_EQ(std::make_pair(s.a, s.b), std::make_pair(BigInt(1), BigInt(2)));
  s = ascend(7, 2);
  EXPECT_EQ(std::make_pair(s.a, s.b), std::make_pair(BigInt(3), BigInt(5)));
  s = ascend(7, 3);
  EXPECT_EQ(std::make_pair(s.a, s.b), std::make_pair(BigInt(1), BigInt(18)));
  EXPECT_EQ(s.method, Method::Descent);
  EXPECT_EQ(error_of([] { ascend(7, 0); }), Errc::InvalidArgument);
  EXPECT_EQ(error_of([] { ascend(5, 2); }), Errc::NoRepresentation);
}

TEST(Ascend, GeneralBase) {
  const auto s = ascend(13, 3);
  EXPECT_EQ(s.form_value(), 2197);
  EXPECT_EQ(gcd(s.a, s.b), 1);
  // The oracle has (13, 39) and (17, 36); only the latter is coprime.
  EXPECT_EQ(unordered(s.a, s.b), std::make_pair(BigInt(17), BigInt(36)));
}

TEST(Ascend, PrimeAndCompositeBases) {
  for (long r : {13, 19, 31, 37, 43, 49, 91, 133, 217}) {
    for (unsigned n = 1; n <= 8; ++n) {
      const auto s = ascend(r, n);
      ASSERT_TRUE(s.satisfies_form()) << r << '^' << n;
      ASSERT_GT(s.a, 0);
      ASSERT_GT(s.b, 0);
      ASSERT_EQ(gcd(s.a, s.b), 1) << r << '^' << n;
    }
  }
}

// Bases divisible by 3 have a coprime representation of r but none of r^2:
// the ascent has nothing to select and the oracle agrees.
TEST(Ascend, BasesDivisibleByThreeHaveNoCoprimeSquare) {
  for (long r : {3, 21, 39}) {
    EXPECT_NO_THROW(base_solution(r));
    EXPECT_EQ(error_of([&] { ascend(r, 2); }), Errc::InvariantViolation) << r;
    for (const auto& p : brute_force_solutions(BigInt(r) * r)) EXPECT_NE(p.gcd, 1) << r;
  }
}

TEST(Corollary, SmallCases) {
  auto c = corollary_solutions(1);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(std::make_pair(c[0].A, c[0].B), std::make_pair(BigInt(3), BigInt(5)));

  c = corollary_solutions(2);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(std::make_pair(c[0].A, c[0].B), std::make_pair(BigInt(21), BigInt(35)));
  EXPECT_EQ(std::make_pair(c[1].A, c[1].B), std::make_pair(BigInt(16), BigInt(39)));

  c = corollary_solutions(3);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(std::make_pair(c[2].A, c[2].B), std::make_pair(BigInt(37), BigInt(323)));
  EXPECT_EQ(as_pairs(brute_force_solutions(117649)), (Pairs{{37, 323}, {112, 273}, {147, 245}}));
}

TEST(Corollary, CountsDistinctness) {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto pairs = corollary_solutions(n);
    ASSERT_EQ(pairs.size(), n);
    const BigInt target = ipow(BigInt(7), 2 * n);
    std::set<std::pair<BigInt, BigInt>> seen;
    int coprime = 0;
    for (const auto& p : pairs) {
      ASSERT_GT(p.A, 0);
      ASSERT_GT(p.B, 0);
      ASSERT_EQ(form(p.A, p.B), target);
      ASSERT_EQ(p.provenance.form_value(), target);
      seen.insert(unordered(p.A, p.B));
      coprime += p.coprime() ? 1 : 0;
    }
    EXPECT_EQ(seen.size(), n);
    EXPECT_EQ(coprime, 1);
  }
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(as_pairs(brute_force_solutions(49)), (Pairs{{3, 5}}));
  EXPECT_TRUE(brute_force_solutions(2).empty());
  EXPECT_EQ(as_pairs(brute_force_solutions(3)), (Pairs{{1, 1}}));
  const auto v = brute_force_solutions(343);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].gcd, 1);
  EXPECT_EQ(v[1].gcd, 7);
}

// The big-integer scan must agree with the 64-bit one.
TEST(BruteForce, WidePathMatchesNarrowPath) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const BigInt N = testing::random_int(rng, 1, 3'000'000);
    ASSERT_EQ(detail::brute_force_wide(N), brute_force_solutions(N)) << N;
  }
  for (long N : {49L, 343L, 117649L, 2401L * 2401L}) {
    ASSERT_EQ(detail::brute_force_wide(N), brute_force_solutions(N)) << N;
  }
}

TEST(BruteForce, MatchesDoubleLoopUpTo1e4) {
  for (long N = 1; N <= 10000; ++N) {
    ASSERT_EQ(as_pairs(brute_force_solutions(N)), double_loop(N)) << N;
  }
}

TEST(BruteForce, CompleteAndSoundUpTo1e6) {
  constexpr long kMax = 1'000'000;
  std::vector<std::tuple<long, long, long>> all;  // (N, a, b)
  for (long a = 1; 3 * a * a <= kMax; ++a)
    for (long b = a; a * a + a * b + b * b <= kMax; ++b) all.emplace_back(a * a + a * b + b * b, a, b);
  std::sort(all.begin(), all.end());

  std::size_t pos = 0;
  for (long N = 1; N <= kMax; ++N) {
    Pairs expected;
    while (pos < all.size() && std::get<0>(all[pos]) == N) {
      expected.emplace_back(std::get<1>(all[pos]), std::get<2>(all[pos]));
      ++pos;
    }
    const auto got = brute_force_solutions(N);
    if (got.empty() && expected.empty()) continue;
    ASSERT_EQ(as_pairs(got), expected) << N;
    for (const auto& p : got) {
      ASSERT_EQ(form(p.a, p.b), N);
      ASSERT_EQ(p.gcd, gcd(p.a, p.b));
    }
  }
}

TEST(MethodAgreement, PowerRecurrenceDescent) {
  for (unsigned n = 0; n <= 200; ++n) {
    const auto power = eisenstein_solution(7, n);
    const auto rec = recurrence_solution(n);
    ASSERT_EQ(power.a, rec.a) << n;
    ASSERT_EQ(power.b, rec.b) << n;
    ASSERT_TRUE(power.satisfies_form());
    ASSERT_NE(mod(power.a, 7), 0) << n;
    if (n >= 1) {
      ASSERT_EQ(gcd(power.a, power.b), 1) << n;
      const auto desc = ascend(7, n);
      ASSERT_TRUE(desc.satisfies_form()) << n;
      ASSERT_EQ(gcd(desc.a, desc.b), 1) << n;
      ASSERT_NE(mod(desc.a, 7), 0) << n;
    }
    if (n >= 2) {
      const auto prev = eisenstein_solution(7, n - 1);
      ASSERT_EQ(mod(power.a - 5 * prev.a, 7), 0) << n;
    }
  }
}

}  // namespace
}  // namespace eisen
