#pragma once

#include "eisen/bigint.hpp"

#include <json.hpp>

#include <compare>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace eisen {

enum class Origin { M, N, BruteForce };

std::string_view origin_name(Origin o) noexcept;

/// Positive solution of x^2 + xy + y^2 = z^2.
struct Triple {
  BigInt x;
  BigInt y;
  BigInt z;
  Origin origin = Origin::BruteForce;
  std::optional<std::pair<BigInt, BigInt>> params;

  bool satisfies_form() const { return x * x + x * y + y * y == z * z; }
  bool primitive() const { return gcd(x, y) == 1; }
};

/// Coprime parameters 1 <= a < b. Construction validates.
class ParamPair {
 public:
  ParamPair(BigInt a, BigInt b);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }

 private:
  BigInt a_;
  BigInt b_;
};

/// (b^2 - a^2, a^2 + 2ab, a^2 + ab + b^2).
Triple m_triple(const ParamPair& p);

/// The M triple divided by 3; requires a = b (mod 3).
Triple n_triple(const ParamPair& p);

/// Every M and N triple with z <= z_max, normalized to x <= y, deduplicated
/// and sorted by (z, x). A triple produced by both generators is tagged M.
std::vector<Triple> enumerate_triples(const BigInt& z_max);

/// Every solution with 1 <= x <= y and z <= z_max, by exhaustive search.
std::vector<Triple> brute_force_triples(const BigInt& z_max);

struct CoverageReport {
  BigInt z_max;
  std::size_t generated_count = 0;
  std::size_t brute_count = 0;
  std::vector<Triple> missing;   // found by search, absent from M u N
  std::vector<Triple> unsound;   // emitted by M u N, failing the form

  std::size_t missing_primitive() const;
  std::size_t missing_imprimitive() const;
};

CoverageReport verify_parametrization(const BigInt& z_max);

nlohmann::ordered_json to_json(const CoverageReport& report);
nlohmann::ordered_json to_json(const Triple& t);

}  // namespace eisen
