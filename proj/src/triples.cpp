#include "eisen/triples.hpp"

#include "eisen/error.hpp"
#include "eisen/solvers.hpp"

#include <map>
#include <set>
#include <tuple>

namespace eisen {

std::string_view origin_name(Origin o) noexcept {
  switch (o) {
    case Origin::M: return "M";
    case Origin::N: return "N";
    case Origin::BruteForce: return "brute";
  }
  return "unknown";
}

ParamPair::ParamPair(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ < 1 || b_ <= a_ || gcd(a_, b_) != 1) {
    throw Error(Errc::InvalidParams,
                "need coprime 1 <= a < b, got (" + to_string(a_) + ", " + to_string(b_) + ")");
  }
}

Triple m_triple(const ParamPair& p) {
  const BigInt& a = p.a();
  const BigInt& b = p.b();
  return {b * b - a * a, a * a + 2 * a * b, a * a + a * b + b * b, Origin::M,
          std::make_pair(a, b)};
}

Triple n_triple(const ParamPair& p) {
  if (mod(p.a() - p.b(), 3) != 0) {
    throw Error(Errc::InvalidParams, "a and b must agree mod 3");
  }
  Triple t = m_triple(p);
  for (BigInt* v : {&t.x, &t.y, &t.z}) {
    if (mod(*v, 3) != 0) throw Error(Errc::NonDivisible, to_string(*v) + " is not a multiple of 3");
    *v /= 3;
  }
  t.origin = Origin::N;
  return t;
}

namespace {

using Key = std::tuple<BigInt, BigInt, BigInt>;  // (z, x, y)

Key key_of(const Triple& t) { return {t.z, t.x, t.y}; }

void order_xy(Triple& t) {
  if (t.x > t.y) std::swap(t.x, t.y);
}

}  // namespace

std::vector<Triple> enumerate_triples(const BigInt& z_max) {
  if (z_max < 1) throw Error(Errc::InvalidArgument, "z_max must be positive");
  // z = a^2 + ab + b^2 for M and a third of it for N, so no parameter with
  // form above 3 z_max can contribute.
  const BigInt bound = 3 * z_max;
  std::map<Key, Triple> found;
  auto keep = [&](Triple t) {
    order_xy(t);
    auto [it, inserted] = found.try_emplace(key_of(t), t);
    if (!inserted && it->second.origin == Origin::N && t.origin == Origin::M) it->second = std::move(t);
  };

  for (BigInt a = 1; form(a, a + 1) <= bound; ++a) {
    for (BigInt b = a + 1; form(a, b) <= bound; ++b) {
      if (gcd(a, b) != 1) continue;
      const ParamPair p{a, b};
      if (form(a, b) <= z_max) keep(m_triple(p));
      if (mod(a - b, 3) == 0) keep(n_triple(p));
    }
  }

  std::vector<Triple> out;
  out.reserve(found.size());
  for (auto& [k, t] : found) out.push_back(std::move(t));
  return out;
}

std::vector<Triple> brute_force_triples(const BigInt& z_max) {
  if (z_max < 1) throw Error(Errc::InvalidArgument, "z_max must be positive");
  std::vector<Triple> out;
  for (BigInt z = 1; z <= z_max; ++z) {
    for (auto& pr : brute_force_solutions(z * z)) {
      out.push_back({pr.a, pr.b, z, Origin::BruteForce, std::nullopt});
    }
  }
  return out;
}

std::size_t CoverageReport::missing_primitive() const {
  std::size_t n = 0;
  for (const auto& t : missing) n += t.primitive() ? 1 : 0;
  return n;
}

std::size_t CoverageReport::missing_imprimitive() const {
  return missing.size() - missing_primitive();
}

CoverageReport verify_parametrization(const BigInt& z_max) {
  CoverageReport report;
  report.z_max = z_max;
  const auto generated = enumerate_triples(z_max);
  const auto brute = brute_force_triples(z_max);
  report.generated_count = generated.size();
  report.brute_count = brute.size();

  std::set<Key> have;
  for (const auto& t : generated) {
    have.insert(key_of(t));
    if (!t.satisfies_form()) report.unsound.push_back(t);
  }
  for (const auto& t : brute) {
    if (!have.contains(key_of(t))) report.missing.push_back(t);
  }
  return report;
}

nlohmann::ordered_json to_json(const Triple& t) {
  nlohmann::ordered_json j;
  j["x"] = to_string(t.x);
  j["y"] = to_string(t.y);
  j["z"] = to_string(t.z);
  j["origin"] = origin_name(t.origin);
  if (t.params) j["params"] = {to_string(t.params->first), to_string(t.params->second)};
  j["primitive"] = t.primitive();
  return j;
}

nlohmann::ordered_json to_json(const CoverageReport& report) {
  nlohmann::ordered_json j;
  j["z_max"] = to_string(report.z_max);
  j["generated_count"] = report.generated_count;
  j["brute_count"] = report.brute_count;
  auto& missing = j["missing"] = nlohmann::ordered_json::array();
  for (const auto& t : report.missing) {
    missing.push_back({{"x", to_string(t.x)},
                       {"y", to_string(t.y)},
                       {"z", to_string(t.z)},
                       {"primitive", t.primitive()}});
  }
  auto& unsound = j["unsound"] = nlohmann::ordered_json::array();
  for (const auto& t : report.unsound) unsound.push_back(to_json(t));
  return j;
}

}  // namespace eisen
