#include "eisen/geometry.hpp"

#include "eisen/error.hpp"

#include <algorithm>
#include <numeric>

namespace eisen {

Rotation::Rotation(Rational c, Rational s) : c_(std::move(c)), s_(std::move(s)) {
  if (c_ * c_ + 3 * s_ * s_ != 1) {
    throw Error(Errc::InvalidArgument, "rotation needs c^2 + 3 s^2 = 1");
  }
}

Rotation Rotation::then(const Rotation& next) const {
  return Rotation(c_ * next.c_ - 3 * s_ * next.s_, c_ * next.s_ + s_ * next.c_);
}

Point scale(const Point& p, const Rational& k) { return {p.x * QSqrt3(k), p.y * QSqrt3(k)}; }

Rotation rotation_from_chord(const BigInt& chord, const Rational& radius_sq) {
  if (chord <= 0 || radius_sq <= 0) {
    throw Error(Errc::InvalidArgument, "chord and radius must be positive");
  }
  const Rational chord_sq = Rational(chord * chord);
  if (chord_sq > 4 * radius_sq) {
    throw Error(Errc::InvalidArgument, "chord " + to_string(chord) + " exceeds the diameter");
  }
  // chord^2 = 2 R^2 (1 - cos), sin^2 = 3 s^2.
  const Rational cos_theta = 1 - chord_sq / (2 * radius_sq);
  Rational s;
  if (!rational_sqrt((1 - cos_theta * cos_theta) / 3, &s)) {
    throw Error(Errc::NotRepresentable,
                "chord " + to_string(chord) + " has sine outside Q*sqrt(3)");
  }
  return Rotation(cos_theta, s);
}

Point apply_rotation(const Rotation& rot, const Point& p) {
  const QSqrt3 c(rot.c());
  const QSqrt3 s(rot.s());
  return {c * p.x - s * times_sqrt3(p.y), s * times_sqrt3(p.x) + c * p.y};
}

QSqrt3 dist_sq(const Point& p, const Point& q) {
  const QSqrt3 dx = p.x - q.x;
  const QSqrt3 dy = p.y - q.y;
  return dx * dx + dy * dy;
}

bool integer_distance(const QSqrt3& d_sq, BigInt* d) {
  if (!d_sq.is_rational() || boost::multiprecision::denominator(d_sq.r) != 1) return false;
  return is_square(boost::multiprecision::numerator(d_sq.r), d);
}

LabelPair make_label_pair(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

const Point& Embedding::at(const std::string& label) const {
  auto it = points.find(label);
  if (it == points.end()) throw Error(Errc::InvalidArgument, "no point labeled " + label);
  return it->second;
}

QSqrt3 Embedding::dist_sq(const std::string& a, const std::string& b) const {
  return eisen::dist_sq(at(a), at(b));
}

bool Embedding::all_on_circle() const {
  const QSqrt3 r2(radius_sq);
  return std::all_of(points.begin(), points.end(),
                     [&](const auto& kv) { return kv.second.norm_sq() == r2; });
}

std::vector<LabelPair> Embedding::expected_mismatches() const {
  std::vector<LabelPair> bad;
  for (const auto& [labels, d] : expected) {
    if (dist_sq(labels.first, labels.second) != QSqrt3(Rational(d * d))) bad.push_back(labels);
  }
  return bad;
}

std::map<LabelPair, BigInt> Embedding::distance_table() const {
  std::map<LabelPair, BigInt> table;
  for (auto i = points.begin(); i != points.end(); ++i) {
    for (auto j = std::next(i); j != points.end(); ++j) {
      BigInt d;
      if (!integer_distance(eisen::dist_sq(i->second, j->second), &d)) {
        throw Error(Errc::InvariantViolation, i->first + j->first + " is not an integer distance");
      }
      table.emplace(make_label_pair(i->first, j->first), d);
    }
  }
  return table;
}

namespace {

std::string label(char group, int index) { return std::string(1, group) + std::to_string(index); }

void expect(Embedding& e, char g1, int i1, char g2, int i2, int d) {
  e.expected[make_label_pair(label(g1, i1), label(g2, i2))] = d;
}

// Index following i in 1..3, cyclically.
int next3(int i) { return i % 3 + 1; }

}  // namespace

Embedding build_k222() {
  Embedding base;
  base.radius_sq = Rational(49, 3);
  const Rotation third = rotation_from_chord(7, base.radius_sq);
  Point a{0, QSqrt3(0, Rational(7, 3))};
  for (int i = 1; i <= 3; ++i) {
    base.points[label('A', i)] = a;
    a = apply_rotation(third, a);
  }
  for (int i = 1; i <= 3; ++i) {
    expect(base, 'A', i, 'A', next3(i), 7);
    expect(base, 'B', i, 'B', next3(i), 7);
    expect(base, 'A', i, 'B', i, 3);
    expect(base, 'B', i, 'A', next3(i), 5);
    expect(base, 'A', i, 'B', next3(i), 8);
  }

  const Rotation step = rotation_from_chord(3, base.radius_sq);
  for (const Rotation& rot : {step, step.inverse()}) {
    Embedding e = base;
    for (int i = 1; i <= 3; ++i) e.points[label('B', i)] = apply_rotation(rot, e.at(label('A', i)));
    if (e.expected_mismatches().empty()) return e;
  }
  throw Error(Errc::ConstructionFailed, "no orientation of the B triangle matches");
}

Embedding build_k333() {
  const Embedding small = build_k222();
  Embedding base;
  base.radius_sq = small.radius_sq * 49;
  for (const auto& [name, p] : small.points) base.points[name] = scale(p, 7);
  for (const auto& [labels, d] : small.expected) base.expected[labels] = 7 * d;

  // C(i-1) sits next to A(i): A1 -> C3, A2 -> C1, A3 -> C2.
  auto prev3 = [](int i) { return (i + 1) % 3 + 1; };
  for (int i = 1; i <= 3; ++i) {
    expect(base, 'C', i, 'C', next3(i), 49);
    expect(base, 'A', i, 'C', prev3(i), 16);
    expect(base, 'A', i, 'C', i, 39);
    expect(base, 'A', i, 'C', next3(i), 55);
    expect(base, 'B', i, 'C', i, 21);
    expect(base, 'B', i, 'C', prev3(i), 35);
    expect(base, 'B', i, 'C', next3(i), 56);
  }

  const Rotation step = rotation_from_chord(16, base.radius_sq);
  for (const Rotation& rot : {step, step.inverse()}) {
    Embedding e = base;
    for (int i = 1; i <= 3; ++i) {
      e.points[label('C', prev3(i))] = apply_rotation(rot, e.at(label('A', i)));
    }
    if (e.expected_mismatches().empty()) return e;
  }
  throw Error(Errc::ConstructionFailed, "no orientation of the C triangle matches");
}

namespace {

void require_concyclic(std::initializer_list<const Point*> pts) {
  const QSqrt3 r2 = (*pts.begin())->norm_sq();
  if (sign(r2) == 0) throw Error(Errc::NotConcyclic, "point at the center");
  for (const Point* p : pts) {
    if (p->norm_sq() != r2) throw Error(Errc::NotConcyclic, "points are not on one circle");
  }
  for (auto i = pts.begin(); i != pts.end(); ++i) {
    for (auto j = std::next(i); j != pts.end(); ++j) {
      if (**i == **j) throw Error(Errc::NotConcyclic, "repeated point");
    }
  }
}

bool sqrt_if_integral(const QSqrt3& v, Rational* root) {
  return v.is_rational() && rational_sqrt(v.r, root);
}

}  // namespace

bool ptolemy_check(const Point& p1, const Point& p2, const Point& p3, const Point& p4) {
  require_concyclic({&p1, &p2, &p3, &p4});
  const QSqrt3 d12 = dist_sq(p1, p2), d34 = dist_sq(p3, p4);
  const QSqrt3 d13 = dist_sq(p1, p3), d24 = dist_sq(p2, p4);
  const QSqrt3 d14 = dist_sq(p1, p4), d23 = dist_sq(p2, p3);

  Rational r12, r34, r13, r24, r14, r23;
  if (sqrt_if_integral(d12, &r12) && sqrt_if_integral(d34, &r34) &&
      sqrt_if_integral(d13, &r13) && sqrt_if_integral(d24, &r24) &&
      sqrt_if_integral(d14, &r14) && sqrt_if_integral(d23, &r23)) {
    return r13 * r24 == r12 * r34 + r14 * r23;
  }

  // sqrt(X) == sqrt(Y) + sqrt(Z)  <=>  X - Y - Z >= 0 and (X - Y - Z)^2 == 4 Y Z.
  const QSqrt3 x = d13 * d24, y = d12 * d34, z = d14 * d23;
  const QSqrt3 w = x - y - z;
  return sign(w) >= 0 && w * w == QSqrt3(4) * y * z;
}

std::vector<std::size_t> circular_order(const std::vector<Point>& points) {
  std::vector<std::size_t> idx(points.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (points.empty()) return idx;

  const QSqrt3 r2 = points.front().norm_sq();
  for (const auto& p : points) {
    if (p.norm_sq() != r2) throw Error(Errc::NotConcyclic, "points are not on one circle");
  }
  if (points.size() > 1 && sign(r2) == 0) throw Error(Errc::NotConcyclic, "zero radius");

  // Half-plane first ([0, pi) before [pi, 2pi)), then cross-product sign.
  auto half = [](const Point& p) {
    const int sy = sign(p.y);
    return (sy > 0 || (sy == 0 && sign(p.x) > 0)) ? 0 : 1;
  };
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    const Point& p = points[i];
    const Point& q = points[j];
    const int hp = half(p), hq = half(q);
    if (hp != hq) return hp < hq;
    return sign(p.x * q.y - p.y * q.x) > 0;
  });
  return idx;
}

std::vector<std::string> circular_labels(const Embedding& e) {
  std::vector<std::string> names;
  std::vector<Point> pts;
  for (const auto& [name, p] : e.points) {
    names.push_back(name);
    pts.push_back(p);
  }
  std::vector<std::string> out;
  for (std::size_t i : circular_order(pts)) out.push_back(names[i]);
  return out;
}

PtolemyReport ptolemy_all(const Embedding& e) {
  const auto order = circular_labels(e);
  const std::size_t n = order.size();
  PtolemyReport report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          ++report.checked;
          if (!ptolemy_check(e.at(order[i]), e.at(order[j]), e.at(order[k]), e.at(order[l]))) {
            report.failures.push_back({order[i], order[j], order[k], order[l]});
          }
        }
  return report;
}

std::map<std::string, std::vector<std::string>> odd_distance_graph(const Embedding& e) {
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& [name, p] : e.points) adj[name];
  for (const auto& [labels, d] : e.distance_table()) {
    if ((d & 1) != 0) {
      adj[labels.first].push_back(labels.second);
      adj[labels.second].push_back(labels.first);
    }
  }
  for (auto& [name, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

}  // namespace eisen
