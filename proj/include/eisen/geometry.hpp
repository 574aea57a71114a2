#pragma once

#include "eisen/qsqrt3.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace eisen {

/// Rotation with rational cosine c and sine s*sqrt(3); c^2 + 3 s^2 = 1.
class Rotation {
 public:
  Rotation() = default;
  Rotation(Rational c, Rational s);

  static Rotation identity() { return {}; }

  const Rational& c() const { return c_; }
  const Rational& s() const { return s_; }

  Rotation inverse() const { return Rotation(c_, -s_); }
  Rotation then(const Rotation& next) const;

  friend bool operator==(const Rotation&, const Rotation&) = default;

 private:
  Rational c_{1};
  Rational s_{0};
};

struct Point {
  QSqrt3 x;
  QSqrt3 y;

  QSqrt3 norm_sq() const { return x * x + y * y; }

  friend bool operator==(const Point&, const Point&) = default;
};

Point scale(const Point& p, const Rational& k);

/// Counterclockwise rotation whose chord on a circle of squared radius
/// radius_sq has length `chord`. Throws Errc::NotRepresentable when the sine
/// is not a rational multiple of sqrt(3).
Rotation rotation_from_chord(const BigInt& chord, const Rational& radius_sq);

Point apply_rotation(const Rotation& rot, const Point& p);

QSqrt3 dist_sq(const Point& p, const Point& q);

/// Squared distance as an integer distance if it is a perfect square.
bool integer_distance(const QSqrt3& d_sq, BigInt* d);

using LabelPair = std::pair<std::string, std::string>;

LabelPair make_label_pair(std::string a, std::string b);

/// Labeled concyclic point set centered at the origin.
struct Embedding {
  Rational radius_sq;
  std::map<std::string, Point> points;
  std::map<LabelPair, BigInt> expected;

  const Point& at(const std::string& label) const;
  QSqrt3 dist_sq(const std::string& a, const std::string& b) const;

  bool all_on_circle() const;
  /// Labels of expected pairs whose squared distance is not the expected square.
  std::vector<LabelPair> expected_mismatches() const;
  /// Integer distance for every pair; throws Errc::InvariantViolation if one
  /// is irrational.
  std::map<LabelPair, BigInt> distance_table() const;
};

Embedding build_k222();
Embedding build_k333();

/// Ptolemy's equality d13*d24 == d12*d34 + d14*d23 for four concyclic points
/// given in circular order, evaluated on exact squared distances.
bool ptolemy_check(const Point& p1, const Point& p2, const Point& p3, const Point& p4);

/// Indices of points sorted counterclockwise by angle from the positive x-axis.
std::vector<std::size_t> circular_order(const std::vector<Point>& points);

struct PtolemyReport {
  std::size_t checked = 0;
  std::vector<std::vector<std::string>> failures;
};

/// Checks every 4-subset of the embedding's points taken in circular order.
PtolemyReport ptolemy_all(const Embedding& e);

/// Labels in counterclockwise order.
std::vector<std::string> circular_labels(const Embedding& e);

/// Adjacency of the subgraph whose edges have odd integer length.
std::map<std::string, std::vector<std::string>> odd_distance_graph(const Embedding& e);

}  // namespace eisen
