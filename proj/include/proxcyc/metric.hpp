#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "proxcyc/errors.hpp"

namespace proxcyc {

/// A point of the ambient Euclidean space.
using Point = std::vector<double>;

enum class SetLabel { A, B, Image };

inline const char* to_string(SetLabel label) {
  switch (label) {
    case SetLabel::A: return "A";
    case SetLabel::B: return "B";
    default: return "image";
  }
}

inline SetLabel opposite(SetLabel side) {
  if (side == SetLabel::A) return SetLabel::B;
  if (side == SetLabel::B) return SetLabel::A;
  throw std::logic_error("opposite() requires an A or B side label");
}

/// Finite representation of a closed set: a nonempty list of points.
struct PointSet {
  std::vector<Point> points;
  SetLabel label = SetLabel::Image;
};

inline bool all_finite(const Point& p) {
  return std::all_of(p.begin(), p.end(), [](double c) { return std::isfinite(c); });
}

inline bool lex_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Euclidean distance. Comparisons elsewhere are exact; no tolerance is
/// applied at this level.
inline double distance(const Point& p, const Point& q) {
  if (p.size() != q.size()) {
    throw instance_format_error("dimension mismatch: point of dimension " +
                                std::to_string(p.size()) + " vs " + std::to_string(q.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = p[i] - q[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

/// d(p, S) = min over s in S of d(p, s). The minimum is attained because S is finite.
inline double point_to_set_distance(const Point& p, const PointSet& s) {
  if (s.points.empty()) throw instance_format_error("point-to-set distance over an empty set");
  double best = std::numeric_limits<double>::infinity();
  for (const Point& q : s.points) best = std::min(best, distance(p, q));
  return best;
}

/// dist(A, B) = min over all pairs. Zero iff the finite sets share a point.
inline double set_distance(const PointSet& a, const PointSet& b) {
  if (a.points.empty() || b.points.empty()) {
    throw instance_format_error("set distance over an empty set");
  }
  double best = std::numeric_limits<double>::infinity();
  for (const Point& x : a.points) {
    for (const Point& y : b.points) best = std::min(best, distance(x, y));
  }
  return best;
}

/// Hausdorff metric over finite sets:
/// max( max_{a in A} d(a, B), max_{b in B} d(b, A) ).
inline double hausdorff(const PointSet& a, const PointSet& b) {
  if (a.points.empty() || b.points.empty()) {
    throw instance_format_error("Hausdorff distance over an empty set");
  }
  double forward = 0.0;
  for (const Point& x : a.points) forward = std::max(forward, point_to_set_distance(x, b));
  double backward = 0.0;
  for (const Point& y : b.points) backward = std::max(backward, point_to_set_distance(y, a));
  return std::max(forward, backward);
}

}  // namespace proxcyc
