#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "proxcyc/errors.hpp"
#include "proxcyc/metric.hpp"
#include "proxcyc/params.hpp"

namespace proxcyc {

/// Axis-aligned box; the continuous region a grid side was sampled from.
struct Box {
  Point low;
  Point high;

  bool contains(const Point& p) const {
    if (p.size() != low.size()) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < low[i] || p[i] > high[i]) return false;
    }
    return true;
  }
};

struct AffineMap {
  std::vector<std::vector<double>> matrix;  // row-major, dimension x dimension
  Point offset;

  Point apply(const Point& x) const {
    Point y(offset);
    for (std::size_t i = 0; i < y.size(); ++i) {
      for (std::size_t j = 0; j < x.size(); ++j) y[i] += matrix[i][j] * x[j];
    }
    return y;
  }
};

/// How T acts on each side.
///  - Table: one image list per cloud point, materialized as coordinates.
///  - Affine: single-valued, evaluated exactly (images may leave the grid).
///  - AffineBall: affine center plus a symmetric sample pattern of the given
///    radius, clamped into the opposite side's box.
/// snap_to_grid pulls parametric image points onto the opposite cloud; it is
/// off by default so affine orbits stay exact.
struct MapDefinition {
  enum class Kind { Table, Affine, AffineBall };

  Kind kind = Kind::Affine;

  std::vector<std::vector<Point>> table_images_a;  // images of A.points[i]
  std::vector<std::vector<Point>> table_images_b;  // images of B.points[j]

  AffineMap a_to_b;
  AffineMap b_to_a;
  double ball_radius = 0.0;
  int ball_samples = 1;
  bool snap_to_grid = false;
};

struct GroundTruth {
  std::optional<double> D;
  std::optional<Point> fixed_point;
  std::optional<std::pair<Point, Point>> best_proximity_pair;  // (z_A, z_B)
};

/// A full problem: the two sides, the cyclic map, parameters, and derived
/// quantities. Immutable after finalize(); all operations on it are pure.
struct Instance {
  int dimension = 1;
  PointSet A;
  PointSet B;
  std::optional<Box> box_a;  // present when the side came from a grid
  std::optional<Box> box_b;
  std::optional<int> grid_points_per_axis_a;
  std::optional<int> grid_points_per_axis_b;

  MapDefinition map;
  ContractionParams params;

  DerivedConstants constants;  // filled by finalize()
  double omega = 1.0;          // effective: params.omega or omega_star
  double D = 0.0;              // set_distance(A, B)

  std::optional<GroundTruth> ground_truth;
  std::map<std::string, double> metadata;  // free-form numeric annotations
};

namespace detail {

inline std::optional<std::size_t> find_exact(const PointSet& s, const Point& x) {
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    if (s.points[i] == x) return i;
  }
  return std::nullopt;
}

inline Point clamp_to_box(Point p, const Box& box) {
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::clamp(p[i], box.low[i], box.high[i]);
  return p;
}

inline Point snap_to_cloud(const Point& p, const PointSet& cloud) {
  const Point* best = &cloud.points.front();
  double best_d = distance(p, *best);
  for (const Point& q : cloud.points) {
    const double d = distance(p, q);
    if (d < best_d || (d == best_d && lex_less(q, *best))) {
      best = &q;
      best_d = d;
    }
  }
  return *best;
}

/// Deterministic symmetric sample offsets of the given radius:
/// evenly spaced on the segment in 1-D, center plus uniform angles in 2-D,
/// center plus signed axis offsets in higher dimensions.
inline std::vector<Point> ball_offsets(int dimension, int samples, double radius) {
  std::vector<Point> offsets;
  const Point zero(static_cast<std::size_t>(dimension), 0.0);
  if (samples <= 1 || radius == 0.0) {
    offsets.push_back(zero);
    return offsets;
  }
  if (dimension == 1) {
    for (int k = 0; k < samples; ++k) {
      offsets.push_back({-radius + 2.0 * radius * k / (samples - 1)});
    }
  } else if (dimension == 2) {
    offsets.push_back(zero);
    for (int k = 0; k + 1 < samples; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / (samples - 1);
      offsets.push_back({radius * std::cos(theta), radius * std::sin(theta)});
    }
  } else {
    offsets.push_back(zero);
    for (int k = 0; k + 1 < samples; ++k) {
      Point о = zero;
      о[static_cast<std::size_t>(k / 2) % dimension] = (k % 2 == 0) ? radius : -radius;
      offsets.push_back(std::move(о));
    }
  }
  return offsets;
}

inline const PointSet& side_cloud(const Instance& inst, SetLabel side) {
  return side == SetLabel::A ? inst.A : inst.B;
}

inline const std::optional<Box>& side_box(const Instance& inst, SetLabel side) {
  return side == SetLabel::A ? inst.box_a : inst.box_b;
}

inline void require_in_domain(const Instance& inst, const Point& x, SetLabel side) {
  if (static_cast<int>(x.size()) != inst.dimension || !all_finite(x)) {
    throw instance_format_error("point has the wrong shape for this instance");
  }
  if (inst.map.kind == MapDefinition::Kind::Table) {
    if (!find_exact(side_cloud(inst, side), x)) {
      throw std::domain_error("point is not a member of side " + std::string(to_string(side)));
    }
    return;
  }
  const auto& box = side_box(inst, side);
  if (!box || !box->contains(x)) {
    throw std::domain_error("point is outside the bounding region of side " +
                            std::string(to_string(side)));
  }
}

}  // namespace detail

/// Image Tx as a finite point set on the opposite side.
inline PointSet image(const Point& x, SetLabel side, const Instance& inst) {
  if (side != SetLabel::A && side != SetLabel::B) {
    throw std::domain_error("image() requires an A or B side");
  }
  detail::require_in_domain(inst, x, side);
  const SetLabel target = opposite(side);
  const PointSet& target_cloud = detail::side_cloud(inst, target);

  PointSet out;
  out.label = target;
  switch (inst.map.kind) {
    case MapDefinition::Kind::Table: {
      const auto idx = detail::find_exact(detail::side_cloud(inst, side), x);
      const auto& images =
          side == SetLabel::A ? inst.map.table_images_a : inst.map.table_images_b;
      out.points = images[*idx];
      break;
    }
    case MapDefinition::Kind::Affine: {
      Point y = (side == SetLabel::A ? inst.map.a_to_b : inst.map.b_to_a).apply(x);
      if (inst.map.snap_to_grid) y = detail::snap_to_cloud(y, target_cloud);
      out.points.push_back(std::move(y));
      break;
    }
    case MapDefinition::Kind::AffineBall: {
      const Point center = (side == SetLabel::A ? inst.map.a_to_b : inst.map.b_to_a).apply(x);
      const Box& target_box = *detail::side_box(inst, target);
      for (const Point& delta :
           detail::ball_offsets(inst.dimension, inst.map.ball_samples, inst.map.ball_radius)) {
        Point y(center);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += delta[i];
        y = detail::clamp_to_box(std::move(y), target_box);
        if (inst.map.snap_to_grid) y = detail::snap_to_cloud(y, target_cloud);
        out.points.push_back(std::move(y));
      }
      std::sort(out.points.begin(), out.points.end(), lex_less);
      out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
      break;
    }
  }
  if (out.points.empty()) throw instance_format_error("map produced an empty image");
  return out;
}

struct CyclicViolation {
  SetLabel side;       // side of the offending domain point
  Point domain_point;
  Point image_point;   // the image point that is not in the opposite set
};

struct ValidationReport {
  std::size_t points_checked = 0;
  std::vector<CyclicViolation> violations;

  bool valid() const { return violations.empty(); }
};

/// Confirms T(A) lies inside B and T(B) inside A over every domain point:
/// exact cloud membership for table maps, bounding-box membership for
/// parametric maps. Violations are report content, never exceptions.
inline ValidationReport validate_cyclic(const Instance& inst) {
  ValidationReport report;
  for (SetLabel side : {SetLabel::A, SetLabel::B}) {
    const PointSet& cloud = detail::side_cloud(inst, side);
    const SetLabel target = opposite(side);
    for (const Point& x : cloud.points) {
      ++report.points_checked;
      const PointSet img = image(x, side, inst);
      for (const Point& y : img.points) {
        bool inside = false;
        if (inst.map.kind == MapDefinition::Kind::Table) {
          inside = detail::find_exact(detail::side_cloud(inst, target), y).has_value();
        } else {
          inside = detail::side_box(inst, target)->contains(y);
        }
        if (!inside) report.violations.push_back({side, x, y});
      }
    }
  }
  return report;
}

/// Validates shape invariants and fills the derived fields (constants,
/// effective omega, D). Must be called after constructing or mutating an
/// instance by hand; the loaders and gallery generators call it themselves.
inline void finalize(Instance& inst) {
  if (inst.dimension < 1) throw instance_format_error("dimension must be at least 1");
  for (const PointSet* s : {&inst.A, &inst.B}) {
    if (s->points.empty()) throw instance_format_error("sides A and B must be nonempty");
    for (const Point& p : s->points) {
      if (static_cast<int>(p.size()) != inst.dimension || !all_finite(p)) {
        throw instance_format_error("every point must be finite and of the instance dimension");
      }
    }
  }
  inst.A.label = SetLabel::A;
  inst.B.label = SetLabel::B;

  for (const auto& box : {inst.box_a, inst.box_b}) {
    if (!box) continue;
    if (static_cast<int>(box->low.size()) != inst.dimension ||
        static_cast<int>(box->high.size()) != inst.dimension) {
      throw instance_format_error("box bounds must match the instance dimension");
    }
    for (std::size_t i = 0; i < box->low.size(); ++i) {
      if (!(box->low[i] <= box->high[i])) {
        throw instance_format_error("box low bound exceeds high bound");
      }
    }
  }

  switch (inst.map.kind) {
    case MapDefinition::Kind::Table: {
      if (inst.map.table_images_a.size() != inst.A.points.size() ||
          inst.map.table_images_b.size() != inst.B.points.size()) {
        throw instance_format_error("table image lists must match the side clouds");
      }
      for (const auto* lists : {&inst.map.table_images_a, &inst.map.table_images_b}) {
        for (const auto& images : *lists) {
          if (images.empty()) {
            throw instance_format_error("every table entry needs a nonempty image");
          }
          for (const Point& y : images) {
            if (static_cast<int>(y.size()) != inst.dimension || !all_finite(y)) {
              throw instance_format_error("table image point has the wrong shape");
            }
          }
        }
      }
      break;
    }
    case MapDefinition::Kind::AffineBall:
      if (!(inst.map.ball_radius >= 0.0) || inst.map.ball_samples < 1) {
        throw instance_format_error("ball maps need radius >= 0 and samples >= 1");
      }
      [[fallthrough]];
    case MapDefinition::Kind::Affine: {
      if (!inst.box_a || !inst.box_b) {
        throw instance_format_error("parametric maps require grid_interval sides");
      }
      for (const AffineMap* m : {&inst.map.a_to_b, &inst.map.b_to_a}) {
        if (static_cast<int>(m->offset.size()) != inst.dimension ||
            static_cast<int>(m->matrix.size()) != inst.dimension) {
          throw instance_format_error("affine map must be dimension x dimension");
        }
        for (const auto& row : m->matrix) {
          if (static_cast<int>(row.size()) != inst.dimension) {
            throw instance_format_error("affine map must be dimension x dimension");
          }
        }
      }
      break;
    }
  }

  validate(inst.params);
  inst.constants = derived_constants(inst.params);
  inst.omega = inst.params.omega.value_or(inst.constants.omega_star);
  inst.D = set_distance(inst.A, inst.B);
}

/// Uniform inclusive grid over a box, axis 0 slowest; points come out in
/// lexicographic order.
inline PointSet grid_point_set(const Box& box, int points_per_axis, SetLabel label) {
  if (points_per_axis < 2) throw instance_format_error("grids need at least 2 points per axis");
  const auto dim = box.low.size();
  PointSet out;
  out.label = label;
  std::vector<int> index(dim, 0);
  while (true) {
    Point p(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      p[i] = box.low[i] + (box.high[i] - box.low[i]) * index[i] / (points_per_axis - 1);
    }
    out.points.push_back(std::move(p));
    std::size_t axis = dim;
    while (axis > 0) {
      --axis;
      if (++index[axis] < points_per_axis) break;
      index[axis] = 0;
      if (axis == 0) return out;
    }
  }
}

}  // namespace proxcyc
