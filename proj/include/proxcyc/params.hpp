#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "proxcyc/errors.hpp"

namespace proxcyc {

/// Contraction parameters (K, alpha, beta) with an optional explicit omega.
/// When omega is absent the derived omega* = (1 - K1) / K2 is used.
struct ContractionParams {
  double K = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  std::optional<double> omega;
};

inline void validate(const ContractionParams& p) {
  if (!std::isfinite(p.K) || !std::isfinite(p.alpha) || !std::isfinite(p.beta)) {
    throw parameter_error("contraction parameters must be finite");
  }
  if (!(p.K >= 0.0 && p.K < 1.0)) throw parameter_error("K must lie in [0, 1)");
  if (!(p.alpha >= 0.0 && p.beta >= 0.0 && p.alpha + p.beta < 1.0)) {
    throw parameter_error("(alpha, beta) must satisfy alpha >= 0, beta >= 0, alpha + beta < 1");
  }
  if (p.omega && !(std::isfinite(*p.omega) && *p.omega > 0.0)) {
    throw parameter_error("omega, when given, must be a positive finite real");
  }
}

struct DerivedConstants {
  double K1 = 0.0;         // max(K, beta/(1-alpha), alpha/(1-beta)), in [0, 1)
  double K2 = 1.0;         // max(1/(1-alpha), 1/(1-beta)), in [1, inf)
  double omega_star = 1.0; // (1 - K1) / K2, in (0, 1]
};

inline DerivedConstants derived_constants(const ContractionParams& p) {
  validate(p);
  DerivedConstants c;
  c.K1 = std::max({p.K, p.beta / (1.0 - p.alpha), p.alpha / (1.0 - p.beta)});
  c.K2 = std::max(1.0 / (1.0 - p.alpha), 1.0 / (1.0 - p.beta));
  c.omega_star = (1.0 - c.K1) / c.K2;
  return c;
}

enum class RegionLabel { Delta1, Delta2, Delta3, Delta4, DeltaOnly, Outside };

inline const char* to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::Delta1: return "Delta1";
    case RegionLabel::Delta2: return "Delta2";
    case RegionLabel::Delta3: return "Delta3";
    case RegionLabel::Delta4: return "Delta4";
    case RegionLabel::DeltaOnly: return "DeltaOnly";
    default: return "Outside";
  }
}

// Raw region predicates, evaluated with exact floating-point comparisons
// (strict vs non-strict exactly as the defining inequalities are written).
// Delta1 and Delta4 share the boundary expression a(1+a)+b < 1; both use the
// identical form so the audit Delta4 => Delta1-or-Delta2 cannot be broken by
// rounding.
namespace detail {

inline bool in_delta(double a, double b) { return a >= 0.0 && b >= 0.0 && a + b < 1.0; }

inline bool raw_delta1(double a, double b) {
  return in_delta(a, b) && a <= b && a * (1.0 + a) + b < 1.0;
}
inline bool raw_delta2(double a, double b) {
  return in_delta(a, b) && a >= b && b * (1.0 + b) + a < 1.0;
}
inline bool raw_delta3(double a, double b) {
  return in_delta(a, b) && a > 0.0 && a < 0.5 && b < (1.0 - a) / 2.0 &&
         b >= 1.0 - a * (1.0 + a);
}
inline bool raw_delta4(double a, double b) {
  return in_delta(a, b) && a <= 0.5 && (1.0 - a) / 2.0 <= b &&
         a * (1.0 + a) + b < 1.0 && a * (1.0 + a) + b * (2.0 - b) < 1.0;
}

}  // namespace detail

/// Total, deterministic classification. The raw subregions are not disjoint
/// (Delta4 overlaps Delta1/Delta2), so the first match in the order
/// Delta1, Delta2, Delta3, Delta4 wins; DeltaOnly covers the remainder of Delta.
inline RegionLabel classify_region(double alpha, double beta) {
  if (!detail::in_delta(alpha, beta)) return RegionLabel::Outside;
  if (detail::raw_delta1(alpha, beta)) return RegionLabel::Delta1;
  if (detail::raw_delta2(alpha, beta)) return RegionLabel::Delta2;
  if (detail::raw_delta3(alpha, beta)) return RegionLabel::Delta3;
  if (detail::raw_delta4(alpha, beta)) return RegionLabel::Delta4;
  return RegionLabel::DeltaOnly;
}

/// Every raw predicate that holds, with no precedence. Used by the region audit.
inline std::vector<RegionLabel> raw_region_membership(double alpha, double beta) {
  if (!detail::in_delta(alpha, beta)) {
    throw std::domain_error("raw region membership requires (alpha, beta) in Delta");
  }
  std::vector<RegionLabel> out;
  if (detail::raw_delta1(alpha, beta)) out.push_back(RegionLabel::Delta1);
  if (detail::raw_delta2(alpha, beta)) out.push_back(RegionLabel::Delta2);
  if (detail::raw_delta3(alpha, beta)) out.push_back(RegionLabel::Delta3);
  if (detail::raw_delta4(alpha, beta)) out.push_back(RegionLabel::Delta4);
  return out;
}

/// The five distances a pair (x, y) contributes to the contractive bound.
/// Distances to the image sets Tx, Ty are point-to-set distances.
struct DistanceBundle {
  double d_xy = 0.0;
  double d_x_Tx = 0.0;
  double d_y_Ty = 0.0;
  double d_x_Ty = 0.0;
  double d_y_Tx = 0.0;
};

inline void validate(const DistanceBundle& b) {
  for (double v : {b.d_xy, b.d_x_Tx, b.d_y_Ty, b.d_x_Ty, b.d_y_Tx}) {
    if (!(std::isfinite(v) && v >= 0.0)) {
      throw parameter_error("distance bundle entries must be finite and nonnegative");
    }
  }
}

/// M1 = K * max{ d(x,y), d(x,Tx), d(y,Ty), (d(x,Ty) + d(y,Tx)) / 2 }
inline double m1(const DistanceBundle& b, double K) {
  return K * std::max({b.d_xy, b.d_x_Tx, b.d_y_Ty, 0.5 * (b.d_x_Ty + b.d_y_Tx)});
}

/// M2 = alpha * d(x,Tx) + beta * d(y,Ty)
inline double m2(const DistanceBundle& b, double alpha, double beta) {
  return alpha * b.d_x_Tx + beta * b.d_y_Ty;
}

/// M = max(M1, M2)
inline double m_value(const DistanceBundle& b, const ContractionParams& p) {
  return std::max(m1(b, p.K), m2(b, p.alpha, p.beta));
}

/// Premise scaling factor, always in (0, 1]:
///   if M2 > M1:  1 on Delta1/Delta2, 1-beta on Delta3, (1-beta)/(1-beta+alpha) on Delta4;
///   if M2 <= M1: 1 when K < 1/2, otherwise 1-K.
/// The Delta3/Delta4 branches are kept verbatim even though precedence
/// classification never emits those labels (Delta3 is empty, Delta4 is
/// absorbed by Delta1/Delta2); the audit exercises them directly.
inline double phi(const DistanceBundle& b, const ContractionParams& p, RegionLabel region) {
  if (region == RegionLabel::Outside) {
    throw std::domain_error("phi requires (alpha, beta) in Delta");
  }
  validate(b);
  if (m2(b, p.alpha, p.beta) > m1(b, p.K)) {
    switch (region) {
      case RegionLabel::Delta1:
      case RegionLabel::Delta2: return 1.0;
      case RegionLabel::Delta3: return 1.0 - p.beta;
      case RegionLabel::Delta4: return (1.0 - p.beta) / (1.0 - p.beta + p.alpha);
      default:
        throw params_unsupported_error(
            "phi is undefined for (alpha, beta) outside Delta1..Delta4 when M2 > M1");
    }
  }
  return p.K < 0.5 ? 1.0 : 1.0 - p.K;
}

}  // namespace proxcyc
