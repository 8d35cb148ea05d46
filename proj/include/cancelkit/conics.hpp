#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cancelkit/numberfield.hpp"

namespace cancelkit {

using Point = std::pair<FieldElement, FieldElement>;

/// cXX X^2 + cXY XY + cYY Y^2 + cX X + cY Y + c1.
struct Conic {
  FieldElement cXX, cXY, cYY, cX, cY, c1;

  const NumberField& field() const { return cXX.field(); }
  FieldElement operator()(const FieldElement& x, const FieldElement& y) const;
  /// Determinant of the symmetric 3x3 matrix of the homogenised form (times 8).
  FieldElement discriminant() const;
  bool is_degenerate() const { return discriminant().is_zero(); }
};

std::string to_string(const Conic& c);

enum class ConicStatus { kPointFound, kNoPoint, kUnknown };

const char* to_string(ConicStatus s);

struct ConicVerdict {
  ConicStatus status = ConicStatus::kUnknown;
  std::optional<Point> point;
  /// Places where the form is not locally isotropic ("inf", "2", "3", ...),
  /// in that order; empty unless NO_POINT came from a local obstruction.
  std::vector<std::string> obstructions;
  std::string certificate;
};

/// Y^2 - c XY + X^2 + (c - 2) v (X + Y) + (2 - c) v^2 + (c^2 - 4) u2.
Conic conic_from_case3(const FieldElement& u2, const FieldElement& v, const FieldElement& c);

/// Complete decision over Q (Hilbert symbols), with a point when one exists.
ConicVerdict conic_rational_point(const Conic& c);

/// Lines through p with slope t: (x(t), y(t)) = p + s(t) (1, t).
class ConicParametrization {
 public:
  ConicParametrization(Conic c, Point p);

  /// The second intersection point of the slope-t line, or nothing when that
  /// line is parallel to an asymptote. The tangent slope gives p itself.
  std::optional<Point> at(const FieldElement& t) const;
  /// The vertical line through p (the "t = infinity" member).
  std::optional<Point> vertical() const;

  const Conic& conic() const { return c_; }
  const Point& base_point() const { return p_; }

 private:
  Conic c_;
  Point p_;
};

/// Throws Error(kDegenerateConic) for a degenerate conic and
/// Error(kInvalidArgument) when p is not on it.
ConicParametrization conic_parametrize(const Conic& c, const Point& p);

/// Finds x of bounded height (coordinates p/q with |p|, q <= bound) for which
/// the conic has a K-rational y. POINT_FOUND or UNKNOWN, never NO_POINT.
ConicVerdict conic_point_search(const Conic& c, long height_bound);

}  // namespace cancelkit
