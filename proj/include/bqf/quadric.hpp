#pragma once

#include <array>

#include "bqf/arith.hpp"
#include "bqf/automorphism.hpp"
#include "bqf/form.hpp"

namespace bqf {

/// Rational point (x1, x2, x3, x4) of the quadric X_f : f(x1, x2) = f(x3, x4).
using QuadricPoint = std::array<Rational, 4>;

/// base + s * direction, s ranging over Q.
struct RationalLine {
  QuadricPoint base;
  std::array<Rational, 4> direction;
};

bool on_quadric(const Form& f, const QuadricPoint& p);

/// A rational line in X_f through p.
///
/// With T the transporter from (x1, x2) to (x3, x4), the plane {(v, T v)}
/// lies in X_f and contains p; the returned line is p + s (d, T d) with
/// d = (1, 0). Denominators of p are cleared first (f is homogeneous), so
/// the direction does not depend on rescaling p.
/// Throws ZeroPoint for the origin, NotOnQuadric, ReducibleForm/DegenerateForm.
RationalLine line_through(const Form& f, const QuadricPoint& p);

/// Coefficients (s^0, s^1, s^2) of f(base12 + s dir12) - f(base34 + s dir34).
std::array<Rational, 3> line_defect(const Form& f, const RationalLine& line);

/// True iff line_defect vanishes identically.
bool verify_line(const Form& f, const RationalLine& line);

}  // namespace bqf
