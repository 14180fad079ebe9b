#pragma once

#include "bqf/arith.hpp"

namespace bqf {

/// +1 selects the ellipse c^2 + delta w^2 = 1, -1 the hyperbola c^2 - delta w^2 = 1.
enum class ConicSign : int { Ellipse = 1, Hyperbola = -1 };

inline int sign_value(ConicSign e) { return static_cast<int>(e); }

/// Rational point (c, w) on one of the conics E_delta.
///
/// c plays the role of cos t (resp. cosh t) and w of sin t / sqrt(delta)
/// (resp. sinh t / sqrt(delta)); the angle itself never appears.
struct ConicPoint {
  Rational c;
  Rational w;
  ConicSign epsilon = ConicSign::Ellipse;

  bool is_base_point() const { return c == 1 && w == 0; }
  bool operator==(const ConicPoint& o) const { return c == o.c && w == o.w && epsilon == o.epsilon; }
};

/// Chord-slope parameter (p, q): coprime, q >= 0. (1, 0) is the extended
/// parameter standing for the base point (1, 0).
class SlopeParam {
 public:
  /// Reduces by gcd and normalizes q >= 0; any (p, 0) becomes (1, 0).
  /// Throws InvalidArgument on (0, 0).
  SlopeParam(const Integer& p, const Integer& q);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  bool is_base() const { return q_ == 0; }

  bool operator==(const SlopeParam& o) const { return p_ == o.p_ && q_ == o.q_; }

 private:
  Integer p_;
  Integer q_;
};

/// Rational point with slope parameter s on the conic of scaled invariant four_delta.
///   ellipse:   ((delta p^2 - q^2) / (delta p^2 + q^2), 2pq / (delta p^2 + q^2))
///   hyperbola: ((delta p^2 + q^2) / (delta p^2 - q^2), 2pq / (delta p^2 - q^2))
/// Evaluated with denominators cleared through 4 delta.
/// Throws DegenerateParameter when the denominator vanishes.
ConicPoint param_point(const Integer& four_delta, ConicSign epsilon, const SlopeParam& s);

/// Inverse of param_point: p/q = w / (1 - c) on the ellipse, w / (c - 1) on the hyperbola.
/// This is minus the slope of the chord from (1, 0), which keeps the +2pq numerator.
/// Throws BasePoint for (1, 0).
SlopeParam slope_of_point(const ConicPoint& pt);

/// Exact test 4 c^2 + epsilon (4 delta) w^2 == 4.
bool on_conic(const ConicPoint& pt, const Integer& four_delta);

}  // namespace bqf
