#include "bqf/conic.hpp"

#include "bqf/error.hpp"

namespace bqf {

SlopeParam::SlopeParam(const Integer& p, const Integer& q) {
  if (p == 0 && q == 0) throw Error(ErrorCode::InvalidArgument, "slope parameter (0, 0)");
  if (q == 0) {
    p_ = 1;
    q_ = 0;
    return;
  }
  Integer g = gcd(p, q);
  p_ = p / g;
  q_ = q / g;
  if (q_ < 0) {
    p_ = -p_;
    q_ = -q_;
  }
}

ConicPoint param_point(const Integer& four_delta, ConicSign epsilon, const SlopeParam& s) {
  if (four_delta <= 0) throw Error(ErrorCode::InvalidArgument, "four_delta must be positive");
  // delta p^2 +- q^2 scaled by 4.
  const Integer dp2 = four_delta * s.p() * s.p();
  const Integer q2 = 4 * s.q() * s.q();
  const Integer pq = 8 * s.p() * s.q();
  if (epsilon == ConicSign::Ellipse) {
    const Integer den = dp2 + q2;
    return {make_rational(dp2 - q2, den), make_rational(pq, den), epsilon};
  }
  const Integer den = dp2 - q2;
  if (den == 0) {
    throw Error(ErrorCode::DegenerateParameter,
                "delta p^2 = q^2 for 4delta=" + four_delta.get_str() + ", p=" + s.p().get_str() +
                    ", q=" + s.q().get_str());
  }
  return {make_rational(dp2 + q2, den), make_rational(pq, den), epsilon};
}

SlopeParam slope_of_point(const ConicPoint& pt) {
  if (pt.is_base_point()) throw Error(ErrorCode::BasePoint, "(1, 0) has only the extended parameter");
  const Rational run = pt.epsilon == ConicSign::Ellipse ? Rational(1 - pt.c) : Rational(pt.c - 1);
  if (run == 0) throw Error(ErrorCode::NotOnConic, "c = 1 with w != 0 is not on the conic");
  Rational m = pt.w / run;
  m.canonicalize();
  return SlopeParam(m.get_num(), m.get_den());
}

bool on_conic(const ConicPoint& pt, const Integer& four_delta) {
  Rational lhs = 4 * pt.c * pt.c + sign_value(pt.epsilon) * four_delta * pt.w * pt.w;
  return lhs == 4;
}

}  // namespace bqf
