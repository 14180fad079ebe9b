#include "bqf/automorphism.hpp"

#include "bqf/error.hpp"

namespace bqf {

RationalMatrix compose(const RationalMatrix& a, const RationalMatrix& b) {
  return {a.t1 * b.t1 + a.t2 * b.t3, a.t1 * b.t2 + a.t2 * b.t4,
          a.t3 * b.t1 + a.t4 * b.t3, a.t3 * b.t2 + a.t4 * b.t4};
}

RationalMatrix invert(const RationalMatrix& a) {
  const Rational d = a.det();
  if (d == 0) throw Error(ErrorCode::Singular, "matrix has zero determinant");
  return {a.t4 / d, -a.t2 / d, -a.t3 / d, a.t1 / d};
}

std::pair<Rational, Rational> apply(const RationalMatrix& a, const Rational& x, const Rational& y) {
  return {a.t1 * x + a.t2 * y, a.t3 * x + a.t4 * y};
}

std::array<Rational, 3> pullback(const Form& f, const RationalMatrix& t) {
  const Integer& a = f.f2();
  const Integer& b = f.f1();
  const Integer& c = f.f0();
  return {Rational(a * t.t1 * t.t1 + b * t.t1 * t.t3 + c * t.t3 * t.t3),
          Rational(2 * a * t.t1 * t.t2 + b * (t.t1 * t.t4 + t.t2 * t.t3) + 2 * c * t.t3 * t.t4),
          Rational(a * t.t2 * t.t2 + b * t.t2 * t.t4 + c * t.t4 * t.t4)};
}

bool is_automorphism(const Form& f, const RationalMatrix& t) {
  const auto g = pullback(f, t);
  return g[0] == f.f2() && g[1] == f.f1() && g[2] == f.f0();
}

ConicSign conic_sign_for(const Form& f) {
  require_irreducible(f);
  return f.is_definite() ? ConicSign::Ellipse : ConicSign::Hyperbola;
}

RationalMatrix from_conic_point(const Form& f, const ConicPoint& pt) {
  const ConicSign expected = conic_sign_for(f);
  if (pt.epsilon != expected) {
    throw Error(ErrorCode::ConicMismatch,
                expected == ConicSign::Ellipse ? "definite form needs an ellipse point"
                                               : "indefinite form needs a hyperbola point");
  }
  if (!on_conic(pt, f.four_delta())) {
    throw Error(ErrorCode::NotOnConic, "(" + to_string(pt.c) + ", " + to_string(pt.w) + ") is not on the conic");
  }
  const Rational half_f1_w = f.f1() * pt.w / 2;
  if (expected == ConicSign::Ellipse) {
    return {pt.c + half_f1_w, f.f0() * pt.w, -f.f2() * pt.w, pt.c - half_f1_w};
  }
  return {pt.c - half_f1_w, -f.f0() * pt.w, f.f2() * pt.w, pt.c + half_f1_w};
}

ConicPoint to_conic_point(const Form& f, const RationalMatrix& t) {
  const ConicSign eps = conic_sign_for(f);
  Rational c = t.trace() / 2;
  // f2 != 0 for irreducible f; t3 = -f2 w (ellipse) or f2 w (hyperbola).
  Rational w = t.t3 / f.f2();
  if (eps == ConicSign::Ellipse) w = -w;
  return {c, w, eps};
}

}  // namespace bqf
