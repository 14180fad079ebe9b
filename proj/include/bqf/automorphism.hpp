#pragma once

#include <array>
#include <utility>

#include "bqf/arith.hpp"
#include "bqf/conic.hpp"
#include "bqf/form.hpp"

namespace bqf {

/// Row-major 2x2 matrix of reduced rationals acting on column pairs:
/// (x, y) -> (t1 x + t2 y, t3 x + t4 y).
struct RationalMatrix {
  Rational t1{1}, t2{0}, t3{0}, t4{1};

  static RationalMatrix identity() { return {}; }

  Rational det() const { return t1 * t4 - t2 * t3; }
  Rational trace() const { return t1 + t4; }

  bool operator==(const RationalMatrix& o) const {
    return t1 == o.t1 && t2 == o.t2 && t3 == o.t3 && t4 == o.t4;
  }
};

RationalMatrix compose(const RationalMatrix& a, const RationalMatrix& b);
/// Throws Singular when det == 0.
RationalMatrix invert(const RationalMatrix& a);
std::pair<Rational, Rational> apply(const RationalMatrix& a, const Rational& x, const Rational& y);

inline RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) { return compose(a, b); }
inline RationalMatrix operator-(const RationalMatrix& a) { return {-a.t1, -a.t2, -a.t3, -a.t4}; }

/// Coefficients (a, b, c) of f(t1 x + t2 y, t3 x + t4 y) = a x^2 + b xy + c y^2.
std::array<Rational, 3> pullback(const Form& f, const RationalMatrix& t);

/// f o T == f, coefficientwise and exact. Accepts improper automorphisms too.
bool is_automorphism(const Form& f, const RationalMatrix& t);

/// Special automorphism attached to a conic point.
///
///   definite f (ellipse):      [[c + f1 w/2,  f0 w], [-f2 w, c - f1 w/2]]
///   indefinite f (hyperbola):  [[c - f1 w/2, -f0 w], [ f2 w, c + f1 w/2]]
///
/// The two families place w with opposite signs; both are kept as written.
/// Throws ConicMismatch if the conic sign does not fit the form class,
/// NotOnConic if pt is not on the conic of |disc f|, and ReducibleForm /
/// DegenerateForm for reducible f.
RationalMatrix from_conic_point(const Form& f, const ConicPoint& pt);

/// Reads (c, w) back off a matrix in the image of from_conic_point
/// (c = trace / 2, w from the off-diagonal entries). Does not validate.
ConicPoint to_conic_point(const Form& f, const RationalMatrix& t);

/// Conic sign matching the class of an irreducible form.
ConicSign conic_sign_for(const Form& f);

}  // namespace bqf
