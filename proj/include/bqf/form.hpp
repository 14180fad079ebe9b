#pragma once

#include <array>
#include <string>
#include <string_view>

#include "bqf/arith.hpp"

namespace bqf {

enum class FormClass { PositiveDefinite, NegativeDefinite, Indefinite, Reducible, Degenerate };

std::string_view to_string(FormClass cls);

/// Integral binary quadratic form f(x,y) = f2 x^2 + f1 xy + f0 y^2.
///
/// Coefficients are listed in the order (f2, f1, f0) everywhere: constructor,
/// CLI flags ("f2,f1,f0") and JSON arrays.
class Form {
 public:
  Form() = default;
  Form(Integer f2, Integer f1, Integer f0)
      : f2_(std::move(f2)), f1_(std::move(f1)), f0_(std::move(f0)) {}

  const Integer& f2() const { return f2_; }
  const Integer& f1() const { return f1_; }
  const Integer& f0() const { return f0_; }

  /// f1^2 - 4 f2 f0.
  Integer discriminant() const { return f1_ * f1_ - 4 * f2_ * f0_; }
  /// The scaled invariant 4*delta = |discriminant|. delta itself is never stored.
  Integer four_delta() const { return abs(discriminant()); }

  FormClass classify() const;
  bool is_definite() const;
  bool is_indefinite() const { return classify() == FormClass::Indefinite; }
  /// Nonzero, non-square discriminant.
  bool is_irreducible() const;
  bool is_primitive() const;

  Integer operator()(const Integer& x, const Integer& y) const {
    return f2_ * x * x + f1_ * x * y + f0_ * y * y;
  }
  Rational operator()(const Rational& x, const Rational& y) const {
    return f2_ * x * x + f1_ * x * y + f0_ * y * y;
  }

  bool operator==(const Form& other) const {
    return f2_ == other.f2_ && f1_ == other.f1_ && f0_ == other.f0_;
  }

  /// Parses "f2,f1,f0".
  static Form parse(std::string_view text);
  std::string str() const;

 private:
  Integer f2_{0};
  Integer f1_{0};
  Integer f0_{0};
};

/// Throws ReducibleForm / DegenerateForm unless the form is irreducible.
void require_irreducible(const Form& f);

/// An integer pair together with its value under a form.
struct Representation {
  Integer x;
  Integer y;
  Integer h;

  static Representation of(const Form& f, Integer x, Integer y) {
    Integer h = f(x, y);
    return {std::move(x), std::move(y), std::move(h)};
  }

  bool operator==(const Representation& o) const { return x == o.x && y == o.y && h == o.h; }
  /// Lexicographic on (x, y).
  bool operator<(const Representation& o) const {
    if (x != o.x) return x < o.x;
    return y < o.y;
  }
};

inline Integer eval_form(const Form& f, const Integer& x, const Integer& y) { return f(x, y); }
inline Integer discriminant(const Form& f) { return f.discriminant(); }
inline FormClass classify(const Form& f) { return f.classify(); }

/// Doubled polarization of f at r1 = (x,y), r2 = (u,v):
///   S = 2 f2 u x + f1 (u y + v x) + 2 f0 v y.
/// Note S - 2h is the quantity the transporter literature calls m.
Integer polar_sum(const Form& f, const Representation& r1, const Representation& r2);

/// S^2 - disc * (u y - v x)^2 == 4 f(x,y) f(u,v). Holds for every integer quadruple.
bool check_composition_identity(const Form& f, const Representation& r1, const Representation& r2);

}  // namespace bqf
