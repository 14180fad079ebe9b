#include "bqf/form.hpp"

#include <vector>

#include "bqf/error.hpp"

namespace bqf {

std::string_view to_string(FormClass cls) {
  switch (cls) {
    case FormClass::PositiveDefinite: return "positive-definite";
    case FormClass::NegativeDefinite: return "negative-definite";
    case FormClass::Indefinite: return "indefinite";
    case FormClass::Reducible: return "reducible";
    case FormClass::Degenerate: return "degenerate";
  }
  return "unknown";
}

FormClass Form::classify() const {
  const Integer disc = discriminant();
  if (disc == 0) return FormClass::Degenerate;
  if (disc < 0) {
    // disc < 0 forces f2 f0 > 0, so f2 != 0.
    return f2_ > 0 ? FormClass::PositiveDefinite : FormClass::NegativeDefinite;
  }
  return is_perfect_square(disc) ? FormClass::Reducible : FormClass::Indefinite;
}

bool Form::is_definite() const {
  FormClass c = classify();
  return c == FormClass::PositiveDefinite || c == FormClass::NegativeDefinite;
}

bool Form::is_irreducible() const {
  FormClass c = classify();
  return c != FormClass::Reducible && c != FormClass::Degenerate;
}

bool Form::is_primitive() const {
  Integer g = gcd(gcd(f2_, f1_), f0_);
  return g == 1;
}

Form Form::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) {
    throw Error(ErrorCode::InvalidArgument, "form must be 'f2,f1,f0', got '" + std::string(text) + "'");
  }
  return Form(parse_integer(parts[0]), parse_integer(parts[1]), parse_integer(parts[2]));
}

std::string Form::str() const {
  return f2_.get_str() + "," + f1_.get_str() + "," + f0_.get_str();
}

void require_irreducible(const Form& f) {
  switch (f.classify()) {
    case FormClass::Reducible:
      throw Error(ErrorCode::ReducibleForm, "discriminant of " + f.str() + " is a perfect square");
    case FormClass::Degenerate:
      throw Error(ErrorCode::DegenerateForm, "discriminant of " + f.str() + " is zero");
    default:
      return;
  }
}

Integer polar_sum(const Form& f, const Representation& r1, const Representation& r2) {
  const Integer& x = r1.x;
  const Integer& y = r1.y;
  const Integer& u = r2.x;
  const Integer& v = r2.y;
  return 2 * f.f2() * u * x + f.f1() * (u * y + v * x) + 2 * f.f0() * v * y;
}

bool check_composition_identity(const Form& f, const Representation& r1, const Representation& r2) {
  const Integer s = polar_sum(f, r1, r2);
  const Integer cross = r2.x * r1.y - r2.y * r1.x;
  const Integer lhs = s * s - f.discriminant() * cross * cross;
  const Integer rhs = 4 * f(r1.x, r1.y) * f(r2.x, r2.y);
  return lhs == rhs;
}

}  // namespace bqf
