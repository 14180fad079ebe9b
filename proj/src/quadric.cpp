#include "bqf/quadric.hpp"

#include "bqf/error.hpp"
#include "bqf/transporter.hpp"

namespace bqf {

namespace {

// Coefficients of f(p + s d) as a polynomial in s.
std::array<Rational, 3> restrict_to_line(const Form& f, const Rational& px, const Rational& py,
                                         const Rational& dx, const Rational& dy) {
  const Rational c0 = f(px, py);
  const Rational c1 = 2 * f.f2() * px * dx + f.f1() * (px * dy + py * dx) + 2 * f.f0() * py * dy;
  const Rational c2 = f(dx, dy);
  return {c0, c1, c2};
}

}  // namespace

bool on_quadric(const Form& f, const QuadricPoint& p) { return f(p[0], p[1]) == f(p[2], p[3]); }

RationalLine line_through(const Form& f, const QuadricPoint& p) {
  require_irreducible(f);
  if (p[0] == 0 && p[1] == 0 && p[2] == 0 && p[3] == 0) {
    throw Error(ErrorCode::ZeroPoint, "the origin lies on a line for every automorphism; none is canonical");
  }
  if (!on_quadric(f, p)) throw Error(ErrorCode::NotOnQuadric, "f(x1, x2) != f(x3, x4)");

  Integer scale = 1;
  for (const auto& coord : p) scale = lcm(scale, coord.get_den());
  std::array<Integer, 4> ip;
  for (std::size_t i = 0; i < 4; ++i) {
    const Rational scaled = p[i] * scale;
    ip[i] = scaled.get_num();
  }

  const TransportResult t =
      transport(f, Representation::of(f, ip[0], ip[1]), Representation::of(f, ip[2], ip[3]));
  return {p, {Rational(1), Rational(0), t.matrix.t1, t.matrix.t3}};
}

std::array<Rational, 3> line_defect(const Form& f, const RationalLine& line) {
  const auto& b = line.base;
  const auto& d = line.direction;
  const auto lhs = restrict_to_line(f, b[0], b[1], d[0], d[1]);
  const auto rhs = restrict_to_line(f, b[2], b[3], d[2], d[3]);
  return {Rational(lhs[0] - rhs[0]), Rational(lhs[1] - rhs[1]), Rational(lhs[2] - rhs[2])};
}

bool verify_line(const Form& f, const RationalLine& line) {
  const auto& d = line.direction;
  if (d[0] == 0 && d[1] == 0 && d[2] == 0 && d[3] == 0) return false;
  const auto defect = line_defect(f, line);
  return defect[0] == 0 && defect[1] == 0 && defect[2] == 0;
}

}  // namespace bqf
