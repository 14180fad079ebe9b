#include "bqf/transporter.hpp"

#include "bqf/error.hpp"

namespace bqf {

namespace {

void require_same_value(const Form& f, const Representation& r1, const Representation& r2) {
  const Integer h1 = f(r1.x, r1.y);
  const Integer h2 = f(r2.x, r2.y);
  if (h1 != r1.h || h2 != r2.h) {
    throw Error(ErrorCode::ValueMismatch, "representation value does not match the form");
  }
  if (h1 != h2) {
    throw Error(ErrorCode::ValueMismatch, "f(r1) = " + h1.get_str() + " but f(r2) = " + h2.get_str());
  }
}

}  // namespace

TransportChecks check_transport(const Form& f, const RationalMatrix& t, const Representation& r1,
                                const Representation& r2) {
  TransportChecks checks;
  auto [u, v] = apply(t, Rational(r1.x), Rational(r1.y));
  checks.maps_r1_to_r2 = u == r2.x && v == r2.y;
  checks.preserves_form = is_automorphism(f, t);
  checks.det_one = t.det() == 1;
  return checks;
}

std::array<Rational, 2> legacy_mn(const Form& f, const Representation& r1, const Representation& r2) {
  require_irreducible(f);
  require_same_value(f, r1, r2);
  const Integer& h = r1.h;
  const Integer m = polar_sum(f, r1, r2) - 2 * h;
  // 2 delta = |disc| / 2.
  Integer cross = r2.x * r1.y - r2.y * r1.x;  // u y - v x
  if (!f.is_definite()) cross = -cross;
  return {Rational(m), make_rational(f.four_delta() * cross, 2)};
}

TransportResult transport(const Form& f, const Representation& r1, const Representation& r2) {
  require_irreducible(f);
  require_same_value(f, r1, r2);
  const ConicSign eps = conic_sign_for(f);
  const Integer& h = r1.h;

  TransportResult result;
  if (h == 0) {
    // Anisotropy: (0, 0) is the only zero of f.
    result.conic_point = {Rational(1), Rational(0), eps};
    result.matrix = RationalMatrix::identity();
    result.legacy_mn = {Rational(0), Rational(0)};
    result.checks = check_transport(f, result.matrix, r1, r2);
    return result;
  }

  const Integer s = polar_sum(f, r1, r2);
  Integer cross = r2.x * r1.y - r2.y * r1.x;  // u y - v x
  if (eps == ConicSign::Hyperbola) cross = -cross;
  result.conic_point = {make_rational(s, 2 * h), make_rational(cross, h), eps};
  if (!on_conic(result.conic_point, f.four_delta())) {
    throw Error(ErrorCode::VerificationFailure, "transporter conic point off the conic");
  }
  result.matrix = from_conic_point(f, result.conic_point);
  result.legacy_mn = legacy_mn(f, r1, r2);
  result.checks = check_transport(f, result.matrix, r1, r2);
  return result;
}

RationalMatrix paper_mn_matrix(const Form& f, const Representation& r1, const Representation& r2) {
  const auto [m, n] = legacy_mn(f, r1, r2);
  const Rational delta = make_rational(f.four_delta(), 4);
  const Rational dm2 = delta * m * m;
  const Rational n2 = n * n;
  const Rational mn = m * n;
  if (f.is_definite()) {
    const Rational norm = dm2 + n2;
    if (norm == 0) throw Error(ErrorCode::DegenerateWitness, "delta m^2 + n^2 = 0");
    return {(dm2 - n2 + f.f1() * mn) / norm, 2 * f.f0() * mn / norm,
            -2 * f.f2() * mn / norm, (dm2 - n2 - f.f1() * mn) / norm};
  }
  const Rational norm = dm2 - n2;
  if (norm == 0) throw Error(ErrorCode::DegenerateWitness, "delta m^2 - n^2 = 0");
  return {(dm2 + n2 - f.f1() * mn) / norm, -2 * f.f0() * mn / norm,
          2 * f.f2() * mn / norm, (dm2 + n2 + f.f1() * mn) / norm};
}

}  // namespace bqf
