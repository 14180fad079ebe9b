#pragma once

#include <array>

#include "bqf/automorphism.hpp"
#include "bqf/conic.hpp"
#include "bqf/form.hpp"

namespace bqf {

struct TransportChecks {
  bool maps_r1_to_r2 = false;
  bool preserves_form = false;
  bool det_one = false;

  bool all() const { return maps_r1_to_r2 && preserves_form && det_one; }
};

struct TransportResult {
  RationalMatrix matrix;
  ConicPoint conic_point;
  /// The classical witness (m, n) = (S - 2h, +-2 delta (u y - v x)), kept for comparison.
  /// Rational because 2 delta is a half-integer when the discriminant is odd.
  std::array<Rational, 2> legacy_mn;
  TransportChecks checks;
};

/// The special rational automorphism T of f with T (x, y) = (u, v), where
/// r1 = (x, y) and r2 = (u, v) represent the same h.
///
/// Solving T_f(c, w) (x, y) = (u, v) for the conic coordinates gives
///   c = S / (2h),  S = polar_sum(f, r1, r2),
///   w = (u y - v x) / h   (definite),   w = (x v - y u) / h   (indefinite),
/// and c^2 +- delta w^2 = 1 is the composition identity divided by 4h^2.
/// Since f is anisotropic over Q this T is the unique det-1 solution.
///
/// h = 0 admits only (0,0) -> (0,0), which returns the identity.
/// Throws ValueMismatch, ReducibleForm/DegenerateForm; VerificationFailure if
/// the recomputed conic membership ever fails.
TransportResult transport(const Form& f, const Representation& r1, const Representation& r2);

/// Exact checks T r1 == r2, f o T == f, det T == 1.
TransportChecks check_transport(const Form& f, const RationalMatrix& t, const Representation& r1,
                                const Representation& r2);

/// The literal (m, n) witness matrix
///   definite:   1/(delta m^2 + n^2) [[delta m^2 - n^2 + f1 mn, 2 f0 mn], [-2 f2 mn, delta m^2 - n^2 - f1 mn]]
///   indefinite: 1/(delta m^2 - n^2) [[delta m^2 + n^2 - f1 mn, -2 f0 mn], [2 f2 mn, delta m^2 + n^2 + f1 mn]]
/// with m = S - 2h, n = 2 delta (u y - v x) (definite) or 2 delta (v x - u y) (indefinite).
/// On generic inputs it sends r1 to -r2, not r2; transport() is the construction to use.
/// Throws DegenerateWitness when the normalizer vanishes (r1 == r2).
RationalMatrix paper_mn_matrix(const Form& f, const Representation& r1, const Representation& r2);

/// (m, n) as used by paper_mn_matrix.
std::array<Rational, 2> legacy_mn(const Form& f, const Representation& r1, const Representation& r2);

}  // namespace bqf
