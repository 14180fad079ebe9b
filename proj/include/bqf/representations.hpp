#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bqf/form.hpp"
#include "bqf/transporter.hpp"

namespace bqf {

/// All integer solutions of f(x, y) = h for a definite form, sorted by (x, y).
///
/// y ranges over |y| <= isqrt(4 |f2 h| / |disc|); for each y the quadratic in x
/// is solved exactly (its discriminant disc y^2 + 4 f2 h must be a square).
/// Throws WrongClass for non-definite forms, SignMismatch when h has the
/// opposite sign to f2.
std::vector<Representation> enumerate_reps(const Form& f, const Integer& h);

/// Solutions of f(x, y) = h with |x|, |y| <= box, sorted by (x, y).
/// A truncation of the (infinite) solution set of an indefinite form.
std::vector<Representation> enumerate_reps_box(const Form& f, const Integer& h, const Integer& box);

/// Representable values h with |h| <= z, with lattice-point multiplicities.
///
/// For definite forms the whole region |f| <= z is swept, so the result is
/// exact. For indefinite forms only |x|, |y| <= box is swept and the result is
/// a lower bound on the true set.
struct CensusResult {
  Form form;
  std::int64_t z = 0;
  std::optional<std::int64_t> box;
  bool include_zero = false;
  /// Ascending.
  std::vector<std::int64_t> values;
  /// multiplicities[i] is the number of lattice points found with value values[i].
  std::vector<std::uint64_t> multiplicities;

  std::size_t count() const { return values.size(); }
  bool is_lower_bound() const { return box.has_value(); }
  bool contains(std::int64_t h) const;
  /// 0 when h is not in values.
  std::uint64_t multiplicity(std::int64_t h) const;
};

/// Largest accepted z; the sweep keeps one counter per candidate value.
inline constexpr std::int64_t kMaxCensusZ = std::int64_t{1} << 31;

/// Census of f up to z. box is required iff f is indefinite (MissingBox) and
/// ignored for definite forms. workers = 0 picks the hardware concurrency;
/// the result does not depend on the worker count.
/// Throws ReducibleForm/DegenerateForm, MissingBox, InvalidArgument (z out of range).
CensusResult census(const Form& f, std::int64_t z, std::optional<std::int64_t> box = std::nullopt,
                    bool include_zero = false, unsigned workers = 0);

namespace detail {
/// census() with the arithmetic path selectable; force_exact skips the
/// machine-integer sweep even when the coefficients would allow it.
CensusResult census_impl(const Form& f, std::int64_t z, std::optional<std::int64_t> box, bool include_zero,
                         unsigned workers, bool force_exact);
}  // namespace detail

struct EssentialFailure {
  Integer h;
  Representation r1;
  Representation r2;
  TransportChecks checks;
  std::string detail;
};

struct EssentialReport {
  /// Number of h with at least two representations.
  std::uint64_t checked_values = 0;
  /// Ordered pairs (r1, r2), r1 != r2, that were transported.
  std::uint64_t pairs_checked = 0;
  std::vector<EssentialFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// For every representable 0 < |h| <= z, transports every ordered pair of
/// distinct representations and records any pair where T r1 != r2,
/// f o T != f or det T != 1. An empty failure list is the expected outcome.
EssentialReport verify_essential(const Form& f, std::int64_t z, std::optional<std::int64_t> box = std::nullopt);

/// count * sqrt(ln z) / z. Only meaningful for positive definite forms, z >= 100.
/// Throws WrongClass or InvalidArgument.
double landau_ratio(const CensusResult& c);

}  // namespace bqf
