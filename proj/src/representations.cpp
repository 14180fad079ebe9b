#include "bqf/representations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <thread>

#include "bqf/error.hpp"

namespace bqf {

namespace {

using Wide = __int128;

Wide isqrt_floor(Wide n) {
  if (n < 2) return n;
  auto r = static_cast<Wide>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Integer isqrt_floor(const Integer& n) { return isqrt(n); }

// Floor division for b > 0.
template <class Int>
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && a < 0) q -= 1;
  return q;
}

std::int64_t as_int64(Wide v) { return static_cast<std::int64_t>(v); }
std::int64_t as_int64(const Integer& v) { return v.get_si(); }

Wide to_wide(const Integer& v) { return static_cast<Wide>(to_int64(v)); }

// Per-worker lattice-point tally over value slots [0, slots). Dense counters
// for moderate slot ranges; a hit list otherwise, so a sparse sweep with a
// huge z does not allocate one counter per candidate value.
class Tally {
 public:
  static constexpr std::size_t kDenseLimit = std::size_t{1} << 25;

  explicit Tally(std::size_t slots) : dense_(slots <= kDenseLimit) {
    if (dense_) counts_.assign(slots, 0);
  }

  void add(std::int64_t slot) {
    if (dense_) {
      ++counts_[static_cast<std::size_t>(slot)];
    } else {
      hits_.push_back(slot);
    }
  }

  void merge(const Tally& other) {
    if (dense_) {
      for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
    } else {
      hits_.insert(hits_.end(), other.hits_.begin(), other.hits_.end());
    }
  }

  /// Calls fn(slot, count) for every occupied slot in ascending order.
  template <class Fn>
  void for_each(Fn&& fn) {
    if (dense_) {
      for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] != 0) fn(static_cast<std::int64_t>(i), counts_[i]);
      }
      return;
    }
    std::sort(hits_.begin(), hits_.end());
    for (std::size_t i = 0; i < hits_.size();) {
      std::size_t j = i;
      while (j < hits_.size() && hits_[j] == hits_[i]) ++j;
      fn(hits_[i], static_cast<std::uint64_t>(j - i));
      i = j;
    }
  }

 private:
  bool dense_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::int64_t> hits_;
};

using Counts = Tally;

// Positive definite g = a x^2 + b xy + c y^2 (a > 0, disc < 0): for each row y,
// every lattice point with g <= z lands in counts[g].
template <class Int>
void sweep_ellipse_rows(const Int& a, const Int& b, const Int& c, const Int& disc, std::int64_t z,
                        std::int64_t y_lo, std::int64_t y_hi, Counts& counts) {
  const Int zz = Int(z);
  const Int two_a = 2 * a;
  for (std::int64_t y = y_lo; y <= y_hi; ++y) {
    const Int yy = Int(y);
    const Int row_disc = disc * yy * yy + 4 * a * zz;
    if (row_disc < 0) continue;
    const Int r = isqrt_floor(row_disc);
    const Int by = b * yy;
    const std::int64_t x_lo = as_int64(floor_div(Int(-by - r), two_a));
    const std::int64_t x_hi = as_int64(floor_div(Int(-by + r), two_a)) + 1;
    const Int cy2 = c * yy * yy;
    for (std::int64_t x = x_lo; x <= x_hi; ++x) {
      const Int xx = Int(x);
      const Int g = a * xx * xx + by * xx + cy2;
      if (g >= 0 && g <= zz) counts.add(as_int64(g));
    }
  }
}

// Box sweep: counts[f + z] for every |x|, |y| <= box with |f| <= z.
template <class Int>
void sweep_box_rows(const Int& a, const Int& b, const Int& c, std::int64_t z, std::int64_t box,
                    std::int64_t y_lo, std::int64_t y_hi, Counts& counts) {
  const Int zz = Int(z);
  for (std::int64_t y = y_lo; y <= y_hi; ++y) {
    const Int yy = Int(y);
    const Int by = b * yy;
    const Int cy2 = c * yy * yy;
    for (std::int64_t x = -box; x <= box; ++x) {
      const Int xx = Int(x);
      const Int g = a * xx * xx + by * xx + cy2;
      if (g >= -zz && g <= zz) counts.add(as_int64(g + zz));
    }
  }
}

// Splits [lo, hi] into contiguous chunks, one counter array per worker,
// merged by summation; the merged array is independent of the split.
template <class RowFn>
Counts run_partitioned(std::int64_t lo, std::int64_t hi, std::size_t slots, unsigned workers, RowFn rows) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const std::int64_t span = hi - lo + 1;
  if (span <= 0) return Counts(slots);
  workers = static_cast<unsigned>(std::min<std::int64_t>(workers, span));
  std::vector<Counts> locals(workers, Counts(slots));
  std::vector<std::thread> threads;
  const std::int64_t chunk = (span + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::int64_t a = lo + chunk * w;
    const std::int64_t b = std::min(hi, a + chunk - 1);
    if (a > b) continue;
    if (workers == 1) {
      rows(a, b, locals[w]);
    } else {
      threads.emplace_back([&, a, b, w] { rows(a, b, locals[w]); });
    }
  }
  for (auto& t : threads) t.join();
  Counts merged = std::move(locals[0]);
  for (unsigned w = 1; w < workers; ++w) merged.merge(locals[w]);
  return merged;
}

bool fits_fast_path(const Form& f) {
  static const Integer limit = Integer(1) << 31;
  return abs(f.f2()) < limit && abs(f.f1()) < limit && abs(f.f0()) < limit;
}

void insert_if_new(std::set<std::pair<Integer, Integer>>& seen, const Integer& x, const Integer& y) {
  seen.emplace(x, y);
}

std::vector<Representation> to_reps(const Form& f, const std::set<std::pair<Integer, Integer>>& seen) {
  std::vector<Representation> out;
  out.reserve(seen.size());
  for (const auto& [x, y] : seen) out.push_back(Representation::of(f, x, y));
  return out;
}

// Integer roots x of f2 x^2 + (f1 y) x + (f0 y^2 - h) = 0, f2 != 0.
template <class Sink>
void solve_row(const Form& f, const Integer& h, const Integer& y, Sink&& sink) {
  const Integer row_disc = f.discriminant() * y * y + 4 * f.f2() * h;
  if (sgn(row_disc) < 0 || !is_perfect_square(row_disc)) return;
  const Integer r = isqrt(row_disc);
  const Integer two_a = 2 * f.f2();
  for (const Integer& num : {Integer(-f.f1() * y - r), Integer(-f.f1() * y + r)}) {
    if (num % two_a == 0) sink(Integer(num / two_a));
  }
}

}  // namespace

std::vector<Representation> enumerate_reps(const Form& f, const Integer& h) {
  if (!f.is_definite()) {
    throw Error(ErrorCode::WrongClass, "enumerate_reps needs a definite form; use enumerate_reps_box");
  }
  if (sgn(h) * sgn(f.f2()) < 0) {
    throw Error(ErrorCode::SignMismatch, "h = " + h.get_str() + " has the wrong sign for " + f.str());
  }
  const Integer bound = isqrt(Integer(4 * abs(f.f2() * h) / f.four_delta()));
  std::set<std::pair<Integer, Integer>> seen;
  for (Integer y = -bound; y <= bound; ++y) {
    solve_row(f, h, y, [&](const Integer& x) { insert_if_new(seen, x, y); });
  }
  return to_reps(f, seen);
}

std::vector<Representation> enumerate_reps_box(const Form& f, const Integer& h, const Integer& box) {
  if (sgn(box) < 0) throw Error(ErrorCode::InvalidArgument, "box must be nonnegative");
  std::set<std::pair<Integer, Integer>> seen;
  for (Integer y = -box; y <= box; ++y) {
    if (f.f2() != 0) {
      solve_row(f, h, y, [&](const Integer& x) {
        if (abs(x) <= box) insert_if_new(seen, x, y);
      });
      continue;
    }
    // Linear in x: (f1 y) x = h - f0 y^2.
    const Integer slope = f.f1() * y;
    const Integer rest = h - f.f0() * y * y;
    if (slope == 0) {
      if (rest == 0) {
        for (Integer x = -box; x <= box; ++x) insert_if_new(seen, x, y);
      }
    } else if (rest % slope == 0) {
      Integer x = rest / slope;
      if (abs(x) <= box) insert_if_new(seen, x, y);
    }
  }
  return to_reps(f, seen);
}

bool CensusResult::contains(std::int64_t h) const {
  return std::binary_search(values.begin(), values.end(), h);
}

std::uint64_t CensusResult::multiplicity(std::int64_t h) const {
  auto it = std::lower_bound(values.begin(), values.end(), h);
  if (it == values.end() || *it != h) return 0;
  return multiplicities[static_cast<std::size_t>(it - values.begin())];
}

CensusResult census(const Form& f, std::int64_t z, std::optional<std::int64_t> box, bool include_zero,
                    unsigned workers) {
  return detail::census_impl(f, z, box, include_zero, workers, /*force_exact=*/false);
}

CensusResult detail::census_impl(const Form& f, std::int64_t z, std::optional<std::int64_t> box,
                                 bool include_zero, unsigned workers, bool force_exact) {
  require_irreducible(f);
  if (z < 1 || z > kMaxCensusZ) {
    throw Error(ErrorCode::InvalidArgument, "z must lie in [1, 2^31]");
  }
  CensusResult result;
  result.form = f;
  result.z = z;
  result.include_zero = include_zero;
  const bool fast = !force_exact && fits_fast_path(f);

  auto keep = [&](std::int64_t h, std::uint64_t count) {
    if (h == 0 && !include_zero) return;
    result.values.push_back(h);
    result.multiplicities.push_back(count);
  };

  if (f.is_definite()) {
    const int sign = sgn(f.f2());
    const Integer a = abs(f.f2());
    const Integer b = sign * f.f1();
    const Integer c = sign * f.f0();
    const Integer y_bound = isqrt(Integer(4 * a * z / f.four_delta()));
    if (y_bound > Integer(1) << 40) throw Error(ErrorCode::InvalidArgument, "row range too large for census");
    const std::int64_t rows = to_int64(y_bound);
    const auto slots = static_cast<std::size_t>(z) + 1;
    Counts counts(0);
    if (fast) {
      const Wide wa = to_wide(a), wb = to_wide(b), wc = to_wide(c), wd = to_wide(f.discriminant());
      counts = run_partitioned(-rows, rows, slots, workers, [&](std::int64_t lo, std::int64_t hi, Counts& out) {
        sweep_ellipse_rows<Wide>(wa, wb, wc, wd, z, lo, hi, out);
      });
    } else {
      const Integer disc = f.discriminant();
      counts = run_partitioned(-rows, rows, slots, workers, [&](std::int64_t lo, std::int64_t hi, Counts& out) {
        sweep_ellipse_rows<Integer>(a, b, c, disc, z, lo, hi, out);
      });
    }
    counts.for_each([&](std::int64_t g, std::uint64_t n) { keep(sign * g, n); });
    if (sign < 0) {
      std::reverse(result.values.begin(), result.values.end());
      std::reverse(result.multiplicities.begin(), result.multiplicities.end());
    }
    return result;
  }

  if (!box) throw Error(ErrorCode::MissingBox, "indefinite census needs --box");
  if (*box < 0 || *box > (std::int64_t{1} << 31)) throw Error(ErrorCode::InvalidArgument, "box out of range");
  result.box = box;
  const auto slots = static_cast<std::size_t>(2 * z) + 1;
  const std::int64_t b = *box;
  Counts counts(0);
  if (fast) {
    const Wide w2 = to_wide(f.f2()), w1 = to_wide(f.f1()), w0 = to_wide(f.f0());
    counts = run_partitioned(-b, b, slots, workers, [&](std::int64_t lo, std::int64_t hi, Counts& out) {
      sweep_box_rows<Wide>(w2, w1, w0, z, b, lo, hi, out);
    });
  } else {
    counts = run_partitioned(-b, b, slots, workers, [&](std::int64_t lo, std::int64_t hi, Counts& out) {
      sweep_box_rows<Integer>(f.f2(), f.f1(), f.f0(), z, b, lo, hi, out);
    });
  }
  counts.for_each([&](std::int64_t slot, std::uint64_t n) { keep(slot - z, n); });
  return result;
}

EssentialReport verify_essential(const Form& f, std::int64_t z, std::optional<std::int64_t> box) {
  require_irreducible(f);
  const bool definite = f.is_definite();
  const CensusResult values = census(f, z, box, /*include_zero=*/false);
  EssentialReport report;
  for (std::int64_t hv : values.values) {
    const Integer h(static_cast<long>(hv));
    const auto reps = definite ? enumerate_reps(f, h) : enumerate_reps_box(f, h, Integer(static_cast<long>(*box)));
    if (reps.size() < 2) continue;
    ++report.checked_values;
    for (const auto& r1 : reps) {
      for (const auto& r2 : reps) {
        if (r1 == r2) continue;
        ++report.pairs_checked;
        try {
          const TransportResult t = transport(f, r1, r2);
          if (!t.checks.all()) report.failures.push_back({h, r1, r2, t.checks, "check failed"});
        } catch (const Error& e) {
          report.failures.push_back({h, r1, r2, {}, e.what()});
        }
      }
    }
  }
  return report;
}

double landau_ratio(const CensusResult& c) {
  if (c.form.classify() != FormClass::PositiveDefinite) {
    throw Error(ErrorCode::WrongClass, "landau ratio needs a positive definite form");
  }
  if (c.z < 100) throw Error(ErrorCode::InvalidArgument, "landau ratio needs z >= 100");
  const auto z = static_cast<double>(c.z);
  return static_cast<double>(c.count()) * std::sqrt(std::log(z)) / z;
}

}  // namespace bqf
