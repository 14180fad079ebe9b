#pragma once

// Brute-force reference implementations on machine integers. Deliberately
// share no code with the library: no GMP, no row solving, no partitioning.

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

struct SmallForm {
  std::int64_t a, b, c;  // a x^2 + b xy + c y^2

  std::int64_t operator()(std::int64_t x, std::int64_t y) const { return a * x * x + b * x * y + c * y * y; }
};

/// Radius R with |f(x,y)| <= z  =>  |x|, |y| <= R, for a definite form,
/// from the smaller eigenvalue of the Gram matrix.
inline std::int64_t definite_radius(const SmallForm& f, std::int64_t z) {
  const double a = std::abs(static_cast<double>(f.a));
  const double c = std::abs(static_cast<double>(f.c));
  const double b = static_cast<double>(f.b);
  const double lambda = ((a + c) - std::sqrt((a - c) * (a - c) + b * b)) / 2.0;
  return static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(z) / lambda))) + 1;
}

/// Every (x, y) in the square |x|, |y| <= r with f(x, y) == h, lexicographic.
inline std::vector<std::pair<std::int64_t, std::int64_t>> reps_in_square(const SmallForm& f, std::int64_t h,
                                                                         std::int64_t r) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t x = -r; x <= r; ++x) {
    for (std::int64_t y = -r; y <= r; ++y) {
      if (f(x, y) == h) out.emplace_back(x, y);
    }
  }
  return out;
}

/// Sieve over the square |x|, |y| <= r: value -> lattice point count for 0 < |value| <= z.
inline std::map<std::int64_t, std::uint64_t> square_sieve(const SmallForm& f, std::int64_t z, std::int64_t r) {
  std::map<std::int64_t, std::uint64_t> hits;
  for (std::int64_t x = -r; x <= r; ++x) {
    for (std::int64_t y = -r; y <= r; ++y) {
      const std::int64_t v = f(x, y);
      if (v != 0 && v >= -z && v <= z) ++hits[v];
    }
  }
  return hits;
}

/// Sums of two squares in (0, z], marked by a flat sieve over 0 <= x <= y.
inline std::vector<std::int64_t> sums_of_two_squares(std::int64_t z) {
  std::vector<char> mark(static_cast<std::size_t>(z) + 1, 0);
  for (std::int64_t x = 0; x * x <= z; ++x) {
    for (std::int64_t y = x; x * x + y * y <= z; ++y) mark[static_cast<std::size_t>(x * x + y * y)] = 1;
  }
  std::vector<std::int64_t> out;
  for (std::int64_t h = 1; h <= z; ++h) {
    if (mark[static_cast<std::size_t>(h)]) out.push_back(h);
  }
  return out;
}

}  // namespace oracle
