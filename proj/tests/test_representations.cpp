#include <doctest.h>

#include <algorithm>
#include <set>

#include "bqf/error.hpp"
#include "bqf/representations.hpp"
#include "oracles.hpp"

using namespace bqf;

namespace {

using Pairs = std::vector<std::pair<std::int64_t, std::int64_t>>;

Pairs as_pairs(const std::vector<Representation>& reps) {
  Pairs out;
  for (const auto& r : reps) out.emplace_back(r.x.get_si(), r.y.get_si());
  return out;
}

bool contains(const Pairs& ps, std::int64_t x, std::int64_t y) {
  return std::find(ps.begin(), ps.end(), std::make_pair(x, y)) != ps.end();
}

}  // namespace

TEST_CASE("enumerate_reps examples") {
  const Form f(1, 0, 1);
  const Pairs reps = as_pairs(enumerate_reps(f, 25));
  CHECK(reps == oracle::reps_in_square({1, 0, 1}, 25, 5));
  CHECK(reps.size() == 12);
  CHECK(contains(reps, -3, 4));
  CHECK(contains(reps, 0, -5));
  CHECK(enumerate_reps(f, 3).empty());
  CHECK(as_pairs(enumerate_reps(f, 0)) == Pairs{{0, 0}});
}

TEST_CASE("enumerate_reps errors") {
  try {
    enumerate_reps(Form(1, 0, -2), 1);
    FAIL("expected WrongClass");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongClass);
  }
  try {
    enumerate_reps(Form(1, 0, 1), -5);
    FAIL("expected SignMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SignMismatch);
  }
  // Negative definite forms take negative values.
  CHECK(enumerate_reps(Form(-1, 0, -1), -25).size() == 12);
}

TEST_CASE("enumerate_reps matches brute force for every h up to 10^4") {
  for (const auto& [f, sf] : {std::pair{Form(1, 0, 1), oracle::SmallForm{1, 0, 1}},
                              std::pair{Form(2, 1, 3), oracle::SmallForm{2, 1, 3}},
                              std::pair{Form(-3, 2, -5), oracle::SmallForm{-3, 2, -5}}}) {
    const std::int64_t z = 10'000;
    const std::int64_t r = oracle::definite_radius(sf, z);
    const int sign = sgn(f.f2());
    // Bucket the brute-force square once, then compare per h.
    std::map<std::int64_t, Pairs> buckets;
    for (std::int64_t x = -r; x <= r; ++x) {
      for (std::int64_t y = -r; y <= r; ++y) {
        const std::int64_t v = sf(x, y);
        if (v * sign <= z) buckets[v].emplace_back(x, y);
      }
    }
    for (std::int64_t k = 0; k <= z; ++k) {
      const std::int64_t h = sign * k;
      const Pairs got = as_pairs(enumerate_reps(f, Integer(static_cast<long>(h))));
      const auto it = buckets.find(h);
      const Pairs expected = it == buckets.end() ? Pairs{} : it->second;
      REQUIRE(got == expected);
    }
  }
}

TEST_CASE("enumerate_reps_box examples") {
  const Form pell(1, 0, -2);
  const Pairs one = as_pairs(enumerate_reps_box(pell, 1, 20));
  for (auto [x, y] : Pairs{{1, 0}, {-1, 0}, {3, 2}, {3, -2}, {-3, 2}, {-3, -2}, {17, 12}, {-17, -12}, {17, -12}}) {
    CHECK(contains(one, x, y));
  }
  CHECK(one == oracle::reps_in_square({1, 0, -2}, 1, 20));

  const Pairs minus_one = as_pairs(enumerate_reps_box(pell, -1, 10));
  for (auto [x, y] : Pairs{{1, 1}, {-1, 1}, {1, -1}, {-1, -1}, {7, 5}, {-7, -5}, {7, -5}, {-7, 5}}) {
    CHECK(contains(minus_one, x, y));
  }
  CHECK(minus_one == oracle::reps_in_square({1, 0, -2}, -1, 10));

  for (const Form& f : {Form(1, 0, -2), Form(1, 1, -1), Form(2, 1, 3)}) {
    CHECK(as_pairs(enumerate_reps_box(f, 0, 30)) == Pairs{{0, 0}});
  }
}

TEST_CASE("enumerate_reps_box matches brute force on assorted forms") {
  const oracle::SmallForm forms[] = {{1, 1, -1}, {2, 1, -2}, {3, -5, -1}, {0, 1, 0}, {0, 3, -2}, {1, 0, -1}};
  for (const auto& sf : forms) {
    const Form f(sf.a, sf.b, sf.c);
    for (long h = -40; h <= 40; ++h) {
      REQUIRE(as_pairs(enumerate_reps_box(f, h, 15)) == oracle::reps_in_square(sf, h, 15));
    }
  }
}

TEST_CASE("census examples") {
  const Form f(1, 0, 1);
  const CensusResult c100 = census(f, 100);
  CHECK(c100.count() == 43);
  const CensusResult c2 = census(f, 2);
  CHECK(c2.values == std::vector<std::int64_t>{1, 2});
  CHECK(c2.multiplicity(1) == 4);
  CHECK(c2.multiplicity(2) == 4);
  CHECK(c2.multiplicity(3) == 0);
  CHECK_FALSE(c2.is_lower_bound());

  const CensusResult with_zero = census(f, 2, std::nullopt, true);
  CHECK(with_zero.values == std::vector<std::int64_t>{0, 1, 2});
  CHECK(with_zero.multiplicity(0) == 1);

  const CensusResult pell = census(Form(1, 0, -2), 10, 100);
  CHECK(pell.is_lower_bound());
  for (std::int64_t h : {1, -1, 2, -2, 7, -7, 4, 8}) CHECK(pell.contains(h));
  CHECK_FALSE(pell.contains(3));
  CHECK_FALSE(pell.contains(5));
}

TEST_CASE("census errors") {
  try {
    census(Form(1, 0, -2), 10);
    FAIL("expected MissingBox");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingBox);
  }
  CHECK_THROWS_AS(census(Form(1, 0, 1), 0), Error);
  CHECK_THROWS_AS(census(Form(1, 0, -1), 10, 10), Error);
}

TEST_CASE("census agrees with per-h enumeration and the square sieve") {
  for (const auto& sf : {oracle::SmallForm{1, 0, 1}, oracle::SmallForm{1, 1, 1}, oracle::SmallForm{2, 1, 3},
                         oracle::SmallForm{-3, 2, -5}, oracle::SmallForm{1, 0, 5}}) {
    const Form f(sf.a, sf.b, sf.c);
    const std::int64_t z = 3000;
    const CensusResult c = census(f, z);
    const auto sieve = oracle::square_sieve(sf, z, oracle::definite_radius(sf, z));
    std::vector<std::int64_t> expected;
    for (const auto& [h, n] : sieve) {
      expected.push_back(h);
      REQUIRE(c.multiplicity(h) == n);
    }
    REQUIRE(c.values == expected);
    std::vector<std::int64_t> from_enumeration;
    const int sign = sgn(f.f2());
    for (std::int64_t k = 1; k <= z; ++k) {
      if (!enumerate_reps(f, Integer(static_cast<long>(sign * k))).empty()) from_enumeration.push_back(sign * k);
    }
    std::sort(from_enumeration.begin(), from_enumeration.end());
    REQUIRE(c.values == from_enumeration);
  }
}

TEST_CASE("indefinite census equals the square sieve") {
  for (const auto& sf : {oracle::SmallForm{1, 1, -1}, oracle::SmallForm{2, 1, -2}, oracle::SmallForm{-3, 7, 2}}) {
    const Form f(sf.a, sf.b, sf.c);
    const CensusResult c = census(f, 200, 60);
    const auto sieve = oracle::square_sieve(sf, 200, 60);
    std::vector<std::int64_t> expected;
    for (const auto& [h, n] : sieve) {
      expected.push_back(h);
      REQUIRE(c.multiplicity(h) == n);
    }
    REQUIRE(c.values == expected);
  }
}

TEST_CASE("census is monotone in z") {
  const Form f(2, 1, 3);
  std::size_t previous = 0;
  for (std::int64_t z : {10, 50, 100, 500, 1000}) {
    const CensusResult c = census(f, z);
    CHECK(c.count() >= previous);
    for (auto h : c.values) CHECK((h > 0 && h <= z));
    previous = c.count();
  }
}

TEST_CASE("census does not depend on the worker count") {
  for (const auto& [f, box] : {std::pair{Form(1, 0, 1), std::optional<std::int64_t>{}},
                               std::pair{Form(2, 1, -2), std::optional<std::int64_t>{150}}}) {
    const CensusResult one = census(f, 20'000, box, true, 1);
    for (unsigned workers : {2u, 3u, 7u, 16u}) {
      const CensusResult many = census(f, 20'000, box, true, workers);
      REQUIRE(many.values == one.values);
      REQUIRE(many.multiplicities == one.multiplicities);
    }
  }
}

TEST_CASE("exact-arithmetic sweep matches the machine-integer sweep") {
  for (const auto& [f, box] : {std::pair{Form(1, 0, 1), std::optional<std::int64_t>{}},
                               std::pair{Form(-3, 2, -5), std::optional<std::int64_t>{}},
                               std::pair{Form(2, 1, -2), std::optional<std::int64_t>{40}}}) {
    const CensusResult fast = census(f, 3000, box, true, 2);
    const CensusResult exact = detail::census_impl(f, 3000, box, true, 2, /*force_exact=*/true);
    CHECK(exact.values == fast.values);
    CHECK(exact.multiplicities == fast.multiplicities);
  }
}

TEST_CASE("census with coefficients beyond the machine-integer path") {
  // k (x^2 + y^2) with k = 2^31: the only value up to 2^31 is k itself.
  const Integer k = Integer(1) << 31;
  const CensusResult c = census(Form(k, 0, k), std::int64_t{1} << 31);
  CHECK(c.values == std::vector<std::int64_t>{std::int64_t{1} << 31});
  CHECK(c.multiplicity(std::int64_t{1} << 31) == 4);
}

TEST_CASE("verify_essential examples") {
  const EssentialReport sq = verify_essential(Form(1, 0, 1), 500);
  CHECK(sq.ok());
  CHECK(sq.checked_values > 0);
  CHECK(sq.pairs_checked > 0);
  CHECK(verify_essential(Form(1, 1, -1), 200, 200).ok());
  CHECK(verify_essential(Form(2, 1, 3), 500).ok());
  CHECK(verify_essential(Form(-1, 1, -3), 300).ok());
}

TEST_CASE("verify_essential on imprimitive irreducible forms") {
  for (const Form& f : {Form(2, 0, 2), Form(3, 3, 3), Form(2, 0, -4), Form(6, 2, -2)}) {
    REQUIRE_FALSE(f.is_primitive());
    REQUIRE(f.is_irreducible());
    const EssentialReport r = f.is_definite() ? verify_essential(f, 400) : verify_essential(f, 400, 80);
    CHECK(r.ok());
    CHECK(r.pairs_checked > 0);
  }
}

TEST_CASE("landau ratio") {
  CHECK(landau_ratio(census(Form(1, 0, 1), 10'000)) == doctest::Approx(2749 * std::sqrt(std::log(1e4)) / 1e4));
  CensusResult empty;
  empty.form = Form(1, 0, 1);
  empty.z = 100;
  CHECK(landau_ratio(empty) == 0.0);
  CHECK_THROWS_AS(landau_ratio(census(Form(1, 0, -2), 100, 10)), Error);
  CHECK_THROWS_AS(landau_ratio(census(Form(-1, 0, -1), 100)), Error);
  CHECK_THROWS_AS(landau_ratio(census(Form(1, 0, 1), 50)), Error);
}
