#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace bqf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Floor of the square root of a nonnegative integer.
Integer isqrt(const Integer& n);

/// Exact perfect-square test (isqrt followed by re-multiplication).
bool is_perfect_square(const Integer& n);

/// Builds a canonical rational num/den (den != 0).
Rational make_rational(const Integer& num, const Integer& den);

/// "num/den" in lowest terms with positive denominator; plain "num" when den == 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

/// Accepts "n" or "a/b" (optional sign on the numerator). Throws Error(InvalidArgument).
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Throws Error(InvalidArgument) if n does not fit in int64.
std::int64_t to_int64(const Integer& n);

}  // namespace bqf
