#include "bqf/arith.hpp"

#include <limits>

#include "bqf/error.hpp"

namespace bqf {

Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) throw Error(ErrorCode::InvalidArgument, "isqrt of negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n) {
  if (sgn(n) < 0) return false;
  Integer r = isqrt(n);
  return r * r == n;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw Error(ErrorCode::InvalidArgument, "expected integer, got '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw Error(ErrorCode::InvalidArgument, "expected integer, got '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw Error(ErrorCode::InvalidArgument, "denominator must be unsigned: '" + std::string(text) + "'");
  }
  return make_rational(num, parse_integer(den_text));
}

std::int64_t to_int64(const Integer& n) {
  static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  if (n < lo || n > hi) throw Error(ErrorCode::InvalidArgument, "integer out of 64-bit range: " + n.get_str());
  return std::stoll(n.get_str());
}

}  // namespace bqf
