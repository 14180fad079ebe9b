#pragma once

#include <json.hpp>

#include "bqf/automorphism.hpp"
#include "bqf/conic.hpp"
#include "bqf/form.hpp"
#include "bqf/quadric.hpp"
#include "bqf/representations.hpp"
#include "bqf/transporter.hpp"

namespace bqf::io {

using nlohmann::json;

/// JSON number when it fits in 64 bits, decimal string otherwise.
json integer(const Integer& n);
/// "num/den" string (lowest terms, positive denominator), or "num".
json rational(const Rational& q);

json form(const Form& f);
json pair(const Integer& x, const Integer& y);
json conic_point(const ConicPoint& pt);
json matrix(const RationalMatrix& t);
json transport(const TransportResult& t);
json census_summary(const CensusResult& c);
json essential_report(const EssentialReport& r);
json line(const RationalLine& line, bool verified);

/// Inverse of conic_point / matrix for string-encoded rationals.
ConicPoint parse_conic_point(const json& j, ConicSign epsilon);
RationalMatrix parse_matrix(const json& j);

}  // namespace bqf::io
