#include "bqf/json_io.hpp"

#include <limits>

#include "bqf/error.hpp"

namespace bqf::io {

json integer(const Integer& n) {
  if (n.fits_slong_p()) return json(static_cast<std::int64_t>(n.get_si()));
  return json(n.get_str());
}

json rational(const Rational& q) { return json(to_string(q)); }

json form(const Form& f) { return json::array({integer(f.f2()), integer(f.f1()), integer(f.f0())}); }

json pair(const Integer& x, const Integer& y) { return json::array({integer(x), integer(y)}); }

json conic_point(const ConicPoint& pt) { return {{"c", rational(pt.c)}, {"w", rational(pt.w)}}; }

json matrix(const RationalMatrix& t) {
  return json::array({json::array({rational(t.t1), rational(t.t2)}), json::array({rational(t.t3), rational(t.t4)})});
}

json transport(const TransportResult& t) {
  json out;
  out["matrix"] = matrix(t.matrix);
  out["conic_point"] = conic_point(t.conic_point);
  out["legacy_mn"] = json::array({rational(t.legacy_mn[0]), rational(t.legacy_mn[1])});
  out["checks"] = {{"maps_r1_to_r2", t.checks.maps_r1_to_r2},
                   {"preserves_form", t.checks.preserves_form},
                   {"det_one", t.checks.det_one}};
  return out;
}

json census_summary(const CensusResult& c) {
  json out;
  out["form"] = form(c.form);
  out["z"] = c.z;
  out["box"] = c.box ? json(*c.box) : json(nullptr);
  out["count"] = c.count();
  out["include_zero"] = c.include_zero;
  out["lower_bound"] = c.is_lower_bound();
  if (c.form.classify() == FormClass::PositiveDefinite && c.z >= 100) {
    out["ratio"] = landau_ratio(c);
  } else {
    out["ratio"] = nullptr;
  }
  return out;
}

json essential_report(const EssentialReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"h", integer(f.h)},
                        {"r1", pair(f.r1.x, f.r1.y)},
                        {"r2", pair(f.r2.x, f.r2.y)},
                        {"checks",
                         {{"maps_r1_to_r2", f.checks.maps_r1_to_r2},
                          {"preserves_form", f.checks.preserves_form},
                          {"det_one", f.checks.det_one}}},
                        {"detail", f.detail}});
  }
  return {{"checked_values", r.checked_values}, {"pairs_checked", r.pairs_checked}, {"failures", failures}};
}

json line(const RationalLine& l, bool verified) {
  json base = json::array();
  json dir = json::array();
  for (const auto& q : l.base) base.push_back(rational(q));
  for (const auto& q : l.direction) dir.push_back(rational(q));
  return {{"base", base}, {"direction", dir}, {"verified", verified}};
}

namespace {

Rational read_rational(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  throw Error(ErrorCode::InvalidArgument, "expected a rational string");
}

}  // namespace

ConicPoint parse_conic_point(const json& j, ConicSign epsilon) {
  return {read_rational(j.at("c")), read_rational(j.at("w")), epsilon};
}

RationalMatrix parse_matrix(const json& j) {
  return {read_rational(j.at(0).at(0)), read_rational(j.at(0).at(1)), read_rational(j.at(1).at(0)),
          read_rational(j.at(1).at(1))};
}

}  // namespace bqf::io
