#include "bqf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>

#include "bqf/error.hpp"
#include "bqf/json_io.hpp"

namespace bqf::cli {

namespace {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidForm:
    case ErrorCode::ReducibleForm:
    case ErrorCode::DegenerateForm:
      return kBadForm;
    case ErrorCode::VerificationFailure:
      return kVerification;
    default:
      return kPrecondition;
  }
}

std::string error_line(std::string_view code, const std::string& detail) {
  return json{{"error", std::string(code)}, {"detail", detail}}.dump() + "\n";
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::pair<Integer, Integer> parse_pair(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 2) throw Error(ErrorCode::InvalidArgument, "expected 'x,y', got '" + text + "'");
  return {parse_integer(parts[0]), parse_integer(parts[1])};
}

struct Flags {
  std::string form;
  std::string h;
  std::optional<std::int64_t> box;
  std::string rep1;
  std::string rep2;
  std::int64_t z = 0;
  bool include_zero = false;
  std::string csv;
  bool multiplicity = false;
  std::string point;
  std::string p;
  std::string q;
};

Form parse_form_flag(const std::string& text, CommandOutcome& outcome) {
  Form f;
  try {
    f = Form::parse(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidForm, e.what());
  }
  if (f.is_irreducible() && !f.is_primitive()) {
    outcome.err += json{{"warning", "imprimitive-form"}, {"detail", "gcd(f2, f1, f0) != 1; proceeding"}}.dump() + "\n";
  }
  return f;
}

json classify_cmd(const Form& f) {
  const FormClass cls = f.classify();
  json out{{"form", io::form(f)},
           {"discriminant", io::integer(f.discriminant())},
           {"four_delta", io::integer(f.four_delta())},
           {"class", std::string(to_string(cls))},
           {"primitive", f.is_primitive()},
           {"irreducible", f.is_irreducible()}};
  require_irreducible(f);
  return out;
}

CommandOutcome represent_cmd(const Form& f, const Flags& flags) {
  require_irreducible(f);
  const Integer h = parse_integer(flags.h);
  std::vector<Representation> reps;
  json out{{"form", io::form(f)}, {"h", io::integer(h)}};
  if (f.is_definite()) {
    if (sgn(h) * sgn(f.f2()) >= 0) reps = enumerate_reps(f, h);
    out["box"] = nullptr;
    out["complete"] = true;
  } else {
    if (!flags.box) throw Error(ErrorCode::MissingBox, "indefinite forms need --box");
    reps = enumerate_reps_box(f, h, Integer(static_cast<long>(*flags.box)));
    out["box"] = *flags.box;
    out["complete"] = false;
  }
  json list = json::array();
  for (const auto& r : reps) list.push_back(io::pair(r.x, r.y));
  out["representations"] = list;
  out["count"] = reps.size();
  return {reps.empty() ? kEmpty : kOk, out.dump() + "\n", {}};
}

CommandOutcome transport_cmd(const Form& f, const Flags& flags) {
  auto [x, y] = parse_pair(flags.rep1);
  auto [u, v] = parse_pair(flags.rep2);
  const TransportResult t = transport(f, Representation::of(f, x, y), Representation::of(f, u, v));
  json out = io::transport(t);
  return {t.checks.all() ? kOk : kVerification, out.dump() + "\n", {}};
}

CommandOutcome census_cmd(const Form& f, const Flags& flags) {
  if (flags.z < 1) throw Error(ErrorCode::InvalidArgument, "--z must be positive");
  const CensusResult c = census(f, flags.z, f.is_definite() ? std::nullopt : flags.box, flags.include_zero);
  if (!flags.csv.empty()) {
    std::ofstream csv(flags.csv);
    if (!csv) throw Error(ErrorCode::InvalidArgument, "cannot open " + flags.csv);
    csv << (flags.multiplicity ? "h,representable,multiplicity\n" : "h,representable\n");
    std::int64_t lo = -c.z;
    std::int64_t hi = c.z;
    if (f.classify() == FormClass::PositiveDefinite) lo = 0;
    if (f.classify() == FormClass::NegativeDefinite) hi = 0;
    std::size_t next = 0;
    for (std::int64_t h = lo; h <= hi; ++h) {
      if (h == 0 && !c.include_zero) continue;
      const bool hit = next < c.values.size() && c.values[next] == h;
      csv << h << ',' << (hit ? 1 : 0);
      if (flags.multiplicity) csv << ',' << (hit ? c.multiplicities[next] : 0);
      csv << '\n';
      if (hit) ++next;
    }
  }
  json out = io::census_summary(c);
  return {c.count() == 0 ? kEmpty : kOk, out.dump() + "\n", {}};
}

CommandOutcome verify_cmd(const Form& f, const Flags& flags) {
  if (flags.z < 1) throw Error(ErrorCode::InvalidArgument, "--z must be positive");
  if (!f.is_definite() && !flags.box) throw Error(ErrorCode::MissingBox, "indefinite forms need --box");
  const EssentialReport report = verify_essential(f, flags.z, flags.box);
  json out = io::essential_report(report);
  out["form"] = io::form(f);
  out["z"] = flags.z;
  out["box"] = f.is_definite() || !flags.box ? json(nullptr) : json(*flags.box);
  return {report.ok() ? kOk : kVerification, out.dump() + "\n", {}};
}

CommandOutcome line_cmd(const Form& f, const Flags& flags) {
  auto parts = split(flags.point, ',');
  if (parts.size() != 4) throw Error(ErrorCode::InvalidArgument, "--point needs four coordinates");
  QuadricPoint p;
  for (std::size_t i = 0; i < 4; ++i) p[i] = parse_rational(parts[i]);
  const RationalLine l = line_through(f, p);
  const bool ok = verify_line(f, l);
  return {ok ? kOk : kVerification, io::line(l, ok).dump() + "\n", {}};
}

CommandOutcome automorphism_cmd(const Form& f, const Flags& flags) {
  const ConicSign eps = conic_sign_for(f);
  const SlopeParam s(parse_integer(flags.p), parse_integer(flags.q));
  const ConicPoint pt = param_point(f.four_delta(), eps, s);
  const RationalMatrix t = from_conic_point(f, pt);
  const bool preserves = is_automorphism(f, t);
  const bool det_one = t.det() == 1;
  json out{{"form", io::form(f)},
           {"slope", io::pair(s.p(), s.q())},
           {"conic_point", io::conic_point(pt)},
           {"matrix", io::matrix(t)},
           {"checks", {{"preserves_form", preserves}, {"det_one", det_one}}}};
  return {preserves && det_one ? kOk : kVerification, out.dump() + "\n", {}};
}

}  // namespace

CommandOutcome run(const std::vector<std::string>& args) {
  CLI::App app{"Rational automorphisms and representation census for binary quadratic forms", "bqf"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  Flags flags;

  auto add_form = [&](CLI::App* sub) {
    sub->add_option("--form", flags.form, "coefficients f2,f1,f0 of f2 x^2 + f1 xy + f0 y^2")
        ->required()
        ->allow_extra_args(false);
  };
  auto* classify = app.add_subcommand("classify", "discriminant and class of a form");
  add_form(classify);
  auto* represent = app.add_subcommand("represent", "integer solutions of f(x,y) = h");
  add_form(represent);
  represent->add_option("--h", flags.h, "value to represent")->required()->allow_extra_args(false);
  represent->add_option("--box", flags.box, "search box |x|,|y| <= B (indefinite forms)");
  auto* transport = app.add_subcommand("transport", "automorphism carrying rep1 to rep2");
  add_form(transport);
  transport->add_option("--rep1", flags.rep1, "x,y")->required()->allow_extra_args(false);
  transport->add_option("--rep2", flags.rep2, "u,v")->required()->allow_extra_args(false);
  auto* census = app.add_subcommand("census", "representable values with |h| <= Z");
  add_form(census);
  census->add_option("--z", flags.z, "bound Z")->required();
  census->add_option("--box", flags.box, "search box (indefinite forms)");
  census->add_flag("--include-zero", flags.include_zero, "count h = 0");
  census->add_option("--csv", flags.csv, "write per-h CSV to this path");
  census->add_flag("--multiplicity", flags.multiplicity, "add a multiplicity column to the CSV");
  auto* verify = app.add_subcommand("verify-essential", "transport every pair of representations");
  add_form(verify);
  verify->add_option("--z", flags.z, "bound Z")->required();
  verify->add_option("--box", flags.box, "search box (indefinite forms)");
  auto* line = app.add_subcommand("line", "rational line on f(x1,x2) = f(x3,x4) through a point");
  add_form(line);
  line->add_option("--point", flags.point, "x1,x2,x3,x4 (a/b allowed)")->required()->allow_extra_args(false);
  auto* automorphism = app.add_subcommand("automorphism", "automorphism from slope parameter p/q");
  add_form(automorphism);
  automorphism->add_option("--p", flags.p, "numerator")->required()->allow_extra_args(false);
  automorphism->add_option("--q", flags.q, "denominator")->required()->allow_extra_args(false);

  CommandOutcome outcome;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    outcome.out = app.help();
    return outcome;
  } catch (const CLI::CallForAllHelp&) {
    outcome.out = app.help("", CLI::AppFormatMode::All);
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.exit_code = kPrecondition;
    outcome.err = error_line("usage", e.what());
    return outcome;
  }

  try {
    const Form f = parse_form_flag(flags.form, outcome);
    CommandOutcome result;
    if (*classify) {
      result.out = classify_cmd(f).dump() + "\n";
    } else if (*represent) {
      result = represent_cmd(f, flags);
    } else if (*transport) {
      result = transport_cmd(f, flags);
    } else if (*census) {
      result = census_cmd(f, flags);
    } else if (*verify) {
      result = verify_cmd(f, flags);
    } else if (*line) {
      result = line_cmd(f, flags);
    } else {
      result = automorphism_cmd(f, flags);
    }
    result.err = outcome.err + result.err;
    return result;
  } catch (const Error& e) {
    outcome.exit_code = exit_code_for(e.code());
    outcome.err += error_line(code_name(e.code()), e.what());
    return outcome;
  }
}

}  // namespace bqf::cli
