#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sails/cli.hpp"
#include "sails/criterion.hpp"
#include "sails/geometry.hpp"
#include "sails/survey.hpp"

namespace sails::cli {

namespace {

using nlohmann::json;

// Integers go out as decimal strings so the schema never depends on size.
json big(const BigInt& n) { return n.str(); }

json big_list(const std::vector<BigInt>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(big(x));
  return out;
}

json surd_json(const QuadraticSurd& x) {
  return {{"text", to_string(x)}, {"a", big(x.a())}, {"b", big(x.b())}, {"c", big(x.c())}, {"d", big(x.d())}};
}

json cf_json(const PeriodicCF& cf) {
  return {{"text", to_string(cf)}, {"preperiod", big_list(cf.preperiod())}, {"period", big_list(cf.period())}};
}

json matrix_json(const UnimodularMatrix& m) {
  return json::array({json::array({big(m.p()), big(m.q())}), json::array({big(m.r()), big(m.s())})});
}

json point_json(const LatticePoint& v) { return json::array({big(v.x), big(v.y)}); }

std::string flag_text(const std::vector<Flag>& flags, const char* separator) {
  std::string out;
  for (Flag f : flags) {
    if (!out.empty()) out += separator;
    out += to_char(f);
  }
  return out;
}

std::string center_text(const Center& c) { return std::string(to_string(c.kind)) + "@" + std::to_string(c.position); }

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json_mode = false;
};

void emit(Context& ctx, const json& doc) { ctx.out << doc.dump(2) << "\n"; }

// Parses one command-line argument, pointing at the offending column on failure.
SurdSpec spec_arg(Context& ctx, const std::string& text) {
  try {
    return parse_spec(text);
  } catch (const ParseError& e) {
    ctx.err << "  " << text << "\n  " << std::string(std::min(e.position(), text.size()), ' ') << "^\n";
    throw;
  }
}

QuadraticSurd surd_arg(Context& ctx, const std::string& text) { return to_surd(spec_arg(ctx, text)); }

int cmd_expand(Context& ctx, const std::string& text) {
  const QuadraticSurd x = surd_arg(ctx, text);
  const PeriodicCF cf = expand(x);
  if (ctx.json_mode) {
    emit(ctx, {{"surd", surd_json(x)}, {"cf", cf_json(cf)}});
  } else {
    ctx.out << to_string(cf) << "\n";
  }
  return 0;
}

int cmd_value(Context& ctx, const std::string& text) {
  const SurdSpec spec = spec_arg(ctx, text);
  if (!std::holds_alternative<PeriodicCF>(spec)) {
    throw ParseError(0, "value takes a continued fraction literal such as [1; (2)]");
  }
  const PeriodicCF& cf = std::get<PeriodicCF>(spec);
  const QuadraticSurd x = value(cf);
  if (ctx.json_mode) {
    emit(ctx, {{"cf", cf_json(cf)}, {"surd", surd_json(x)}});
  } else {
    ctx.out << to_string(x) << "\n";
  }
  return 0;
}

int cmd_classify(Context& ctx, const std::string& text) {
  const Classification cls = classify(surd_arg(ctx, text));
  if (ctx.json_mode) {
    json witnesses = json::object();
    for (const auto& [flag, w] : cls.witnesses) {
      witnesses[std::string(1, to_char(flag))] = {{"omega", surd_json(w.omega)},
                                                  {"certificate", matrix_json(w.certificate)}};
    }
    json centers = json::array();
    for (const auto& c : cls.centers) centers.push_back({{"kind", to_string(c.kind)}, {"position", c.position}});
    json flags = json::array();
    for (Flag f : cls.flags) flags.push_back(std::string(1, to_char(f)));
    emit(ctx, {{"surd", surd_json(cls.surd)},
               {"cf", cf_json(cls.cf)},
               {"cyclic_palindrome", !cls.centers.empty()},
               {"flags", flags},
               {"centers", centers},
               {"witnesses", witnesses}});
    return 0;
  }
  ctx.out << "surd: " << to_string(cls.surd) << "\n";
  ctx.out << "cf: " << to_string(cls.cf) << "\n";
  ctx.out << "flags: " << (cls.flags.empty() ? "none" : flag_text(cls.flags, ",")) << "\n";
  std::string centers;
  for (const auto& c : cls.centers) centers += (centers.empty() ? "" : " ") + center_text(c);
  ctx.out << "centers: " << (centers.empty() ? "none" : centers) << "\n";
  for (const auto& [flag, w] : cls.witnesses) {
    const TraceNorm tn = trace_norm(w.omega);
    ctx.out << to_char(flag) << ": omega = " << to_string(w.omega) << "  trace " << to_string(tn.trace)
            << "  norm " << to_string(tn.norm) << "  certificate " << to_string(w.certificate) << "\n";
  }
  return 0;
}

int cmd_convergents(Context& ctx, const std::string& text, std::size_t n) {
  const PeriodicCF cf = expand(surd_arg(ctx, text));
  const auto cs = convergents(cf, n);
  if (ctx.json_mode) {
    json list = json::array();
    for (std::size_t k = 0; k < cs.size(); ++k) {
      list.push_back({{"k", k}, {"p", big(cs[k].p)}, {"q", big(cs[k].q)}});
    }
    emit(ctx, {{"cf", cf_json(cf)}, {"convergents", list}});
    return 0;
  }
  for (std::size_t k = 0; k < cs.size(); ++k) ctx.out << k << " " << cs[k].p << "/" << cs[k].q << "\n";
  return 0;
}

int cmd_equiv(Context& ctx, const std::string& lhs, const std::string& rhs) {
  const QuadraticSurd x = surd_arg(ctx, lhs);
  const QuadraticSurd y = surd_arg(ctx, rhs);
  const bool same = serret_equivalent(x, y);
  std::optional<UnimodularMatrix> m;
  if (same) m = serret_matrix(x, y);
  if (ctx.json_mode) {
    json doc = {{"x", surd_json(x)}, {"y", surd_json(y)}, {"equivalent", same}};
    doc["certificate"] = m ? matrix_json(*m) : json(nullptr);
    emit(ctx, doc);
    return 0;
  }
  ctx.out << "equivalent: " << (same ? "true" : "false") << "\n";
  if (m) ctx.out << "certificate: " << to_string(*m) << "  (x = mobius(certificate, y))\n";
  return 0;
}

BigInt parse_integer(const std::string& text) {
  if (text.empty()) throw ParseError(0, "expected an integer");
  const std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw ParseError(start, "expected an integer");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError(i, "expected an integer");
  }
  BigInt n(text.substr(start));
  return text[0] == '-' ? BigInt(-n) : n;
}

// "c x^2 + 2b xy + a y^2" with signs folded and zero terms dropped.
std::string form_text(const QuadraticForm& f) {
  std::string out;
  auto term = [&](const BigInt& k, const char* monomial) {
    if (k == 0) return;
    const BigInt mag = abs(k);
    if (out.empty()) {
      out += k < 0 ? "-" : "";
    } else {
      out += k < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.str() + " ";
    out += monomial;
  };
  term(f.c, "x^2");
  term(BigInt(2 * f.b), "xy");
  term(f.a, "y^2");
  return out;
}

int cmd_auto(Context& ctx, const std::vector<std::string>& coefficients) {
  const BigInt a = parse_integer(coefficients[0]);
  const BigInt b = parse_integer(coefficients[1]);
  const BigInt c = parse_integer(coefficients[2]);
  const QuadraticForm form = form_from_polynomial(a, b, c);
  const UnimodularMatrix m = lagrange_automorphism(form);
  const QuadraticSurd alpha = quadratic_roots(form.a, 2 * form.b, form.c).first;
  if (ctx.json_mode) {
    emit(ctx, {{"form", {{"a", big(form.a)}, {"b", big(form.b)}, {"c", big(form.c)}}},
               {"alpha", surd_json(alpha)},
               {"automorphism", matrix_json(m)}});
    return 0;
  }
  ctx.out << "form: " << form_text(form) << "\n";
  ctx.out << "alpha: " << to_string(alpha) << "\n";
  ctx.out << "automorphism: " << to_string(m) << "\n";
  return 0;
}

constexpr std::int64_t kSvgSpan = 400;  // lattice steps per side

Viewport fit(const std::vector<const Sail*>& sails) {
  BigInt x_min = 0, x_max = 1, y_min = 0, y_max = 1;
  for (const Sail* s : sails) {
    for (const auto& v : s->vertices) {
      x_min = std::min(x_min, v.point.x);
      x_max = std::max(x_max, v.point.x);
      y_min = std::min(y_min, v.point.y);
      y_max = std::max(y_max, v.point.y);
    }
  }
  if (x_max - x_min > kSvgSpan || y_max - y_min > kSvgSpan) {
    throw Error(ErrorKind::InvalidArgument,
                "sail spans more than " + std::to_string(kSvgSpan) + " lattice steps; narrow --range for --svg");
  }
  return {static_cast<std::int64_t>(x_min) - 1, static_cast<std::int64_t>(x_max) + 1,
          static_cast<std::int64_t>(y_min) - 1, static_cast<std::int64_t>(y_max) + 1};
}

int cmd_sail(Context& ctx, const std::string& text, const std::string& range_text, const std::string& svg_path) {
  const QuadraticSurd x = surd_arg(ctx, text);
  const auto [first, last] = parse_range(range_text);
  const Sail chain = chain_from_surd(x, {first, last});
  if (!svg_path.empty()) {
    const auto [even, odd] = split_by_parity(chain);
    const std::vector<Sail> both{even, odd};
    write_file_atomic(svg_path, emit_svg(both, fit({&even, &odd})));
  }
  if (ctx.json_mode) {
    json vertices = json::array();
    for (const auto& v : chain.vertices) {
      const BigInt* a = chain.label(v.k);
      vertices.push_back({{"k", v.k}, {"point", point_json(v.point)}, {"a", a ? big(*a) : json(nullptr)}});
    }
    emit(ctx, {{"surd", surd_json(x)},
               {"cf", cf_json(expand(x))},
               {"cone", {surd_json(chain.cone->first), surd_json(chain.cone->second)}},
               {"vertices", vertices}});
    return 0;
  }
  ctx.out << "cone: " << to_string(chain.cone->first) << " , " << to_string(chain.cone->second) << "\n";
  for (const auto& v : chain.vertices) {
    const BigInt* a = chain.label(v.k);
    ctx.out << "v_" << v.k << " = " << to_string(v.point) << (v.k % 2 == 0 ? "  even" : "  odd");
    if (a) ctx.out << "  a_" << v.k << " = " << *a;
    ctx.out << "\n";
  }
  if (!svg_path.empty()) ctx.out << "svg: " << svg_path << "\n";
  return 0;
}

std::string survey_csv(const SurveyReport& report) {
  std::ostringstream csv;
  csv << "discriminant,surd,cf,flags\n";
  for (const auto& r : report.records) {
    csv << r.discriminant << ",\"" << to_string(r.classification.surd) << "\",\""
        << to_string(r.classification.cf) << "\"," << flag_text(r.classification.flags, "") << "\n";
  }
  return csv.str();
}

json survey_json(std::int64_t dmax, const SurveyReport& report) {
  json records = json::array();
  for (const auto& r : report.records) {
    json flags = json::array();
    for (Flag f : r.classification.flags) flags.push_back(std::string(1, to_char(f)));
    records.push_back({{"discriminant", r.discriminant},
                       {"surd", to_string(r.classification.surd)},
                       {"cf", to_string(r.classification.cf)},
                       {"flags", flags}});
  }
  json violations = json::array();
  for (const auto& v : report.violations) violations.push_back({{"surd", v.surd}, {"what", v.what}});
  json sets = json::object();
  for (const auto& [set, n] : report.flag_sets) sets[set] = n;
  return {{"dmax", dmax}, {"records", records}, {"flag_sets", sets}, {"violations", violations}};
}

int cmd_survey(Context& ctx, std::int64_t dmax, unsigned threads, const std::string& json_path,
               const std::string& csv_path) {
  const SurveyReport report = run_survey(dmax, threads);
  if (!json_path.empty()) write_file_atomic(json_path, survey_json(dmax, report).dump(2) + "\n");
  if (!csv_path.empty()) write_file_atomic(csv_path, survey_csv(report));
  ctx.out << "surds: " << report.records.size() + report.violations.size() << "\n";
  for (const auto& [set, n] : report.flag_sets) ctx.out << "flags " << set << ": " << n << "\n";
  ctx.out << "violations: " << report.violations.size() << "\n";
  for (const auto& v : report.violations) ctx.err << "violation: " << v.surd << ": " << v.what << "\n";
  return report.violations.empty() ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continued fractions, Klein sails and palindromic periods of quadratic surds", "sails"};
  app.require_subcommand(1);
  Context ctx{out, err};

  std::string spec, spec2, range = "0:10", svg, json_file, csv_file;
  std::vector<std::string> coefficients;
  std::size_t count = 10;
  std::int64_t dmax = 0;
  unsigned threads = 0;

  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", ctx.json_mode, "Print JSON instead of text"); };

  auto* expand_cmd = app.add_subcommand("expand", "Periodic continued fraction of a surd");
  expand_cmd->add_option("spec", spec, "Surd, root+/- A B C, or CF literal")->required();
  json_flag(expand_cmd);

  auto* value_cmd = app.add_subcommand("value", "Exact value of a periodic continued fraction");
  value_cmd->add_option("cf", spec, "CF literal such as \"[1; (2)]\"")->required();
  json_flag(value_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "Palindromic centers, flags a-d and their witnesses");
  classify_cmd->add_option("spec", spec, "Surd, root+/- A B C, or CF literal")->required();
  json_flag(classify_cmd);

  auto* conv_cmd = app.add_subcommand("convergents", "First N convergents p_k/q_k");
  conv_cmd->add_option("spec", spec, "Surd, root+/- A B C, or CF literal")->required();
  conv_cmd->add_option("-n", count, "Number of convergents")->check(CLI::Range(1, 100000));
  json_flag(conv_cmd);

  auto* equiv_cmd = app.add_subcommand("equiv", "Whether two surds share a continued fraction tail");
  equiv_cmd->add_option("x", spec, "First surd")->required();
  equiv_cmd->add_option("y", spec2, "Second surd")->required();
  json_flag(equiv_cmd);

  auto* auto_cmd = app.add_subcommand("auto", "Automorphism of the form attached to A t^2 + B t + C");
  auto_cmd->add_option("coefficients", coefficients, "A B C")->expected(3)->required();
  json_flag(auto_cmd);

  auto* sail_cmd = app.add_subcommand("sail", "Vertices v_k of the two sails over a window of k");
  sail_cmd->add_option("spec", spec, "Surd, root+/- A B C, or CF literal")->required();
  sail_cmd->add_option("--range", range, "Window k0:k1")->capture_default_str();
  sail_cmd->add_option("--svg", svg, "Also write an SVG drawing to this file");
  json_flag(sail_cmd);

  auto* survey_cmd = app.add_subcommand("survey", "Classify every reduced surd with discriminant <= dmax");
  survey_cmd->add_option("--dmax", dmax, "Largest discriminant")->required()->check(CLI::Range(5, 10000000));
  survey_cmd->add_option("--threads", threads, "Worker threads (default: SURD_SAILS_THREADS or all cores)");
  survey_cmd->add_option("--json", json_file, "Write all records as JSON to this file");
  survey_cmd->add_option("--csv", csv_file, "Write all records as CSV to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*expand_cmd) return cmd_expand(ctx, spec);
    if (*value_cmd) return cmd_value(ctx, spec);
    if (*classify_cmd) return cmd_classify(ctx, spec);
    if (*conv_cmd) return cmd_convergents(ctx, spec, count);
    if (*equiv_cmd) return cmd_equiv(ctx, spec, spec2);
    if (*auto_cmd) return cmd_auto(ctx, coefficients);
    if (*sail_cmd) return cmd_sail(ctx, spec, range, svg);
    if (*survey_cmd) return cmd_survey(ctx, dmax, threads, json_file, csv_file);
  } catch (const Error& e) {
    err << (is_internal(e.kind()) ? "invariant violated: " : "error: ") << e.what() << "\n";
    return is_internal(e.kind()) ? 2 : 1;
  }
  return 1;
}

}  // namespace sails::cli
