#include "leonard/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "leonard/errors.hpp"
#include "leonard/json_io.hpp"
#include "leonard/lp_bounds.hpp"

namespace leonard::cli {

using leonard::to_string;

const char* to_string(Command c) {
  switch (c) {
    case Command::validate: return "validate";
    case Command::info: return "info";
    case Command::realize: return "realize";
    case Command::ekr: return "ekr";
    case Command::bound: return "bound";
    case Command::verify: return "verify";
    case Command::d4: return "d4";
  }
  return "?";
}

namespace {

struct Input {
  std::optional<ParameterArray> array;  // empty when a family failed validation
  std::optional<FamilyParams> family;
  json echo = json::object();
};

const std::string* find(const RunConfig& c, const std::string& key) {
  const auto it = c.values.find(key);
  return it == c.values.end() ? nullptr : &it->second;
}

Rational rational_flag(const RunConfig& c, const std::string& key) {
  const auto* s = find(c, key);
  if (!s) throw parse_error("missing --" + key);
  return parse_rational(*s);
}

Rational rational_flag(const RunConfig& c, const std::string& key, const Rational& fallback) {
  const auto* s = find(c, key);
  return s ? parse_rational(*s) : fallback;
}

int int_flag(const RunConfig& c, const std::string& key) {
  const Rational x = rational_flag(c, key);
  if (!is_integer(x)) throw parse_error("--" + key + " must be an integer");
  return static_cast<int>(numerator(x).convert_to<long>());
}

FamilyParams family_from_flags(const RunConfig& c) {
  const std::string& name = *c.family;
  if (name == "dual-hahn") {
    DualHahnParams p;
    p.d = int_flag(c, "d");
    p.r = rational_flag(c, "r");
    p.s = rational_flag(c, "s");
    p.s_star = rational_flag(c, "s-star");
    p.h = rational_flag(c, "h", 1);
    p.theta0 = rational_flag(c, "theta0", 0);
    p.theta0_star = rational_flag(c, "theta0-star", 0);
    return p;
  }
  if (name == "krawtchouk") {
    KrawtchoukParams p;
    p.d = int_flag(c, "d");
    p.r = rational_flag(c, "r");
    p.s = rational_flag(c, "s");
    p.s_star = rational_flag(c, "s-star");
    p.theta0 = rational_flag(c, "theta0", 0);
    p.theta0_star = rational_flag(c, "theta0-star", 0);
    return p;
  }
  if (name == "q-racah") {
    QRacahParams p;
    p.d = int_flag(c, "d");
    p.q = rational_flag(c, "q");
    p.s = rational_flag(c, "s");
    p.s_star = rational_flag(c, "s-star");
    p.r1 = rational_flag(c, "r1");
    if (find(c, "r2")) {
      p.r2 = rational_flag(c, "r2");
    } else {
      if (p.r1 == 0 || p.q == 0) throw degenerate_parameters("q-racah: r1 and q must be nonzero");
      p.r2 = p.s * p.s_star * ipow(p.q, p.d + 1) / p.r1;
    }
    p.h = rational_flag(c, "h", 1);
    p.h_star = rational_flag(c, "h-star", 1);
    p.theta0 = rational_flag(c, "theta0", 0);
    p.theta0_star = rational_flag(c, "theta0-star", 0);
    return p;
  }
  throw parse_error("unknown family \"" + name + "\" (expected dual-hahn, krawtchouk or q-racah)");
}

Input resolve_input(const RunConfig& c) {
  const int sources = int(c.input_file.has_value()) + int(c.family.has_value()) + int(c.preset.has_value());
  if (sources != 1) throw parse_error("exactly one of --input, --family, --preset is required");

  Input in;
  if (c.input_file) {
    std::ifstream f(*c.input_file);
    if (!f) throw parse_error("cannot open " + *c.input_file);
    json j;
    try {
      j = json::parse(f);
    } catch (const json::exception& e) {
      throw parse_error(std::string("malformed JSON: ") + e.what());
    }
    in.array = parameter_array_from_json(j);
    return in;
  }

  FamilyParams fam;
  if (c.preset) {
    if (*c.preset == "johnson") {
      const int v = int_flag(c, "v");
      const int d = int_flag(c, "d");
      fam = johnson_preset(v, d);
      in.echo["preset"] = {{"name", "johnson"}, {"v", v}, {"d", d}};
    } else if (*c.preset == "hamming") {
      const int n = int_flag(c, "n");
      const int d = int_flag(c, "d");
      fam = hamming_preset(n, d);
      in.echo["preset"] = {{"name", "hamming"}, {"n", n}, {"d", d}};
    } else {
      throw parse_error("unknown preset \"" + *c.preset + "\" (expected johnson or hamming)");
    }
  } else {
    fam = family_from_flags(c);
  }
  in.family = fam;
  in.echo["params"] = to_json(fam);
  in.array = make_array(fam);
  return in;
}

json merge(json body, const json& echo) {
  for (auto it = echo.begin(); it != echo.end(); ++it) body[it.key()] = it.value();
  return body;
}

json checks_to_json(const CheckReport& report) {
  json arr = json::array();
  for (const auto& c : report.checks()) {
    json item = {{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    arr.push_back(std::move(item));
  }
  return arr;
}

json ekr_entry(const EkrSystem& sys, int t) {
  json out;
  out["t"] = t;
  out["w_split"] = to_json(sys.w(t));
  out["w_split_down"] = to_json(Vec(sys.to_ekr(TargetBasis::split_down).col(t)));
  out["w_dual_standard"] = to_json(Vec(sys.to_ekr(TargetBasis::dual_standard).col(t)));
  out["w_standard"] = to_json(Vec(sys.to_ekr(TargetBasis::standard).col(t)));
  out["delta"] = to_json(sys.deltas());
  return out;
}

int require_t(const RunConfig& c, int d) {
  if (!c.t) throw parse_error(std::string(to_string(c.command)) + " requires --t");
  if (*c.t < 0 || *c.t > d) throw parse_error("--t must satisfy 0 <= t <= d");
  return *c.t;
}

// Catches a consistency failure inside one block of checks and records it.
template <class F>
void guarded(CheckReport& report, const std::string& name, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    report.add(name, false, e.what());
  }
}

CheckReport parameter_checks(const ParameterArray& p) {
  CheckReport report;
  const int d = p.d;
  bool sym = true;
  for (int i = 1; i <= d; ++i)
    if (vartheta(p, i) != vartheta(p, d - i + 1)) sym = false;
  report.add("vartheta symmetric (vartheta_i = vartheta_{d-i+1})", sym);

  const auto bc = base_class(p);
  bool zeros = true;
  for (int i = 1; i <= d; ++i) {
    const bool expect_zero = bc.tag == BaseTag::q_is_minus_one && d % 2 == 1 && i % 2 == 0;
    if ((vartheta(p, i) == 0) != expect_zero) zeros = false;
  }
  report.add("vartheta vanishes exactly when q = -1, d odd, i even", zeros);

  bool images = true;
  bool star_vartheta = true;
  for (const auto& g : D4Element::all()) {
    const auto pg = apply_d4(p, g);
    if (!validate(pg).valid()) images = false;
    if (g == D4Element::star()) {
      for (int i = 1; i <= d; ++i)
        if (vartheta(pg, i) != vartheta(p, i)) star_vartheta = false;
    }
  }
  report.add("all eight D4 relatives are valid parameter arrays", images);
  report.add("vartheta unchanged under duality", star_vartheta);

  // Generators applied one at a time, left to right.
  const auto walk = [&](const std::string& word) {
    ParameterArray x = p;
    for (const auto& g : D4Element::parse(word).generators()) x = apply_d4(x, g);
    return x;
  };
  const auto step = [&](std::initializer_list<D4Element> gens) {
    ParameterArray x = p;
    for (const auto& g : gens) x = apply_d4(x, g);
    return x;
  };
  const auto s = D4Element::star();
  const auto dn = D4Element::down();
  const auto dd = D4Element::ddown();
  const bool relations = step({s, s}) == p && step({dn, dn}) == p && step({dd, dd}) == p &&
                         step({dd, s}) == step({s, dn}) && step({dn, s}) == step({s, dd}) &&
                         step({dn, dd}) == step({dd, dn}) && walk("star down ddown") == step({s, dn, dd});
  report.add("D4 relations on the parameter array", relations);
  return report;
}

json verify_json(const Input& in, bool& all_passed) {
  const ParameterArray& p = *in.array;
  CheckReport report;
  report.add("parameter array valid", validate(p).valid());
  guarded(report, "parameter checks", [&] { report.append(parameter_checks(p), "array: "); });

  const Realization r = realize(p);
  report.add("bilinear form unique up to scale", r.gram_solution_dim() == 1,
             "solution dimension " + std::to_string(r.gram_solution_dim()));
  report.append(check_invariants(r), "realization: ");
  guarded(report, "split and standard bases", [&] { report.append(verify_section2(r), "bases: "); });

  json out;
  out["ekr_admissible"] = ekr_admissible(p);
  if (ekr_admissible(p)) {
    std::optional<EkrSystem> sys;
    guarded(report, "EKR construction", [&] { sys.emplace(r); });
    if (sys) {
      guarded(report, "EKR identities", [&] { report.append(verify_ekr(*sys), "ekr: "); });
      guarded(report, "dual EKR relation", [&] { report.append(star_ekr_relation(*sys), "ekr dual: "); });
      const Mat Q = second_eigenmatrix(r);
      bool col0 = true;
      for (Index i = 0; i < Q.rows(); ++i)
        if (Q(i, 0) != 1) col0 = false;
      report.add("lp: second eigenmatrix column 0 is all ones", col0);
      for (int t = 0; t <= p.d; ++t) {
        const std::string tag = "lp t=" + std::to_string(t) + ": ";
        guarded(report, tag + "dual vector", [&] {
          const auto dv = dual_vector(*sys, t);
          report.add(tag + "dual vector conditions and bound", true, "bound " + to_string(dv.bound));
          const auto sol = lp_dual_solve(Q, t);
          report.add(tag + "dual vector unique and equal to the EKR expansion", sol && exactly_equal(*sol, dv.f));
          if (in.family) {
            report.add(tag + "family closed form for f", exactly_equal(f_closed_form_vector(*in.family, t), dv.f));
            report.add(tag + "family closed form for the bound", bound_closed_form(*in.family, t) == dv.bound);
          }
        });
      }
    }
  } else {
    const auto dr = degenerate_check(r);
    report.add("degenerate: EKR construction refused", dr.ekr_refused);
    report.add("degenerate: W_{2s-1} = W_{2s}", dr.paired_equal, dr.summary);
    report.add("degenerate: W_t are not a direct sum", !dr.direct_sum);
  }

  all_passed = report.all_passed();
  out["checks"] = checks_to_json(report);
  out["passed"] = report.checks().size() - report.failures();
  out["failed"] = report.failures();
  out["all_passed"] = all_passed;
  return out;
}

int execute(const RunConfig& c, json& result) {
  const Input in = resolve_input(c);
  const ParameterArray& p = *in.array;

  switch (c.command) {
    case Command::validate: {
      const auto report = validate(p);
      json body;
      body["valid"] = report.valid();
      body["failures"] = report.failures;
      result = merge(std::move(body), in.echo);
      return report.valid() ? ok : invalid_array;
    }
    case Command::info: {
      require_valid(p);
      const auto bc = base_class(p);
      json body;
      body["d"] = p.d;
      body["beta"] = bc.beta ? json(to_string(*bc.beta)) : json(nullptr);
      body["base_class"] = leonard::to_string(bc.tag);
      json vt = json::array();
      for (int i = 1; i <= p.d; ++i) vt.push_back(to_string(vartheta(p, i)));
      body["vartheta"] = vt;
      body["ekr_admissible"] = ekr_admissible(p);
      result = merge(std::move(body), in.echo);
      return ok;
    }
    case Command::realize: {
      result = merge(realization_to_json(realize(p)), in.echo);
      return ok;
    }
    case Command::ekr: {
      const EkrSystem sys(realize(p));
      if (c.t) {
        result = merge(ekr_entry(sys, require_t(c, p.d)), in.echo);
      } else {
        json body;
        body["d"] = p.d;
        body["basis"] = json::array();
        for (int t = 0; t <= p.d; ++t) body["basis"].push_back(ekr_entry(sys, t));
        result = merge(std::move(body), in.echo);
      }
      return ok;
    }
    case Command::bound: {
      const int t = require_t(c, p.d);
      const EkrSystem sys(realize(p));
      const auto dv = dual_vector(sys, t);
      json body;
      body["t"] = t;
      body["f"] = to_json(dv.f);
      body["feasible"] = dv.feasible;
      body["bound"] = to_string(dv.bound);
      const Rational closed = in.family ? bound_closed_form(*in.family, t) : dv.bound_from_array;
      body["bound_closed_form"] = to_string(closed);
      bool match = closed == dv.bound;
      if (in.family) {
        const Vec fc = f_closed_form_vector(*in.family, t);
        body["f_closed_form"] = to_json(fc);
        match = match && exactly_equal(fc, dv.f);
      }
      body["match"] = match;
      result = merge(std::move(body), in.echo);
      return match ? ok : consistency_failure;
    }
    case Command::verify: {
      bool all = false;
      result = merge(verify_json(in, all), in.echo);
      return all ? ok : consistency_failure;
    }
    case Command::d4: {
      if (!c.g) throw parse_error("d4 requires --g");
      const auto g = D4Element::parse(*c.g);
      require_valid(p);
      result = to_json(apply_d4(p, g));
      return ok;
    }
  }
  return ok;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  json result;
  int status = ok;
  try {
    status = execute(config, result);
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return malformed_input;
  } catch (const dimension_error& e) {
    err << "error: " << e.what() << "\n";
    return malformed_input;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return malformed_input;
  } catch (const invalid_array_error& e) {
    err << "error: " << e.what() << "\n";
    return invalid_array;
  } catch (const inadmissible_error& e) {
    err << "error: " << e.what() << "\n";
    return inadmissible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return consistency_failure;
  }

  if (config.decimal) {
    if (*config.decimal < 0) {
      err << "error: --decimal must be nonnegative\n";
      return malformed_input;
    }
    json mirror = decimal_mirror(result, *config.decimal);
    result["approximate_decimal"] = std::move(mirror);
  }

  if (config.output) {
    std::ofstream f(*config.output);
    if (!f) {
      err << "error: cannot write " << *config.output << "\n";
      return malformed_input;
    }
    f << result.dump(2) << "\n";
  } else {
    out << result.dump(2) << "\n";
  }
  return status;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for Leonard systems: realizations, EKR bases and LP bounds"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  RunConfig config;
  std::optional<std::string> t_text;
  std::optional<std::string> decimal_text;

  static const std::vector<std::string> value_flags = {"d", "r", "s", "s-star", "h", "h-star", "r1", "r2",
                                                       "q", "theta0", "theta0-star", "v", "n"};
  std::map<std::string, std::string> raw;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", config.input_file, "Parameter-array JSON file");
    sub->add_option("--family", config.family, "dual-hahn | krawtchouk | q-racah");
    sub->add_option("--preset", config.preset, "johnson (--v, --d) | hamming (--n, --d)");
    for (const auto& name : value_flags) {
      sub->add_option_function<std::string>(
          "--" + name, [&raw, name](const std::string& value) { raw[name] = value; },
          "Rational value, e.g. 3, -7/2 (use --" + name + "=-7/2 for negative fractions)");
    }
    sub->add_option("--output", config.output, "Write JSON here instead of standard output");
    sub->add_option("--decimal", decimal_text, "Also emit an approximate decimal mirror with this many digits");
  };

  struct Sub {
    Command command;
    const char* help;
  };
  const std::vector<Sub> subs = {
      {Command::validate, "Check the parameter-array conditions"},
      {Command::info, "Report beta, the base class, vartheta and EKR admissibility"},
      {Command::realize, "Emit the matrices and base vectors of a realization"},
      {Command::ekr, "Emit the EKR basis (one t with --t, otherwise all)"},
      {Command::bound, "Emit the LP dual vector and the EKR bound for --t"},
      {Command::verify, "Run the full invariant suite; exit 0 iff every check passes"},
      {Command::d4,
       "Apply a D4 word given by --g: whitespace-separated generators star, down, ddown, applied left to right"},
  };
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(to_string(s.command), s.help);
    add_common(sub);
    if (s.command == Command::ekr || s.command == Command::bound)
      sub->add_option("--t", t_text, "Intersection parameter, 0 <= t <= d");
    if (s.command == Command::d4) sub->add_option("--g", config.g, "D4 word, e.g. \"star down\"");
    sub->callback([&config, command = s.command] { config.command = command; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return malformed_input;
  }

  config.values = raw;
  try {
    if (t_text) config.t = std::stoi(*t_text);
    if (decimal_text) config.decimal = std::stoi(*decimal_text);
  } catch (const std::exception&) {
    err << "error: --t and --decimal take integers\n";
    return malformed_input;
  }
  return run(config, out, err);
}

}  // namespace leonard::cli
