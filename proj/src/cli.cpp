#include "invsys/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "invsys/binomial.hpp"
#include "invsys/lefschetz.hpp"
#include "invsys/parse.hpp"
#include "invsys/report.hpp"
#include "invsys/sweep.hpp"

namespace invsys::cli {

namespace {

struct Result {
  int code = kOk;
  Json report;
  std::string text;
};

template <class T>
std::string join(const std::vector<T>& items, const std::string& sep = ", ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < items.size(); ++i) os << (i ? sep : "") << items[i];
  return os.str();
}

std::optional<std::vector<std::string>> variable_list(const std::string& vars) {
  if (vars.empty()) return std::nullopt;
  return parse_variable_list(vars);
}

Json input_echo(const std::vector<std::string>& args, const FieldSpec& field) {
  Json in;
  in["args"] = args;
  in["field"] = field.name();
  return in;
}

// Arguments that determine the report, i.e. without output selection.
std::vector<std::string> report_args(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--json") continue;
    if (a == "--out") {
      ++i;
      continue;
    }
    if (a.rfind("--out=", 0) == 0) continue;
    out.push_back(a);
  }
  return out;
}

std::string describe_rank_table(const LefschetzReport& r) {
  std::ostringstream os;
  std::uint64_t current_k = 0;
  for (const auto& e : r.rank_table) {
    if (e.k != current_k) {
      if (current_k) os << "\n";
      current_k = e.k;
      os << "  k=" << e.k << ":";
    }
    os << " " << e.i << "->" << e.i + e.k << " " << e.achieved << "/" << e.required << (e.maximal() ? "" : "!");
  }
  if (current_k) os << "\n";
  return os.str();
}

std::string describe_lefschetz(const LefschetzReport& r, const std::vector<std::string>& ring) {
  std::ostringstream os;
  os << "h-vector: (" << join(r.hilbert.h_vector) << "), socle degree " << r.hilbert.socle_degree << "\n";
  os << "field: " << r.field.name() << "\n";
  os << "ell = " << r.ell.to_string(ring) << " (" << r.trials << " form" << (r.trials == 1 ? "" : "s") << " tried)\n";
  os << "ranks of multiplication by ell^k, achieved/required:\n" << describe_rank_table(r);
  os << "WLP: " << (r.wlp ? "yes" : "no") << "\n";
  if (r.slp) os << "SLP: " << (*r.slp ? "yes" : "no") << "\n";
  if (r.first_failure)
    os << "first failure: i=" << r.first_failure->first << ", k=" << r.first_failure->second << " (degree "
       << *r.failure_degree << ")\n";
  if (r.holds())
    os << "verdict: " << to_string(r.mode) << " holds (certified by ell)\n";
  else if (r.certified)
    os << "verdict: " << to_string(r.mode) << " fails for every linear form (certified, exhaustive search)\n";
  else
    os << "verdict: no Lefschetz element found after " << r.trials << " trials (not certified)\n";
  return os.str();
}

Result cmd_classify(const std::vector<std::string>& args, const std::string& poly, const std::string& vars,
                    std::uint32_t characteristic, bool verify) {
  const FieldSpec field = FieldSpec::from_characteristic(characteristic);
  const ParsedPolynomial parsed = parse_polynomial(poly, field, variable_list(vars));
  const auto& names = parsed.variables;
  const auto ring = ring_names(names);
  const BinomialNormalForm nf = normalize(parsed.poly);
  const ClassificationReport report = classify(nf);

  Result res;
  Json input = input_echo(args, field);
  input["source"] = poly;
  input["variables"] = names;
  input["polynomial"] = to_json(parsed.poly);
  Json result = to_json(report, names);

  std::ostringstream os;
  os << "F = " << parsed.poly.to_string(names) << "\n";
  os << "normal form: n=" << nf.n << " r=" << nf.r << " a=(" << join(nf.a) << ") b=(" << join(nf.b)
     << ") c=" << nf.c.to_display_string() << "\n";
  std::vector<std::string> core;
  for (auto v : nf.variable_map) core.push_back(names[v]);
  os << "core variables: " << join(core) << "\n";
  if (!nf.tensor_factors.empty()) {
    std::vector<std::string> split;
    for (const auto& t : nf.tensor_factors) split.push_back(names[t.variable] + "^" + std::to_string(t.exponent));
    os << "tensor factors: " << join(split) << "\n";
  }
  os << "verdict: " << (report.is_ci ? "complete intersection" : "not a complete intersection") << " ("
     << to_string(report.reason) << ")\n";
  if (report.q) os << "q = " << *report.q << (report.m ? ", m = " + std::to_string(*report.m) : "") << "\n";
  if (report.witness_index)
    os << "witness: " << names[nf.variable_map[report.oriented_order[*report.witness_index - 1]]] << "\n";
  if (report.generators) {
    os << "generators of Ann(F):\n";
    for (const auto& g : *report.generators) os << "  " << g.to_string(ring) << "\n";
  }

  if (verify) {
    const CrossValidation cv = cross_validate_report(parsed.poly);
    result["verification"] = to_json(cv, names);
    os << "oracle: mu = " << cv.oracle.ideal.mu() << ", codimension " << cv.oracle.codimension << ", "
       << (cv.oracle.is_ci ? "CI" : "not CI") << "\n";
    if (cv.generators_match) os << "generators generate Ann(F): " << (*cv.generators_match ? "yes" : "NO") << "\n";
    os << "verification: " << (cv.agree ? "agree" : "MISMATCH") << "\n";
    if (!cv.agree) res.code = kMismatch;
  }
  res.report = make_report("classify", std::move(input), std::move(result));
  res.text = os.str();
  return res;
}

Result cmd_lefschetz(const std::vector<std::string>& args, const std::string& poly, const std::string& ideal,
                     const std::string& vars, const std::string& mode_name, std::uint32_t characteristic,
                     std::size_t trials, std::uint64_t seed, const std::string& ell_src) {
  if (poly.empty() == ideal.empty()) throw InvalidArgument("give exactly one of --poly and --ideal");
  const FieldSpec field = FieldSpec::from_characteristic(characteristic);
  const LefschetzMode mode = mode_name == "wlp" ? LefschetzMode::kWeak : LefschetzMode::kStrong;
  LefschetzSearchStrategy strategy;
  strategy.trials = trials;
  strategy.seed = seed;

  Json input = input_echo(args, field);
  input["mode"] = to_string(mode);
  std::vector<std::string> dual_names;
  LefschetzReport report;
  auto fix_ell = [&](const std::vector<std::string>& ring) {
    if (!ell_src.empty()) strategy.ell = parse_polynomial(ell_src, field, ring).poly;
  };
  if (!poly.empty()) {
    const ParsedPolynomial parsed = parse_polynomial(poly, field, variable_list(vars));
    dual_names = parsed.variables;
    input["source"] = poly;
    input["variables"] = dual_names;
    input["polynomial"] = to_json(parsed.poly);
    fix_ell(ring_names(dual_names));
    report = find_lefschetz_element(parsed.poly, mode, strategy);
  } else {
    const ParsedIdeal parsed = parse_ideal(ideal, field, variable_list(vars));
    dual_names = parsed.variables;
    input["source"] = ideal;
    input["variables"] = dual_names;
    Json gens = Json::array();
    for (const auto& g : parsed.generators) gens.push_back(to_json(g));
    input["ideal"] = std::move(gens);
    // Ideal input is already written in the ring variables.
    if (!ell_src.empty()) strategy.ell = parse_polynomial(ell_src, field, dual_names).poly;
    report = find_lefschetz_element(GradedIdealPresentation(field, dual_names.size(), parsed.generators), mode,
                                    strategy);
  }
  Result res;
  const auto ring = poly.empty() ? dual_names : ring_names(dual_names);
  res.report = make_report("lefschetz", std::move(input), to_json(report, ring));
  res.text = describe_lefschetz(report, ring);
  return res;
}

Result cmd_hilbert(const std::vector<std::string>& args, const std::string& poly, const std::string& vars,
                   std::uint32_t characteristic) {
  const FieldSpec field = FieldSpec::from_characteristic(characteristic);
  const ParsedPolynomial parsed = parse_polynomial(poly, field, variable_list(vars));
  const HilbertData h = hilbert_function(parsed.poly);
  Json input = input_echo(args, field);
  input["source"] = poly;
  input["variables"] = parsed.variables;
  input["polynomial"] = to_json(parsed.poly);
  Result res;
  res.report = make_report("hilbert", std::move(input), to_json(h));
  std::ostringstream os;
  os << "F = " << parsed.poly.to_string(parsed.variables) << "\n";
  os << "h-vector: (" << join(h.h_vector) << ")\n";
  os << "socle degree: " << h.socle_degree << "\n";
  os << "dimension: " << h.total_dimension() << "\n";
  res.text = os.str();
  return res;
}

Result cmd_sweep(const std::vector<std::string>& args, const SweepOptions& options, std::ostream& err) {
  const SweepSummary s = run_sweep(options);
  Json input = input_echo(args, options.spec.field);
  input["n"] = options.spec.n;
  input["max_a"] = options.spec.max_a;
  input["max_b"] = options.spec.max_b;
  input["both_orientations"] = options.spec.both_orientations;
  input["slp"] = options.slp;

  Json result;
  result["enumerated"] = s.enumerated;
  result["duplicates_skipped"] = s.duplicates_skipped;
  result["cases"] = s.cases;
  result["ci_count"] = s.ci_count;
  result["reasons"] = Json::object();
  for (const auto& [reason, count] : s.reasons) result["reasons"][reason] = count;
  result["mismatches"] = s.mismatches;
  result["slp_checked"] = s.slp_checked;
  result["slp_failures"] = s.slp_failures;
  result["path_checks"] = s.path_checks;
  result["path_mismatches"] = s.path_mismatches;
  Json failures = Json::array();
  for (const auto& f : s.failures) {
    Json j;
    j["index"] = f.index;
    j["polynomial"] = f.polynomial;
    j["kind"] = f.kind;
    j["detail"] = f.detail;
    failures.push_back(std::move(j));
    err << "FAILURE [" << f.kind << "] case " << f.index << ": F = " << f.polynomial << " -- " << f.detail << "\n";
  }
  result["failures"] = std::move(failures);

  Result res;
  res.report = make_report("sweep", std::move(input), std::move(result));
  std::ostringstream os;
  os << "cases: " << s.cases << " (" << s.enumerated << " enumerated, " << s.duplicates_skipped
     << " duplicates skipped)\n";
  os << "complete intersections: " << s.ci_count << "\n";
  for (const auto& [reason, count] : s.reasons) os << "  " << reason << ": " << count << "\n";
  os << "mismatches: " << s.mismatches << "\n";
  if (options.slp) {
    os << "SLP checked: " << s.slp_checked << ", failures: " << s.slp_failures << "\n";
    os << "pairing/ideal rank comparisons: " << s.path_checks << ", disagreements: " << s.path_mismatches << "\n";
  }
  res.text = os.str();
  res.code = s.ok() ? kOk : kMismatch;
  return res;
}

int guarded(const std::function<int()>& body, std::ostream& err, bool classify_command) {
  try {
    return body();
  } catch (const SyntaxError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const UnknownVariable& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const NegativeExponent& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const NotBinomial& e) {
    err << "not a binomial: " << e.what() << "\n";
    return kNotBinomial;
  } catch (const DegenerateBinomial& e) {
    err << "degenerate binomial: " << e.what() << "\n";
    return kNotBinomial;
  } catch (const NotHomogeneous& e) {
    err << "not homogeneous: " << e.what() << "\n";
    return classify_command ? kNotBinomial : kParse;
  } catch (const NotArtinian& e) {
    err << "not Artinian: " << e.what() << "\n";
    return kNotArtinian;
  } catch (const InvalidArgument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kParse;
  } catch (const ZeroPolynomial& e) {
    err << "invalid input: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

int emit(const Result& res, bool json, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const std::string dumped = res.report.dump(2) + "\n";
  if (json)
    out << dumped;
  else
    out << res.text;
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "cannot write " << out_path << "\n";
      return kInternal;
    }
    f << dumped;
  }
  return res.code;
}

int replay(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    err << "cannot read " << path << "\n";
    return kParse;
  }
  std::stringstream buffer;
  buffer << f.rdbuf();
  const std::string saved = buffer.str();
  Json report;
  try {
    report = Json::parse(saved);
  } catch (const std::exception& e) {
    err << "replay file is not JSON: " << e.what() << "\n";
    return kParse;
  }
  if (!report.contains("input") || !report["input"].contains("args") || !report.contains("command")) {
    err << "replay file lacks command or input.args\n";
    return kParse;
  }
  std::vector<std::string> args{report["command"].get<std::string>()};
  for (const auto& a : report["input"]["args"]) args.push_back(a.get<std::string>());
  args.push_back("--json");
  std::ostringstream fresh, diagnostics;
  run(args, fresh, diagnostics);
  if (fresh.str() == saved) {
    out << "replay matches " << path << "\n";
    return kOk;
  }
  err << "REPLAY MISMATCH: re-running " << join(args, " ") << " does not reproduce " << path << "\n";
  err << diagnostics.str();
  return kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Macaulay inverse systems: binomial complete intersections and Lefschetz properties", "invsys"};
  app.require_subcommand(0, 1);
  std::string replay_path;
  app.add_option("--replay", replay_path, "Re-run a saved JSON report and compare byte for byte");

  std::string poly, ideal, vars, mode = "slp", out_path, ell;
  std::uint32_t characteristic = 0;
  bool json = false, verify = false;
  std::size_t trials = 16;
  std::uint64_t seed = LefschetzSearchStrategy{}.seed;
  SweepOptions sweep;
  bool single_orientation = false;

  auto common = [&](CLI::App* sub, bool with_vars = true) {
    if (with_vars) sub->add_option("--vars", vars, "Variable order, e.g. \"x,y,z\"");
    sub->add_option("--char", characteristic, "Field characteristic: 0 or a prime");
    sub->add_flag("--json", json, "Print the JSON report");
    sub->add_option("--out", out_path, "Also write the JSON report to a file");
  };

  auto* classify_cmd = app.add_subcommand("classify", "Classify a binomial dual generator");
  classify_cmd->add_option("--poly", poly, "Binomial F")->required();
  classify_cmd->add_flag("--verify", verify, "Cross-check against the brute-force oracle");
  common(classify_cmd);

  auto* lefschetz_cmd = app.add_subcommand("lefschetz", "Search for a weak or strong Lefschetz element");
  lefschetz_cmd->add_option("--poly", poly, "Dual generator F");
  lefschetz_cmd->add_option("--ideal", ideal, "Ideal generators separated by ';'");
  lefschetz_cmd->add_option("--mode", mode, "wlp or slp")->check(CLI::IsMember({"wlp", "slp"}));
  lefschetz_cmd->add_option("--trials", trials, "Random linear forms after x1+...+xn");
  lefschetz_cmd->add_option("--seed", seed, "Seed for the random forms");
  lefschetz_cmd->add_option("--ell", ell, "Use this linear form instead of searching");
  common(lefschetz_cmd);

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function of A_F");
  hilbert_cmd->add_option("--poly", poly, "Dual generator F")->required();
  common(hilbert_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "Cross-validate every binomial within bounds");
  sweep_cmd->add_option("--n", sweep.spec.n, "Number of variables")->required();
  sweep_cmd->add_option("--max-a", sweep.spec.max_a, "Bound on each a_i");
  sweep_cmd->add_option("--max-b", sweep.spec.max_b, "Bound on each b_i of the first block");
  sweep_cmd->add_flag("--slp", sweep.slp, "Also check SLP on every complete intersection");
  sweep_cmd->add_option("--jobs", sweep.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--single-orientation", single_orientation,
                      "Only enumerate first blocks at least as large as the second");
  common(sweep_cmd, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kParse;
  }

  if (!replay_path.empty()) return replay(replay_path, out, err);
  if (app.get_subcommands().empty()) {
    out << app.help();
    return kParse;
  }
  const std::vector<std::string> sub_args = report_args(std::vector<std::string>(args.begin() + 1, args.end()));

  if (classify_cmd->parsed())
    return guarded([&] { return emit(cmd_classify(sub_args, poly, vars, characteristic, verify), json, out_path, out, err); },
                   err, true);
  if (lefschetz_cmd->parsed())
    return guarded(
        [&] {
          return emit(cmd_lefschetz(sub_args, poly, ideal, vars, mode, characteristic, trials, seed, ell), json,
                      out_path, out, err);
        },
        err, false);
  if (hilbert_cmd->parsed())
    return guarded([&] { return emit(cmd_hilbert(sub_args, poly, vars, characteristic), json, out_path, out, err); },
                   err, false);
  return guarded(
      [&] {
        sweep.spec.both_orientations = !single_orientation;
        sweep.spec.field = FieldSpec::from_characteristic(characteristic);
        return emit(cmd_sweep(sub_args, sweep, err), json, out_path, out, err);
      },
      err, false);
}

}  // namespace invsys::cli
