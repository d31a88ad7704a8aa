#include "gsp/cli.hpp"

#include <CLI11.hpp>

#include "gsp/io.hpp"

namespace gsp {

namespace {

void emit(const Json& doc, const std::string& out_path, std::ostream& out) {
  std::string text = render_json(doc);
  if (out_path.empty())
    out << text;
  else
    save_text(text, out_path);
}

BidProfile require_bids(const ParsedInstance& parsed, const std::string& path) {
  if (!parsed.bids)
    throw input_error("\"" + path + "\" carries no bids; this command needs a bid profile");
  return *parsed.bids;
}

std::vector<Rat> parse_grid(const std::string& csv, const Instance& inst) {
  std::vector<Rat> levels;
  std::vector<std::string> tokens;
  std::string token;
  for (char c : csv) {
    if (c == ',') {
      tokens.push_back(token);
      token.clear();
    } else {
      token += c;
    }
  }
  tokens.push_back(token);

  bool want_big = false;
  for (const auto& t : tokens) {
    if (t == "big") {
      want_big = true;
      continue;
    }
    levels.push_back(rat_from_string(t));
  }
  if (want_big) levels.push_back(surrogate_big(inst, levels));
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

int run_bound(const std::string& file, bool simplified_only, const std::string& svg_path,
              const std::string& csv_path, const NumberStyle& style, const std::string& out_path,
              std::ostream& out) {
  ParsedInstance parsed = load_instance_file(file);
  const Instance& inst = parsed.instance;

  if (simplified_only) {
    Json doc;
    int j = 0, k = 0;
    doc["simplified"] = style.num(bound_simplified(inst, &j, &k));
    doc["j"] = j + 1;
    doc["k"] = k;
    emit(doc, out_path, out);
    return kExitOk;
  }

  BoundReport report = bound_closed_form(inst);
  if (!svg_path.empty())
    save_text(envelope_svg(pareto_points(inst), report.witness), svg_path);
  if (!csv_path.empty()) save_text(points_csv(pareto_points(inst)), csv_path);
  emit(bound_report_to_json(report, style), out_path, out);
  if (!report.agreement) return kExitInternalError;
  return kExitOk;
}

int run_verify(const std::string& file, const std::string& tol, const NumberStyle& style,
               const std::string& out_path, std::ostream& out) {
  ParsedInstance parsed = load_instance_file(file);
  BidProfile bids = require_bids(parsed, file);
  Rat eps = tol.empty() ? Rat(0) : rat_from_string(tol);
  if (sgn(eps) < 0) throw input_error("tolerance must be nonnegative");

  EquilibriumReport report = verify_equilibrium(parsed.instance, bids, eps);
  Json doc;
  doc["equilibrium"] = equilibrium_report_to_json(report, style);
  doc["welfare"] = summary_to_json(welfare_summary(parsed.instance, bids), style);
  emit(doc, out_path, out);
  return report.verdict ? kExitOk : kExitVerificationFailed;
}

int run_charge(const std::string& file, int auction, const NumberStyle& style,
               const std::string& out_path, std::ostream& out) {
  ParsedInstance parsed = load_instance_file(file);
  BidProfile bids = require_bids(parsed, file);
  const Instance& inst = parsed.instance;
  if (auction < 0 || auction > inst.m)
    throw input_error("auction index out of range (m = " + std::to_string(inst.m) + ")");
  OptStats opt = opt_stats(inst);

  Json all = Json::array();
  bool every_valid = true;
  for (int j = 0; j < inst.m; ++j) {
    if (auction > 0 && auction != j + 1) continue;
    if (sgn(opt.opt_per_auction[j]) == 0) {
      if (auction > 0)
        throw input_error("auction " + std::to_string(j + 1) +
                          " contributes nothing to the optimal welfare; no certificate");
      Json row;
      row["auction"] = j + 1;
      row["skipped"] = "opt_j = 0";
      all.push_back(std::move(row));
      continue;
    }
    ChargingCertificate cert = build_certificate(inst, bids, j);
    CertificateVerdict verdict = verify_certificate(cert);
    every_valid = every_valid && verdict.ok;
    all.push_back(certificate_to_json(cert, verdict, style));
  }
  emit(all, out_path, out);
  return every_valid ? kExitOk : kExitVerificationFailed;
}

int run_tight(const std::string& t_text, const std::string& eps_text, int s_override,
              const std::string& x_tol_text, bool emit_report, const NumberStyle& style,
              const std::string& out_path, std::ostream& out, std::ostream& err) {
  Rat t = rat_from_string(t_text);
  Rat eps = eps_text.empty() ? Rat(1, 10000) : rat_from_string(eps_text);

  SxSolution sol = solve_s_x(t, s_override);
  Rat x;
  if (sol.exact) {
    x = sol.x;
  } else if (!x_tol_text.empty()) {
    x = approximate_x(t, sol.s, rat_from_string(x_tol_text));
  } else {
    err << "error: the root x for t = " << rat_to_string(t) << " is irrational (s = " << sol.s
        << ", x in [" << rat_to_string(sol.x_lo) << ", " << rat_to_string(sol.x_hi) << "]).\n"
        << "Pass --rational-x-tol <r> to use a rational x whose family bound is within r of t.\n";
    return kExitInputError;
  }

  TightInstanceSpec spec;
  spec.t = tight_family_bound(sol.s, x);
  spec.s = sol.s;
  spec.x = x;
  spec.eps = eps;
  TightInstance tight = tight_instance(spec);

  Json doc = instance_to_json(tight.instance, &tight.bids);
  if (emit_report) {
    Json report;
    report["target_t"] = style.num(t);
    report["s"] = spec.s;
    report["x"] = style.num(x);
    report["x_exact"] = sol.exact;
    report["eps"] = style.num(eps);
    report["expected_limit_ratio"] = style.num(tight.expected_limit_ratio);
    report["bound_closed_form"] = style.num(closed_form_value(tight.instance));
    WelfareSummary ws = welfare_summary(tight.instance, tight.bids);
    report["welfare_ratio"] = style.num(ws.welfare_ratio);
    report["equilibrium_verdict"] = verify_equilibrium(tight.instance, tight.bids).verdict;
    doc["report"] = std::move(report);
  }
  emit(doc, out_path, out);
  return kExitOk;
}

int run_zero(const std::string& delta_text, const NumberStyle& style, const std::string& out_path,
             std::ostream& out) {
  Rat delta = rat_from_string(delta_text);
  Instance inst = poa_zero_family(delta);
  Json doc = instance_to_json(inst);
  Json report;
  report["delta"] = style.num(delta);
  report["bound_closed_form"] = style.num(closed_form_value(inst));
  report["expected"] = style.num(delta / (1 + delta + delta * delta));
  doc["report"] = std::move(report);
  emit(doc, out_path, out);
  return kExitOk;
}

int run_enumerate(const std::string& file, const std::string& grid_text, std::uint64_t cap,
                  int threads, const std::string& csv_path, const NumberStyle& style,
                  const std::string& out_path, std::ostream& out) {
  ParsedInstance parsed = load_instance_file(file);
  GridSpec grid;
  grid.bid_levels = parse_grid(grid_text, parsed.instance);
  if (cap > 0) grid.max_profiles = cap;
  grid.threads = threads;

  SearchReport report = enumerate_equilibria(parsed.instance, grid);
  if (!csv_path.empty()) save_text(ratios_csv(report), csv_path);
  emit(search_report_to_json(report, style), out_path, out);
  return report.dominance ? kExitOk : kExitVerificationFailed;
}

int run_random(std::uint64_t seed, int n, int m, int s, int max_num, int max_den,
               const std::string& smooth_text, const std::string& out_path, std::ostream& out) {
  RandomSpec spec;
  spec.seed = seed;
  spec.n = n;
  spec.m = m;
  spec.s = s;
  spec.max_value_num = max_num;
  spec.max_value_den = max_den;
  if (!smooth_text.empty()) spec.smoothness = rat_from_string(smooth_text);
  Instance inst = random_instance(spec);
  emit(instance_to_json(inst), out_path, out);
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"GSP autobidding toolkit: exact price-of-anarchy bounds, equilibrium "
               "verification, charging certificates, and worst-case instances"};
  app.require_subcommand(1);

  NumberStyle style;
  app.add_flag("--approx", style.approx, "render numbers as decimals instead of exact p/q");

  std::string file, out_path, svg_path, csv_path, tol, grid_text, smooth_text;
  std::string t_text, eps_text, x_tol_text, delta_text;
  bool simplified_only = false, emit_report = false;
  int auction = 0, s_override = 0, threads = 0;
  int n = 2, m = 1, s = 2, max_num = 6, max_den = 4;
  std::uint64_t seed = 1, cap = 0;

  auto* bound = app.add_subcommand("bound", "closed-form and geometric bounds of an instance");
  bound->add_option("file", file, "instance file")->required();
  bound->add_flag("--simplified", simplified_only, "report only the tangent-line bound");
  bound->add_option("--svg", svg_path, "write the aggregation figure");
  bound->add_option("--csv", csv_path, "write the tradeoff points");
  bound->add_option("-o,--output", out_path, "write the report here instead of stdout");

  auto* verify = app.add_subcommand("verify", "equilibrium and welfare check of a bid profile");
  verify->add_option("file", file, "instance file with bids")->required();
  verify->add_option("--tol", tol, "gap tolerance (default 0, exact)");
  verify->add_option("-o,--output", out_path, "write the report here instead of stdout");

  auto* charge = app.add_subcommand("charge", "build and verify charging certificates");
  charge->add_option("file", file, "instance file with bids")->required();
  charge->add_option("--auction", auction, "restrict to one auction (1-based)");
  charge->add_option("-o,--output", out_path, "write the report here instead of stdout");

  auto* tight = app.add_subcommand("tight", "generate a tight instance with its equilibrium");
  tight->add_option("--t", t_text, "target ratio in (0, 1/2)")->required();
  tight->add_option("--eps", eps_text, "perturbation (default 1/10000)");
  tight->add_option("--s", s_override, "use a larger s than the smallest admissible");
  tight->add_option("--rational-x-tol", x_tol_text,
                    "accept a rational x with family bound within this of t");
  tight->add_flag("--emit-report", emit_report, "attach expected ratio and bound values");
  tight->add_option("-o,--output", out_path, "write the instance here instead of stdout");

  auto* zero = app.add_subcommand("zero", "generate the vanishing-bound single-auction family");
  zero->add_option("--delta", delta_text, "second-slot discount in (0, 1]")->required();
  zero->add_option("-o,--output", out_path, "write the instance here instead of stdout");

  auto* enumerate = app.add_subcommand("enumerate", "brute-force equilibria over a bid grid");
  enumerate->add_option("file", file, "instance file")->required();
  enumerate->add_option("--grid", grid_text, "comma-separated bid levels; token 'big' adds a "
                        "finite stand-in for +inf")->required();
  enumerate->add_option("--cap", cap, "profile count cap (default 6^8)");
  enumerate->add_option("--threads", threads, "worker threads (default: hardware)");
  enumerate->add_option("--csv", csv_path, "write (profile, ratio) rows");
  enumerate->add_option("-o,--output", out_path, "write the report here instead of stdout");

  auto* random = app.add_subcommand("random", "generate a seeded random instance");
  random->add_option("--seed", seed, "RNG seed")->required();
  random->add_option("--n", n, "bidders (default 2)");
  random->add_option("--m", m, "auctions (default 1)");
  random->add_option("--s", s, "slots (default 2)");
  random->add_option("--max-num", max_num, "value numerator bound (default 6)");
  random->add_option("--max-den", max_den, "value denominator bound (default 4)");
  random->add_option("--smooth", smooth_text, "discount smoothness in [0, 1]");
  random->add_option("-o,--output", out_path, "write the instance here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (bound->parsed())
      return run_bound(file, simplified_only, svg_path, csv_path, style, out_path, out);
    if (verify->parsed()) return run_verify(file, tol, style, out_path, out);
    if (charge->parsed()) return run_charge(file, auction, style, out_path, out);
    if (tight->parsed())
      return run_tight(t_text, eps_text, s_override, x_tol_text, emit_report, style, out_path,
                       out, err);
    if (zero->parsed()) return run_zero(delta_text, style, out_path, out);
    if (enumerate->parsed())
      return run_enumerate(file, grid_text, cap, threads, csv_path, style, out_path, out);
    if (random->parsed())
      return run_random(seed, n, m, s, max_num, max_den, smooth_text, out_path, out);
    err << "error: no subcommand\n";
    return kExitInputError;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
}

}  // namespace gsp
