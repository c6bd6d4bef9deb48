#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "trirec/boundary.hpp"
#include "trirec/classification.hpp"
#include "trirec/decomposition.hpp"
#include "trirec/errors.hpp"
#include "trirec/heun.hpp"
#include "trirec/pochhammer.hpp"
#include "trirec/series.hpp"

namespace {

using namespace trirec;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int precision_digits() {
  long bits = 256;
  if (const char* env = std::getenv("TRIREC_PRECISION_BITS")) {
    bits = std::strtol(env, nullptr, 10);
    if (bits < 8) bits = 8;
    if (bits > (1L << 20)) bits = 1L << 20;
  }
  return static_cast<int>(static_cast<double>(bits) * 0.30102999566398) + 1;
}

// Exactly one family source: a JSON file, inline JSON, or Heun parameters.
struct FamilySource {
  std::string file;
  std::string inline_json;
  std::string alpha, beta, gamma, delta, q;
  std::string lambda_root = "0";
  bool heun_given = false;

  void add_options(CLI::App* cmd) {
    auto* file_opt = cmd->add_option("--family", file, "family JSON file");
    auto* json_opt =
        cmd->add_option("--family-json", inline_json, "inline family JSON");
    auto* a = cmd->add_option("--alpha", alpha, "Heun alpha");
    auto* b = cmd->add_option("--beta", beta, "Heun beta");
    auto* g = cmd->add_option("--gamma", gamma, "Heun gamma");
    auto* d = cmd->add_option("--delta", delta, "Heun delta");
    auto* qo = cmd->add_option("--q", q, "Heun accessory parameter q");
    cmd->add_option("--lambda-root", lambda_root,
                    "indicial root: 0 or 1-gamma");
    file_opt->excludes(json_opt);
    file_opt->excludes(a);
    json_opt->excludes(a);
    b->needs(a);
    g->needs(a);
    d->needs(a);
    qo->needs(a);
  }

  CoefficientFamily resolve() {
    const bool has_heun = !alpha.empty();
    int sources = (file.empty() ? 0 : 1) + (inline_json.empty() ? 0 : 1) +
                  (has_heun ? 1 : 0);
    if (sources != 1)
      throw make_error(ErrorKind::ParseError,
                       "exactly one family source required: --family, "
                       "--family-json, or --alpha/--beta/--gamma/--delta/--q");
    if (!file.empty()) return family_from_file(file);
    if (!inline_json.empty()) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(inline_json);
      } catch (const nlohmann::json::exception& e) {
        throw make_error(ErrorKind::ParseError,
                         std::string("--family-json: ") + e.what());
      }
      return family_from_json(j);
    }
    heun_given = true;
    return heun_family(heun_params());
  }

  HeunParams heun_params() const {
    if (alpha.empty() || beta.empty() || gamma.empty() || delta.empty() ||
        q.empty())
      throw make_error(ErrorKind::ParseError,
                       "--alpha, --beta, --gamma, --delta, --q are all "
                       "required for a Heun family");
    IndicialRoot root;
    if (lambda_root == "0")
      root = IndicialRoot::Zero;
    else if (lambda_root == "1-gamma")
      root = IndicialRoot::OneMinusGamma;
    else
      throw make_error(ErrorKind::ParseError,
                       "--lambda-root must be 0 or 1-gamma");
    return make_heun_params(parse_grational(alpha), parse_grational(beta),
                            parse_grational(gamma), parse_grational(delta),
                            parse_grational(q), root);
  }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out)
    throw make_error(ErrorKind::ParseError, "cannot write " + out_path);
  out << text;
  if (text.empty() || text.back() != '\n') out << "\n";
}

std::vector<long> parse_checkpoints(const std::string& csv) {
  std::vector<long> cps;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    char* end = nullptr;
    long v = std::strtol(item.c_str(), &end, 10);
    if (end == nullptr || *end != '\0' || v <= 0)
      throw make_error(ErrorKind::ParseError,
                       "--checkpoints: bad entry '" + item + "'");
    cps.push_back(v);
  }
  if (cps.empty())
    throw make_error(ErrorKind::ParseError, "--checkpoints: empty list");
  return cps;
}

// Largest rational with `digits` decimals not exceeding base^(1/k); a
// rounded-down eta keeps the witness value a valid lower bound.
Rational rational_root_floor(const Rational& base, unsigned long k, int digits) {
  if (auto exact = exact_root(base, k)) return *exact;
  return parse_rational(root_decimal_string(base, k, digits));
}

int cmd_classify(FamilySource& src, const std::string& out_path) {
  CoefficientFamily f = src.resolve();
  nlohmann::ordered_json j = to_json(classify(f), precision_digits());
  emit(j.dump(2), out_path);
  return 0;
}

int cmd_eval(FamilySource& src, const std::string& x_str,
             const std::string& lambda_str, const std::string& tol_str,
             long max_terms, const std::string& format,
             const std::string& out_path) {
  CoefficientFamily f = src.resolve();
  GRational lambda =
      lambda_str.empty() ? GRational(0) : parse_grational(lambda_str);
  if (src.heun_given && lambda_str.empty()) lambda = src.heun_params().lambda;
  GRational x = parse_grational(x_str);
  double tol = parse_rational(tol_str).get_d();

  series::EvalResult r = series::eval_series(f, lambda, x, tol, max_terms);
  if (format == "csv") {
    series::SeriesRun run = series::make_series_run(f, lambda, x, r.terms);
    run.truncation_error_bound = r.error_bound;
    run.converged = r.converged;
    std::ostringstream os;
    series::write_series_csv(os, run);
    emit(os.str(), out_path);
    return 0;
  }
  nlohmann::ordered_json j;
  j["value_re"] = format_double(r.value.real());
  j["value_im"] = format_double(r.value.imag());
  j["truncation_error_bound"] = format_double(r.error_bound);
  j["converged"] = r.converged;
  j["terms"] = r.terms;
  emit(j.dump(2), out_path);
  return 0;
}

int cmd_heun(FamilySource& src, const std::string& x_str,
             const std::string& tol_str, long max_terms,
             const std::string& emit_family_path, const std::string& format,
             const std::string& out_path) {
  HeunParams p = src.heun_params();
  nlohmann::ordered_json j;
  j["lambda"] = to_string(p.lambda);

  if (p.beta.is_zero()) {
    HypergeometricReduction red = hypergeometric_reduction(p);
    nlohmann::ordered_json h;
    h["c"] = to_string(red.c);
    h["a_plus_b"] = to_string(red.a_plus_b);
    h["ab"] = to_string(red.ab);
    if (red.exact_roots) {
      h["a"] = to_string(red.exact_roots->first);
      h["b"] = to_string(red.exact_roots->second);
    }
    h["gauss_boundary"] = gauss_boundary_test(red) ==
                                  GaussVerdict::AbsolutelyConvergent
                              ? "absolutely-convergent"
                              : "divergent";
    j["hypergeometric_reduction"] = h;
  }

  CoefficientFamily f = heun_family(p);
  j["family"] = family_to_json(f);
  j["classification"] = to_json(classify(f), precision_digits());
  if (!emit_family_path.empty())
    emit(family_to_json(f).dump(2), emit_family_path);

  if (!x_str.empty()) {
    GRational x = parse_grational(x_str);
    double tol = parse_rational(tol_str).get_d();
    series::EvalResult r = series::eval_series(f, p.lambda, x, tol, max_terms);
    if (format == "csv") {
      series::SeriesRun run = series::make_series_run(f, p.lambda, x, r.terms);
      run.truncation_error_bound = r.error_bound;
      run.converged = r.converged;
      std::ostringstream os;
      series::write_series_csv(os, run);
      emit(os.str(), out_path);
      return 0;
    }
    nlohmann::ordered_json e;
    e["x"] = to_string(x);
    e["value_re"] = format_double(r.value.real());
    e["value_im"] = format_double(r.value.imag());
    e["truncation_error_bound"] = format_double(r.error_bound);
    e["converged"] = r.converged;
    e["terms"] = r.terms;
    j["eval"] = e;
  }
  emit(j.dump(2), out_path);
  return 0;
}

int cmd_scan_boundary(FamilySource& src, const std::string& side_str,
                      const std::string& checkpoints_str,
                      const std::string& fraction_str,
                      const std::string& format, const std::string& out_path) {
  CoefficientFamily f = src.resolve();
  BoundarySide side;
  if (side_str == "thm1")
    side = BoundarySide::ThmOneBoundary;
  else if (side_str == "thm2")
    side = BoundarySide::ThmTwoBoundary;
  else
    throw make_error(ErrorKind::ParseError, "--side must be thm1 or thm2");
  std::vector<long> cps = parse_checkpoints(checkpoints_str);
  Rational fraction = parse_rational(fraction_str);
  if (sgn(fraction) <= 0)
    throw make_error(ErrorKind::ParseError, "--radius-fraction must be > 0");
  GrowthScan scan = boundary_scan(f, side, cps, fraction);
  if (format == "json") {
    emit(to_json(scan).dump(2), out_path);
  } else {
    std::ostringstream os;
    write_scan_csv(os, scan);
    emit(os.str(), out_path);
  }
  return 0;
}

int cmd_decompose_check(FamilySource& src, long n_start, int degree,
                        const std::string& x_str, const std::string& mode_str,
                        const std::string& out_path) {
  CoefficientFamily f = src.resolve();
  DecompMode mode;
  if (mode_str == "group-by-b")
    mode = DecompMode::GroupByB;
  else if (mode_str == "group-by-a")
    mode = DecompMode::GroupByA;
  else
    throw make_error(ErrorKind::ParseError,
                     "--mode must be group-by-b or group-by-a");
  Rational x = parse_rational(x_str);
  DecompositionReport rep = decomposition_check(f, n_start, degree, x, mode);
  emit(to_json(rep).dump(2), out_path);
  return 0;
}

int cmd_witness(FamilySource& src, const std::string& eps_str, long scan_limit,
                const std::string& k_str, int p_max,
                const std::string& lower_bound_at,
                const std::string& out_path) {
  CoefficientFamily f = src.resolve();
  Rational eps = parse_rational(eps_str);
  Rational K = parse_rational(k_str);
  WitnessParams w = find_witness(f, eps, scan_limit, K);
  nlohmann::ordered_json j = to_json(w);

  if (!lower_bound_at.empty()) {
    NormalizedFamily nf = normalize(f);
    const int digits = precision_digits();
    // eta = |B|/|A|^2 on the Theorem-1 boundary, |A|/sqrt|B| on Theorem-2;
    // rounded down where a square root is needed.
    Rational eta;
    if (w.kind == RecurrenceKind::ThmOne) {
      Rational a2 = nf.lead_a.abs2();
      Rational b1 = rational_root_floor(nf.lead_b.abs2(), 2, digits);
      eta = b1 / a2;
    } else {
      Rational a1 = rational_root_floor(nf.lead_a.abs2(), 2, digits);
      Rational b_half = rational_root_floor(nf.lead_b.abs2(), 4, digits);
      if (sgn(b_half) == 0)
        throw make_error(ErrorKind::DomainError, "vanishing |B|");
      eta = a1 / b_half;
    }
    j["eta"] = to_fraction_string(eta);
    nlohmann::ordered_json bounds = nlohmann::ordered_json::array();
    for (long M : parse_checkpoints(lower_bound_at)) {
      Rational v = lower_bound_witness(w, eta, p_max, M);
      nlohmann::ordered_json b;
      b["M"] = M;
      b["p_max"] = p_max;
      b["value"] = to_decimal_string(v, digits);
      bounds.push_back(b);
    }
    j["lower_bounds"] = bounds;
  }
  emit(j.dump(2), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Three-term recurrence power-series toolkit: classification, disc of "
      "convergence, series evaluation, and boundary-divergence diagnostics"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  auto* classify_cmd =
      app.add_subcommand("classify", "classify a recurrence family");
  FamilySource classify_src;
  classify_src.add_options(classify_cmd);

  auto* eval_cmd =
      app.add_subcommand("eval", "evaluate the series inside the disc");
  FamilySource eval_src;
  eval_src.add_options(eval_cmd);
  std::string eval_x, eval_lambda, eval_tol = "1e-12", eval_format = "json";
  long eval_max_terms = 2000000;
  eval_cmd->add_option("--x", eval_x, "evaluation point")->required();
  eval_cmd->add_option("--lambda", eval_lambda, "indicial exponent (default 0)");
  eval_cmd->add_option("--tol", eval_tol, "tail tolerance");
  eval_cmd->add_option("--max-terms", eval_max_terms, "term budget");
  eval_cmd->add_option("--format", eval_format, "json or csv");

  auto* heun_cmd = app.add_subcommand(
      "heun", "confluent Heun family: construct, classify, evaluate");
  FamilySource heun_src;
  heun_src.add_options(heun_cmd);
  std::string heun_x, heun_tol = "1e-12", heun_emit_family, heun_format = "json";
  long heun_max_terms = 2000000;
  heun_cmd->add_option("--x", heun_x, "evaluation point");
  heun_cmd->add_option("--tol", heun_tol, "tail tolerance");
  heun_cmd->add_option("--max-terms", heun_max_terms, "term budget");
  heun_cmd->add_option("--emit-family", heun_emit_family,
                       "also write the family JSON here");
  heun_cmd->add_option("--format", heun_format, "json or csv");

  auto* scan_cmd = app.add_subcommand(
      "scan-boundary",
      "partial-sum growth scan at (a fraction of) the disc radius");
  FamilySource scan_src;
  scan_src.add_options(scan_cmd);
  std::string scan_side = "thm1", scan_checkpoints, scan_fraction = "1",
              scan_format = "csv";
  scan_cmd->add_option("--side", scan_side, "thm1 or thm2");
  scan_cmd->add_option("--checkpoints", scan_checkpoints,
                       "comma-separated M values")
      ->required();
  scan_cmd->add_option("--radius-fraction", scan_fraction,
                       "evaluate at fraction * radius (default 1 = boundary)");
  scan_cmd->add_option("--format", scan_format, "csv or json");

  auto* dec_cmd = app.add_subcommand(
      "decompose-check", "exact sub-series rearrangement identity check");
  FamilySource dec_src;
  dec_src.add_options(dec_cmd);
  long dec_n = 10;
  int dec_m = 12;
  std::string dec_x = "1/2", dec_mode = "group-by-b";
  dec_cmd->add_option("--n-start", dec_n, "majorant start index N");
  dec_cmd->add_option("--degree", dec_m, "total-degree truncation M");
  dec_cmd->add_option("--x", dec_x, "|x| for the value comparison");
  dec_cmd->add_option("--mode", dec_mode, "group-by-b or group-by-a");

  auto* wit_cmd = app.add_subcommand(
      "witness", "find and validate divergence inequality parameters");
  FamilySource wit_src;
  wit_src.add_options(wit_cmd);
  std::string wit_eps = "1e-3", wit_k = "1/2", wit_lower_at;
  long wit_scan_limit = 100000;
  int wit_p_max = 2;
  wit_cmd->add_option("--eps", wit_eps, "error bound in (0,1)");
  wit_cmd->add_option("--scan-limit", wit_scan_limit, "inequality scan range");
  wit_cmd->add_option("--K", wit_k, "slack constant in (0,1)");
  wit_cmd->add_option("--p-max", wit_p_max, "lower-bound truncation in p");
  wit_cmd->add_option("--lower-bound-at", wit_lower_at,
                      "comma-separated M checkpoints for the lower bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "ParseError: " << e.what() << "\n";
    return 1;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(classify_src, out_path);
    if (eval_cmd->parsed())
      return cmd_eval(eval_src, eval_x, eval_lambda, eval_tol, eval_max_terms,
                      eval_format, out_path);
    if (heun_cmd->parsed())
      return cmd_heun(heun_src, heun_x, heun_tol, heun_max_terms,
                      heun_emit_family, heun_format, out_path);
    if (scan_cmd->parsed())
      return cmd_scan_boundary(scan_src, scan_side, scan_checkpoints,
                               scan_fraction, scan_format, out_path);
    if (dec_cmd->parsed())
      return cmd_decompose_check(dec_src, dec_n, dec_m, dec_x, dec_mode,
                                 out_path);
    if (wit_cmd->parsed())
      return cmd_witness(wit_src, wit_eps, wit_scan_limit, wit_k, wit_p_max,
                         wit_lower_at, out_path);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ParseError: return 1;
      case ErrorKind::WitnessNotFound: return 3;
      default: return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
