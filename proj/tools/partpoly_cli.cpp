// partpoly command line front end: prints partition polynomials and exact
// values, isolates real roots, reproduces the root tables and figure data as
// CSV, evaluates the analytic bounds, and runs the verification sweeps with
// JSON reports.
//
// Exit codes: 0 success (and every selected claim verified), 1 claim failure
// or runtime error, 2 usage error.

#include "partpoly/bounds.hpp"
#include "partpoly/colored_counts.hpp"
#include "partpoly/reports.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace partpoly;

struct Options {
  int max_n_override = -1;
  int precision = 12;
  std::string out_path;
  std::string format = "text";
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + opt.out_path);
  out << text;
  if (!out.good()) throw std::runtime_error("write failed: " + opt.out_path);
}

PolyCache make_cache(const Options& opt, int needed) {
  if (opt.max_n_override >= 0) {
    if (opt.max_n_override < needed)
      throw CLI::ValidationError("--max-n", "--max-n=" + std::to_string(opt.max_n_override) +
                                                " is below the required " + std::to_string(needed));
    return PolyCache(opt.max_n_override);
  }
  return PolyCache(needed);
}

std::string decimal_or_exact(const Rational& q, int digits) {
  std::string s = q.get_str();
  if (q.get_den() != 1) {
    s += " (";
    s += to_fixed_decimal(q, static_cast<unsigned>(digits));
    s += ")";
  }
  return s;
}

int run_poly(const Options& opt, int n) {
  PolyCache cache = make_cache(opt, n);
  const Poly& p = cache.poly(n);
  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["n"] = n;
    std::vector<std::string> coeffs;
    for (const Rational& c : p.coeffs()) coeffs.push_back(c.get_str());
    j["coefficients"] = coeffs;  // ascending degree
    j["text"] = p.to_string();
    emit(opt, j.dump(2) + "\n");
  } else {
    emit(opt, "P_" + std::to_string(n) + "(x) = " + p.to_string() + "\n");
  }
  return 0;
}

int run_eval(const Options& opt, int n, const std::string& x_str) {
  const Rational x = parse_rational(x_str);
  PolyCache cache = make_cache(opt, n);
  const Rational v = cache.poly(n)(x);
  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["x"] = x.get_str();
    j["value"] = v.get_str();
    j["decimal"] = to_fixed_decimal(v, static_cast<unsigned>(opt.precision));
    emit(opt, j.dump(2) + "\n");
  } else {
    emit(opt, "P_" + std::to_string(n) + "(" + x.get_str() + ") = " +
                  decimal_or_exact(v, opt.precision) + "\n");
  }
  return 0;
}

int run_roots(const Options& opt, const std::string& family, int n, int a, int b,
              const std::string& eps_str) {
  const Rational eps = parse_rational(eps_str);
  Poly f;
  std::string label;
  if (family == "delta") {
    if (n < 1) throw CLI::ValidationError("--n", "delta family needs --n >= 1");
    PolyCache cache = make_cache(opt, n + 1);
    f = delta(cache, n);
    label = "Delta_" + std::to_string(n);
  } else if (family == "bo") {
    if (a < 1 || b < 1) throw CLI::ValidationError("--a/--b", "bo family needs --a, --b >= 1");
    PolyCache cache = make_cache(opt, a + b);
    f = bo_poly(cache, a, b);
    label = "P_{" + std::to_string(a) + "," + std::to_string(b) + "}";
  } else {  // prop7
    if (n < 1) throw CLI::ValidationError("--n", "prop7 family needs --n >= 1");
    PolyCache cache = make_cache(opt, n + 1);
    f = bo_poly(cache, n, 1);
    label = "x P_" + std::to_string(n) + " - P_" + std::to_string(n + 1);
  }

  RootReport rep = isolate_real_roots(f);
  for (RootInterval& iv : rep.intervals) iv = refine(f, iv, eps);

  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["polynomial"] = label;
    std::vector<std::string> exact;
    for (const Rational& r : rep.exact_roots) exact.push_back(r.get_str());
    j["exact_roots"] = exact;
    nlohmann::ordered_json ivs = nlohmann::ordered_json::array();
    for (const RootInterval& iv : rep.intervals) {
      nlohmann::ordered_json e;
      e["lo"] = iv.lo.get_str();
      e["hi"] = iv.hi.get_str();
      e["midpoint"] = to_fixed_decimal(iv.midpoint(), static_cast<unsigned>(opt.precision));
      ivs.push_back(e);
    }
    j["intervals"] = ivs;
    emit(opt, j.dump(2) + "\n");
  } else {
    std::string out = "real roots of " + label + "\n";
    for (const Rational& r : rep.exact_roots) out += "  exact   " + r.get_str() + "\n";
    for (const RootInterval& iv : rep.intervals)
      out += "  bracket " + to_fixed_decimal(iv.midpoint(), static_cast<unsigned>(opt.precision)) +
             "  in (" + iv.lo.get_str() + ", " + iv.hi.get_str() + ")\n";
    emit(opt, out);
  }
  return 0;
}

int run_bounds(const Options& opt, long m, long lehmer_n) {
  const auto digits = opt.precision;
  BoundPair bp = bo2_bounds(m);
  Enclosure mu_m = mu(m);
  Enclosure err = lehmer_error_bound(m, lehmer_n);
  std::optional<Int> p_m;
  if (m <= 5000) p_m = partition_sequence(static_cast<int>(m))[m];

  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["m"] = m;
    j["mu"] = mu_m.to_string(digits);
    j["lower"] = bp.lower.to_string(digits);
    j["upper"] = bp.upper.to_string(digits);
    j["p_m"] = p_m ? nlohmann::ordered_json(p_m->get_str()) : nlohmann::ordered_json(nullptr);
    j["lehmer_N"] = lehmer_n;
    j["lehmer_error_bound"] = err.to_string(digits);
    if (p_m) j["sandwich_certified"] = bo2_sandwich_certified(m, *p_m);
    emit(opt, j.dump(2) + "\n");
  } else {
    std::string out;
    out += "m = " + std::to_string(m) + "\n";
    out += "mu(m)        = " + mu_m.to_string(digits) + "\n";
    out += "lower bound  = " + bp.lower.to_string(digits) + "\n";
    out += "upper bound  = " + bp.upper.to_string(digits) + "\n";
    if (p_m) {
      out += "p(m)         = " + p_m->get_str() + "\n";
      out += "sandwich     = " + std::string(bo2_sandwich_certified(m, *p_m) ? "certified" : "FAILED") + "\n";
    }
    out += "lehmer(N=" + std::to_string(lehmer_n) + ")  = " + err.to_string(digits) + "\n";
    emit(opt, out);
  }
  return 0;
}

struct VerifySizes {
  int nmax_bo = 50;
  int kmax = 5;
  int nmax_cft = 50;
  int nmax_monotone = 100;
  int nmax_prime = 100;
  int nmax_main = 50;
  int amax_summand = 33;
  int nmax_prop7 = 100;
  int amax_bounds = 1000;
  int mmax_bounds = 1000;
};

int run_verify(const Options& opt, const std::string& suite, std::optional<int> nmax,
               std::optional<int> amax, std::optional<int> kmax, int jobs) {
  VerifySizes sz;
  if (nmax) {
    sz.nmax_bo = sz.nmax_cft = sz.nmax_monotone = sz.nmax_prime = sz.nmax_main = sz.nmax_prop7 = *nmax;
  }
  if (amax) {
    sz.amax_summand = *amax;
    sz.amax_bounds = *amax;
  }
  if (kmax) sz.kmax = *kmax;

  // size the cache to the largest index any selected sweep touches
  const bool all = suite == "all";
  int needed = 0;
  auto want = [&](bool on, int value) {
    if (on && value > needed) needed = value;
  };
  want(all || suite == "bo", sz.nmax_bo);
  want(all || suite == "cft", sz.nmax_cft);
  want(all || suite == "monotone", sz.nmax_monotone + 1);
  want(all || suite == "prime-remark", sz.nmax_prime + 1);
  want(all || suite == "main", sz.nmax_main);
  want(all || suite == "summand", 2 * sz.amax_summand - 1);
  want(all || suite == "prop7", sz.nmax_prop7 + 1);

  std::optional<PolyCache> cache;
  if (needed > 0) cache.emplace(make_cache(opt, needed));

  std::vector<VerificationReport> reports;
  if (all || suite == "bo") reports.push_back(verify_bo_classical(*cache, sz.nmax_bo, jobs));
  if (all || suite == "cft") reports.push_back(verify_cft(*cache, sz.kmax, sz.nmax_cft, jobs));
  if (all || suite == "monotone") reports.push_back(verify_monotonicity(*cache, sz.nmax_monotone, jobs));
  if (all || suite == "prime-remark") reports.push_back(verify_prime_remark(*cache, sz.nmax_prime, jobs));
  if (all || suite == "main") reports.push_back(verify_main_theorem(*cache, sz.nmax_main, jobs));
  if (all || suite == "summand") reports.push_back(verify_summand(*cache, sz.amax_summand, jobs));
  if (all || suite == "prop7") reports.push_back(verify_prop7_derivative_chain(*cache, sz.nmax_prop7, jobs));
  if (all || suite == "bounds") reports.push_back(verify_bounds_suite(sz.amax_bounds, sz.mmax_bounds, jobs));

  bool ok = true;
  std::string text;
  if (reports.size() == 1) {
    text = report_to_json(reports.front()).dump(2) + "\n";
    ok = reports.front().status == VerifyStatus::verified;
  } else {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const VerificationReport& r : reports) {
      arr.push_back(report_to_json(r));
      ok = ok && r.status == VerifyStatus::verified;
    }
    text = arr.dump(2) + "\n";
  }
  emit(opt, text);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partition polynomials: exact construction, root isolation, bounds, verification"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--max-n", opt.max_n_override, "cache size override (defaults to what the command needs)");
  app.add_option("--precision", opt.precision, "decimal digits for printed approximations")
      ->default_val(12);
  app.add_option("--out", opt.out_path, "write output to a file instead of stdout");
  app.add_option("--format", opt.format, "output format for poly/eval/roots/bounds")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");

  int n = 0, a = 1, b = 1;
  std::string x_str = "1", family = "delta", eps_str = "1/1000000000000";
  long m = 1, lehmer_n = 1;
  int amax = 10, bmax = 10, nmax_fig = 30, amax_fig2 = 100;

  CLI::App* poly = app.add_subcommand("poly", "print P_n exactly");
  poly->add_option("--n", n, "index n")->required();

  CLI::App* eval = app.add_subcommand("eval", "evaluate P_n at a rational point, exactly");
  eval->add_option("--n", n, "index n")->required();
  eval->add_option("--x", x_str, "rational point: p/q, integer, or decimal")->required();

  CLI::App* roots = app.add_subcommand("roots", "isolate and refine the real roots of one family member");
  roots->add_option("--family", family, "delta | bo | prop7")
      ->check(CLI::IsMember({"delta", "bo", "prop7"}))
      ->required();
  roots->add_option("--n", n, "index for delta/prop7");
  roots->add_option("--a", a, "first index for bo");
  roots->add_option("--b", b, "second index for bo");
  roots->add_option("--eps", eps_str, "refinement width (rational)");

  CLI::App* table1 = app.add_subcommand("table1", "CSV grid of positive roots of P_a P_b - P_{a+b}");
  table1->add_option("--amax", amax, "rows 1..amax")->default_val(10);
  table1->add_option("--bmax", bmax, "columns 1..bmax")->default_val(10);

  CLI::App* figure1 = app.add_subcommand("figure1", "CSV of float roots of the difference polynomials");
  figure1->add_option("--nmax", nmax_fig, "n = 1..nmax")->default_val(30);

  CLI::App* figure2 = app.add_subcommand("figure2", "CSV of the positive root of P_a P_1 - P_{a+1}");
  figure2->add_option("--amax", amax_fig2, "a = 1..amax")->default_val(100);

  CLI::App* bounds = app.add_subcommand("bounds", "two-sided p(m) estimate, mu, and the series error bound");
  bounds->add_option("--m", m, "index m >= 1")->required();
  bounds->add_option("--lehmer", lehmer_n, "truncation index N for the error bound")->default_val(1);

  CLI::App* verify = app.add_subcommand("verify", "run verification sweeps, emit JSON reports");
  std::string suite;
  std::optional<int> v_nmax, v_amax, v_kmax;
  int jobs = 0;
  verify->add_option("suite", suite, "bo|cft|monotone|prime-remark|main|summand|prop7|bounds|all")
      ->check(CLI::IsMember({"bo", "cft", "monotone", "prime-remark", "main", "summand", "prop7",
                             "bounds", "all"}))
      ->required();
  verify->add_option("--nmax", v_nmax, "sweep size for the n/pair indexed suites");
  verify->add_option("--amax", v_amax, "sweep size for summand/bounds");
  verify->add_option("--kmax", v_kmax, "color bound for cft");
  verify->add_option("--jobs", jobs, "worker cap (0 = hardware threads)")->default_val(0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (poly->parsed()) return run_poly(opt, n);
    if (eval->parsed()) return run_eval(opt, n, x_str);
    if (roots->parsed()) return run_roots(opt, family, n, a, b, eps_str);
    if (table1->parsed()) {
      PolyCache cache = make_cache(opt, amax + bmax);
      emit(opt, table1_csv(cache, amax, bmax));
      return 0;
    }
    if (figure1->parsed()) {
      PolyCache cache = make_cache(opt, nmax_fig + 1);
      emit(opt, figure1_csv(cache, nmax_fig));
      return 0;
    }
    if (figure2->parsed()) {
      PolyCache cache = make_cache(opt, amax_fig2 + 1);
      emit(opt, figure2_csv(cache, amax_fig2));
      return 0;
    }
    if (bounds->parsed()) return run_bounds(opt, m, lehmer_n);
    if (verify->parsed()) return run_verify(opt, suite, v_nmax, v_amax, v_kmax, jobs);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
