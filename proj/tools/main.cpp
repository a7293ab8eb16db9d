// Command-line front end: every result the library computes, as text, CSV
// or JSON. Machine-readable output goes to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 computation error, 2 argument error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <hcm/critical.hpp>
#include <hcm/densities.hpp>
#include <hcm/errors.hpp>
#include <hcm/measure.hpp>
#include <hcm/oracle.hpp>
#include <hcm/thue_morse.hpp>

using json = nlohmann::ordered_json;
using namespace hcm;

namespace {

struct RunConfig {
  int alphabet = 2;
  std::string rho;               // empty = 1/alphabet^2
  unsigned precision = kDefaultPrecisionBits;
  std::string tol = "1e-12";
  std::string format = "text";
  std::uint64_t seed = 1;

  Rational ratio() const {
    return rho.empty() ? Rational(1, Int(alphabet) * alphabet) : parse_rational(rho);
  }
  Rational tolerance() const {
    Rational t = parse_rational(tol);
    if (t <= 0) throw parse_error("tolerance must be positive");
    return t;
  }
  Params params() const { return Params(alphabet, ratio(), precision); }

  json to_json() const {
    return json{{"N", alphabet},
                {"rho", format_rational(ratio())},
                {"precision", precision},
                {"tol", tol},
                {"format", format},
                {"seed", seed}};
  }
};

std::string real_str(const Real& value, int digits = 20) {
  return value.str(digits);
}

void echo_config(const RunConfig& cfg, const std::string& command) {
  std::cerr << "# " << command << " N=" << cfg.alphabet << " rho="
            << format_rational(cfg.ratio()) << " precision=" << cfg.precision
            << " tol=" << cfg.tol << " seed=" << cfg.seed << "\n";
}

void emit(const RunConfig& cfg, const std::string& command, const json& result,
          const std::string& text) {
  if (cfg.format == "json") {
    json out{{"command", command}, {"config", cfg.to_json()}, {"result", result}};
    std::cout << out.dump(2) << "\n";
  } else {
    echo_config(cfg, command);
    std::cout << text;
  }
}

std::string measure_str(const measure::MeasureValue& value) {
  if (value.exact) return format_rational(*value.exact);
  return "[" + format_rational(value.lo) + "," + format_rational(value.hi) + "]";
}

json measure_json(const measure::MeasureValue& value) {
  json out;
  if (value.exact) out["exact"] = format_rational(*value.exact);
  out["lo"] = format_rational(value.lo);
  out["hi"] = format_rational(value.hi);
  return out;
}

json bound_json(const RealBound& bound) {
  return json{{"value", real_str(bound.mid())},
              {"err", real_str(bound.width() / 2, 4)},
              {"lo", real_str(bound.lo)},
              {"hi", real_str(bound.hi)}};
}

std::string bound_str(const RealBound& bound) {
  return real_str(bound.mid()) + " +-" + real_str(bound.width() / 2, 4);
}

// x may be a rational or a coding literal
Rational point_value(const std::string& text, const Params& p) {
  if (text.find('=') != std::string::npos)
    return measure::project(Coding::parse(text, p.alphabet()), p);
  return parse_rational(text);
}

// ---- verify suites ----------------------------------------------------------

struct SuiteResult {
  bool ok = true;
  Real worst{0};

  void fold(bool pass, const Real& discrepancy) {
    ok = ok && pass;
    if (discrepancy > worst) worst = discrepancy;
  }
};

int report_suite(const char* name, const SuiteResult& r) {
  std::printf("%s  %s (worst discrepancy %s)\n", r.ok ? "PASS" : "FAIL", name,
              real_str(r.worst, 4).c_str());
  return r.ok ? 0 : 1;
}

SuiteResult verify_measure(std::uint64_t seed) {
  SuiteResult result;
  std::mt19937_64 rng(seed);
  const Rational tol(1, ipow(Int(10), 13));
  for (int N : {2, 3, 4, 5}) {
    Params p(N, Rational(1, N * N));
    result.fold(measure::check_cdf_bounds(p, 2000, seed), Real(0));
    result.fold(measure::check_self_similarity(p, 100, seed), Real(0));
    for (int i = 0; i < 50; ++i) {
      Rational x = random_unit_rational(rng, 24);
      Rational r = (random_unit_rational(rng, 16) + Rational(1, 64)) / 2;
      measure::MeasureValue direct = measure::ball_measure(x, r, p, tol);
      measure::MeasureValue mirrored = measure::ball_measure(1 - x, r, p, tol);
      measure::MeasureValue brute = oracle::ball_cover(x, r, 14, p).to_measure(p);
      Rational gap1 = direct.lo > mirrored.hi ? direct.lo - mirrored.hi
                    : mirrored.lo > direct.hi ? mirrored.lo - direct.hi
                                              : Rational(0);
      Rational gap2 = direct.lo > brute.hi ? direct.lo - brute.hi
                    : brute.lo > direct.hi ? brute.lo - direct.hi
                                           : Rational(0);
      result.fold(gap1 == 0 && gap2 == 0, to_real(gap1 > gap2 ? gap1 : gap2));
    }
  }
  return result;
}

SuiteResult verify_density(std::uint64_t seed) {
  SuiteResult result;
  std::mt19937_64 rng(seed);
  for (int N : {2, 3, 4, 5}) {
    Params p(N, Rational(1, N * N));
    densities::DensityBounds bounds = densities::density_bounds(p);
    for (int i = 0; i < 8; ++i) {
      std::size_t len = 1 + rng() % 5;
      std::vector<int> period(len);
      for (int& d : period) d = random_digit(rng, N);
      Point x(Coding::periodic(Word(std::move(period))), p);
      Real lower = densities::lower_density(x, p);
      Real upper = densities::upper_density(x, p);
      result.fold(bounds.lower_min <= lower + Real("1e-20") && lower < upper &&
                      upper <= bounds.upper_max + Real("1e-20"),
                  Real(0));
      Real low_gap = abs(oracle::lower_density_scan(x, p, 4, 11, 16).mid() - lower);
      Real up_gap = abs(oracle::upper_density_scan(x, p, 4, 11, 16).mid() - upper);
      result.fold(low_gap <= Real("5e-3"), low_gap);
      result.fold(up_gap <= Real("5e-3"), up_gap);
    }
  }
  return result;
}

SuiteResult verify_critical(std::uint64_t seed) {
  SuiteResult result;
  const Rational tol(1, ipow(Int(10), 12));
  Real phi_gap = abs(critical::sft_spectral_radius() - (1 + sqrt(Real(5))) / 2);
  result.fold(phi_gap <= Real("1e-12"), phi_gap);
  for (int N = 2; N <= 8; ++N) {
    Params p(N, Rational(1, N * N));
    const Real& s = p.dimension();
    RealBound a = critical::a_critical(p, tol);
    RealBound b = critical::b_critical(p, tol);
    Real via_tg = pow(2 * (to_real(p.stride_ratio()) - critical::t_gamma(p, tol).mid()), -s);
    Real via_te = pow(2 * critical::t_eta(p, tol).mid(), -s);
    result.fold(abs(a.mid() - via_tg) <= Real("1e-10"), abs(a.mid() - via_tg));
    result.fold(abs(b.mid() - via_te) <= Real("1e-10"), abs(b.mid() - via_te));
    densities::DensityBounds bounds = densities::density_bounds(p);
    result.fold(bounds.lower_min < a.lo && a.hi < bounds.lower_max &&
                    bounds.upper_min < b.lo && b.hi < bounds.upper_max,
                Real(0));
  }
  std::mt19937_64 rng(seed);
  for (int N : {2, 3}) {
    Params p(N, Rational(1, N * N));
    for (int n = 1; n <= 3; ++n) {
      std::size_t len = std::size_t{1} << n;
      Word block = tm::theta_prefix(N, len);
      Word mirror = reflect(block, N);
      Coding alpha(block, Word{0});
      for (int trial = 0; trial < 4; ++trial) {
        Word per;
        for (int b = 0; b < 3; ++b) per = per + ((rng() & 1) ? block : mirror);
        result.fold(critical::admissible_eta(Coding::periodic(per), alpha, p), Real(0));
      }
    }
  }
  return result;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"pointwise densities and critical values of homogeneous Cantor measures"};
  app.set_config("--config");

  RunConfig cfg;
  app.add_option("--N", cfg.alphabet, "alphabet size (number of maps)")
      ->check(CLI::Range(2, 1 << 20));
  app.add_option("--rho", cfg.rho, "contraction ratio as p/q (default 1/N^2)");
  app.add_option("--precision", cfg.precision, "significant bits for real arithmetic")
      ->envname("HCM_PRECISION");
  app.add_option("--tol", cfg.tol, "tolerance for enclosures and series");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.require_subcommand(1);
  app.fallthrough();

  // sequences
  auto* seq = app.add_subcommand("sequences", "emit a Thue-Morse type digit sequence");
  std::string seq_kind;
  std::size_t seq_terms = 0;
  seq->add_option("--kind", seq_kind, "lambda | theta | tau")
      ->required()
      ->check(CLI::IsMember({"lambda", "theta", "tau"}));
  seq->add_option("--n", seq_terms, "number of terms")->required();
  seq->callback([&] {
    Word digits = seq_kind == "lambda" ? tm::lambda_prefix(cfg.alphabet, seq_terms)
                  : seq_kind == "theta" ? tm::theta_prefix(cfg.alphabet, seq_terms)
                                        : tm::classical_tau_prefix(seq_terms);
    int alphabet = seq_kind == "tau" ? 2 : cfg.alphabet;
    std::string line = format_word(digits, alphabet);
    emit(cfg, "sequences", json{{"kind", seq_kind}, {"digits", line}}, line + "\n");
  });

  // cdf
  auto* cdf_cmd = app.add_subcommand("cdf", "mass of [0, t]");
  std::string cdf_t;
  cdf_cmd->add_option("--t", cdf_t, "point, rational p/q")->required();
  cdf_cmd->callback([&] {
    Params p = cfg.params();
    measure::MeasureValue v = measure::cdf(parse_rational(cdf_t), p, cfg.tolerance());
    emit(cfg, "cdf", measure_json(v), measure_str(v) + "\n");
  });

  // ball
  auto* ball = app.add_subcommand("ball", "mass of the open ball (x-r, x+r)");
  std::string ball_x, ball_r;
  ball->add_option("--x", ball_x, "center: rational or coding literal")->required();
  ball->add_option("--r", ball_r, "radius, rational")->required();
  ball->callback([&] {
    Params p = cfg.params();
    measure::MeasureValue v = measure::ball_measure(
        point_value(ball_x, p), parse_rational(ball_r), p, cfg.tolerance());
    emit(cfg, "ball", measure_json(v), measure_str(v) + "\n");
  });

  // density
  auto* density = app.add_subcommand("density", "pointwise densities of a coded point");
  std::string density_point;
  density->add_option("--point", density_point, "coding literal pre=..;per=..")->required();
  bool density_json = false;
  density->add_flag("--json", density_json, "shorthand for --format json");
  density->callback([&] {
    if (density_json) cfg.format = "json";
    Params p = cfg.params();
    Point x(Coding::parse(density_point, p.alphabet()), p);
    densities::DensityReport rep = densities::report(x, p);
    json result{{"point", format_coding(x.coding, p.alphabet())},
                {"value", format_rational(x.value)},
                {"lower", real_str(rep.lower)},
                {"upper", real_str(rep.upper)},
                {"gamma_liminf", format_rational(rep.gamma_liminf)},
                {"eta_liminf", format_rational(rep.eta_liminf)},
                {"liminf_branch", real_str(rep.liminf_branch)},
                {"limsup_branch", real_str(rep.limsup_branch)},
                {"witness",
                 json{{"period_offset", rep.witness.period_offset},
                      {"hat_digit", rep.witness.hat_digit},
                      {"eta", format_rational(rep.witness.eta)}}}};
    std::ostringstream text;
    text << "point        " << format_coding(x.coding, p.alphabet()) << " = "
         << format_rational(x.value) << "\n"
         << "lower        " << real_str(rep.lower) << "\n"
         << "upper        " << real_str(rep.upper) << "\n"
         << "gamma_liminf " << format_rational(rep.gamma_liminf) << "\n"
         << "eta_liminf   " << format_rational(rep.eta_liminf) << "\n"
         << "witness      offset=" << rep.witness.period_offset
         << " hat_digit=" << rep.witness.hat_digit
         << " eta=" << format_rational(rep.witness.eta) << "\n";
    emit(cfg, "density", result, text.str());
  });

  // profile
  auto* profile = app.add_subcommand("profile", "density ratio profile over a radius range");
  std::string prof_point, prof_rmin, prof_rmax;
  int prof_samples = 64;
  profile->add_option("--point", prof_point, "coding literal")->required();
  profile->add_option("--r-min", prof_rmin, "smallest radius, rational")->required();
  profile->add_option("--r-max", prof_rmax, "largest radius, rational")->required();
  profile->add_option("--samples", prof_samples, "number of radii");
  profile->callback([&] {
    Params p = cfg.params();
    Point x(Coding::parse(prof_point, p.alphabet()), p);
    Rational r_min = parse_rational(prof_rmin);
    Rational r_max = parse_rational(prof_rmax);
    if (r_min <= 0 || r_max < r_min) throw parse_error("need 0 < r-min <= r-max");
    if (prof_samples < 1) throw parse_error("need at least one sample");
    PrecisionGuard guard(p.precision_bits());
    Real log_lo = log(to_real(r_min));
    Real log_hi = log(to_real(r_max));
    std::cout << "r,ratio_lo,ratio_hi\n";
    for (int i = 0; i < prof_samples; ++i) {
      Real lr = prof_samples == 1 ? log_lo
                                  : log_lo + (log_hi - log_lo) * i / (prof_samples - 1);
      Real scaled = ldexp(exp(lr), 64);
      Int num(scaled.convert_to<Int>());
      if (num <= 0) num = 1;
      Rational r(num, Int(1) << 64);
      RealBound ratio = measure::density_ratio(x.value, r, p, cfg.tolerance());
      std::cout << real_str(to_real(r)) << "," << real_str(ratio.lo) << ","
                << real_str(ratio.hi) << "\n";
    }
  });

  // critical
  auto* crit = app.add_subcommand("critical", "critical values for one instance");
  crit->callback([&] {
    Params p = cfg.params();
    Rational tol = cfg.tolerance();
    densities::DensityBounds bounds = densities::density_bounds(p);
    RealBound a = critical::a_critical(p, tol);
    RealBound b = critical::b_critical(p, tol);
    json result{{"lower_typical", real_str(bounds.lower_min)},
                {"a_c", bound_json(a)},
                {"lower_max", real_str(bounds.lower_max)},
                {"upper_min", real_str(bounds.upper_min)},
                {"b_c", bound_json(b)}};
    if (cfg.format == "csv") {
      std::cout << "N,rho,lower_typical,a_c,lower_max,upper_min,b_c\n"
                << p.alphabet() << "," << format_rational(p.ratio()) << ","
                << real_str(bounds.lower_min) << "," << real_str(a.mid()) << ","
                << real_str(bounds.lower_max) << "," << real_str(bounds.upper_min) << ","
                << real_str(b.mid()) << "\n";
      return;
    }
    std::ostringstream text;
    text << "lower_typical " << real_str(bounds.lower_min) << "\n"
         << "a_c           " << bound_str(a) << "\n"
         << "lower_max     " << real_str(bounds.lower_max) << "\n"
         << "upper_min     " << real_str(bounds.upper_min) << "\n"
         << "b_c           " << bound_str(b) << "\n";
    emit(cfg, "critical", result, text.str());
  });

  // critical-table
  auto* table = app.add_subcommand("critical-table", "critical values over a range of N");
  std::string range = "2..8";
  table->add_option("--N-range", range, "inclusive range lo..hi");
  table->callback([&] {
    auto dots = range.find("..");
    if (dots == std::string::npos) throw parse_error("range must look like 2..8");
    int lo = std::stoi(range.substr(0, dots));
    int hi = std::stoi(range.substr(dots + 2));
    if (lo < 2 || hi < lo) throw parse_error("range must satisfy 2 <= lo <= hi");
    std::vector<Params> instances;
    for (int N = lo; N <= hi; ++N)
      instances.push_back(Params(
          N, cfg.rho.empty() ? Rational(1, Int(N) * N) : parse_rational(cfg.rho),
          cfg.precision));
    std::vector<critical::TableRow> rows =
        critical::critical_table(instances, cfg.tolerance());
    if (cfg.format == "json") {
      json arr = json::array();
      for (const auto& row : rows)
        arr.push_back(json{{"N", row.alphabet},
                           {"rho", format_rational(row.ratio)},
                           {"lower_typical", real_str(row.lower_typical)},
                           {"a_c", real_str(row.a_c)},
                           {"lower_max", real_str(row.lower_max)},
                           {"upper_min", real_str(row.upper_min)},
                           {"b_c", real_str(row.b_c)}});
      std::cout << json{{"command", "critical-table"},
                        {"config", cfg.to_json()},
                        {"result", arr}}
                       .dump(2)
                << "\n";
      return;
    }
    if (cfg.format == "csv") {
      std::cout << "N,rho,lower_typical,a_c,lower_max,upper_min,b_c\n";
      for (const auto& row : rows)
        std::cout << row.alphabet << "," << format_rational(row.ratio) << ","
                  << real_str(row.lower_typical) << "," << real_str(row.a_c) << ","
                  << real_str(row.lower_max) << "," << real_str(row.upper_min) << ","
                  << real_str(row.b_c) << "\n";
      return;
    }
    echo_config(cfg, "critical-table");
    std::printf("%3s  %-10s %-10s %-10s %-10s %-10s %-10s\n", "N", "rho", "low_typ",
                "a_c", "low_max", "up_min", "b_c");
    for (const auto& row : rows)
      std::printf("%3d  %-10s %-10s %-10s %-10s %-10s %-10s\n", row.alphabet,
                  format_rational(row.ratio).c_str(),
                  real_str(row.lower_typical, 6).c_str(), real_str(row.a_c, 6).c_str(),
                  real_str(row.lower_max, 6).c_str(), real_str(row.upper_min, 6).c_str(),
                  real_str(row.b_c, 6).c_str());
  });

  // classify
  auto* classify = app.add_subcommand("classify", "classify a density level set");
  std::string side, value;
  classify->add_option("--side", side, "lower | upper")
      ->required()
      ->check(CLI::IsMember({"lower", "upper"}));
  classify->add_option("--value", value, "threshold, or the literal a_c / b_c")->required();
  classify->callback([&] {
    Params p = cfg.params();
    Rational tol = cfg.tolerance();
    critical::Classification cls = [&] {
      if (value == "a_c" || value == "b_c") {
        if ((value == "a_c") != (side == "lower"))
          throw parse_error("a_c goes with --side lower, b_c with --side upper");
        return side == "lower" ? critical::classify_lower_critical(p, tol)
                               : critical::classify_upper_critical(p, tol);
      }
      PrecisionGuard guard(p.precision_bits());
      Real v(value);
      return side == "lower" ? critical::classify_lower(v, p, tol)
                             : critical::classify_upper(v, p, tol);
    }();
    json result{{"side", side},
                {"value", value},
                {"class", critical::to_string(cls.tag)},
                {"critical", bound_json(cls.critical)},
                {"full_edge", real_str(cls.full_edge)},
                {"empty_edge", real_str(cls.empty_edge)}};
    emit(cfg, "classify", result, std::string(critical::to_string(cls.tag)) + "\n");
  });

  // admissible
  auto* adm = app.add_subcommand("admissible", "lexicographic admissibility of a coding");
  std::string adm_mode, adm_d, adm_alpha;
  adm->add_option("--mode", adm_mode, "gamma | eta")
      ->required()
      ->check(CLI::IsMember({"gamma", "eta"}));
  adm->add_option("--d", adm_d, "coding literal to test")->required();
  adm->add_option("--alpha", adm_alpha, "boundary coding literal")->required();
  adm->callback([&] {
    Params p = cfg.params();
    Coding d = Coding::parse(adm_d, p.alphabet());
    Coding alpha = Coding::parse(adm_alpha, p.alphabet());
    bool ok = adm_mode == "gamma" ? critical::admissible_gamma(d, alpha, p)
                                  : critical::admissible_eta(d, alpha, p);
    emit(cfg, "admissible", json{{"mode", adm_mode}, {"admissible", ok}},
         std::string(ok ? "true" : "false") + "\n");
  });

  // sft-bound
  auto* sft = app.add_subcommand("sft-bound", "block-shift dimension lower bound");
  int sft_n = 1;
  sft->add_option("--n", sft_n, "doubling level")->required();
  sft->callback([&] {
    Params p = cfg.params();
    Real radius = critical::sft_spectral_radius();
    Real bound = critical::sft_dim_lower_bound(sft_n, p);
    json result{{"spectral_radius", real_str(radius)},
                {"n", sft_n},
                {"dim_lower_bound", real_str(bound)}};
    std::ostringstream text;
    text << "spectral_radius " << real_str(radius) << "\n"
         << "dim_lower_bound " << real_str(bound) << "\n";
    emit(cfg, "sft-bound", result, text.str());
  });

  // verify
  auto* verify = app.add_subcommand("verify", "run the oracle cross-check suites");
  std::string suite = "all";
  verify->add_option("--suite", suite, "measure | density | critical | all")
      ->check(CLI::IsMember({"measure", "density", "critical", "all"}));
  verify->callback([&] {
    int failures = 0;
    if (suite == "measure" || suite == "all")
      failures += report_suite("measure", verify_measure(cfg.seed));
    if (suite == "density" || suite == "all")
      failures += report_suite("density", verify_density(cfg.seed));
    if (suite == "critical" || suite == "all")
      failures += report_suite("critical", verify_critical(cfg.seed));
    if (failures != 0) throw error("verification failed");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
