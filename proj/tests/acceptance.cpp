// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracle_values.hpp"
#include "reference.hpp"
#include "symdiv/bounds.hpp"
#include "symdiv/cli.hpp"
#include "symdiv/csiszar.hpp"
#include "symdiv/differences.hpp"
#include "symdiv/measures.hpp"

using namespace symdiv;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
  void report(const std::string& summary) { detail = pass ? summary : detail + " (" + summary + ")"; }
};

std::string format(const char* fmt, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

int run_cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  if (out) *out = o.str();
  return code;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string without_timestamp(const std::string& text) {
  std::istringstream in(text);
  std::string line, kept;
  while (std::getline(in, line)) {
    if (line.find("\"timestamp\"") == std::string::npos) kept += line + "\n";
  }
  return kept;
}

// |a - b| relative to the largest magnitude involved
double rel(double a, double b, std::initializer_list<double> parts = {}) {
  double s = std::max(std::abs(a), std::abs(b));
  for (double v : parts) s = std::max(s, std::abs(v));
  return s == 0 ? 0 : std::abs(a - b) / s;
}

Outcome chain_audit() {
  Outcome o;
  const fs::path out = fs::temp_directory_path() / "symdiv_acceptance_audit.json";
  const auto t0 = std::chrono::steady_clock::now();
  const int code = run_cli({"audit", "--seed", "42", "--pairs", "10000", "--n-min", "2",
                            "--n-max", "64", "--skew", "1e6", "--chains", "all", "--out",
                            out.string()});
  const double secs = seconds_since(t0);
  const auto report = nlohmann::json::parse(slurp(out));
  std::size_t violations = 0;
  double worst = INFINITY;
  for (const auto& c : report.at("chains")) {
    violations += c.at("violation_count").get<std::size_t>();
    worst = std::min(worst, c.at("min_slack").get<double>());
  }
  o.require(code == 0, "exit code " + std::to_string(code));
  o.require(report.at("chains").size() == 26, "chain count");
  o.require(violations == 0, std::to_string(violations) + " violations");
  o.require(secs < 30.0, "too slow");
  o.report(format("26 chains x 10000 pairs, %zu violations, min slack %.3g, %.2f s", violations,
                  worst, secs));
  return o;
}

Outcome constant_recovery() {
  Outcome o;
  const double fixture[] = {1.0 / 4, 1,       8,        8,       1.0 / 16, 2.0 / 3, 3,
                            1.0 / 2, 3.0 / 4, 2.0 / 3,  3,       2.0 / 3,  3,       1.0 / 12,
                            6.0 / 5, 10.0 / 9, 9.0 / 8, 4.0 / 3, 1.0 / 64};
  const auto t0 = std::chrono::steady_clock::now();
  std::string text;
  const int code = run_cli({"bounds", "--ratio", "all"}, &text);
  const double secs = seconds_since(t0);
  const auto certs = nlohmann::json::parse(text).at("certificates");
  o.require(code == 0, "exit code " + std::to_string(code));
  o.require(certs.size() == 19, "certificate count");
  double worst_value = 0, worst_x = 0;
  for (std::size_t i = 0; i < certs.size() && i < 19; ++i) {
    const double est = certs[i].at("estimate"), x = certs[i].at("attaining_x");
    worst_value = std::max(worst_value, std::abs(est - fixture[i]));
    worst_x = std::max(worst_x, std::abs(x - 1));
    o.require(certs[i].at("verified") == true,
              certs[i].at("num").get<std::string>() + " unverified");
  }
  o.require(worst_value <= 1e-6, "value off");
  o.require(worst_x <= 1e-6, "attaining x off");
  o.require(secs < 10.0, "too slow");
  o.report(format("19/19 verified, max |est-analytic| %.2g, max |x-1| %.2g, %.2f s", worst_value,
                  worst_x, secs));
  return o;
}

Outcome identity_suite() {
  Outcome o;
  double worst = 0;
  const auto corpus = sample_corpus(PairSampler{1, 2, 64, 1e6}, 1000);
  for (const auto& [p, q] : corpus) {
    const MeasureTable t(p, q);
    std::vector<double> mid(p.size());
    for (std::size_t i = 0; i < mid.size(); ++i) mid[i] = 0.5 * (p[i] + q[i]);
    const auto m = make_distribution(mid, SumPolicy::Rescale);
    const double j = t[MeasureId::J], in = t[MeasureId::I], tt = t[MeasureId::T];
    const double b = t[MeasureId::B], w = t[MeasureId::W];
    const auto d = [&](DifferenceId id) { return difference_value(difference_spec(id), t); };
    const double errs[] = {
        rel(j, 4 * (in + tt)),
        rel(j, kullback_leibler(p, q) + kullback_leibler(q, p)),
        rel(in, 0.5 * (kullback_leibler(p, m) + kullback_leibler(q, m))),
        rel(tt, 0.5 * (kullback_leibler(m, p) + kullback_leibler(m, q))),
        rel(t[MeasureId::H], 1 - b, {1.0, b}),
        rel(t[MeasureId::DELTA], 2 * (1 - w), {2.0, 2 * w}),
        rel(t[MeasureId::PSI], chi_square(p, q) + chi_square(q, p)),
        rel(d(DifferenceId::D_JI), 0.5 * d(DifferenceId::D_TI), {j / 8, in, tt}),
        rel(d(DifferenceId::D_JI), d(DifferenceId::D_TJ), {j / 8, in, tt}),
    };
    for (double e : errs) worst = std::max(worst, e);
  }
  o.require(worst <= 1e-12, "identity error too large");
  o.report(format("9 identities x 1000 pairs, worst relative error %.2g", worst));
  return o;
}

Outcome engine_equivalence() {
  Outcome o;
  double worst = 0;
  const auto corpus = sample_corpus(PairSampler{4, 2, 64, 1e6}, 1000);
  for (const auto& [p, q] : corpus) {
    for (GeneratorId id : kAllGenerators) {
      worst = std::max(worst, rel(csiszar_divergence(catalog(id), p, q),
                                  evaluate(measure_of(id), p, q)));
    }
  }
  o.require(worst <= 1e-12, "engine mismatch");
  o.report(format("7 generators incl. F_DSTAR x 1000 pairs, worst relative error %.2g", worst));
  return o;
}

Outcome convexity_probes() {
  Outcome o;
  std::vector<double> grid(10001);
  for (int i = 0; i <= 10000; ++i) {
    grid[i] = std::exp(std::log(1e-6) + std::log(1e12) * i / 10000);
  }
  grid.back() = 1e6;
  double base_min = INFINITY, diff_min = INFINITY, worst = 0;
  for (GeneratorId id : kBaseGenerators) {
    for (double x : grid) base_min = std::min(base_min, catalog(id).second_derivative(x));
  }
  for (const auto& s : all_differences()) {
    for (double x : grid) {
      const double d2 = second_derivative(s, x);
      diff_min = std::min(diff_min, d2);
      // defining combination in extended precision; in double it cancels
      // to O((x-1)^2) and loses up to 1e-10 next to x = 1
      const long double ref = testing::reference_combination(s, x);
      if (std::abs(x - 1.0) <= 1e-6) {
        const auto term = [x](const ScaledMeasure& m) {
          return m.coefficient * catalog(*generator_of(m.measure)).second_derivative(x);
        };
        o.require(std::abs(d2 - ref) <= 1e-18L * std::abs(term(s.minuend)),
                  std::string(s.name) + " at the double root");
        continue;
      }
      worst = std::max(worst, static_cast<double>(std::abs((d2 - ref) / ref)));
    }
  }
  o.require(base_min > 0, "base f'' not positive");
  o.require(diff_min >= -1e-12, "difference f'' negative");
  o.require(worst <= 1e-10, "closed form inconsistent");
  o.report(format("min base f'' %.3g, min difference f'' %.3g, worst form deviation %.2g",
                  base_min, diff_min, worst));
  return o;
}

Outcome sharpness() {
  Outcome o;
  const Curvature j{GeneratorId::F_J}, t{GeneratorId::F_T};
  const auto hit = search_sandwich_violation(j, t, 0.0, 7.9);
  o.require(hit.has_value(), "no violating pair found for M = 7.9");
  o.require(!search_sandwich_violation(j, t, 0.0, 8.0).has_value(), "M = 8 violated");
  if (hit) {
    PairCorpus one{*hit};
    const auto r = verify_sandwich(j, t, 0.0, 7.9, one);
    o.require(!r.ok(), "verify_sandwich disagrees with the search");
    if (!r.ok()) {
      o.report(format("M = 7.9 fails at P = (%.6g, %.6g) vs uniform: J = %.6g > 7.9 T = %.6g",
                      hit->first[0], hit->first[1], r.violations[0].c1,
                      7.9 * r.violations[0].c2));
    }
  }
  return o;
}

Outcome worked_pair() {
  Outcome o;
  const auto p = make_distribution({0.5, 0.5});
  const auto q = make_distribution({0.25, 0.75});
  const double b = (std::sqrt(2.0) + std::sqrt(6.0)) / 4;
  const struct {
    MeasureId id;
    double want;
  } exact[] = {{MeasureId::DELTA, 2.0 / 15}, {MeasureId::CHI2, 1.0 / 3},
               {MeasureId::PSI, 7.0 / 12},   {MeasureId::J, std::log(3.0) / 4},
               {MeasureId::H, 1 - b},        {MeasureId::W, 14.0 / 15},
               {MeasureId::B, b}};
  double worst = 0;
  for (const auto& e : exact) worst = std::max(worst, rel(evaluate(e.id, p, q), e.want));
  for (MeasureId id : kAllMeasures) {
    worst = std::max(worst,
                     rel(evaluate(id, p, q), oracle::kWorked[static_cast<std::size_t>(id)]));
  }
  o.require(worst <= 1e-12, "worked pair mismatch");
  o.report(format("11 measures vs exact forms and 50-digit oracle, worst %.2g", worst));
  return o;
}

Outcome cli_contract() {
  Outcome o;
  const fs::path golden = SYMDIV_GOLDEN_DIR, data = SYMDIV_TEST_DATA_DIR;
  const std::string p = (data / "p_half.json").string(), q = (data / "q_quarter.json").string();
  const std::vector<std::string> small_audit = {"audit", "--seed", "42", "--pairs", "200",
                                                "--chains", "BASIC,FINAL,EQUALITY"};
  std::string out, again;
  run_cli({"compute", "--p", p, "--q", q}, &out);
  o.require(out == slurp(golden / "compute_worked.json"), "compute json golden");
  run_cli({"compute", "--p", p, "--q", q, "--format", "csv"}, &out);
  o.require(out == slurp(golden / "compute_worked.csv"), "compute csv golden");
  run_cli({"bounds", "--ratio", "D_PSIT/DSTAR"}, &out);
  o.require(without_timestamp(out) == slurp(golden / "bounds_dpsit_dstar.json"), "bounds golden");
  run_cli(small_audit, &out);
  o.require(without_timestamp(out) == slurp(golden / "audit_small.json"), "audit golden");
  run_cli(small_audit, &again);
  o.require(without_timestamp(out) == without_timestamp(again), "audit not deterministic");

  const struct {
    std::vector<std::string> args;
    int code;
  } matrix[] = {
      {{"compute", "--p", p, "--q", q}, 0},
      {{"compute", "--p", p, "--q", (data / "q_zero.json").string()}, 2},
      {{"compute", "--p", p, "--q", (data / "bad_atom.csv").string()}, 2},
      {{"compute", "--p", p, "--q", (data / "three.json").string()}, 2},
      {{"audit", "--seed", "42", "--pairs", "10", "--chains", "BASIC,FINAL"}, 0},
      {{"audit", "--seed", "42", "--pairs", "0"}, 2},
      {{"audit", "--seed", "42", "--pairs", "10", "--chains", "NOPE"}, 2},
      {{"bounds", "--ratio", "D_PSIT/DSTAR"}, 0},
      {{"bounds", "--ratio", "F_J/F_T", "--grid-min", "2", "--grid-max", "50"}, 1},
      {{"bounds", "--ratio", "NOPE"}, 2},
  };
  for (const auto& m : matrix) {
    const int code = run_cli(m.args);
    o.require(code == m.code, m.args[0] + " exited " + std::to_string(code) + ", expected " +
                                  std::to_string(m.code));
  }
  o.report(format("4 golden files, audit determinism, %zu exit codes", std::size(matrix)));
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"chain audit", chain_audit},
      {"constant recovery", constant_recovery},
      {"identity suite", identity_suite},
      {"engine equivalence", engine_equivalence},
      {"convexity probes", convexity_probes},
      {"sharpness falsification", sharpness},
      {"worked-pair regression", worked_pair},
      {"CLI contract", cli_contract},
  };
  int failures = 0, n = 0;
  for (const auto& [name, check] : criteria) {
    ++n;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
