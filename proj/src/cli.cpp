#include "symdiv/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symdiv/audit.hpp"
#include "symdiv/error.hpp"
#include "symdiv/ingest.hpp"
#include "symdiv/measures.hpp"

namespace symdiv::cli {

namespace {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<MeasureId> parse_measure_list(const std::string& text) {
  if (text == "all") return {kAllMeasures.begin(), kAllMeasures.end()};
  std::vector<MeasureId> ids;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string token = text.substr(start, end - start);
    start = end + 1;
    if (token.empty()) continue;
    const auto id = parse_measure(token);
    if (!id) throw Error(ErrorKind::UnknownId, "unknown measure '" + token + "'");
    ids.push_back(*id);
  }
  if (ids.empty()) throw Error(ErrorKind::UnknownId, "empty measure selection");
  return ids;
}

// Writes the report to `path`, or to `out` when path is empty.
void emit_report(const AuditReport& report, const std::string& path, std::ostream& out) {
  const std::string text = to_json(report).dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::InvalidArgument, path + ": cannot open for writing");
  file << text;
}

struct ComputeArgs {
  std::string p_file;
  std::string q_file;
  std::string measures = "all";
  double smooth = 0.0;
  std::string format = "json";
  std::string input_format = "auto";
};

struct AuditArgs {
  std::uint64_t seed = 0;
  long long pairs = 0;
  int n_min = 2;
  int n_max = 64;
  double skew = 1e6;
  std::string chains = "all";
  std::string out;
};

struct BoundsArgs {
  std::string ratio = "all";
  GridSpec grid;
  std::string out;
};

int do_compute(const ComputeArgs& a, std::ostream& out) {
  const InputFormat in_format = parse_input_format(a.input_format);
  const auto ids = parse_measure_list(a.measures);
  const auto p = load_distribution(a.p_file, a.smooth, in_format);
  const auto q = load_distribution(a.q_file, a.smooth, in_format);
  if (p.size() != q.size()) {
    throw Error(ErrorKind::DimensionMismatch, a.p_file + " has " + std::to_string(p.size()) +
                                                  " atoms but " + a.q_file + " has " +
                                                  std::to_string(q.size()));
  }
  if (a.format == "csv") {
    out << "measure,value\n";
    for (MeasureId id : ids) out << to_string(id) << ',' << format_g17(evaluate(id, p, q)) << '\n';
  } else {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (MeasureId id : ids) j[std::string(to_string(id))] = evaluate(id, p, q).value;
    out << j.dump(2) << '\n';
  }
  return kOk;
}

int do_audit(const AuditArgs& a, std::ostream& out, std::ostream& err) {
  if (a.pairs < 1) throw Error(ErrorKind::InvalidArgument, "--pairs must be at least 1");
  AuditConfig config;
  config.sampler = PairSampler{a.seed, a.n_min, a.n_max, a.skew};
  config.pairs = static_cast<std::size_t>(a.pairs);
  config.chains = a.chains;
  AuditReport report = run_audit(config);
  report.timestamp = utc_timestamp();
  emit_report(report, a.out, out);
  const std::size_t violations = report.violation_count();
  err << "audit: " << config.pairs << " pairs, " << report.chains.size() << " chains, "
      << violations << " violations\n";
  return violations == 0 ? kOk : kFailed;
}

int do_bounds(const BoundsArgs& a, std::ostream& out, std::ostream& err) {
  AuditReport report = run_bounds(a.ratio, a.grid);
  report.timestamp = utc_timestamp();
  emit_report(report, a.out, out);
  std::size_t verified = 0;
  for (const auto& c : report.certificates) verified += c.verified ? 1 : 0;
  err << "bounds: " << verified << "/" << report.certificates.size() << " verified\n";
  return report.all_verified() ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric divergence measures: compute, audit inequality chains, certify "
               "sharp constants",
               "symdiv"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Evaluate measures between two histograms");
  c->add_option("--p", compute.p_file, "First distribution (JSON array or CSV)")->required();
  c->add_option("--q", compute.q_file, "Second distribution (JSON array or CSV)")->required();
  c->add_option("--measures", compute.measures,
                "Comma-separated ids (H,DELTA,PSI,J,I,T,KL,CHI2,B,W,DSTAR) or 'all'");
  c->add_option("--smooth", compute.smooth, "Additive smoothing epsilon")
      ->check(CLI::NonNegativeNumber);
  c->add_option("--format", compute.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  c->add_option("--input-format", compute.input_format, "Override input detection")
      ->check(CLI::IsMember({"auto", "json", "csv"}));

  AuditArgs audit;
  auto* a = app.add_subcommand("audit", "Check inequality chains over a seeded pair corpus");
  a->add_option("--seed", audit.seed, "Corpus seed")->required();
  a->add_option("--pairs", audit.pairs, "Number of pairs")->required();
  a->add_option("--n-min", audit.n_min, "Smallest atom count");
  a->add_option("--n-max", audit.n_max, "Largest atom count");
  a->add_option("--skew", audit.skew, "Largest injected p/q ratio");
  a->add_option("--chains", audit.chains, "Comma-separated chain groups or ids, or 'all'");
  a->add_option("--out", audit.out, "Report path (stdout when omitted)");

  BoundsArgs bounds;
  auto* b = app.add_subcommand("bounds", "Certify sharp second-derivative ratio constants");
  b->add_option("--ratio", bounds.ratio, "NUM/DEN id, comma-separated list, or 'all'");
  b->add_option("--grid-min", bounds.grid.x_min, "Smallest grid abscissa");
  b->add_option("--grid-max", bounds.grid.x_max, "Largest grid abscissa");
  b->add_option("--points", bounds.grid.points, "Grid point count");
  b->add_option("--out", bounds.out, "Report path (stdout when omitted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadInput;
  }

  try {
    if (c->parsed()) return do_compute(compute, out);
    if (a->parsed()) return do_audit(audit, out, err);
    return do_bounds(bounds, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
}

}  // namespace symdiv::cli
