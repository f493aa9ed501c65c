#include "symdiv/audit.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <limits>

#include "symdiv/error.hpp"
#include "symdiv/measures.hpp"

namespace symdiv {

namespace {

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    std::string_view part = text.substr(start, end - start);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (!part.empty()) parts.push_back(part);
    start = end + 1;
  }
  return parts;
}

nlohmann::ordered_json grid_json(const GridSpec& grid) {
  return {{"x_min", grid.x_min},
          {"x_max", grid.x_max},
          {"points", grid.points},
          {"refinement_tolerance", grid.refinement_tolerance}};
}

}  // namespace

std::size_t AuditReport::violation_count() const noexcept {
  std::size_t total = 0;
  for (const auto& c : chains) total += c.violations.size();
  return total;
}

bool AuditReport::all_verified() const noexcept {
  return std::all_of(certificates.begin(), certificates.end(),
                     [](const BoundCertificate& c) { return c.verified; });
}

AuditReport run_audit(const AuditConfig& config) {
  validate(config.sampler);
  if (config.pairs == 0) throw Error(ErrorKind::InvalidArgument, "pair count must be at least 1");
  const auto selected = select_chains(config.chains);

  AuditReport report;
  nlohmann::ordered_json chain_ids = nlohmann::ordered_json::array();
  for (const Chain* chain : selected) {
    ChainSummary summary;
    summary.id = chain->id;
    summary.group = chain->group;
    summary.statement = chain->statement();
    summary.min_slack = std::numeric_limits<double>::infinity();
    report.chains.push_back(std::move(summary));
    chain_ids.push_back(chain->id);
  }
  report.config = {{"command", "audit"},
                   {"seed", config.sampler.seed},
                   {"pairs", config.pairs},
                   {"n_min", config.sampler.n_min},
                   {"n_max", config.sampler.n_max},
                   {"skew", config.sampler.skew},
                   {"chains", chain_ids},
                   {"slack_tolerance", kChainSlackTolerance}};

  // Pairs are processed in index order so the report is a deterministic
  // function of the config.
  for (std::size_t index = 0; index < config.pairs; ++index) {
    const auto [p, q] = sample_pair(config.sampler, index);
    const MeasureTable table(p, q);
    for (std::size_t c = 0; c < selected.size(); ++c) {
      const ChainEvaluation ev = evaluate_chain(*selected[c], table);
      ChainSummary& summary = report.chains[c];
      ++summary.pairs;
      for (std::size_t k = 0; k < ev.links.size(); ++k) {
        const LinkResult& link = ev.links[k];
        summary.min_slack = std::min(summary.min_slack, link.slack);
        if (!link.holds) {
          summary.violations.push_back(
              {index, summary.id, k, link.lhs, link.rhs, link.slack});
        }
      }
    }
  }
  return report;
}

AuditReport run_bounds(std::string_view selection, const GridSpec& grid) {
  validate(grid);
  std::vector<SharpConstant> rows;
  const auto tokens = split_list(selection);
  if (tokens.empty()) throw Error(ErrorKind::UnknownId, "empty ratio selection");
  for (std::string_view token : tokens) {
    if (token == "all") {
      rows.insert(rows.end(), sharp_constants().begin(), sharp_constants().end());
      continue;
    }
    auto row = find_sharp_constant(token);
    if (!row) {
      throw Error(ErrorKind::UnknownId, "unknown ratio '" + std::string(token) + "'");
    }
    rows.push_back(*row);
  }

  AuditReport report;
  nlohmann::ordered_json ids = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    report.certificates.push_back(certify(row, grid));
    ids.push_back(row.name());
  }
  report.config = {{"command", "bounds"},
                   {"ratios", ids},
                   {"grid", grid_json(grid)},
                   {"certificate_tolerance", kCertificateTolerance}};
  return report;
}

nlohmann::ordered_json to_json(const BoundCertificate& cert) {
  nlohmann::ordered_json j = {
      {"num", cert.numerator},
      {"den", cert.denominator},
      {"kind", to_string(cert.kind)},
      {"estimate", cert.numeric_estimate},
      {"attaining_x", cert.attaining_x},
      {"analytic", nullptr},
      {"verified", cert.verified},
      {"inequality", cert.inequality},
      {"grid", grid_json(cert.grid)},
  };
  if (cert.analytic_value) j["analytic"] = *cert.analytic_value;
  return j;
}

nlohmann::ordered_json to_json(const AuditReport& report) {
  nlohmann::ordered_json chains = nlohmann::ordered_json::array();
  for (const auto& c : report.chains) {
    nlohmann::ordered_json violations = nlohmann::ordered_json::array();
    for (const auto& v : c.violations) {
      violations.push_back({{"pair", v.pair_index},
                            {"chain", v.chain_id},
                            {"link", v.link_index},
                            {"lhs", v.lhs},
                            {"rhs", v.rhs},
                            {"slack", v.slack}});
    }
    chains.push_back({{"id", c.id},
                      {"group", c.group},
                      {"statement", c.statement},
                      {"pairs", c.pairs},
                      {"min_slack", c.min_slack},
                      {"violation_count", c.violations.size()},
                      {"violations", std::move(violations)}});
  }
  nlohmann::ordered_json certs = nlohmann::ordered_json::array();
  for (const auto& cert : report.certificates) certs.push_back(to_json(cert));

  return {{"version", report.version},
          {"timestamp", report.timestamp},
          {"config", report.config},
          {"chains", std::move(chains)},
          {"certificates", std::move(certs)}};
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace symdiv
