#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symdiv/bounds.hpp"
#include "symdiv/chains.hpp"
#include "symdiv/distribution.hpp"

#include <json.hpp>

namespace symdiv {

inline constexpr const char* kVersion = "0.1.0";

struct AuditConfig {
  PairSampler sampler = standard_sampler();
  std::size_t pairs = 10000;
  std::string chains = "all";
};

struct ChainViolation {
  std::size_t pair_index = 0;
  std::string chain_id;
  std::size_t link_index = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
};

struct ChainSummary {
  std::string id;
  std::string group;
  std::string statement;
  std::size_t pairs = 0;
  double min_slack = 0.0;  ///< smallest raw slack seen over every link and pair
  std::vector<ChainViolation> violations;
};

/// Everything a report needs; `config` is echoed verbatim into the JSON.
struct AuditReport {
  std::string version = kVersion;
  std::string timestamp;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::vector<ChainSummary> chains;
  std::vector<BoundCertificate> certificates;

  std::size_t violation_count() const noexcept;
  bool all_verified() const noexcept;
};

/// Samples `config.pairs` pairs and evaluates every selected chain on each.
/// Throws InvalidArgument for pairs == 0 or a bad sampler, UnknownId for an
/// unrecognized chain selection.
AuditReport run_audit(const AuditConfig& config);

/// Certificates for a comma-separated list of "NUM/DEN" ids, or "all".
/// Throws UnknownId for a ratio that is not in the sharp-constant table.
AuditReport run_bounds(std::string_view selection, const GridSpec& grid = {});

nlohmann::ordered_json to_json(const BoundCertificate& cert);
nlohmann::ordered_json to_json(const AuditReport& report);

/// Current UTC time as ISO-8601, e.g. "2024-01-02T03:04:05Z".
std::string utc_timestamp();

}  // namespace symdiv
