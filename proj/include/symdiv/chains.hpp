#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symdiv/differences.hpp"
#include "symdiv/measures.hpp"

namespace symdiv {

/// A linear combination of measure values. An empty expression is 0.
struct Expression {
  std::string label;
  std::vector<ScaledMeasure> terms;

  double evaluate(const MeasureTable& table) const noexcept;
};

enum class Relation { LessEqual, Equal };

/// expressions[0] R links[0] expressions[1] R links[1] ... expressions[k].
struct Chain {
  std::string id;     ///< e.g. "BASIC", "REMARK.3"
  std::string group;  ///< selection key, e.g. "REMARK"
  std::vector<Expression> expressions;
  std::vector<Relation> links;

  std::string statement() const;
};

/// Groups in report order.
const std::vector<std::string>& chain_groups();

/// Every chain the auditor knows, grouped in chain_groups() order.
const std::vector<Chain>& chain_definitions();

/// Resolves a comma-separated selection of group names and chain ids
/// ("all" selects everything). Throws UnknownId on an unrecognized token.
std::vector<const Chain*> select_chains(std::string_view selection);

/// Per-chain tolerance multiplier: a link fails when its slack is below
/// -kChainSlackTolerance * max(1, largest |expression| in the chain).
inline constexpr double kChainSlackTolerance = 1e-10;

struct LinkResult {
  double lhs = 0.0;
  double rhs = 0.0;
  /// rhs - lhs for <=, -|rhs - lhs| for =.
  double slack = 0.0;
  bool holds = true;
};

struct ChainEvaluation {
  std::vector<double> values;
  double scale = 1.0;  ///< max(1, largest |value|)
  std::vector<LinkResult> links;

  bool holds() const noexcept;
};

ChainEvaluation evaluate_chain(const Chain& chain, const MeasureTable& table);

}  // namespace symdiv
