#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "symdiv/csiszar.hpp"
#include "symdiv/differences.hpp"
#include "symdiv/distribution.hpp"

namespace symdiv {

/// Anything with a second derivative on (0, inf): a catalog generator or
/// one of the fifteen difference generators.
using Curvature = std::variant<GeneratorId, DifferenceId>;

std::string curvature_name(const Curvature& c);
std::optional<Curvature> parse_curvature(std::string_view name) noexcept;

double curvature_second_derivative(const Curvature& c, double x);
bool curvature_has_double_root(const Curvature& c) noexcept;
/// f'' / (sqrt(x) - 1)^2 when f'' has a double root at 1, f'' otherwise.
double curvature_reduced(const Curvature& c, double x);

/// C_f(P||Q) for the generator behind `c`.
double curvature_divergence(const Curvature& c, const ProbabilityDistribution& p,
                            const ProbabilityDistribution& q);

/// Inside |x - 1| < kRemovableWindow a ratio whose numerator and
/// denominator both vanish at 1 is evaluated from the reduced forms.
inline constexpr double kRemovableWindow = 1e-6;

/// x -> f1''(x) / f2''(x).
class RatioFunction {
 public:
  RatioFunction(Curvature numerator, Curvature denominator)
      : numerator_(numerator), denominator_(denominator) {}

  const Curvature& numerator() const noexcept { return numerator_; }
  const Curvature& denominator() const noexcept { return denominator_; }
  std::string name() const;

  /// Throws DenominatorVanishes when f2''(x) <= 0 outside a removable
  /// root, NonFiniteRatio when the quotient is not finite.
  double operator()(double x) const;

 private:
  Curvature numerator_;
  Curvature denominator_;
};

enum class Extremum { Infimum, Supremum };
std::string_view to_string(Extremum kind) noexcept;

struct GridSpec {
  double x_min = 1e-8;
  double x_max = 1e8;
  std::size_t points = 200001;
  double refinement_tolerance = 1e-12;
};

/// Throws InvalidArgument for an empty or non-positive grid.
void validate(const GridSpec& grid);

struct BoundCertificate {
  std::string numerator;
  std::string denominator;
  Extremum kind = Extremum::Supremum;
  double numeric_estimate = 0.0;
  double attaining_x = 1.0;
  std::optional<double> analytic_value;
  std::string inequality;  ///< the divergence inequality the constant yields
  GridSpec grid;
  bool verified = false;
};

/// Certificate agreement tolerance between numeric and analytic values.
inline constexpr double kCertificateTolerance = 1e-6;

/// Log-grid scan followed by golden-section refinement around the best
/// grid point. The returned estimate is exactly ratio(attaining_x).
BoundCertificate estimate_extremum(const RatioFunction& ratio, Extremum kind,
                                   const GridSpec& grid = {});

/// One row of the table of sharp constants.
struct SharpConstant {
  Curvature numerator;
  Curvature denominator;
  Extremum kind;
  double value;
  std::string_view inequality;

  RatioFunction ratio() const { return {numerator, denominator}; }
  std::string name() const { return ratio().name(); }
};

/// The 19 sharp constants: five among the base measures, thirteen among the
/// differences, and the cap of D_PSIT by DSTAR.
const std::vector<SharpConstant>& sharp_constants();

/// Looks a row up by "NUM/DEN" (aliases such as "DSTAR" or "D6" accepted).
std::optional<SharpConstant> find_sharp_constant(std::string_view ratio_id);

/// estimate_extremum plus comparison with the row's analytic value.
BoundCertificate certify(const SharpConstant& row, const GridSpec& grid = {});

// ---------------------------------------------------------------------------
// Sandwich checks: m C_f2 <= C_f1 <= M C_f2 on a corpus.

inline constexpr double kNoUpperBound = std::numeric_limits<double>::infinity();
inline constexpr double kNoLowerBound = -std::numeric_limits<double>::infinity();

enum class BoundSide { Lower, Upper };

struct SandwichViolation {
  std::size_t pair_index = 0;
  BoundSide side = BoundSide::Lower;
  double c1 = 0.0;
  double c2 = 0.0;
  double slack = 0.0;  ///< negative beyond tolerance
};

struct SandwichReport {
  std::size_t pairs_checked = 0;
  std::vector<SandwichViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Slack tolerance is kSandwichTolerance * max(1, |C_f2|).
inline constexpr double kSandwichTolerance = 1e-10;

SandwichReport verify_sandwich(const Curvature& f1, const Curvature& f2, double m, double M,
                               const PairCorpus& pairs);

/// Brute-force search for a two-atom pair near P = Q violating the
/// sandwich; returns std::nullopt when none is found.
std::optional<DistributionPair> search_sandwich_violation(const Curvature& f1,
                                                          const Curvature& f2, double m,
                                                          double M);

}  // namespace symdiv
