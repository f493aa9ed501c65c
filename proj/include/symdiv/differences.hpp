#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "symdiv/distribution.hpp"
#include "symdiv/measures.hpp"

namespace symdiv {

/// The fifteen nonnegative differences, in alias order D1..D15.
enum class DifferenceId {
  D_PSIT,
  D_PSIJ,
  D_PSIH,
  D_PSII,
  D_PSIDELTA,
  D_TJ,
  D_TH,
  D_TI,
  D_TDELTA,
  D_JH,
  D_JI,
  D_JDELTA,
  D_HI,
  D_HDELTA,
  D_IDELTA,
};

inline constexpr std::size_t kDifferenceCount = 15;

struct ScaledMeasure {
  MeasureId measure;
  double coefficient;
};

/// minuend.coefficient * minuend.measure - subtrahend.coefficient * subtrahend.measure
struct DifferenceSpec {
  DifferenceId id;
  std::string_view name;
  int alias;  ///< k in D_k
  ScaledMeasure minuend;
  ScaledMeasure subtrahend;
};

const std::array<DifferenceSpec, kDifferenceCount>& all_differences() noexcept;
const DifferenceSpec& difference_spec(DifferenceId id) noexcept;

std::string_view to_string(DifferenceId id) noexcept;
/// Accepts canonical names ("D_TJ") and aliases ("D6").
std::optional<DifferenceId> parse_difference(std::string_view name) noexcept;

double difference_value(const DifferenceSpec& spec, const ProbabilityDistribution& p,
                        const ProbabilityDistribution& q);
double difference_value(const DifferenceSpec& spec, const MeasureTable& table) noexcept;

/// Same quantity through the engine: sum q f(p/q) with
/// f = c1 f_minuend - c2 f_subtrahend.
double difference_value_via_generator(const DifferenceSpec& spec,
                                      const ProbabilityDistribution& p,
                                      const ProbabilityDistribution& q);

/// Generating function of the difference, c1 f_a(x) - c2 f_b(x).
double difference_generator_value(const DifferenceSpec& spec, double x);

/// Closed-form f'' of the difference's generator as a factored
/// expression. Throws DomainError for x <= 0.
double second_derivative(const DifferenceSpec& spec, double x);

/// f''(x) / (sqrt(x) - 1)^2. Every difference f'' carries a double root at
/// x = 1, so this is the form without it; finite and positive at x = 1.
double reduced_second_derivative(const DifferenceSpec& spec, double x);

}  // namespace symdiv
