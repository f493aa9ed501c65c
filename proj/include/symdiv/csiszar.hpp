#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "symdiv/distribution.hpp"
#include "symdiv/measures.hpp"
#include "symdiv/summation.hpp"

namespace symdiv {

enum class GeneratorId { F_H, F_DELTA, F_PSI, F_J, F_I, F_T, F_DSTAR };

inline constexpr std::array<GeneratorId, 7> kAllGenerators = {
    GeneratorId::F_H, GeneratorId::F_DELTA, GeneratorId::F_PSI, GeneratorId::F_J,
    GeneratorId::F_I, GeneratorId::F_T,     GeneratorId::F_DSTAR};

/// The six strictly convex generators of the symmetric measures.
inline constexpr std::array<GeneratorId, 6> kBaseGenerators = {
    GeneratorId::F_H, GeneratorId::F_DELTA, GeneratorId::F_PSI,
    GeneratorId::F_J, GeneratorId::F_I,     GeneratorId::F_T};

/// Arguments below this are rejected with DomainError.
inline constexpr double kGeneratorDomainFloor = 1e-300;

std::string_view to_string(GeneratorId id) noexcept;
/// Accepts the canonical names plus "DSTAR" for F_DSTAR.
std::optional<GeneratorId> parse_generator(std::string_view name) noexcept;

/// The closed-form measure a generator reproduces through C_f.
MeasureId measure_of(GeneratorId id) noexcept;
std::optional<GeneratorId> generator_of(MeasureId id) noexcept;

/// A normalized convex generating function f with closed-form f' and f''.
///
/// `reduced_second_derivative` is f''(x) / (sqrt(x) - 1)^2 for generators
/// whose f'' has a double root at x = 1 (only F_DSTAR), and f'' otherwise.
/// Ratio evaluation uses it to cancel removable 0/0 forms at x = 1.
class GeneratingFunction {
 public:
  explicit constexpr GeneratingFunction(GeneratorId id) noexcept : id_(id) {}

  GeneratorId id() const noexcept { return id_; }
  std::string_view name() const noexcept { return to_string(id_); }

  double value(double x) const;
  double first_derivative(double x) const;
  double second_derivative(double x) const;

  bool has_double_root_at_one() const noexcept { return id_ == GeneratorId::F_DSTAR; }
  double reduced_second_derivative(double x) const;

  double operator()(double x) const { return value(x); }

 private:
  GeneratorId id_;
};

GeneratingFunction catalog(GeneratorId id) noexcept;

/// sum_i q_i f(p_i / q_i) for any callable f, compensated.
template <class F>
double csiszar_sum(const ProbabilityDistribution& p, const ProbabilityDistribution& q, F&& f) {
  require_same_size(p, q);
  CompensatedSum acc;
  for (std::size_t i = 0; i < p.size(); ++i) acc.add(q[i] * f(p[i] / q[i]));
  return acc.value();
}

DivergenceValue csiszar_divergence(const GeneratingFunction& f, const ProbabilityDistribution& p,
                                   const ProbabilityDistribution& q);

}  // namespace symdiv
