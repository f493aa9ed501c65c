#include "symdiv/differences.hpp"

#include <cmath>
#include <string>

#include "symdiv/csiszar.hpp"
#include "symdiv/error.hpp"
#include "symdiv/numeric.hpp"

namespace symdiv {

namespace {

using M = MeasureId;
using D = DifferenceId;

constexpr std::array<DifferenceSpec, kDifferenceCount> kSpecs = {{
    {D::D_PSIT, "D_PSIT", 1, {M::PSI, 1.0 / 16.0}, {M::T, 1.0}},
    {D::D_PSIJ, "D_PSIJ", 2, {M::PSI, 1.0 / 16.0}, {M::J, 1.0 / 8.0}},
    {D::D_PSIH, "D_PSIH", 3, {M::PSI, 1.0 / 16.0}, {M::H, 1.0}},
    {D::D_PSII, "D_PSII", 4, {M::PSI, 1.0 / 16.0}, {M::I, 1.0}},
    {D::D_PSIDELTA, "D_PSIDELTA", 5, {M::PSI, 1.0 / 16.0}, {M::DELTA, 1.0 / 4.0}},
    {D::D_TJ, "D_TJ", 6, {M::T, 1.0}, {M::J, 1.0 / 8.0}},
    {D::D_TH, "D_TH", 7, {M::T, 1.0}, {M::H, 1.0}},
    {D::D_TI, "D_TI", 8, {M::T, 1.0}, {M::I, 1.0}},
    {D::D_TDELTA, "D_TDELTA", 9, {M::T, 1.0}, {M::DELTA, 1.0 / 4.0}},
    {D::D_JH, "D_JH", 10, {M::J, 1.0 / 8.0}, {M::H, 1.0}},
    {D::D_JI, "D_JI", 11, {M::J, 1.0 / 8.0}, {M::I, 1.0}},
    {D::D_JDELTA, "D_JDELTA", 12, {M::J, 1.0 / 8.0}, {M::DELTA, 1.0 / 4.0}},
    {D::D_HI, "D_HI", 13, {M::H, 1.0}, {M::I, 1.0}},
    {D::D_HDELTA, "D_HDELTA", 14, {M::H, 1.0}, {M::DELTA, 1.0 / 4.0}},
    {D::D_IDELTA, "D_IDELTA", 15, {M::I, 1.0}, {M::DELTA, 1.0 / 4.0}},
}};

void check_domain(const DifferenceSpec& spec, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw Error(ErrorKind::Domain, std::string(spec.name) + " second derivative at x = " +
                                       std::to_string(x) + ", expected x > 0");
  }
}

GeneratingFunction generator_for(MeasureId id) {
  // Every measure used in a difference has a generator.
  return catalog(*generator_of(id));
}

}  // namespace

const std::array<DifferenceSpec, kDifferenceCount>& all_differences() noexcept { return kSpecs; }

const DifferenceSpec& difference_spec(DifferenceId id) noexcept {
  return kSpecs[static_cast<std::size_t>(id)];
}

std::string_view to_string(DifferenceId id) noexcept { return difference_spec(id).name; }

std::optional<DifferenceId> parse_difference(std::string_view name) noexcept {
  for (const auto& spec : kSpecs) {
    if (spec.name == name) return spec.id;
    if (name == "D" + std::to_string(spec.alias)) return spec.id;
  }
  return std::nullopt;
}

double difference_value(const DifferenceSpec& spec, const ProbabilityDistribution& p,
                        const ProbabilityDistribution& q) {
  const double a = evaluate(spec.minuend.measure, p, q).value;
  const double b = evaluate(spec.subtrahend.measure, p, q).value;
  return spec.minuend.coefficient * a - spec.subtrahend.coefficient * b;
}

double difference_value(const DifferenceSpec& spec, const MeasureTable& table) noexcept {
  return spec.minuend.coefficient * table[spec.minuend.measure] -
         spec.subtrahend.coefficient * table[spec.subtrahend.measure];
}

double difference_generator_value(const DifferenceSpec& spec, double x) {
  return spec.minuend.coefficient * generator_for(spec.minuend.measure).value(x) -
         spec.subtrahend.coefficient * generator_for(spec.subtrahend.measure).value(x);
}

double difference_value_via_generator(const DifferenceSpec& spec,
                                      const ProbabilityDistribution& p,
                                      const ProbabilityDistribution& q) {
  return csiszar_sum(p, q, [&spec](double x) { return difference_generator_value(spec, x); });
}

double second_derivative(const DifferenceSpec& spec, double x) {
  check_domain(spec, x);
  const double d2 = (x - 1.0) * (x - 1.0);
  const double s = sqrt_minus_one(x);
  const double s2 = s * s;
  const double rx = std::sqrt(x);
  const double x2 = x * x;
  const double x3 = x2 * x;
  const double xp1 = x + 1.0;
  const double xp1_3 = xp1 * xp1 * xp1;
  switch (spec.id) {
    case D::D_PSIT: return d2 * (x2 + x + 1.0) / (8.0 * x3 * xp1);
    case D::D_PSIJ: return d2 * xp1 / (8.0 * x3);
    case D::D_PSIH: {
      // x sqrt(x) - 1 == (sqrt(x) - 1)(x + sqrt(x) + 1)
      const double t = s * (x + rx + 1.0);
      return t * t / (8.0 * x3);
    }
    case D::D_PSII: return d2 * (x2 + 3.0 * x + 1.0) / (8.0 * x3 * xp1);
    case D::D_PSIDELTA:
      return d2 * (x2 * x2 + 5.0 * x3 + 12.0 * x2 + 5.0 * x + 1.0) / (8.0 * x3 * xp1_3);
    case D::D_TJ: return d2 / (8.0 * x2 * xp1);
    case D::D_TH: return s2 * (x + rx + 1.0) / (4.0 * x2 * xp1);
    case D::D_TI: return d2 / (4.0 * x2 * xp1);
    case D::D_TDELTA: return d2 * (x2 + 4.0 * x + 1.0) / (4.0 * x2 * xp1_3);
    case D::D_JH: return s2 / (8.0 * x2);
    case D::D_JI: return d2 / (8.0 * x2 * xp1);
    case D::D_JDELTA: return d2 * (x2 + 6.0 * x + 1.0) / (8.0 * x2 * xp1_3);
    case D::D_HI: return s2 / (4.0 * x * rx * xp1);
    case D::D_HDELTA: {
      const double r = rx + 1.0;
      return s2 * (r * r * xp1 + 4.0 * x) / (4.0 * x * rx * xp1_3);
    }
    case D::D_IDELTA: return d2 / (2.0 * x * xp1_3);
  }
  return 0.0;
}

double reduced_second_derivative(const DifferenceSpec& spec, double x) {
  check_domain(spec, x);
  const double rx = std::sqrt(x);
  const double r2 = (rx + 1.0) * (rx + 1.0);  // (x - 1)^2 / (sqrt(x) - 1)^2
  const double x2 = x * x;
  const double x3 = x2 * x;
  const double xp1 = x + 1.0;
  const double xp1_3 = xp1 * xp1 * xp1;
  switch (spec.id) {
    case D::D_PSIT: return r2 * (x2 + x + 1.0) / (8.0 * x3 * xp1);
    case D::D_PSIJ: return r2 * xp1 / (8.0 * x3);
    case D::D_PSIH: {
      const double t = x + rx + 1.0;
      return t * t / (8.0 * x3);
    }
    case D::D_PSII: return r2 * (x2 + 3.0 * x + 1.0) / (8.0 * x3 * xp1);
    case D::D_PSIDELTA:
      return r2 * (x2 * x2 + 5.0 * x3 + 12.0 * x2 + 5.0 * x + 1.0) / (8.0 * x3 * xp1_3);
    case D::D_TJ: return r2 / (8.0 * x2 * xp1);
    case D::D_TH: return (x + rx + 1.0) / (4.0 * x2 * xp1);
    case D::D_TI: return r2 / (4.0 * x2 * xp1);
    case D::D_TDELTA: return r2 * (x2 + 4.0 * x + 1.0) / (4.0 * x2 * xp1_3);
    case D::D_JH: return 1.0 / (8.0 * x2);
    case D::D_JI: return r2 / (8.0 * x2 * xp1);
    case D::D_JDELTA: return r2 * (x2 + 6.0 * x + 1.0) / (8.0 * x2 * xp1_3);
    case D::D_HI: return 1.0 / (4.0 * x * rx * xp1);
    case D::D_HDELTA: return (r2 * xp1 + 4.0 * x) / (4.0 * x * rx * xp1_3);
    case D::D_IDELTA: return r2 / (2.0 * x * xp1_3);
  }
  return 0.0;
}

}  // namespace symdiv
