#include "symdiv/csiszar.hpp"

#include <cmath>
#include <string>

#include "symdiv/error.hpp"
#include "symdiv/numeric.hpp"

namespace symdiv {

namespace {

void check_domain(GeneratorId id, double x) {
  if (!(x >= kGeneratorDomainFloor) || !std::isfinite(x)) {
    throw Error(ErrorKind::Domain, std::string(to_string(id)) + " evaluated at x = " +
                                       std::to_string(x) + ", outside (1e-300, inf)");
  }
}

}  // namespace

std::string_view to_string(GeneratorId id) noexcept {
  switch (id) {
    case GeneratorId::F_H: return "F_H";
    case GeneratorId::F_DELTA: return "F_DELTA";
    case GeneratorId::F_PSI: return "F_PSI";
    case GeneratorId::F_J: return "F_J";
    case GeneratorId::F_I: return "F_I";
    case GeneratorId::F_T: return "F_T";
    case GeneratorId::F_DSTAR: return "F_DSTAR";
  }
  return "?";
}

std::optional<GeneratorId> parse_generator(std::string_view name) noexcept {
  for (GeneratorId id : kAllGenerators) {
    if (to_string(id) == name) return id;
  }
  if (name == "DSTAR") return GeneratorId::F_DSTAR;
  return std::nullopt;
}

MeasureId measure_of(GeneratorId id) noexcept {
  switch (id) {
    case GeneratorId::F_H: return MeasureId::H;
    case GeneratorId::F_DELTA: return MeasureId::DELTA;
    case GeneratorId::F_PSI: return MeasureId::PSI;
    case GeneratorId::F_J: return MeasureId::J;
    case GeneratorId::F_I: return MeasureId::I;
    case GeneratorId::F_T: return MeasureId::T;
    case GeneratorId::F_DSTAR: return MeasureId::DSTAR;
  }
  return MeasureId::H;
}

std::optional<GeneratorId> generator_of(MeasureId id) noexcept {
  for (GeneratorId g : kAllGenerators) {
    if (measure_of(g) == id) return g;
  }
  return std::nullopt;
}

double GeneratingFunction::value(double x) const {
  check_domain(id_, x);
  const double d = x - 1.0;
  switch (id_) {
    case GeneratorId::F_H: {
      const double s = sqrt_minus_one(x);
      return 0.5 * s * s;
    }
    case GeneratorId::F_DELTA: return d * d / (x + 1.0);
    case GeneratorId::F_PSI: return d * d * (x + 1.0) / x;
    case GeneratorId::F_J: return d * log_ratio(x, 1.0);
    case GeneratorId::F_I:
    {
      // 1/2 [x ln(2x/(x+1)) + ln(2/(x+1))] == (x+1)/4 K((x-1)/(x+1))
      const double u = d / (x + 1.0);
      if (u * u < 1.0 / 64) return 0.25 * (x + 1.0) * mixture_kernel(u);
      return 0.5 * (x * log_ratio(2.0 * x, x + 1.0) + log_ratio(2.0, x + 1.0));
    }
    case GeneratorId::F_T: {
      const double s = sqrt_minus_one(x);
      return 0.5 * (x + 1.0) * std::log1p(s * s / (2.0 * std::sqrt(x)));
    }
    case GeneratorId::F_DSTAR: {
      const double d2 = d * d;
      return d2 * d2 / (x * std::sqrt(x));
    }
  }
  return 0.0;
}

double GeneratingFunction::first_derivative(double x) const {
  check_domain(id_, x);
  const double d = x - 1.0;
  switch (id_) {
    case GeneratorId::F_H: return sqrt_minus_one(x) / (2.0 * std::sqrt(x));
    case GeneratorId::F_DELTA: return d * (x + 3.0) / ((x + 1.0) * (x + 1.0));
    case GeneratorId::F_PSI: return d * (2.0 * x * x + x + 1.0) / (x * x);
    case GeneratorId::F_J: return d / x + log_ratio(x, 1.0);
    case GeneratorId::F_I: return 0.5 * log_ratio(2.0 * x, x + 1.0);
    case GeneratorId::F_T: {
      const double s = sqrt_minus_one(x);
      return 0.25 * (d / x + 2.0 * std::log1p(s * s / (2.0 * std::sqrt(x))));
    }
    case GeneratorId::F_DSTAR: return d * d * d * (5.0 * x + 3.0) / (2.0 * x * x * std::sqrt(x));
  }
  return 0.0;
}

double GeneratingFunction::second_derivative(double x) const {
  check_domain(id_, x);
  switch (id_) {
    case GeneratorId::F_H: return 1.0 / (4.0 * x * std::sqrt(x));
    case GeneratorId::F_DELTA: return 8.0 / ((x + 1.0) * (x + 1.0) * (x + 1.0));
    case GeneratorId::F_PSI: return 2.0 * (x * x * x + 1.0) / (x * x * x);
    case GeneratorId::F_J: return (x + 1.0) / (x * x);
    case GeneratorId::F_I: return 1.0 / (2.0 * x * (x + 1.0));
    case GeneratorId::F_T: return (x * x + 1.0) / (4.0 * x * x * (x + 1.0));
    case GeneratorId::F_DSTAR: {
      const double d = x - 1.0;
      return 3.0 * d * d * (5.0 * x * x + 6.0 * x + 5.0) / (4.0 * x * x * x * std::sqrt(x));
    }
  }
  return 0.0;
}

double GeneratingFunction::reduced_second_derivative(double x) const {
  if (id_ != GeneratorId::F_DSTAR) return second_derivative(x);
  check_domain(id_, x);
  const double r = std::sqrt(x) + 1.0;
  return 3.0 * r * r * (5.0 * x * x + 6.0 * x + 5.0) / (4.0 * x * x * x * std::sqrt(x));
}

GeneratingFunction catalog(GeneratorId id) noexcept { return GeneratingFunction(id); }

DivergenceValue csiszar_divergence(const GeneratingFunction& f, const ProbabilityDistribution& p,
                                   const ProbabilityDistribution& q) {
  return {csiszar_sum(p, q, [&f](double x) { return f.value(x); }), measure_of(f.id())};
}

}  // namespace symdiv
