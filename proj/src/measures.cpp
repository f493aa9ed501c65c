#include "symdiv/measures.hpp"

#include <cmath>
#include <string>

#include "symdiv/error.hpp"
#include "symdiv/numeric.hpp"
#include "symdiv/summation.hpp"

namespace symdiv {

namespace {

template <class Term>
double sum_terms(const ProbabilityDistribution& p, const ProbabilityDistribution& q, Term term) {
  require_same_size(p, q);
  CompensatedSum acc;
  for (std::size_t i = 0; i < p.size(); ++i) acc.add(term(p[i], q[i]));
  return acc.value();
}

// (sqrt a - sqrt b)^2 without the cancellation of subtracting square roots.
double sqrt_gap_squared(double a, double b) {
  const double g = (a - b) / (std::sqrt(a) + std::sqrt(b));
  return g * g;
}

}  // namespace

void require_same_size(const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorKind::DimensionMismatch, "distributions differ in atom count (" +
                                                  std::to_string(p.size()) + " vs " +
                                                  std::to_string(q.size()) + ")");
  }
}

std::string_view to_string(MeasureId id) noexcept {
  switch (id) {
    case MeasureId::H: return "H";
    case MeasureId::DELTA: return "DELTA";
    case MeasureId::PSI: return "PSI";
    case MeasureId::J: return "J";
    case MeasureId::I: return "I";
    case MeasureId::T: return "T";
    case MeasureId::KL: return "KL";
    case MeasureId::CHI2: return "CHI2";
    case MeasureId::B: return "B";
    case MeasureId::W: return "W";
    case MeasureId::DSTAR: return "DSTAR";
  }
  return "?";
}

std::optional<MeasureId> parse_measure(std::string_view name) noexcept {
  for (MeasureId id : kAllMeasures) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

bool is_symmetric(MeasureId id) noexcept {
  return id != MeasureId::KL && id != MeasureId::CHI2;
}

DivergenceValue hellinger(const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
  return {0.5 * sum_terms(p, q, sqrt_gap_squared), MeasureId::H};
}

DivergenceValue bhattacharyya(const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
  return {sum_terms(p, q, [](double a, double b) { return std::sqrt(a * b); }), MeasureId::B};
}

DivergenceValue triangular(const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
  return {sum_terms(p, q,
                    [](double a, double b) {
                      const double d = a - b;
                      return d * d / (a + b);
                    }),
          MeasureId::DELTA};
}

DivergenceValue harmonic_mean_w(const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
  return {sum_terms(p, q, [](double a, double b) { return 2.0 * a * b / (a + b); }),
          MeasureId::W};
}

DivergenceValue chi_square(const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
  return {sum_terms(p, q,
                    [](double a, double b) {
                      const double d = a - b;
                      return d * d / b;
                    }),
          MeasureId::CHI2};
}

DivergenceValue symmetric_chi_square(const ProbabilityDistribution& p,
                                     const ProbabilityDistribution& q) {
  return {sum_terms(p, q,
                    [](double a, double b) {
                      const double d = a - b;
                      return d * d * (a + b) / (a * b);
                    }),
          MeasureId::PSI};
}

DivergenceValue kullback_leibler(const ProbabilityDistribution& p,
                                 const ProbabilityDistribution& q) {
  return {sum_terms(p, q, [](double a, double b) { return a * log_ratio(a, b); }),
          MeasureId::KL};
}

DivergenceValue j_divergence(const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
  // (p - q) ln(p/q) == |p - q| ln(max/min); the right side is bitwise symmetric.
  return {sum_terms(p, q,
                    [](double a, double b) {
                      const double hi = std::fmax(a, b);
                      const double lo = std::fmin(a, b);
                      return (hi - lo) * log_ratio(hi, lo);
                    }),
          MeasureId::J};
}

DivergenceValue jensen_shannon(const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
  return {0.5 * sum_terms(p, q,
                          [](double a, double b) {
                            const double s = a + b;
                            const double u = (a - b) / s;
                            if (u * u < 1.0 / 64) return 0.5 * s * mixture_kernel(u);
                            return a * log_ratio(2.0 * a, s) + b * log_ratio(2.0 * b, s);
                          }),
          MeasureId::I};
}

DivergenceValue ag_mean(const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
  // (p+q) / (2 sqrt(pq)) - 1 == (sqrt p - sqrt q)^2 / (2 sqrt(pq))
  return {sum_terms(p, q,
                    [](double a, double b) {
                      const double g = std::sqrt(a * b);
                      return 0.5 * (a + b) * std::log1p(sqrt_gap_squared(a, b) / (2.0 * g));
                    }),
          MeasureId::T};
}

DivergenceValue d_star(const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
  return {sum_terms(p, q,
                    [](double a, double b) {
                      const double d2 = (a - b) * (a - b);
                      const double ab = a * b;
                      return d2 * d2 / (ab * std::sqrt(ab));
                    }),
          MeasureId::DSTAR};
}

DivergenceValue evaluate(MeasureId id, const ProbabilityDistribution& p,
                         const ProbabilityDistribution& q) {
  switch (id) {
    case MeasureId::H: return hellinger(p, q);
    case MeasureId::DELTA: return triangular(p, q);
    case MeasureId::PSI: return symmetric_chi_square(p, q);
    case MeasureId::J: return j_divergence(p, q);
    case MeasureId::I: return jensen_shannon(p, q);
    case MeasureId::T: return ag_mean(p, q);
    case MeasureId::KL: return kullback_leibler(p, q);
    case MeasureId::CHI2: return chi_square(p, q);
    case MeasureId::B: return bhattacharyya(p, q);
    case MeasureId::W: return harmonic_mean_w(p, q);
    case MeasureId::DSTAR: return d_star(p, q);
  }
  throw Error(ErrorKind::UnknownId, "unknown measure id");
}

MeasureTable::MeasureTable(const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
  require_same_size(p, q);
  for (MeasureId id : kAllMeasures) {
    values_[static_cast<std::size_t>(id)] = evaluate(id, p, q).value;
  }
}

}  // namespace symdiv
