#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "symdiv/distribution.hpp"

namespace symdiv {

/// Every closed-form measure the library evaluates. KL and CHI2 are the
/// directed measures K(P||Q) and chi^2(P||Q); the rest are symmetric.
enum class MeasureId { H, DELTA, PSI, J, I, T, KL, CHI2, B, W, DSTAR };

inline constexpr std::array<MeasureId, 11> kAllMeasures = {
    MeasureId::H,  MeasureId::DELTA, MeasureId::PSI, MeasureId::J,
    MeasureId::I,  MeasureId::T,     MeasureId::KL,  MeasureId::CHI2,
    MeasureId::B,  MeasureId::W,     MeasureId::DSTAR};

std::string_view to_string(MeasureId id) noexcept;
std::optional<MeasureId> parse_measure(std::string_view name) noexcept;

/// True for measures with value(P,Q) == value(Q,P).
bool is_symmetric(MeasureId id) noexcept;

/// Value of a measure in nats for the logarithmic ones, dimensionless
/// otherwise.
struct DivergenceValue {
  double value = 0.0;
  MeasureId measure = MeasureId::H;

  operator double() const noexcept { return value; }
};

// All evaluators require equal atom counts (DimensionMismatch otherwise)
// and sum their per-atom terms with compensated accumulation. Symmetric
// measures compute each term in a form that is bitwise symmetric in
// (p_i, q_i), so value(P,Q) == value(Q,P) exactly.

/// h = 1/2 sum (sqrt p - sqrt q)^2
DivergenceValue hellinger(const ProbabilityDistribution& p, const ProbabilityDistribution& q);
/// B = sum sqrt(p q)
DivergenceValue bhattacharyya(const ProbabilityDistribution& p, const ProbabilityDistribution& q);
/// Delta = sum (p - q)^2 / (p + q)
DivergenceValue triangular(const ProbabilityDistribution& p, const ProbabilityDistribution& q);
/// W = sum 2 p q / (p + q)
DivergenceValue harmonic_mean_w(const ProbabilityDistribution& p, const ProbabilityDistribution& q);
/// chi^2(P||Q) = sum (p - q)^2 / q
DivergenceValue chi_square(const ProbabilityDistribution& p, const ProbabilityDistribution& q);
/// Psi = sum (p - q)^2 (p + q) / (p q)
DivergenceValue symmetric_chi_square(const ProbabilityDistribution& p,
                                     const ProbabilityDistribution& q);
/// K(P||Q) = sum p ln(p / q)
DivergenceValue kullback_leibler(const ProbabilityDistribution& p,
                                 const ProbabilityDistribution& q);
/// J = sum (p - q) ln(p / q)
DivergenceValue j_divergence(const ProbabilityDistribution& p, const ProbabilityDistribution& q);
/// I = 1/2 [sum p ln(2p / (p + q)) + sum q ln(2q / (p + q))]
DivergenceValue jensen_shannon(const ProbabilityDistribution& p, const ProbabilityDistribution& q);
/// T = sum (p + q)/2 ln((p + q) / (2 sqrt(p q)))
DivergenceValue ag_mean(const ProbabilityDistribution& p, const ProbabilityDistribution& q);
/// D* = sum (p - q)^4 / sqrt((p q)^3)
DivergenceValue d_star(const ProbabilityDistribution& p, const ProbabilityDistribution& q);

DivergenceValue evaluate(MeasureId id, const ProbabilityDistribution& p,
                         const ProbabilityDistribution& q);

/// All eleven measures of one pair, indexed by MeasureId.
class MeasureTable {
 public:
  MeasureTable(const ProbabilityDistribution& p, const ProbabilityDistribution& q);

  double operator[](MeasureId id) const noexcept {
    return values_[static_cast<std::size_t>(id)];
  }

 private:
  std::array<double, kAllMeasures.size()> values_{};
};

/// Throws DimensionMismatch unless both have the same atom count.
void require_same_size(const ProbabilityDistribution& p, const ProbabilityDistribution& q);

}  // namespace symdiv
