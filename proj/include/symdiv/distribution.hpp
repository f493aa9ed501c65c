#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace symdiv {

/// Absolute tolerance on |sum - 1| accepted by make_distribution.
inline constexpr double kSumTolerance = 1e-9;

/// Smallest weight produced by the pair sampler.
inline constexpr double kMinSampledWeight = 1e-12;

enum class SumPolicy {
  Strict,   ///< reject inputs whose sum is off by more than kSumTolerance
  Rescale,  ///< divide by the sum instead
};

/// A complete discrete distribution with n >= 2 strictly positive atoms.
///
/// Construction goes through make_distribution / normalize. The stored
/// weights are pinned so that their compensated sum is exactly 1.0, which
/// makes re-validation a no-op.
class ProbabilityDistribution {
 public:
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const noexcept { return weights_[i]; }

  friend bool operator==(const ProbabilityDistribution&,
                         const ProbabilityDistribution&) = default;

 private:
  explicit ProbabilityDistribution(std::vector<double> weights)
      : weights_(std::move(weights)) {}

  friend ProbabilityDistribution make_distribution(std::span<const double>,
                                                   SumPolicy);

  std::vector<double> weights_;
};

/// Validates `weights` and returns them renormalized to unit mass.
///
/// Errors (symdiv::Error): NonFinite, Length (fewer than 2 atoms),
/// NonPositive, Sum (only under SumPolicy::Strict).
ProbabilityDistribution make_distribution(
    std::span<const double> weights, SumPolicy policy = SumPolicy::Strict);

inline ProbabilityDistribution make_distribution(
    std::initializer_list<double> weights,
    SumPolicy policy = SumPolicy::Strict) {
  return make_distribution(std::span<const double>(weights.begin(), weights.size()),
                           policy);
}

/// Additive smoothing followed by scaling: (w_i + eps) / (sum w + n eps).
/// Zero weights are rejected unless eps > 0.
ProbabilityDistribution normalize(std::span<const double> weights,
                                  double smoothing_epsilon = 0.0);

using DistributionPair = std::pair<ProbabilityDistribution, ProbabilityDistribution>;
using PairCorpus = std::vector<DistributionPair>;

/// Seeded generator of random distribution pairs.
///
/// Pair `index` is a pure function of (seed, n_min, n_max, skew, index); see
/// docs/sampler.md for the exact bit-level recipe.
struct PairSampler {
  std::uint64_t seed = 0;
  int n_min = 2;
  int n_max = 64;
  double skew = 1e6;  ///< upper bound on the injected max(p_i / q_i)
};

/// Throws InvalidArgument when the sampler parameters are unusable.
void validate(const PairSampler& sampler);

DistributionPair sample_pair(const PairSampler& sampler, std::uint64_t index);

/// Pairs [0, count) in index order.
PairCorpus sample_corpus(const PairSampler& sampler, std::size_t count);

/// The fixed corpus used by the property and acceptance suites:
/// seed 42, n in [2, 64], skew 1e6.
PairSampler standard_sampler();

/// Largest p_i / q_i over the atoms.
double max_ratio(const ProbabilityDistribution& p, const ProbabilityDistribution& q);

}  // namespace symdiv
