#include "symdiv/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "symdiv/error.hpp"
#include "symdiv/summation.hpp"

namespace symdiv {

namespace {

std::string atom_message(std::string_view what, std::size_t index, double value) {
  return std::string(what) + " at atom " + std::to_string(index) + " (value " +
         std::to_string(value) + ")";
}

void check_shape(std::span<const double> weights) {
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(weights[i])) {
      throw Error(ErrorKind::NonFinite, atom_message("non-finite weight", i, weights[i]));
    }
  }
  if (weights.size() < 2) {
    throw Error(ErrorKind::Length, "a distribution needs at least 2 atoms, got " +
                                       std::to_string(weights.size()));
  }
}

// Divides by the compensated sum, then nudges the largest weight until the
// compensated sum of the stored vector is exactly 1.0.
std::vector<double> unit_mass(std::span<const double> weights) {
  std::vector<double> out(weights.begin(), weights.end());
  const double total = compensated_sum(out);
  if (total != 1.0) {
    for (double& w : out) w /= total;
  }
  const auto largest = static_cast<std::size_t>(
      std::distance(out.begin(), std::max_element(out.begin(), out.end())));
  for (int attempt = 0; attempt < 4; ++attempt) {
    const double s = compensated_sum(out);
    if (s == 1.0) break;
    CompensatedSum others;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i != largest) others.add(out[i]);
    }
    out[largest] = 1.0 - others.value();
  }
  return out;
}

std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double standard_exponential(std::mt19937_64& rng) {
  return -std::log1p(-unit_uniform(rng));
}

std::vector<double> dirichlet_flat(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> w(n);
  for (double& x : w) x = standard_exponential(rng);
  const double total = compensated_sum(w);
  if (total > 0.0) {
    for (double& x : w) x /= total;
  } else {
    std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(n));
  }
  return w;
}

// Raises every weight below `floor` to exactly `floor` and rescales the
// remaining atoms to keep unit mass.
void apply_floor(std::vector<double>& w, double floor) {
  for (int pass = 0; pass < 8; ++pass) {
    CompensatedSum free_mass;
    std::size_t floored = 0;
    for (double& x : w) {
      if (x <= floor) {
        x = floor;
        ++floored;
      } else {
        free_mass.add(x);
      }
    }
    const double target = 1.0 - static_cast<double>(floored) * floor;
    const double scale = target / free_mass.value();
    bool stable = true;
    for (double& x : w) {
      if (x > floor) {
        x *= scale;
        if (x < floor) stable = false;
      }
    }
    if (stable) return;
  }
}

}  // namespace

ProbabilityDistribution make_distribution(std::span<const double> weights,
                                          SumPolicy policy) {
  check_shape(weights);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] > 0.0)) {
      throw Error(ErrorKind::NonPositive, atom_message("non-positive weight", i, weights[i]));
    }
  }
  const double total = compensated_sum(weights);
  if (policy == SumPolicy::Strict && std::fabs(total - 1.0) > kSumTolerance) {
    throw Error(ErrorKind::Sum, "weights sum to " + std::to_string(total) +
                                    ", expected 1 within 1e-9");
  }
  return ProbabilityDistribution(unit_mass(weights));
}

ProbabilityDistribution normalize(std::span<const double> weights,
                                  double smoothing_epsilon) {
  check_shape(weights);
  if (!std::isfinite(smoothing_epsilon) || smoothing_epsilon < 0.0) {
    throw Error(ErrorKind::InvalidArgument,
                "smoothing epsilon must be finite and nonnegative");
  }
  bool all_zero = true;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0.0) {
      throw Error(ErrorKind::NonPositive, atom_message("negative weight", i, weights[i]));
    }
    if (weights[i] > 0.0) all_zero = false;
  }
  if (all_zero && smoothing_epsilon == 0.0) {
    throw Error(ErrorKind::AllZero, "all weights are zero");
  }
  if (smoothing_epsilon == 0.0) {
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] == 0.0) {
        throw Error(ErrorKind::ZeroWithNoSmoothing,
                    "zero weight at atom " + std::to_string(i) +
                        " with no smoothing; use a positive smoothing epsilon");
      }
    }
  }
  std::vector<double> smoothed(weights.begin(), weights.end());
  if (smoothing_epsilon > 0.0) {
    for (double& w : smoothed) w += smoothing_epsilon;
  }
  return make_distribution(smoothed, SumPolicy::Rescale);
}

void validate(const PairSampler& sampler) {
  if (sampler.n_min < 2 || sampler.n_max < sampler.n_min) {
    throw Error(ErrorKind::InvalidArgument,
                "sampler needs 2 <= n_min <= n_max, got [" + std::to_string(sampler.n_min) +
                    ", " + std::to_string(sampler.n_max) + "]");
  }
  if (!std::isfinite(sampler.skew) || sampler.skew < 1.0) {
    throw Error(ErrorKind::InvalidArgument, "sampler skew must be a finite value >= 1");
  }
}

DistributionPair sample_pair(const PairSampler& sampler, std::uint64_t index) {
  validate(sampler);
  std::mt19937_64 rng(mix64(sampler.seed ^ mix64(index)));

  const auto span = static_cast<std::uint64_t>(sampler.n_max - sampler.n_min) + 1;
  const auto n = static_cast<std::size_t>(sampler.n_min) + static_cast<std::size_t>(rng() % span);

  std::vector<double> p = dirichlet_flat(rng, n);
  std::vector<double> q = dirichlet_flat(rng, n);

  const bool adversarial = unit_uniform(rng) < 0.25;
  if (adversarial) {
    const auto k = static_cast<std::size_t>(rng() % n);
    const double ratio = std::exp(unit_uniform(rng) * std::log(sampler.skew));
    const bool swap_roles = (rng() & 1U) != 0;
    q[k] = p[k] / ratio;
    const double total = compensated_sum(q);
    for (double& x : q) x /= total;
    if (swap_roles) std::swap(p, q);
  }
  apply_floor(p, kMinSampledWeight);
  apply_floor(q, kMinSampledWeight);
  return {make_distribution(p, SumPolicy::Rescale), make_distribution(q, SumPolicy::Rescale)};
}

PairCorpus sample_corpus(const PairSampler& sampler, std::size_t count) {
  validate(sampler);
  PairCorpus corpus;
  corpus.reserve(count);
  for (std::size_t i = 0; i < count; ++i) corpus.push_back(sample_pair(sampler, i));
  return corpus;
}

PairSampler standard_sampler() { return PairSampler{42, 2, 64, 1e6}; }

double max_ratio(const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorKind::DimensionMismatch, "distributions differ in atom count");
  }
  double best = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) best = std::max(best, p[i] / q[i]);
  return best;
}

}  // namespace symdiv
