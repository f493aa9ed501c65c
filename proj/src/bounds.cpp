#include "symdiv/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symdiv/error.hpp"

namespace symdiv {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

constexpr double kInvGolden = 0.6180339887498948482;  // (sqrt(5) - 1) / 2
constexpr int kMaxGoldenIterations = 500;

bool better(Extremum kind, double candidate, double incumbent) {
  return kind == Extremum::Supremum ? candidate > incumbent : candidate < incumbent;
}

// Golden-section search for the extremum of `f` on [a, b].
template <class F>
double golden_section(const F& f, Extremum kind, double a, double b, double tolerance) {
  double c = b - kInvGolden * (b - a);
  double d = a + kInvGolden * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < kMaxGoldenIterations; ++it) {
    const double scale = std::max(1.0, std::fabs(0.5 * (a + b)));
    if (b - a <= tolerance * scale) break;
    if (better(kind, fc, fd)) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvGolden * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvGolden * (b - a);
      fd = f(d);
    }
  }
  return better(kind, fc, fd) ? c : d;
}

using D = DifferenceId;
using G = GeneratorId;

std::vector<SharpConstant> build_table() {
  const auto sup = Extremum::Supremum;
  const auto inf = Extremum::Infimum;
  return {
      {G::F_I, G::F_DELTA, inf, 1.0 / 4, "DELTA/4 <= I"},
      {G::F_I, G::F_H, sup, 1.0, "I <= H"},
      {G::F_J, G::F_H, inf, 8.0, "H <= J/8"},
      {G::F_J, G::F_T, sup, 8.0, "J/8 <= T"},
      {G::F_T, G::F_PSI, sup, 1.0 / 16, "T <= PSI/16"},
      {D::D_IDELTA, D::D_HDELTA, sup, 2.0 / 3, "D_IDELTA <= 2/3 D_HDELTA"},
      {D::D_HDELTA, D::D_HI, sup, 3.0, "D_HDELTA <= 3 D_HI"},
      {D::D_HI, D::D_TJ, sup, 1.0 / 2, "D_HI <= 1/2 D_TJ"},
      {D::D_HDELTA, D::D_JDELTA, sup, 3.0 / 4, "D_HDELTA <= 3/4 D_JDELTA"},
      {D::D_JDELTA, D::D_TDELTA, sup, 2.0 / 3, "D_JDELTA <= 2/3 D_TDELTA"},
      {D::D_TDELTA, D::D_TJ, sup, 3.0, "D_TDELTA <= 3 D_TJ"},
      {D::D_TJ, D::D_TH, sup, 2.0 / 3, "D_TJ <= 2/3 D_TH"},
      {D::D_TH, D::D_JH, sup, 3.0, "D_TH <= 3 D_JH"},
      {D::D_JH, D::D_PSIDELTA, sup, 1.0 / 12, "D_JH <= 1/12 D_PSIDELTA"},
      {D::D_PSIDELTA, D::D_PSII, sup, 6.0 / 5, "D_PSIDELTA <= 6/5 D_PSII"},
      {D::D_PSII, D::D_PSIH, sup, 10.0 / 9, "D_PSII <= 10/9 D_PSIH"},
      {D::D_PSIH, D::D_PSIJ, sup, 9.0 / 8, "D_PSIH <= 9/8 D_PSIJ"},
      {D::D_PSIJ, D::D_PSIT, sup, 4.0 / 3, "D_PSIJ <= 4/3 D_PSIT"},
      {D::D_PSIT, G::F_DSTAR, sup, 1.0 / 64, "D_PSIT <= DSTAR/64"},
  };
}

bool within_tolerance(double value, double bound, double scale) {
  return value >= bound - kSandwichTolerance * std::max(1.0, std::fabs(scale));
}

}  // namespace

std::string curvature_name(const Curvature& c) {
  return std::visit([](auto id) { return std::string(to_string(id)); }, c);
}

std::optional<Curvature> parse_curvature(std::string_view name) noexcept {
  if (auto g = parse_generator(name)) return Curvature{*g};
  if (auto d = parse_difference(name)) return Curvature{*d};
  return std::nullopt;
}

double curvature_second_derivative(const Curvature& c, double x) {
  return std::visit(overloaded{
                        [x](GeneratorId g) { return catalog(g).second_derivative(x); },
                        [x](DifferenceId d) { return second_derivative(difference_spec(d), x); },
                    },
                    c);
}

bool curvature_has_double_root(const Curvature& c) noexcept {
  return std::visit(overloaded{
                        [](GeneratorId g) { return catalog(g).has_double_root_at_one(); },
                        [](DifferenceId) { return true; },
                    },
                    c);
}

double curvature_reduced(const Curvature& c, double x) {
  return std::visit(
      overloaded{
          [x](GeneratorId g) { return catalog(g).reduced_second_derivative(x); },
          [x](DifferenceId d) { return reduced_second_derivative(difference_spec(d), x); },
      },
      c);
}

double curvature_divergence(const Curvature& c, const ProbabilityDistribution& p,
                            const ProbabilityDistribution& q) {
  return std::visit(overloaded{
                        [&](GeneratorId g) { return csiszar_divergence(catalog(g), p, q).value; },
                        [&](DifferenceId d) { return difference_value(difference_spec(d), p, q); },
                    },
                    c);
}

std::string RatioFunction::name() const {
  return curvature_name(numerator_) + "/" + curvature_name(denominator_);
}

double RatioFunction::operator()(double x) const {
  const bool removable =
      curvature_has_double_root(numerator_) && curvature_has_double_root(denominator_);
  double value;
  if (removable && std::fabs(x - 1.0) < kRemovableWindow) {
    const double den = curvature_reduced(denominator_, x);
    if (!(den > 0.0)) {
      throw Error(ErrorKind::DenominatorVanishes,
                  name() + ": reduced denominator <= 0 at x = " + std::to_string(x));
    }
    value = curvature_reduced(numerator_, x) / den;
  } else {
    const double den = curvature_second_derivative(denominator_, x);
    if (!(den > 0.0)) {
      throw Error(ErrorKind::DenominatorVanishes,
                  name() + ": denominator second derivative <= 0 at x = " + std::to_string(x));
    }
    value = curvature_second_derivative(numerator_, x) / den;
  }
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::NonFiniteRatio, name() + ": non-finite ratio at x = " + std::to_string(x));
  }
  return value;
}

std::string_view to_string(Extremum kind) noexcept {
  return kind == Extremum::Supremum ? "supremum" : "infimum";
}

void validate(const GridSpec& grid) {
  if (!(grid.x_min > 0.0) || !(grid.x_max > grid.x_min) || !std::isfinite(grid.x_max) ||
      grid.points < 3 || !(grid.refinement_tolerance > 0.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "grid needs 0 < x_min < x_max, at least 3 points and a positive tolerance");
  }
}

BoundCertificate estimate_extremum(const RatioFunction& ratio, Extremum kind,
                                   const GridSpec& grid) {
  validate(grid);
  const double log_min = std::log(grid.x_min);
  const double step = (std::log(grid.x_max) - log_min) / static_cast<double>(grid.points - 1);
  auto grid_x = [&](std::size_t i) {
    if (i == 0) return grid.x_min;
    if (i + 1 == grid.points) return grid.x_max;
    return std::exp(log_min + static_cast<double>(i) * step);
  };

  std::size_t best_i = 0;
  double best = ratio(grid_x(0));
  for (std::size_t i = 1; i < grid.points; ++i) {
    const double v = ratio(grid_x(i));
    if (better(kind, v, best)) {
      best = v;
      best_i = i;
    }
  }

  const double lo = grid_x(best_i == 0 ? 0 : best_i - 1);
  const double hi = grid_x(best_i + 1 == grid.points ? best_i : best_i + 1);
  double x = grid_x(best_i);
  if (hi > lo) {
    const double refined = golden_section(ratio, kind, lo, hi, grid.refinement_tolerance);
    if (!better(kind, best, ratio(refined))) x = refined;
  }

  BoundCertificate cert;
  cert.numerator = curvature_name(ratio.numerator());
  cert.denominator = curvature_name(ratio.denominator());
  cert.kind = kind;
  cert.attaining_x = x;
  cert.numeric_estimate = ratio(x);
  cert.grid = grid;
  return cert;
}

const std::vector<SharpConstant>& sharp_constants() {
  static const std::vector<SharpConstant> table = build_table();
  return table;
}

std::optional<SharpConstant> find_sharp_constant(std::string_view ratio_id) {
  const auto slash = ratio_id.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  const auto num = parse_curvature(ratio_id.substr(0, slash));
  const auto den = parse_curvature(ratio_id.substr(slash + 1));
  if (!num || !den) return std::nullopt;
  for (const auto& row : sharp_constants()) {
    if (row.numerator == *num && row.denominator == *den) return row;
  }
  return std::nullopt;
}

BoundCertificate certify(const SharpConstant& row, const GridSpec& grid) {
  BoundCertificate cert = estimate_extremum(row.ratio(), row.kind, grid);
  cert.analytic_value = row.value;
  cert.inequality = std::string(row.inequality);
  cert.verified = std::fabs(cert.numeric_estimate - row.value) <= kCertificateTolerance;
  return cert;
}

SandwichReport verify_sandwich(const Curvature& f1, const Curvature& f2, double m, double M,
                               const PairCorpus& pairs) {
  if (std::isnan(m) || std::isnan(M) || m > M) {
    throw Error(ErrorKind::InvalidArgument, "sandwich needs m <= M");
  }
  SandwichReport report;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [p, q] = pairs[i];
    const double c1 = curvature_divergence(f1, p, q);
    const double c2 = curvature_divergence(f2, p, q);
    ++report.pairs_checked;
    if (std::isfinite(m) && !within_tolerance(c1, m * c2, c2)) {
      report.violations.push_back({i, BoundSide::Lower, c1, c2, c1 - m * c2});
    }
    if (std::isfinite(M) && !within_tolerance(M * c2, c1, c2)) {
      report.violations.push_back({i, BoundSide::Upper, c1, c2, M * c2 - c1});
    }
  }
  return report;
}

std::optional<DistributionPair> search_sandwich_violation(const Curvature& f1,
                                                          const Curvature& f2, double m,
                                                          double M) {
  // P = (1/2 + delta, 1/2 - delta) against the uniform Q, shrinking delta
  // geometrically toward P = Q where the sharp constants are attained.
  const auto uniform = make_distribution({0.5, 0.5});
  for (double delta = 0.45; delta > 1e-6; delta *= 0.9) {
    auto p = make_distribution({0.5 + delta, 0.5 - delta});
    PairCorpus one;
    one.emplace_back(p, uniform);
    if (!verify_sandwich(f1, f2, m, M, one).ok()) return one.front();
  }
  return std::nullopt;
}

}  // namespace symdiv
