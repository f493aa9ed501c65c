#include <chrono>
#include <cmath>

#include "symdiv/bounds.hpp"
#include "symdiv/csiszar.hpp"
#include "symdiv/differences.hpp"
#include "test_support.hpp"

using namespace symdiv;

namespace {

constexpr double kFixture[] = {1.0 / 4, 1,       8,        8,       1.0 / 16, 2.0 / 3, 3,
                               1.0 / 2, 3.0 / 4, 2.0 / 3,  3,       2.0 / 3,  3,       1.0 / 12,
                               6.0 / 5, 10.0 / 9, 9.0 / 8, 4.0 / 3, 1.0 / 64};

Curvature gen(GeneratorId g) { return Curvature{g}; }

}  // namespace

TEST_CASE("fixture table") {
  const auto& rows = sharp_constants();
  REQUIRE(rows.size() == 19);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(rows[i].name());
    CHECK(rows[i].value == kFixture[i]);
    CHECK(find_sharp_constant(rows[i].name())->value == rows[i].value);
  }
  CHECK(rows[0].kind == Extremum::Infimum);
  CHECK(rows[0].name() == "F_I/F_DELTA");
  CHECK(rows[18].name() == "D_PSIT/F_DSTAR");
  CHECK(find_sharp_constant("D_PSIT/DSTAR").has_value());
  CHECK(find_sharp_constant("D1/F_DSTAR").has_value());
  CHECK_FALSE(find_sharp_constant("F_J/F_H/F_T").has_value());
  CHECK_FALSE(find_sharp_constant("F_T/F_J").has_value());
  CHECK_FALSE(find_sharp_constant("nonsense").has_value());
}

TEST_CASE("every constant is recovered") {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& row : sharp_constants()) {
    CAPTURE(row.name());
    const auto cert = certify(row);
    CHECK(cert.verified);
    REQUIRE(cert.analytic_value.has_value());
    CHECK(*cert.analytic_value == row.value);
    CHECK(std::abs(cert.numeric_estimate - row.value) <= 1e-6);
    CHECK(std::abs(cert.attaining_x - 1.0) <= 1e-6);
    CHECK(cert.kind == row.kind);
    CHECK_FALSE(cert.inequality.empty());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  MESSAGE("19 certificates in " << secs << " s");
  CHECK(secs < 10.0);
}

TEST_CASE("estimates are grid independent") {
  GridSpec fine;
  fine.points = 2 * GridSpec{}.points - 1;
  for (const auto& row : sharp_constants()) {
    CAPTURE(row.name());
    const auto a = certify(row);
    const auto b = certify(row, fine);
    CHECK(std::abs(a.numeric_estimate - b.numeric_estimate) <=
          1e-9 * std::abs(b.numeric_estimate));
  }
}

TEST_CASE("estimates bound the ratio on an independent grid") {
  for (const auto& row : sharp_constants()) {
    CAPTURE(row.name());
    const auto ratio = row.ratio();
    const auto cert = certify(row);
    for (double x : testing::log_grid(1e-7, 1e7, 4999)) {
      const double v = ratio(x);
      if (row.kind == Extremum::Supremum) {
        REQUIRE(v <= cert.numeric_estimate * (1 + 1e-9));
      } else {
        REQUIRE(v >= cert.numeric_estimate * (1 - 1e-9));
      }
    }
  }
}

TEST_CASE("ratio function") {
  const RatioFunction jt(gen(GeneratorId::F_J), gen(GeneratorId::F_T));
  CHECK(jt.name() == "F_J/F_T");
  // 4(x+1)^2 / (x^2+1) at x = 3
  CHECK(testing::rel_close(jt(3.0), 64.0 / 10, 1e-13));
  CHECK(testing::rel_close(jt(1.0), 8.0, 1e-15));
  // removable root of the difference denominator at x = 1
  const RatioFunction d(Curvature{DifferenceId::D_HI}, Curvature{DifferenceId::D_TJ});
  CHECK(testing::rel_close(d(1.0), 0.5, 1e-12));
  CHECK(testing::rel_close(d(1.0 + 1e-7), d(1.0), 1e-6));
  CHECK(std::isfinite(d(1.0 - 1e-9)));
  // F_DSTAR as a numerator vanishes at 1 but is fine; as a denominator the
  // reduced form is used
  const RatioFunction s(Curvature{DifferenceId::D_PSIT}, gen(GeneratorId::F_DSTAR));
  CHECK(testing::rel_close(s(1.0), 1.0 / 64, 1e-12));
  CHECK_THROWS_KIND(jt(0.0), ErrorKind::Domain);
}

TEST_CASE("estimator on a function with an interior maximum") {
  // f''_J / f''_T peaks at 1 with value 8; restricting the grid away from 1
  // moves the supremum to the grid edge
  GridSpec g{2.0, 50.0, 1001, 1e-12};
  const auto cert =
      estimate_extremum(RatioFunction(gen(GeneratorId::F_J), gen(GeneratorId::F_T)),
                        Extremum::Supremum, g);
  CHECK(cert.attaining_x == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(cert.numeric_estimate == doctest::Approx(4.0 * 9 / 5).epsilon(1e-12));
  CHECK(cert.numerator == "F_J");
}

TEST_CASE("grid validation") {
  CHECK_THROWS_KIND(validate(GridSpec{1.0, 0.5, 100, 1e-12}), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(validate(GridSpec{0.0, 10, 100, 1e-12}), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(validate(GridSpec{1e-3, 10, 2, 1e-12}), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(validate(GridSpec{1e-3, 10, 100, 0.0}), ErrorKind::InvalidArgument);
  CHECK_NOTHROW(validate(GridSpec{}));
}

TEST_CASE("sandwich holds on the standard corpus") {
  const auto corpus = sample_corpus(standard_sampler(), 10000);
  for (const auto& row : sharp_constants()) {
    CAPTURE(row.name());
    const double m = row.kind == Extremum::Infimum ? row.value : 0.0;
    const double M = row.kind == Extremum::Supremum ? row.value : kNoUpperBound;
    const auto report = verify_sandwich(row.numerator, row.denominator, m, M, corpus);
    CHECK(report.pairs_checked == corpus.size());
    CHECK(report.ok());
  }
  const auto small = sample_corpus(PairSampler{7, 2, 64, 1e6}, 1000);
  CHECK(verify_sandwich(gen(GeneratorId::F_I), gen(GeneratorId::F_DELTA), 0.25, kNoUpperBound,
                        small)
            .ok());
  CHECK(verify_sandwich(gen(GeneratorId::F_I), gen(GeneratorId::F_H), 0.0, 1.0, small).ok());
}

TEST_CASE("sharpness falsification") {
  const auto j = gen(GeneratorId::F_J), t = gen(GeneratorId::F_T);
  CHECK_FALSE(search_sandwich_violation(j, t, 0.0, 8.0).has_value());
  const auto hit = search_sandwich_violation(j, t, 0.0, 7.9);
  REQUIRE(hit.has_value());
  PairCorpus one{*hit};
  const auto report = verify_sandwich(j, t, 0.0, 7.9, one);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].side == BoundSide::Upper);
  CHECK(report.violations[0].slack < 0);
  // a lower constant above the infimum fails too
  CHECK(search_sandwich_violation(gen(GeneratorId::F_I), gen(GeneratorId::F_DELTA), 0.26,
                                  kNoUpperBound)
            .has_value());
  CHECK_THROWS_KIND(verify_sandwich(j, t, 2.0, 1.0, one), ErrorKind::InvalidArgument);
}
