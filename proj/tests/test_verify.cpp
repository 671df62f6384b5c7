#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "concordance/errors.hpp"
#include "concordance/verify.hpp"
#include "oracles.hpp"

using namespace concordance;

namespace {

constexpr double kPi = std::numbers::pi;

const SignatureSample* sample_at(const KnotRecord& r, double theta) {
  for (const auto& s : r.samples)
    if (std::abs(s.theta - theta) < 1e-12) return &s;
  return nullptr;
}

bool has_line(const std::string& text, const std::string& line) {
  return text.find(line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("default grid") {
  const auto grid = default_theta_grid();
  REQUIRE(grid.size() == 64);
  CHECK(grid.front() == doctest::Approx(kPi / 64));
  CHECK(grid[31] == doctest::Approx(kPi - kPi / 64));
  CHECK(grid.back() < 2 * kPi);
  CHECK(default_theta_grid(1) == std::vector<double>{kPi});
}

TEST_CASE("counterexample report for the trefoil") {
  const auto report = run_counterexample(KnotExpr::atom("trefoil"), default_theta_grid());
  CHECK(report.a_curve.arf == 1);
  CHECK(report.a_curve.arf_via_alexander == 1);
  CHECK(report.b_curve.arf == 1);
  CHECK(report.b_curve.arf_via_alexander == 1);
  CHECK(report.base_knot.arf == 0);
  CHECK(report.base_knot.alexander == LaurentPoly::parse("-2t + 5 - 2t^-1"));
  CHECK(report.arf_nonzero_both());
  CHECK(report.signature_nonvanishing_both());
  CHECK(report.a_curve.regular_count() == 64);
  CHECK(report.b_curve.regular_count() == 64);
  CHECK(report.uniqueness.matches_expected());

  // Signatures at individual angles match direct evaluation.
  const auto direct = run_counterexample(KnotExpr::atom("trefoil"), {kPi / 4, kPi});
  CHECK(sample_at(direct.a_curve, kPi / 4)->sigma == -2);
  CHECK(sample_at(direct.b_curve, kPi)->sigma == -2);
  CHECK(sample_at(direct.base_knot, kPi)->sigma == 0);
}

TEST_CASE("reports for knots with vanishing invariants fail the checks") {
  const auto unknot = run_counterexample(KnotExpr::atom("unknot"), default_theta_grid(16));
  CHECK_FALSE(unknot.arf_nonzero_both());
  CHECK_FALSE(unknot.signature_nonvanishing_both());

  // figure8 has Arf 1 but is amphichiral, so every signature vanishes.
  const auto figure8 = run_counterexample(KnotExpr::atom("figure8"), default_theta_grid(32));
  CHECK(figure8.arf_nonzero_both());
  CHECK_FALSE(figure8.signature_nonvanishing_both());
}

TEST_CASE("mirror image keeps both flags") {
  const auto grid = default_theta_grid(32);
  const auto report = run_counterexample(KnotExpr::mirror(KnotExpr::atom("trefoil")), grid);
  CHECK(report.arf_nonzero_both());
  CHECK(report.signature_nonvanishing_both());
}

TEST_CASE("singular grid points are recorded, not fatal") {
  // The a-curve winds its first companion twice, so θ = π/6 lands on the trefoil jump at π/3.
  const auto report = run_counterexample(KnotExpr::atom("trefoil"), {kPi / 6, kPi / 2});
  const auto* s = sample_at(report.a_curve, kPi / 6);
  REQUIRE(s != nullptr);
  CHECK_FALSE(s->sigma.has_value());
  CHECK(s->note.find("trefoil") != std::string::npos);
  CHECK(report.a_curve.regular_count() == 1);
}

TEST_CASE("grid validation") {
  const KnotExpr t = KnotExpr::atom("trefoil");
  CHECK_THROWS_AS(run_counterexample(t, {}), InvalidAngle);
  CHECK_THROWS_AS(run_counterexample(t, {0.0}), InvalidAngle);
  CHECK_THROWS_AS(run_counterexample(t, {1.0, 7.0}), InvalidAngle);
  const auto sorted = run_counterexample(t, {3.0, 1.0, 2.0});
  CHECK(sorted.b_curve.samples.front().theta == 1.0);
}

TEST_CASE("uniqueness verdicts") {
  const auto record = run_uniqueness_checks();
  REQUIRE(record.verdicts.size() == 4);
  CHECK(record.seifert == IntMatrix::parse("[[3,2],[1,0]]"));
  CHECK_FALSE(record.verdicts[0].witness.has_value());
  CHECK_FALSE(record.verdicts[1].witness.has_value());
  CHECK_FALSE(record.verdicts[2].witness.has_value());
  REQUIRE(record.verdicts[3].witness.has_value());
  CHECK(*record.verdicts[3].witness == IntVector{1, -2});
  CHECK(record.seifert.transpose() * *record.verdicts[3].witness == IntVector{1, 2});
  CHECK_FALSE(record.alpha_squared_in_image);
  CHECK(record.matches_expected());
}

TEST_CASE("uniqueness verdicts do not depend on the basis") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix u = oracle::random_unimodular(rng, 2, 8);
    const auto record = run_uniqueness_checks(u);
    CHECK(record.matches_expected());
    for (const auto& v : record.verdicts) {
      if (!v.witness) continue;
      const IntMatrix m = v.map_name == "V" ? record.seifert : record.seifert.transpose();
      CHECK(m * *v.witness == v.vector);
    }
  }
}

TEST_CASE("text and record serializations") {
  const auto report = run_counterexample(KnotExpr::atom("trefoil"), default_theta_grid(4));
  const std::string text = report.to_text();
  CHECK(has_line(text, "infecting_knot: trefoil"));
  CHECK(has_line(text, "  arf_nonzero_both: true"));
  CHECK(has_line(text, "  eta1_in_VT: yes witness (1,-2)"));
  CHECK(has_line(text, "  alpha_squared_in_image: false"));

  const std::string records = report.to_records();
  CHECK(has_line(records, "a_curve.arf=1"));
  CHECK(has_line(records, "a_curve.windings=[2,1]"));
  CHECK(has_line(records, "b_curve.windings=[-1,1]"));
  CHECK(has_line(records, "a_curve.signature.0.theta=0.785398163397"));
  CHECK(has_line(records, "b_curve.signature.1.sigma=-2"));
  CHECK(has_line(records, "uniqueness.eta1_in_VT.witness=(1,-2)"));
  CHECK(has_line(records, "uniqueness.eta2_in_V.member=false"));
  CHECK(has_line(records, "pass.signature_nonvanishing_both=true"));
  // Every line is key=value.
  std::istringstream lines(records);
  for (std::string line; std::getline(lines, line);) CHECK(line.find('=') != std::string::npos);
}
