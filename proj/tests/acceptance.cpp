// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "concordance/errors.hpp"
#include "concordance/freegroup.hpp"
#include "concordance/intlattice.hpp"
#include "concordance/knotexpr.hpp"
#include "concordance/laurent.hpp"
#include "concordance/seifert.hpp"
#include "concordance/verify.hpp"
#include "oracles.hpp"

using namespace concordance;

namespace {

constexpr double kPi = std::numbers::pi;

// Collects failed conditions for one criterion.
struct Checker {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Outcome {
  bool passed;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe(const Checker& c, const std::string& ok_detail) {
  if (c.failures.empty()) return ok_detail;
  std::string out;
  for (const auto& f : c.failures) out += (out.empty() ? "" : "; ") + f;
  return out;
}

// ---------------------------------------------------------------------------

Outcome golden_values() {
  Checker c;
  const auto start = Clock::now();
  const SeifertMatrix r = SeifertMatrix::parse("[[3,2],[1,0]]");
  const SeifertMatrix trefoil = SeifertMatrix::parse("[[-1,1],[0,-1]]");
  const LaurentPoly dr = alexander(r);
  const LaurentPoly dt = alexander(trefoil);
  c.expect(dr == LaurentPoly::parse("-2t + 5 - 2t^-1"), "Delta_R = " + dr.to_string());
  c.expect(dr.eval_int(-1) == 9, "Delta_R(-1) != 9");
  c.expect(arf(r) == 0, "Arf(R) != 0");
  c.expect(dt == LaurentPoly::parse("t - 1 + t^-1"), "Delta_trefoil = " + dt.to_string());
  c.expect(dt.eval_int(-1) == -3, "Delta_trefoil(-1) != -3");
  c.expect(arf(trefoil) == 1, "Arf(trefoil) != 1");
  // Independent expansion of det(V - tV^T).
  c.expect(conway_normalize(oracle::alexander_by_cofactors(r.entries())) == dr, "R disagrees with cofactor oracle");
  c.expect(conway_normalize(oracle::alexander_by_cofactors(trefoil.entries())) == dt,
           "trefoil disagrees with cofactor oracle");
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
  std::ostringstream d;
  d << "Delta_R=" << dr << ", Delta_trefoil=" << dt << ", " << elapsed << " s";
  return {c.failures.empty(), describe(c, d.str())};
}

Outcome counterexample_arf() {
  Checker c;
  const KnotExpr k = KnotExpr::atom("trefoil");
  const KnotExpr a = a_curve_expr(k);
  const KnotExpr b = b_curve_expr(k);
  const int a_rule = arf_of(a), a_poly = arf_via_alexander(a);
  const int b_rule = arf_of(b), b_poly = arf_via_alexander(b);
  c.expect(a_rule == 1 && b_rule == 1, "winding rule gives a=" + std::to_string(a_rule) + " b=" + std::to_string(b_rule));
  c.expect(a_poly == a_rule, "a-curve routes disagree");
  c.expect(b_poly == b_rule, "b-curve routes disagree");
  std::ostringstream d;
  d << "Arf(a)=" << a_rule << "/" << a_poly << ", Arf(b)=" << b_rule << "/" << b_poly;
  return {c.failures.empty(), describe(c, d.str())};
}

Outcome counterexample_signature() {
  Checker c;
  const KnotExpr k = KnotExpr::atom("trefoil");
  const int sb = signature_of(b_curve_expr(k), kPi);
  const int sa = signature_of(a_curve_expr(k), kPi / 4);
  c.expect(sb == -2, "sigma_b(pi) = " + std::to_string(sb));
  c.expect(std::abs(sa) == 2, "sigma_a(pi/4) = " + std::to_string(sa));
  const auto report = run_counterexample(k, default_theta_grid());
  const double need = 0.7 * 64;
  c.expect(report.a_curve.regular_count() >= need, "a-curve regular points below 70%");
  c.expect(report.b_curve.regular_count() >= need, "b-curve regular points below 70%");
  std::ostringstream d;
  d << "sigma_b(pi)=" << sb << ", sigma_a(pi/4)=" << sa << ", regular " << report.a_curve.regular_count() << "/64 and "
    << report.b_curve.regular_count() << "/64";
  return {c.failures.empty(), describe(c, d.str())};
}

Outcome surgery_curves() {
  Checker c;
  const SeifertMatrix r = SeifertMatrix::parse("[[3,2],[1,0]]");
  const SeifertMatrix figure8 = SeifertMatrix::parse("[[1,1],[0,-1]]");
  std::set<std::pair<std::int64_t, std::int64_t>> found;
  for (const auto& h : surgery_curve_classes(r))
    found.insert({h.coords[0].convert_to<std::int64_t>(), h.coords[1].convert_to<std::int64_t>()});
  const std::set<std::pair<std::int64_t, std::int64_t>> expected{{0, 1}, {1, -1}};
  c.expect(found == expected, "R classes differ from {(0,1),(1,-1)}");
  c.expect(found == oracle::isotropic_by_search(r.entries(), 10), "R classes differ from brute force");
  c.expect(surgery_curve_classes(figure8).empty(), "figure8 has classes");
  c.expect(oracle::isotropic_by_search(figure8.entries(), 10).empty(), "brute force finds figure8 classes");
  return {c.failures.empty(), describe(c, "R -> {(0,1),(1,-1)}, figure8 -> {}")};
}

Outcome lattice_checks() {
  Checker c;
  const auto record = run_uniqueness_checks();
  const char* names[] = {"eta2 in V", "eta2 in V^T", "eta1 in V", "eta1 in V^T"};
  const bool expected[] = {false, false, false, true};
  for (std::size_t i = 0; i < 4; ++i)
    c.expect(record.verdicts.at(i).witness.has_value() == expected[i], std::string(names[i]) + " verdict wrong");
  c.expect(!record.alpha_squared_in_image, "alpha^2 reported in image");
  if (record.verdicts.at(3).witness) {
    const IntVector& x = *record.verdicts[3].witness;
    c.expect(x == IntVector{1, -2}, "witness " + vector_to_string(x));
    c.expect(record.seifert.transpose() * x == IntVector{1, 2}, "V^T * witness != (1,2)");
  }
  return {c.failures.empty(), describe(c, "eta2 in neither, eta1 in V^T only via (1,-2), alpha^2 not in image")};
}

Outcome free_group_checks() {
  Checker c;
  const auto start = Clock::now();
  const Endomorphism phi = surface_to_complement_map();
  const FoldedGraph h = subgroup_graph(phi.images());
  c.expect(!member(h, Word::power_of(0, 2)), "alpha^2 is a member");
  c.expect(!eta1_membership_check(), "eta1_membership_check true");

  std::size_t images = 0, missing = 0;
  oracle::for_each_syllable_word(5, 4, [&](const Word& u) {
    ++images;
    if (!member(h, phi.apply(u))) ++missing;
  });
  c.expect(missing == 0, std::to_string(missing) + " image words not members");

  std::size_t words = 0, failures = 0;
  for_each_reduced_word(2, 12, [&](const Word& w) {
    if (w.empty()) return;
    ++words;
    try {
      suffix_class(w, phi);
    } catch (const ClassificationFailure&) {
      ++failures;
    }
  });
  c.expect(failures == 0, std::to_string(failures) + " ClassificationFailure");
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s");
  std::ostringstream d;
  d << images << " image words, " << words << " suffix words, " << elapsed << " s";
  return {c.failures.empty(), describe(c, d.str())};
}

Outcome property_suites() {
  Checker c;
  std::mt19937_64 rng(20240601);
  constexpr int kCases = 200;
  std::ostringstream d;

  {
    int ok = 0;
    std::uniform_int_distribution<int> shift(-4, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < kCases; ++i) {
      const IntMatrix v = oracle::random_seifert(rng, 1 + static_cast<std::size_t>(i % 2));
      const LaurentPoly raw =
          oracle::alexander_by_cofactors(v) * LaurentPoly::monomial(coin(rng) ? 1 : -1, shift(rng));
      const LaurentPoly q = conway_normalize(raw);
      const bool unit_multiple = q == raw.shifted(q.min_exponent() - raw.min_exponent()) ||
                                 q == -raw.shifted(q.min_exponent() - raw.min_exponent());
      if (q.eval_int(1) == 1 && q.is_palindromic() && unit_multiple) ++ok;
    }
    c.expect(ok == kCases, "conway_normalize " + std::to_string(ok) + "/" + std::to_string(kCases));
    d << "normalize " << ok;
  }

  {
    int ok = 0, cases = 0;
    std::uniform_real_distribution<double> angle(0.01, 2 * kPi - 0.01);
    while (cases < kCases) {
      const SeifertMatrix s(oracle::random_seifert(rng, 1 + static_cast<std::size_t>(cases % 2)));
      const double theta = angle(rng);
      if (std::abs(alexander(s).eval_circle(theta)) < 1e-6) continue;
      ++cases;
      if (levine_tristram(s, theta) == levine_tristram(s, 2 * kPi - theta)) ++ok;
    }
    c.expect(ok == kCases, "sigma symmetry " + std::to_string(ok) + "/" + std::to_string(kCases));
    d << ", symmetry " << ok;
  }

  {
    int ok = 0, cases = 0;
    std::uniform_real_distribution<double> angle(0.01, 2 * kPi - 0.01);
    while (cases < kCases) {
      const KnotExpr k = KnotExpr::atom(SeifertMatrix(oracle::random_seifert(rng, 1 + static_cast<std::size_t>(cases % 2))));
      const double theta = angle(rng);
      try {
        const int s = signature_of(k, theta);
        ++cases;
        if (signature_of(KnotExpr::mirror(k), theta) == -s) ++ok;
      } catch (const SingularEvaluation&) {
      }
    }
    c.expect(ok == kCases, "mirror " + std::to_string(ok) + "/" + std::to_string(kCases));
    d << ", mirror " << ok;
  }

  {
    int ok = 0;
    for (int i = 0; i < kCases; ++i) {
      const KnotExpr a = KnotExpr::atom(SeifertMatrix(oracle::random_seifert(rng, 1)));
      const KnotExpr b = KnotExpr::atom(SeifertMatrix(oracle::random_seifert(rng, 2)));
      const KnotExpr s = KnotExpr::sum({a, b});
      const int expected = (oracle::arf_by_majority(std::get<KnotExpr::Atom>(a.node()).matrix.entries()) +
                            oracle::arf_by_majority(std::get<KnotExpr::Atom>(b.node()).matrix.entries())) % 2;
      if (arf_of(s) == expected && arf_via_alexander(s) == expected) ++ok;
    }
    c.expect(ok == kCases, "Arf additivity " + std::to_string(ok) + "/" + std::to_string(kCases));
    d << ", arf-sum " << ok;
  }

  {
    int ok = 0, cases = 0;
    std::uniform_int_distribution<int> winding(-3, 3);
    std::uniform_real_distribution<double> angle(0.01, 2 * kPi - 0.01);
    while (cases < kCases) {
      const KnotExpr p = KnotExpr::atom(SeifertMatrix(oracle::random_seifert_2x2(rng, 3)));
      const KnotExpr k1 = KnotExpr::atom(SeifertMatrix(oracle::random_seifert_2x2(rng, 3)));
      const KnotExpr k2 = KnotExpr::atom(SeifertMatrix(oracle::random_seifert_2x2(rng, 3)));
      const int w1 = winding(rng), w2 = winding(rng);
      const KnotExpr both = KnotExpr::infection(p, {w1, w2}, {k1, k2});
      const KnotExpr swapped = KnotExpr::infection(p, {w2, w1}, {k2, k1});
      const KnotExpr nested = KnotExpr::infection(KnotExpr::infection(p, {w1}, {k1}), {w2}, {k2});
      const double theta = angle(rng);
      try {
        const int s = signature_of(both, theta);
        ++cases;
        if (alexander_of(swapped) == alexander_of(both) && alexander_of(nested) == alexander_of(both) &&
            arf_of(swapped) == arf_of(both) && arf_of(nested) == arf_of(both) && signature_of(swapped, theta) == s &&
            signature_of(nested, theta) == s)
          ++ok;
      } catch (const SingularEvaluation&) {
      }
    }
    c.expect(ok == kCases, "infection order " + std::to_string(ok) + "/" + std::to_string(kCases));
    d << ", infection " << ok;
  }

  {
    int ok = 0;
    std::uniform_int_distribution<int> dim(1, 4);
    for (int i = 0; i < kCases; ++i) {
      const IntMatrix m = oracle::random_matrix(rng, static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)), 6);
      const auto hnf = hermite_normal_form(m);
      if (hnf.hermite == m * hnf.transform && abs(determinant(hnf.transform)) == 1) ++ok;
    }
    c.expect(ok == kCases, "HNF " + std::to_string(ok) + "/" + std::to_string(kCases));
    d << ", hnf " << ok;
  }

  return {c.failures.empty(), describe(c, d.str() + " (of " + std::to_string(kCases) + " each)")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 Alexander/Arf golden values", golden_values},
      {"2 counterexample Arf, two routes", counterexample_arf},
      {"3 counterexample signatures", counterexample_signature},
      {"4 surgery-curve enumeration", surgery_curves},
      {"5 lattice verdicts", lattice_checks},
      {"6 free-group image checks", free_group_checks},
      {"7 property suites", property_suites},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.passed ? "PASS" : "FAIL", name, o.detail.c_str());
    if (!o.passed) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
