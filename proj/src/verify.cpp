#include "concordance/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "concordance/errors.hpp"
#include "concordance/freegroup.hpp"

namespace concordance {

std::size_t KnotRecord::regular_count() const {
  return static_cast<std::size_t>(
      std::count_if(samples.begin(), samples.end(), [](const SignatureSample& s) { return s.sigma.has_value(); }));
}

bool KnotRecord::signature_nonvanishing() const {
  return std::any_of(samples.begin(), samples.end(),
                     [](const SignatureSample& s) { return s.sigma.has_value() && *s.sigma != 0; });
}

bool UniquenessRecord::matches_expected() const {
  if (verdicts.size() != 4) return false;
  // eta2 in neither image; eta1 only in the image of V^T.
  return !verdicts[0].witness && !verdicts[1].witness && !verdicts[2].witness && verdicts[3].witness.has_value() &&
         !alpha_squared_in_image;
}

std::vector<double> default_theta_grid(std::size_t n) {
  std::vector<double> grid;
  grid.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    grid.push_back(2.0 * std::numbers::pi * (static_cast<double>(k) + 0.5) / static_cast<double>(n));
  }
  return grid;
}

KnotExpr a_curve_expr(const KnotExpr& k) {
  return KnotExpr::infection(KnotExpr::atom("unknot"), {2, 1}, {k, KnotExpr::neg(k)});
}

KnotExpr b_curve_expr(const KnotExpr& k) {
  return KnotExpr::infection(KnotExpr::atom("trefoil"), {-1, 1}, {k, KnotExpr::neg(k)});
}

namespace {

KnotRecord evaluate(std::string label, const KnotExpr& e, std::vector<KnotExpr::Winding> windings,
                    const std::vector<double>& grid, double tolerance) {
  KnotRecord record;
  record.label = std::move(label);
  record.expression = e.to_string();
  record.windings = std::move(windings);
  record.alexander = alexander_of(e);
  record.arf = arf_of(e);
  record.arf_via_alexander = arf_from_alexander(record.alexander);
  for (double theta : grid) {
    SignatureSample sample{theta, std::nullopt, {}};
    try {
      sample.sigma = signature_of(e, theta, tolerance);
    } catch (const SingularEvaluation& err) {
      sample.note = err.what();
    }
    record.samples.push_back(std::move(sample));
  }
  return record;
}

}  // namespace

CounterexampleReport run_counterexample(const KnotExpr& k, const std::vector<double>& theta_grid,
                                        double tolerance) {
  if (theta_grid.empty()) throw InvalidAngle("theta grid is empty");
  for (double theta : theta_grid) {
    if (!(theta > 0.0 && theta < 2.0 * std::numbers::pi)) {
      throw InvalidAngle("grid angle " + std::to_string(theta) + " outside (0, 2pi)");
    }
  }
  std::vector<double> grid = theta_grid;
  std::sort(grid.begin(), grid.end());

  CounterexampleReport report;
  report.infecting_knot = k.to_string();
  report.a_curve = evaluate("a_curve", a_curve_expr(k), {2, 1}, grid, tolerance);
  report.b_curve = evaluate("b_curve", b_curve_expr(k), {-1, 1}, grid, tolerance);
  report.base_knot = evaluate("base_knot", KnotExpr::atom("R"), {}, grid, tolerance);
  report.uniqueness = run_uniqueness_checks();
  return report;
}

UniquenessRecord run_uniqueness_checks() { return run_uniqueness_checks(IntMatrix::identity(2)); }

UniquenessRecord run_uniqueness_checks(const IntMatrix& basis_change) {
  const IntMatrix v = builtin_atom("R").entries();
  const IntMatrix ut = basis_change.transpose();
  UniquenessRecord record;
  record.seifert = ut * v * basis_change;
  const IntMatrix vt = record.seifert.transpose();
  const IntVector eta1 = ut * IntVector{1, 2};
  const IntVector eta2 = ut * IntVector{2, 1};
  record.verdicts = {
      {"eta2", "V", eta2, colspace_member(record.seifert, eta2)},
      {"eta2", "V^T", eta2, colspace_member(vt, eta2)},
      {"eta1", "V", eta1, colspace_member(record.seifert, eta1)},
      {"eta1", "V^T", eta1, colspace_member(vt, eta1)},
  };
  record.alpha_squared_in_image = eta1_membership_check();
  return record;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::string format_theta(double theta) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(12) << theta;
  return os.str();
}

std::string windings_text(const std::vector<KnotExpr::Winding>& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out + "]";
}

void knot_text(std::ostringstream& os, const KnotRecord& r) {
  os << r.label << ":\n";
  os << "  expression: " << r.expression << "\n";
  if (!r.windings.empty()) os << "  windings: " << windings_text(r.windings) << "\n";
  os << "  alexander: " << r.alexander << "\n";
  os << "  arf: " << r.arf << "\n";
  os << "  arf_via_alexander: " << r.arf_via_alexander << "\n";
  os << "  regular_samples: " << r.regular_count() << "/" << r.samples.size() << "\n";
  os << "  signature_nonvanishing: " << (r.signature_nonvanishing() ? "true" : "false") << "\n";
  os << "  signature:\n";
  for (const auto& s : r.samples) {
    os << "    " << format_theta(s.theta) << ": " << (s.sigma ? std::to_string(*s.sigma) : "singular") << "\n";
  }
}

void knot_records(std::ostringstream& os, const KnotRecord& r) {
  const std::string p = r.label + ".";
  os << p << "expression=" << r.expression << "\n";
  if (!r.windings.empty()) os << p << "windings=" << windings_text(r.windings) << "\n";
  os << p << "alexander=" << r.alexander << "\n";
  os << p << "arf=" << r.arf << "\n";
  os << p << "arf_via_alexander=" << r.arf_via_alexander << "\n";
  os << p << "regular_samples=" << r.regular_count() << "\n";
  os << p << "signature_nonvanishing=" << (r.signature_nonvanishing() ? "true" : "false") << "\n";
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    const auto& s = r.samples[i];
    const std::string q = p + "signature." + std::to_string(i) + ".";
    os << q << "theta=" << format_theta(s.theta) << "\n";
    os << q << "sigma=" << (s.sigma ? std::to_string(*s.sigma) : "") << "\n";
    os << q << "status=" << (s.sigma ? "regular" : "singular") << "\n";
  }
}

std::string verdict_key(const LatticeVerdict& v) {
  return v.vector_name + "_in_" + (v.map_name == "V" ? std::string("V") : std::string("VT"));
}

}  // namespace

std::string CounterexampleReport::to_text() const {
  std::ostringstream os;
  os << "infecting_knot: " << infecting_knot << "\n";
  knot_text(os, a_curve);
  knot_text(os, b_curve);
  knot_text(os, base_knot);
  os << "uniqueness:\n";
  os << "  seifert: " << uniqueness.seifert << "\n";
  for (const auto& v : uniqueness.verdicts) {
    os << "  " << verdict_key(v) << ": " << (v.witness ? "yes" : "no");
    if (v.witness) os << " witness " << vector_to_string(*v.witness);
    os << "\n";
  }
  os << "  alpha_squared_in_image: " << (uniqueness.alpha_squared_in_image ? "true" : "false") << "\n";
  os << "  matches_expected: " << (uniqueness.matches_expected() ? "true" : "false") << "\n";
  os << "pass:\n";
  os << "  arf_nonzero_both: " << (arf_nonzero_both() ? "true" : "false") << "\n";
  os << "  signature_nonvanishing_both: " << (signature_nonvanishing_both() ? "true" : "false") << "\n";
  return os.str();
}

std::string CounterexampleReport::to_records() const {
  std::ostringstream os;
  os << "infecting_knot=" << infecting_knot << "\n";
  knot_records(os, a_curve);
  knot_records(os, b_curve);
  knot_records(os, base_knot);
  os << "uniqueness.seifert=" << uniqueness.seifert << "\n";
  for (const auto& v : uniqueness.verdicts) {
    const std::string p = "uniqueness." + verdict_key(v) + ".";
    os << p << "member=" << (v.witness ? "true" : "false") << "\n";
    os << p << "witness=" << (v.witness ? vector_to_string(*v.witness) : "") << "\n";
  }
  os << "uniqueness.alpha_squared_in_image=" << (uniqueness.alpha_squared_in_image ? "true" : "false") << "\n";
  os << "uniqueness.matches_expected=" << (uniqueness.matches_expected() ? "true" : "false") << "\n";
  os << "pass.arf_nonzero_both=" << (arf_nonzero_both() ? "true" : "false") << "\n";
  os << "pass.signature_nonvanishing_both=" << (signature_nonvanishing_both() ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace concordance
