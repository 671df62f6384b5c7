#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "concordance/intlattice.hpp"
#include "concordance/knotexpr.hpp"
#include "concordance/laurent.hpp"

namespace concordance {

struct SignatureSample {
  double theta = 0.0;
  std::optional<int> sigma;  ///< empty at a singular grid point
  std::string note;          ///< reason for a singular point
};

/// Invariants of one knot appearing in the report.
struct KnotRecord {
  std::string label;
  std::string expression;
  std::vector<KnotExpr::Winding> windings;
  LaurentPoly alexander;
  int arf = 0;                ///< winding-weighted sum rule
  int arf_via_alexander = 0;  ///< Δ(-1) mod 8 of the composite polynomial
  std::vector<SignatureSample> samples;

  std::size_t regular_count() const;
  /// Some regular sample has nonzero signature.
  bool signature_nonvanishing() const;
};

struct LatticeVerdict {
  std::string vector_name;  ///< "eta1" or "eta2"
  std::string map_name;     ///< "V" or "V^T"
  IntVector vector;
  std::optional<IntVector> witness;
};

/// Homological and π1 checks for the base surface.
struct UniquenessRecord {
  IntMatrix seifert;
  std::vector<LatticeVerdict> verdicts;  ///< eta2/V, eta2/V^T, eta1/V, eta1/V^T
  bool alpha_squared_in_image = true;

  /// Every lattice verdict, and the π1 verdict, as expected for the base knot R.
  bool matches_expected() const;
};

struct CounterexampleReport {
  std::string infecting_knot;
  KnotRecord a_curve;
  KnotRecord b_curve;
  KnotRecord base_knot;
  UniquenessRecord uniqueness;

  bool arf_nonzero_both() const { return a_curve.arf == 1 && b_curve.arf == 1; }
  bool signature_nonvanishing_both() const {
    return a_curve.signature_nonvanishing() && b_curve.signature_nonvanishing();
  }

  /// Indented `key: value` blocks.
  std::string to_text() const;
  /// One `flat.key.path=value` line per field.
  std::string to_records() const;
};

/// n equispaced angles 2π(k + 1/2)/n, k = 0..n-1.
std::vector<double> default_theta_grid(std::size_t n = 64);

/// a-curve: sat(unknot; [2,1]; K, neg(K)); b-curve: sat(trefoil; [-1,1]; K, neg(K)).
KnotExpr a_curve_expr(const KnotExpr& k);
KnotExpr b_curve_expr(const KnotExpr& k);

/// Throws InvalidAngle for an empty grid or angles outside (0, 2π).
CounterexampleReport run_counterexample(const KnotExpr& k, const std::vector<double>& theta_grid,
                                        double tolerance = kDefaultTolerance);

/// Column-space checks of η₁ = (1,2), η₂ = (2,1) against V and Vᵀ for
/// V = [[3,2],[1,0]], and the π1 image check.  With a unimodular basis
/// change U, V becomes UᵀVU and η becomes Uᵀη.
UniquenessRecord run_uniqueness_checks();
UniquenessRecord run_uniqueness_checks(const IntMatrix& basis_change);

}  // namespace concordance
