#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "concordance/intlattice.hpp"
#include "concordance/laurent.hpp"

namespace concordance {

/// Default regularity threshold for |Δ(e^{iθ})| in signature evaluation.
inline constexpr double kDefaultTolerance = 1e-9;

/// Seifert matrix V of a knot: a 2g×2g integer matrix of linking numbers
/// lk(x_i, x_j^+) with det(V - Vᵀ) = 1.  Construction validates both conditions.
class SeifertMatrix {
 public:
  /// The 0×0 matrix of the unknot.
  SeifertMatrix() = default;
  explicit SeifertMatrix(IntMatrix entries);

  static SeifertMatrix parse(std::string_view text) { return SeifertMatrix(IntMatrix::parse(text)); }

  const IntMatrix& entries() const noexcept { return entries_; }
  std::size_t genus() const noexcept { return entries_.rows() / 2; }
  std::size_t dimension() const noexcept { return entries_.rows(); }

  /// Seifert matrix of the mirror image, -Vᵀ.
  SeifertMatrix mirrored() const;
  /// Seifert matrix of the reverse, Vᵀ.
  SeifertMatrix reversed() const;

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  IntMatrix entries_;
};

/// Primitive integer class in H_1(F), sign-normalized so the first nonzero
/// coordinate is positive.
struct HomologyClass {
  IntVector coords;
  friend auto operator<=>(const HomologyClass&, const HomologyClass&) = default;
};

/// det(V - tVᵀ), before normalization.
LaurentPoly alexander_determinant(const SeifertMatrix& v);

/// Conway-normalized Alexander polynomial: symmetric with Δ(1) = 1.
LaurentPoly alexander(const SeifertMatrix& v);

/// Arf invariant in {0, 1} from Δ(-1) mod 8.  Throws InvalidDeterminant if
/// the residue is neither 1 nor 5.
int arf(const SeifertMatrix& v);
int arf_from_alexander(const LaurentPoly& normalized_delta);

/// Levine–Tristram signature at ω = e^{iθ}, 0 < θ < 2π: the signature of the
/// Hermitian matrix (1-ω)V + (1-ω̄)Vᵀ.  Throws SingularEvaluation when
/// |Δ(ω)| <= tolerance, and InvalidAngle outside (0, 2π).
int levine_tristram(const SeifertMatrix& v, double theta, double tolerance = kDefaultTolerance);

/// Primitive isotropic classes of a genus-one Seifert form, one per sign
/// pair, sorted.  At most two.
std::vector<HomologyClass> surgery_curve_classes(const SeifertMatrix& v);

bool is_algebraically_slice_genus1(const SeifertMatrix& v);

/// Value of the Seifert form cᵀVc.
Integer self_linking(const SeifertMatrix& v, const HomologyClass& c);

}  // namespace concordance
