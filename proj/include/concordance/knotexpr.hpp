#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "concordance/laurent.hpp"
#include "concordance/seifert.hpp"

namespace concordance {

struct KnotNode;

/// Immutable expression tree describing a knot built from atoms by mirror,
/// reverse, connected sum and infection.  Only invariants are computed from
/// it; two infections with equal windings evaluate identically.
///
/// DSL:
///   expr := atom | mirror(expr) | reverse(expr) | neg(expr)
///         | sum(expr, expr, ...) | sat(expr; [w, ...]; expr, ...)
///   atom := unknot | trefoil | figure8 | R | seifert[[..],[..]]
/// `neg(K)` is reverse(mirror(K)), the concordance inverse.
class KnotExpr {
 public:
  using Winding = std::int64_t;

  struct Atom;
  struct Mirror;
  struct Reverse;
  struct Sum;
  struct Infection;
  using Node = std::variant<Atom, Mirror, Reverse, Sum, Infection>;

  /// Builtin atom by name; throws UnknownAtom.
  static KnotExpr atom(std::string_view name);
  static KnotExpr atom(SeifertMatrix matrix);
  static KnotExpr mirror(KnotExpr child);
  static KnotExpr reverse(KnotExpr child);
  static KnotExpr neg(KnotExpr child) { return reverse(mirror(std::move(child))); }
  /// Throws ArityError for fewer than two summands.
  static KnotExpr sum(std::vector<KnotExpr> children);
  /// Throws ArityError unless windings and companions are nonempty and of equal length.
  static KnotExpr infection(KnotExpr pattern, std::vector<Winding> windings,
                            std::vector<KnotExpr> companions);

  /// Throws SyntaxError (with position), ArityError, UnknownAtom, or
  /// InvalidSeifertMatrix for inline matrices.
  static KnotExpr parse(std::string_view text);

  const Node& node() const;
  /// Canonical DSL text; parse(to_string()) reproduces the tree.
  std::string to_string() const;

 private:
  explicit KnotExpr(std::shared_ptr<const KnotNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const KnotNode> node_;
};

struct KnotExpr::Atom {
  std::string name;  ///< builtin name, or empty for an inline matrix
  SeifertMatrix matrix;
};
struct KnotExpr::Mirror {
  KnotExpr child;
};
struct KnotExpr::Reverse {
  KnotExpr child;
};
struct KnotExpr::Sum {
  std::vector<KnotExpr> children;
};
struct KnotExpr::Infection {
  KnotExpr pattern;
  std::vector<Winding> windings;
  std::vector<KnotExpr> companions;
};

struct KnotNode {
  KnotExpr::Node value;
};

/// Seifert matrix of a builtin atom name; throws UnknownAtom.
SeifertMatrix builtin_atom(std::string_view name);
/// Names accepted by builtin_atom.
std::vector<std::string> builtin_atom_names();

/// Normalized Alexander polynomial via Δ_{R_η(K)}(t) = Δ_R(t)·Δ_K(t^w),
/// applied one companion at a time.
LaurentPoly alexander_of(const KnotExpr& e);

/// Arf invariant via Arf(R) + Σ w_i·Arf(K_i) mod 2.
int arf_of(const KnotExpr& e);

/// Arf invariant read off from alexander_of(e) at t = -1.  Independent of
/// the winding-weighted sum in arf_of.
int arf_via_alexander(const KnotExpr& e);

/// Levine–Tristram signature via σ_{R_η(K)}(θ) = σ_R(θ) + σ_K(wθ).  A
/// companion with wθ ≡ 0 mod 2π contributes zero.  Throws SingularEvaluation
/// naming the atom and scaled angle that hit a jump point.
int signature_of(const KnotExpr& e, double theta, double tolerance = kDefaultTolerance);

}  // namespace concordance
