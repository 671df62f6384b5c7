#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace concordance {

/// One letter g^{±1} of a free group word; generators are 0-based indices.
struct Letter {
  int generator = 0;
  int sign = 1;  ///< +1 or -1

  Letter inverse() const { return {generator, -sign}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word.  Every constructor reduces, so no stored word
/// contains an adjacent pair g^s g^{-s}.
class Word {
 public:
  Word() = default;
  /// Free reduction of an arbitrary letter sequence.
  static Word reduce(std::span<const Letter> letters);
  static Word reduce(std::initializer_list<Letter> letters) {
    return reduce(std::span<const Letter>(letters.begin(), letters.size()));
  }
  /// generator^power
  static Word power_of(int generator, std::int64_t power);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word inverse() const;
  Word pow(std::int64_t n) const;

  friend Word operator*(const Word& a, const Word& b);
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Display symbols for generators.  Text form is one character per letter
/// with `'` marking an inverse; whitespace is ignored, e.g. `d' a d`.
class Alphabet {
 public:
  explicit Alphabet(std::vector<char> symbols) : symbols_(std::move(symbols)) {}
  /// {a, d}: α = 0, δ = 1, generators of π1 of the surface complement.
  static Alphabet complement() { return Alphabet({'a', 'd'}); }
  /// {z, y}: z = 0, y = 1, generators of π1 of the surface with z = xy.
  static Alphabet surface() { return Alphabet({'z', 'y'}); }
  /// Alphabet of every letter used in the given texts, in order of first use.
  static Alphabet discover(std::span<const std::string> texts);

  std::size_t rank() const noexcept { return symbols_.size(); }
  /// Throws SyntaxError on unknown symbols or a stray `'`.
  Word parse(std::string_view text) const;
  /// Space separated letters; the empty word prints as `1`.
  std::string format(const Word& w) const;

 private:
  std::vector<char> symbols_;
};

/// Homomorphism between free groups, given by the image of each source generator.
class Endomorphism {
 public:
  explicit Endomorphism(std::vector<Word> images) : images_(std::move(images)) {}

  std::size_t source_rank() const noexcept { return images_.size(); }
  const std::vector<Word>& images() const noexcept { return images_; }

  /// Throws std::out_of_range if w uses a generator outside the source rank.
  Word apply(const Word& w) const;

 private:
  std::vector<Word> images_;
};

/// Folded core graph (Stallings graph) of a finitely generated subgroup.
///
/// Vertices are numbered in breadth-first order from the base vertex 0,
/// visiting outgoing then incoming edges by increasing label, so two graphs
/// for the same subgroup compare equal regardless of how they were built.
class FoldedGraph {
 public:
  struct Edge {
    std::size_t from;
    int label;
    std::size_t to;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };

  FoldedGraph() : FoldedGraph(1, {}) {}
  FoldedGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  static constexpr std::size_t base() noexcept { return 0; }
  /// Sorted by (from, label, to).
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Endpoint of the unique edge leaving `vertex` along `letter`, if any.
  std::optional<std::size_t> follow(std::size_t vertex, Letter letter) const;

  friend bool operator==(const FoldedGraph& a, const FoldedGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::map<int, std::size_t>> outgoing_;
  std::vector<std::map<int, std::size_t>> incoming_;
};

/// Folded core graph of ⟨generators⟩.  Empty generators are ignored.
FoldedGraph subgroup_graph(std::span<const Word> generators);

/// True iff w reads a closed path at the base vertex.
bool member(const FoldedGraph& graph, const Word& w);

/// The inclusion-induced map π1(F) = F⟨z,y⟩ → π1(S³−F) = F⟨α,δ⟩ pushing
/// off the negative side: z ↦ α⁴δ², y ↦ δ̄αδ.
Endomorphism surface_to_complement_map();

/// φ(x) = φ(z y⁻¹) = α⁴δᾱδ.
Word phi_of_x();
/// η₁ = φ(x)ᾱ², a member of the image iff α² is.
Word eta1_word();
/// ε with α³δε = α⁴δᾱδ, i.e. δ̄αδᾱδ.  Reference constant only.
Word epsilon_word();

/// Whether α² lies in ⟨φ(z), φ(y)⟩.  Expected false: η₁ is not in the
/// image of the map on fundamental groups.
bool eta1_membership_check();

enum class SuffixKind {
  EndsDeltaBarAlphaBar4,  ///< ... δ̄ᾱ⁴
  EndsAlpha4Delta2,       ///< ... α⁴δ²
  EndsAlphaNDelta,        ///< ... αⁿδ with n ≠ 0
};

struct SuffixClass {
  SuffixKind kind;
  std::int64_t n = 0;  ///< exponent of the final α-run for EndsAlphaNDelta
  friend bool operator==(const SuffixClass&, const SuffixClass&) = default;
};

/// Classifies the reduced form of phi(w) by its suffix.  A w whose last
/// syllable is in z must land in one of the first two kinds, one ending in
/// y in the third; anything else throws ClassificationFailure.  Generator 0
/// is z (source) and α (target), generator 1 is y and δ.
SuffixClass suffix_class(const Word& w, const Endomorphism& phi);

std::string to_string(SuffixKind kind);

/// Calls visit on every reduced word over `rank` generators with length at
/// most max_length, shortest first within each branch, starting with the empty word.
void for_each_reduced_word(int rank, std::size_t max_length,
                           const std::function<void(const Word&)>& visit);

}  // namespace concordance
