#include "concordance/freegroup.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <stdexcept>
#include <tuple>

#include "concordance/errors.hpp"

namespace concordance {

// ---------------------------------------------------------------------------
// Words

Word Word::reduce(std::span<const Letter> letters) {
  Word w;
  w.letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!w.letters_.empty() && w.letters_.back() == l.inverse()) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

Word Word::power_of(int generator, std::int64_t power) {
  Word w;
  const int sign = power < 0 ? -1 : 1;
  for (std::int64_t i = 0; i < (power < 0 ? -power : power); ++i) w.letters_.push_back({generator, sign});
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

Word Word::pow(std::int64_t n) const {
  const Word base = n < 0 ? inverse() : *this;
  Word result;
  for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) result = result * base;
  return result;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> joined = a.letters_;
  std::size_t skip = 0;
  while (!joined.empty() && skip < b.letters_.size() && joined.back() == b.letters_[skip].inverse()) {
    joined.pop_back();
    ++skip;
  }
  joined.insert(joined.end(), b.letters_.begin() + static_cast<std::ptrdiff_t>(skip), b.letters_.end());
  Word w;
  w.letters_ = std::move(joined);
  return w;
}

// ---------------------------------------------------------------------------
// Text form

Alphabet Alphabet::discover(std::span<const std::string> texts) {
  std::vector<char> symbols;
  for (const auto& text : texts) {
    for (char c : text) {
      if (std::isalpha(static_cast<unsigned char>(c)) &&
          std::find(symbols.begin(), symbols.end(), c) == symbols.end()) {
        symbols.push_back(c);
      }
    }
  }
  return Alphabet(std::move(symbols));
}

Word Alphabet::parse(std::string_view text) const {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '\'') {
      if (letters.empty() || letters.back().sign < 0) throw SyntaxError("stray inverse mark", i);
      letters.back().sign = -1;
      continue;
    }
    auto it = std::find(symbols_.begin(), symbols_.end(), c);
    if (it == symbols_.end()) throw SyntaxError(std::string("unknown generator '") + c + "'", i);
    letters.push_back({static_cast<int>(it - symbols_.begin()), 1});
  }
  return Word::reduce(letters);
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += l.generator < static_cast<int>(symbols_.size()) ? symbols_[static_cast<std::size_t>(l.generator)]
                                                           : '?';
    if (l.sign < 0) out += '\'';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms

Word Endomorphism::apply(const Word& w) const {
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    if (l.generator < 0 || static_cast<std::size_t>(l.generator) >= images_.size()) {
      throw std::out_of_range("generator " + std::to_string(l.generator) + " outside source rank " +
                              std::to_string(images_.size()));
    }
    const Word& image = images_[static_cast<std::size_t>(l.generator)];
    if (l.sign > 0) {
      out.insert(out.end(), image.letters().begin(), image.letters().end());
    } else {
      for (auto it = image.letters().rbegin(); it != image.letters().rend(); ++it) out.push_back(it->inverse());
    }
  }
  return Word::reduce(out);
}

// ---------------------------------------------------------------------------
// Folded graphs

FoldedGraph::FoldedGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), outgoing_(vertex_count), incoming_(vertex_count) {
  std::sort(edges_.begin(), edges_.end());
  for (const Edge& e : edges_) {
    if (!outgoing_[e.from].emplace(e.label, e.to).second || !incoming_[e.to].emplace(e.label, e.from).second) {
      throw std::invalid_argument("graph is not folded");
    }
  }
}

std::optional<std::size_t> FoldedGraph::follow(std::size_t vertex, Letter letter) const {
  const auto& table = letter.sign > 0 ? outgoing_[vertex] : incoming_[vertex];
  auto it = table.find(letter.generator);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

namespace {

using RawEdge = FoldedGraph::Edge;

class GraphBuilder {
 public:
  void add_petal(const Word& w) {
    if (w.empty()) return;
    std::size_t current = 0;
    const auto& letters = w.letters();
    for (std::size_t i = 0; i < letters.size(); ++i) {
      const std::size_t next = (i + 1 == letters.size()) ? 0 : vertex_count_++;
      if (letters[i].sign > 0) {
        edges_.push_back({current, letters[i].generator, next});
      } else {
        edges_.push_back({next, letters[i].generator, current});
      }
      current = next;
    }
  }

  FoldedGraph build() {
    while (fold_once()) {
    }
    trim();
    return canonical();
  }

 private:
  // Finds one pair of edges sharing an endpoint and label, identifies their
  // other endpoints and drops the duplicate edge.
  bool fold_once() {
    std::map<std::tuple<std::size_t, int, int>, std::size_t> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const RawEdge& e = edges_[i];
      auto [out_it, out_new] = seen.try_emplace({e.from, e.label, +1}, i);
      if (!out_new) {
        merge(edges_[out_it->second].to, e.to);
        return true;
      }
      auto [in_it, in_new] = seen.try_emplace({e.to, e.label, -1}, i);
      if (!in_new) {
        merge(edges_[in_it->second].from, e.from);
        return true;
      }
    }
    return false;
  }

  void merge(std::size_t a, std::size_t b) {
    const std::size_t keep = std::min(a, b);
    const std::size_t drop = std::max(a, b);
    for (RawEdge& e : edges_) {
      if (e.from == drop) e.from = keep;
      if (e.to == drop) e.to = keep;
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  // Removes hanging trees: non-base vertices of degree at most one.
  void trim() {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::size_t> degree(vertex_count_, 0);
      for (const RawEdge& e : edges_) {
        ++degree[e.from];
        ++degree[e.to];
      }
      std::vector<RawEdge> kept;
      for (const RawEdge& e : edges_) {
        const bool hanging = (e.from != 0 && degree[e.from] == 1) || (e.to != 0 && degree[e.to] == 1);
        if (hanging) {
          changed = true;
        } else {
          kept.push_back(e);
        }
      }
      edges_ = std::move(kept);
    }
  }

  FoldedGraph canonical() const {
    std::vector<std::map<int, std::size_t>> out(vertex_count_);
    std::vector<std::map<int, std::size_t>> in(vertex_count_);
    for (const RawEdge& e : edges_) {
      out[e.from][e.label] = e.to;
      in[e.to][e.label] = e.from;
    }
    constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> order(vertex_count_, kUnseen);
    std::deque<std::size_t> queue{0};
    order[0] = 0;
    std::size_t next_id = 1;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (const auto* table : {&out[v], &in[v]}) {
        for (const auto& [label, w] : *table) {
          if (order[w] != kUnseen) continue;
          order[w] = next_id++;
          queue.push_back(w);
        }
      }
    }
    std::vector<RawEdge> renumbered;
    renumbered.reserve(edges_.size());
    for (const RawEdge& e : edges_) renumbered.push_back({order[e.from], e.label, order[e.to]});
    return FoldedGraph(next_id, std::move(renumbered));
  }

  std::size_t vertex_count_ = 1;
  std::vector<RawEdge> edges_;
};

}  // namespace

FoldedGraph subgroup_graph(std::span<const Word> generators) {
  GraphBuilder builder;
  for (const Word& g : generators) builder.add_petal(g);
  return builder.build();
}

bool member(const FoldedGraph& graph, const Word& w) {
  std::size_t vertex = FoldedGraph::base();
  for (const Letter& l : w.letters()) {
    const auto next = graph.follow(vertex, l);
    if (!next) return false;
    vertex = *next;
  }
  return vertex == FoldedGraph::base();
}

// ---------------------------------------------------------------------------
// The map on fundamental groups of the genus one surface

namespace {
constexpr int kAlpha = 0;
constexpr int kDelta = 1;
}  // namespace

Endomorphism surface_to_complement_map() {
  const Word phi_z = Word::power_of(kAlpha, 4) * Word::power_of(kDelta, 2);
  const Word phi_y = Word::power_of(kDelta, -1) * Word::power_of(kAlpha, 1) * Word::power_of(kDelta, 1);
  return Endomorphism({phi_z, phi_y});
}

Word phi_of_x() {
  const Endomorphism phi = surface_to_complement_map();
  return phi.images()[0] * phi.images()[1].inverse();
}

Word eta1_word() { return phi_of_x() * Word::power_of(kAlpha, -2); }

Word epsilon_word() {
  return Word::reduce({{kDelta, -1}, {kAlpha, 1}, {kDelta, 1}, {kAlpha, -1}, {kDelta, 1}});
}

bool eta1_membership_check() {
  const Endomorphism phi = surface_to_complement_map();
  const FoldedGraph image = subgroup_graph(phi.images());
  return member(image, Word::power_of(kAlpha, 2));
}

std::string to_string(SuffixKind kind) {
  switch (kind) {
    case SuffixKind::EndsDeltaBarAlphaBar4:
      return "ends_dbar_abar4";
    case SuffixKind::EndsAlpha4Delta2:
      return "ends_a4_d2";
    case SuffixKind::EndsAlphaNDelta:
      return "ends_an_d";
  }
  return "unknown";
}

namespace {

bool ends_with(const std::vector<Letter>& word, std::initializer_list<Letter> suffix) {
  if (word.size() < suffix.size()) return false;
  return std::equal(suffix.begin(), suffix.end(), word.end() - static_cast<std::ptrdiff_t>(suffix.size()));
}

std::optional<SuffixClass> classify_image(const Word& image) {
  const auto& l = image.letters();
  constexpr Letter a{kAlpha, 1}, A{kAlpha, -1}, d{kDelta, 1}, D{kDelta, -1};
  if (ends_with(l, {D, A, A, A, A})) return SuffixClass{SuffixKind::EndsDeltaBarAlphaBar4};
  if (ends_with(l, {a, a, a, a, d, d})) return SuffixClass{SuffixKind::EndsAlpha4Delta2};
  if (l.size() >= 2 && l.back() == d && l[l.size() - 2].generator == kAlpha) {
    const int sign = l[l.size() - 2].sign;
    std::int64_t n = 0;
    for (auto it = l.rbegin() + 1; it != l.rend() && *it == Letter{kAlpha, sign}; ++it) n += sign;
    return SuffixClass{SuffixKind::EndsAlphaNDelta, n};
  }
  return std::nullopt;
}

}  // namespace

SuffixClass suffix_class(const Word& w, const Endomorphism& phi) {
  if (w.empty()) throw ClassificationFailure("suffix classification needs a nonempty word");
  const Word image = phi.apply(w);
  const auto found = classify_image(image);
  const bool ends_in_z = w.letters().back().generator == 0;
  if (!found) throw ClassificationFailure("image of the word has no recognised suffix");
  const bool z_kind = found->kind != SuffixKind::EndsAlphaNDelta;
  if (z_kind != ends_in_z) {
    throw ClassificationFailure("suffix kind " + to_string(found->kind) + " does not match the final syllable");
  }
  return *found;
}

void for_each_reduced_word(int rank, std::size_t max_length, const std::function<void(const Word&)>& visit) {
  std::vector<Letter> buffer;
  buffer.reserve(max_length);
  std::function<void()> extend = [&]() {
    visit(Word::reduce(buffer));
    if (buffer.size() == max_length) return;
    for (int g = 0; g < rank; ++g) {
      for (int s : {1, -1}) {
        const Letter next{g, s};
        if (!buffer.empty() && buffer.back() == next.inverse()) continue;
        buffer.push_back(next);
        extend();
        buffer.pop_back();
      }
    }
  };
  extend();
}

}  // namespace concordance
