#include "concordance/knotexpr.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "concordance/errors.hpp"

namespace concordance {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

struct BuiltinAtom {
  std::string_view name;
  std::string_view matrix;
};

// Right-handed conventions: `trefoil` has signature -2 at theta = pi.
constexpr BuiltinAtom kBuiltins[] = {
    {"unknot", "[]"},
    {"trefoil", "[[-1,1],[0,-1]]"},
    {"figure8", "[[1,1],[0,-1]]"},
    {"R", "[[3,2],[1,0]]"},
};

}  // namespace

SeifertMatrix builtin_atom(std::string_view name) {
  for (const auto& atom : kBuiltins) {
    if (atom.name == name) return SeifertMatrix::parse(atom.matrix);
  }
  throw UnknownAtom("unknown knot atom '" + std::string(name) + "'");
}

std::vector<std::string> builtin_atom_names() {
  std::vector<std::string> names;
  for (const auto& atom : kBuiltins) names.emplace_back(atom.name);
  return names;
}

KnotExpr KnotExpr::atom(std::string_view name) {
  return KnotExpr(std::make_shared<const KnotNode>(KnotNode{Atom{std::string(name), builtin_atom(name)}}));
}

KnotExpr KnotExpr::atom(SeifertMatrix matrix) {
  return KnotExpr(std::make_shared<const KnotNode>(KnotNode{Atom{"", std::move(matrix)}}));
}

KnotExpr KnotExpr::mirror(KnotExpr child) {
  return KnotExpr(std::make_shared<const KnotNode>(KnotNode{Mirror{std::move(child)}}));
}

KnotExpr KnotExpr::reverse(KnotExpr child) {
  return KnotExpr(std::make_shared<const KnotNode>(KnotNode{Reverse{std::move(child)}}));
}

KnotExpr KnotExpr::sum(std::vector<KnotExpr> children) {
  if (children.size() < 2) {
    throw ArityError("sum needs at least two summands, got " + std::to_string(children.size()));
  }
  return KnotExpr(std::make_shared<const KnotNode>(KnotNode{Sum{std::move(children)}}));
}

KnotExpr KnotExpr::infection(KnotExpr pattern, std::vector<Winding> windings,
                             std::vector<KnotExpr> companions) {
  if (windings.empty() || windings.size() != companions.size()) {
    throw ArityError("infection has " + std::to_string(windings.size()) + " windings and " +
                     std::to_string(companions.size()) + " companions");
  }
  return KnotExpr(std::make_shared<const KnotNode>(
      KnotNode{Infection{std::move(pattern), std::move(windings), std::move(companions)}}));
}

const KnotExpr::Node& KnotExpr::node() const { return node_->value; }

std::string KnotExpr::to_string() const {
  return std::visit(
      Overloaded{
          [](const Atom& a) { return a.name.empty() ? "seifert" + a.matrix.entries().to_string() : a.name; },
          [](const Mirror& m) { return "mirror(" + m.child.to_string() + ")"; },
          [](const Reverse& r) { return "reverse(" + r.child.to_string() + ")"; },
          [](const Sum& s) {
            std::string out = "sum(";
            for (std::size_t i = 0; i < s.children.size(); ++i) {
              if (i) out += ", ";
              out += s.children[i].to_string();
            }
            return out + ")";
          },
          [](const Infection& inf) {
            std::string out = "sat(" + inf.pattern.to_string() + "; [";
            for (std::size_t i = 0; i < inf.windings.size(); ++i) {
              if (i) out += ",";
              out += std::to_string(inf.windings[i]);
            }
            out += "]; ";
            for (std::size_t i = 0; i < inf.companions.size(); ++i) {
              if (i) out += ", ";
              out += inf.companions[i].to_string();
            }
            return out + ")";
          },
      },
      node());
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  KnotExpr parse() {
    KnotExpr e = expr();
    skip_space();
    if (!at_end()) throw SyntaxError("unexpected '" + std::string(1, peek()) + "'", pos_);
    return e;
  }

 private:
  KnotExpr expr() {
    skip_space();
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (name.empty()) {
      if (at_end()) throw SyntaxError("unexpected end of expression", pos_);
      throw SyntaxError("expected knot expression, found '" + std::string(1, peek()) + "'", pos_);
    }
    if (name == "mirror" || name == "reverse" || name == "neg") {
      expect('(');
      KnotExpr child = expr();
      expect(')');
      if (name == "mirror") return KnotExpr::mirror(std::move(child));
      if (name == "reverse") return KnotExpr::reverse(std::move(child));
      return KnotExpr::neg(std::move(child));
    }
    if (name == "sum") {
      expect('(');
      std::vector<KnotExpr> children = expr_list();
      expect(')');
      return KnotExpr::sum(std::move(children));
    }
    if (name == "sat") {
      expect('(');
      KnotExpr pattern = expr();
      expect(';');
      std::vector<KnotExpr::Winding> windings = winding_list();
      expect(';');
      std::vector<KnotExpr> companions = expr_list();
      expect(')');
      return KnotExpr::infection(std::move(pattern), std::move(windings), std::move(companions));
    }
    if (name == "seifert") return KnotExpr::atom(SeifertMatrix(inline_matrix()));
    try {
      return KnotExpr::atom(name);
    } catch (const UnknownAtom&) {
      throw SyntaxError("unknown atom '" + name + "'", start);
    }
  }

  std::vector<KnotExpr> expr_list() {
    std::vector<KnotExpr> items{expr()};
    while (accept(',')) items.push_back(expr());
    return items;
  }

  std::vector<KnotExpr::Winding> winding_list() {
    expect('[');
    std::vector<KnotExpr::Winding> windings{integer()};
    while (accept(',')) windings.push_back(integer());
    expect(']');
    return windings;
  }

  KnotExpr::Winding integer() {
    skip_space();
    const std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) throw SyntaxError("expected integer winding", start);
    try {
      return std::stoll(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      throw SyntaxError("winding out of range", start);
    }
  }

  // Bracketed matrix literal following `seifert`.
  IntMatrix inline_matrix() {
    skip_space();
    const std::size_t start = pos_;
    if (at_end() || peek() != '[') throw SyntaxError("expected '[' after seifert", pos_);
    int depth = 0;
    do {
      if (at_end()) throw SyntaxError("unterminated matrix literal", start);
      if (peek() == '[') ++depth;
      if (peek() == ']') --depth;
      ++pos_;
    } while (depth > 0);
    try {
      return IntMatrix::parse(text_.substr(start, pos_ - start));
    } catch (const SyntaxError& e) {
      throw SyntaxError("bad matrix literal", start + e.position());
    }
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      throw SyntaxError(std::string("expected '") + c + "'" +
                            (at_end() ? std::string(", found end of input")
                                      : ", found '" + std::string(1, peek()) + "'"),
                        pos_);
    }
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

KnotExpr KnotExpr::parse(std::string_view text) { return ExprParser(text).parse(); }

// ---------------------------------------------------------------------------
// Invariants

LaurentPoly alexander_of(const KnotExpr& e) {
  return std::visit(
      Overloaded{
          [](const KnotExpr::Atom& a) { return alexander(a.matrix); },
          [](const KnotExpr::Mirror& m) { return alexander_of(m.child); },
          [](const KnotExpr::Reverse& r) { return alexander_of(r.child); },
          [](const KnotExpr::Sum& s) {
            LaurentPoly product = 1;
            for (const auto& child : s.children) product *= alexander_of(child);
            return product;
          },
          [](const KnotExpr::Infection& inf) {
            LaurentPoly product = alexander_of(inf.pattern);
            for (std::size_t i = 0; i < inf.companions.size(); ++i) {
              product *= alexander_of(inf.companions[i]).substitute_power(inf.windings[i]);
            }
            return conway_normalize(product);
          },
      },
      e.node());
}

int arf_of(const KnotExpr& e) {
  return std::visit(
      Overloaded{
          [](const KnotExpr::Atom& a) { return arf(a.matrix); },
          [](const KnotExpr::Mirror& m) { return arf_of(m.child); },
          [](const KnotExpr::Reverse& r) { return arf_of(r.child); },
          [](const KnotExpr::Sum& s) {
            int total = 0;
            for (const auto& child : s.children) total ^= arf_of(child);
            return total;
          },
          [](const KnotExpr::Infection& inf) {
            int total = arf_of(inf.pattern);
            for (std::size_t i = 0; i < inf.companions.size(); ++i) {
              if (inf.windings[i] % 2 != 0) total ^= arf_of(inf.companions[i]);
            }
            return total;
          },
      },
      e.node());
}

int arf_via_alexander(const KnotExpr& e) { return arf_from_alexander(alexander_of(e)); }

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleEpsilon = 1e-12;

int signature_at(const KnotExpr& e, double theta, double tolerance) {
  return std::visit(
      Overloaded{
          [&](const KnotExpr::Atom& a) {
            try {
              return levine_tristram(a.matrix, theta, tolerance);
            } catch (const SingularEvaluation& err) {
              throw SingularEvaluation(e.to_string(), theta, "jump point of this atom");
            }
          },
          [&](const KnotExpr::Mirror& m) { return -signature_at(m.child, theta, tolerance); },
          [&](const KnotExpr::Reverse& r) { return signature_at(r.child, theta, tolerance); },
          [&](const KnotExpr::Sum& s) {
            int total = 0;
            for (const auto& child : s.children) total += signature_at(child, theta, tolerance);
            return total;
          },
          [&](const KnotExpr::Infection& inf) {
            int total = signature_at(inf.pattern, theta, tolerance);
            for (std::size_t i = 0; i < inf.companions.size(); ++i) {
              double scaled = std::fmod(static_cast<double>(inf.windings[i]) * theta, kTwoPi);
              if (scaled < 0) scaled += kTwoPi;
              // omega^w = 1: the Hermitian form vanishes identically.
              if (scaled < kAngleEpsilon || kTwoPi - scaled < kAngleEpsilon) continue;
              total += signature_at(inf.companions[i], scaled, tolerance);
            }
            return total;
          },
      },
      e.node());
}

}  // namespace

int signature_of(const KnotExpr& e, double theta, double tolerance) {
  if (!(theta > 0.0 && theta < kTwoPi)) {
    throw InvalidAngle("signature angle must lie in (0, 2pi), got " + std::to_string(theta));
  }
  return signature_at(e, theta, tolerance);
}

}  // namespace concordance
