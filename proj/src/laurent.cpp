#include "concordance/laurent.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "concordance/errors.hpp"

namespace concordance {

LaurentPoly::LaurentPoly(Integer constant) {
  if (constant != 0) terms_.emplace(0, std::move(constant));
}

LaurentPoly LaurentPoly::monomial(Integer coefficient, Exponent exponent) {
  LaurentPoly p;
  if (coefficient != 0) p.terms_.emplace(exponent, std::move(coefficient));
  return p;
}

LaurentPoly LaurentPoly::from_terms(const TermMap& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

Integer LaurentPoly::coefficient(Exponent exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

LaurentPoly::Exponent LaurentPoly::min_exponent() const { return terms_.begin()->first; }
LaurentPoly::Exponent LaurentPoly::max_exponent() const { return terms_.rbegin()->first; }

void LaurentPoly::add_term(Exponent exponent, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r;
  for (const auto& [e1, c1] : p.terms_) {
    for (const auto& [e2, c2] : q.terms_) r.add_term(e1 + e2, c1 * c2);
  }
  return r;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::substitute_power(Exponent w) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e * w, c);
  return r;
}

Integer LaurentPoly::eval_int(const Integer& x) const {
  if (is_zero()) return 0;
  const Exponent low = min_exponent();
  if (x == 0) {
    if (low < 0) throw ZeroBase("evaluation at 0 of a polynomial with negative exponents");
    return coefficient(0);
  }
  // Horner on t^{-low}·p, then divide back out.
  Integer acc = 0;
  Exponent current = max_exponent();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (; current > it->first; --current) acc *= x;
    acc += it->second;
  }
  for (; current > std::min<Exponent>(low, 0); --current) acc *= x;
  if (low >= 0) return acc;
  Integer denominator = boost::multiprecision::pow(x, static_cast<unsigned>(-low));
  if (acc % denominator != 0) {
    throw NonIntegralValue("value at " + x.str() + " is not an integer");
  }
  return acc / denominator;
}

std::complex<double> LaurentPoly::eval_circle(double theta) const {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [e, c] : terms_) {
    const double angle = static_cast<double>(e) * theta;
    sum += c.convert_to<double>() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw InexactDivision("division by the zero polynomial");
  const Exponent divisor_top = divisor.max_exponent();
  const Exponent divisor_span = divisor_top - divisor.min_exponent();
  const Integer& divisor_lead = divisor.terms_.rbegin()->second;

  LaurentPoly quotient;
  LaurentPoly remainder = *this;
  while (!remainder.is_zero()) {
    if (remainder.max_exponent() - remainder.min_exponent() < divisor_span) {
      throw InexactDivision("polynomial division leaves a remainder");
    }
    const auto& [top, lead] = *remainder.terms_.rbegin();
    Integer q;
    Integer r;
    boost::multiprecision::divide_qr(lead, divisor_lead, q, r);
    if (r != 0) throw InexactDivision("coefficient division leaves a remainder");
    LaurentPoly step = monomial(q, top - divisor_top);
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

bool LaurentPoly::is_palindromic() const {
  for (const auto& [e, c] : terms_) {
    if (coefficient(-e) != c) return false;
  }
  return true;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second;
    if (it->first != 0) os << "*t^" << it->first;
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    LaurentPoly result;
    skip_space();
    if (at_end()) throw SyntaxError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      bool saw_sign = false;
      while (!at_end() && (peek() == '+' || peek() == '-')) {
        if (peek() == '-') sign = -sign;
        saw_sign = true;
        ++pos_;
        skip_space();
      }
      if (!first && !saw_sign) throw SyntaxError("expected '+' or '-'", pos_);
      first = false;
      result += parse_term(sign);
      skip_space();
    }
    return result;
  }

 private:
  LaurentPoly parse_term(int sign) {
    const std::size_t start = pos_;
    Integer coefficient = 1;
    bool has_coefficient = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = parse_unsigned();
      has_coefficient = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || peek() != 't') throw SyntaxError("expected 't' after '*'", pos_);
      }
    }
    LaurentPoly::Exponent exponent = 0;
    if (!at_end() && peek() == 't') {
      ++pos_;
      exponent = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        int exp_sign = 1;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
          if (peek() == '-') exp_sign = -1;
          ++pos_;
          skip_space();
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
          throw SyntaxError("expected exponent", pos_);
        }
        exponent = exp_sign * parse_unsigned().convert_to<LaurentPoly::Exponent>();
      }
    } else if (!has_coefficient) {
      throw SyntaxError("expected term", start);
    }
    return LaurentPoly::monomial(sign * coefficient, exponent);
  }

  Integer parse_unsigned() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
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

LaurentPoly LaurentPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly conway_normalize(const LaurentPoly& p) {
  if (p.is_zero()) throw NotNormalizable("zero polynomial has no normalization");
  const LaurentPoly::Exponent center2 = p.max_exponent() + p.min_exponent();
  if (center2 % 2 != 0) {
    throw NotNormalizable("exponent range of " + p.to_string() + " has no integral center");
  }
  const LaurentPoly::Exponent k = center2 / 2;
  for (LaurentPoly::Exponent shift : {-k, k}) {
    for (int sign : {1, -1}) {
      LaurentPoly q = p.shifted(shift);
      if (sign < 0) q = -q;
      if (q.is_palindromic() && q.eval_int(1) == 1) return q;
    }
  }
  throw NotNormalizable(p.to_string() + " has no symmetric unit multiple with value 1 at t=1");
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace concordance
