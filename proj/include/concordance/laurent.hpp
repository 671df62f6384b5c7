#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace concordance {

using Integer = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial in one variable t, stored sparsely.
///
/// The term map never holds a zero coefficient, so structural equality is
/// polynomial equality.  All operations return new values.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using TermMap = std::map<Exponent, Integer>;

  LaurentPoly() = default;
  LaurentPoly(Integer constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(int constant) : LaurentPoly(Integer(constant)) {}  // NOLINT

  static LaurentPoly monomial(Integer coefficient, Exponent exponent);
  /// The variable t itself.
  static LaurentPoly t() { return monomial(1, 1); }
  static LaurentPoly from_terms(const TermMap& terms);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(Exponent exponent) const;
  /// Smallest and largest exponent present.  Undefined on zero; callers check is_zero().
  Exponent min_exponent() const;
  Exponent max_exponent() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) = default;

  /// Multiply by t^k.
  LaurentPoly shifted(Exponent k) const;

  /// p(t^w).  w = 0 collapses to the constant p(1).
  LaurentPoly substitute_power(Exponent w) const;

  /// p(x) for integer x.  Throws ZeroBase for x = 0 with negative exponents
  /// present and NonIntegralValue when negative powers of x leave Z.
  Integer eval_int(const Integer& x) const;

  /// p(e^{i theta}) in double precision.
  std::complex<double> eval_circle(double theta) const;

  /// Exact quotient p / divisor; throws InexactDivision if divisor does not divide p.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  /// True when coefficient(k) == coefficient(-k) for every k.
  bool is_palindromic() const;

  /// `-2*t^1 + 5 + -2*t^-1` style, descending exponents; "0" for zero.
  std::string to_string() const;
  /// Accepts `t`, `t^k`, `c*t^k`, `ct^k`, bare integers, joined by `+`/`-`.
  static LaurentPoly parse(std::string_view text);

 private:
  void add_term(Exponent exponent, const Integer& coefficient);

  TermMap terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

/// Returns the unit multiple ±t^k·p that is symmetric under t -> 1/t and
/// takes the value 1 at t = 1.  Throws NotNormalizable when none exists.
LaurentPoly conway_normalize(const LaurentPoly& p);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace concordance
