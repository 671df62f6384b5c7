#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace concordance {

/// Base class for every failure raised by the library.  The CLI maps these
/// to exit code 1; anything else escaping is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroBase : public Error {
 public:
  using Error::Error;
};

/// Evaluation at an integer whose negative powers leave the integers.
class NonIntegralValue : public Error {
 public:
  using Error::Error;
};

class NotNormalizable : public Error {
 public:
  using Error::Error;
};

class InexactDivision : public Error {
 public:
  using Error::Error;
};

class InvalidSeifertMatrix : public Error {
 public:
  using Error::Error;
};

/// Alexander polynomial at -1 is not 1 or 5 mod 8.
class InvalidDeterminant : public Error {
 public:
  using Error::Error;
};

class InvalidAngle : public Error {
 public:
  using Error::Error;
};

/// omega = exp(i theta) is at or numerically near a root of the Alexander
/// polynomial, so the signature is not locally constant there.
class SingularEvaluation : public Error {
 public:
  SingularEvaluation(std::string subexpression, double theta, const std::string& detail)
      : Error("singular evaluation of " + subexpression + " at theta=" + std::to_string(theta) +
              (detail.empty() ? std::string() : ": " + detail)),
        subexpression_(std::move(subexpression)),
        theta_(theta) {}

  const std::string& subexpression() const noexcept { return subexpression_; }
  double theta() const noexcept { return theta_; }

 private:
  std::string subexpression_;
  double theta_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class UnknownAtom : public Error {
 public:
  using Error::Error;
};

/// The image of a word under the surface-to-complement map matched none of
/// the suffix patterns.  Seeing it means the suffix pattern does not hold.
class ClassificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace concordance
