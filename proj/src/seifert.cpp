#include "concordance/seifert.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "concordance/errors.hpp"

namespace concordance {

SeifertMatrix::SeifertMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (!entries_.is_square() || entries_.rows() % 2 != 0) {
    throw InvalidSeifertMatrix("Seifert matrix must be square of even size, got " +
                               std::to_string(entries_.rows()) + "x" +
                               std::to_string(entries_.cols()));
  }
  const Integer d = determinant(entries_ - entries_.transpose());
  if (d != 1) {
    throw InvalidSeifertMatrix("det(V - V^T) = " + d.str() + " for " + entries_.to_string() +
                               ", expected 1");
  }
}

SeifertMatrix SeifertMatrix::mirrored() const { return SeifertMatrix(-entries_.transpose()); }
SeifertMatrix SeifertMatrix::reversed() const { return SeifertMatrix(entries_.transpose()); }

namespace {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

// Bareiss elimination over Z[t]; every division is exact.
LaurentPoly poly_determinant(PolyMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  LaurentPoly previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k].is_zero()) ++swap;
      if (swap == n) return {};
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divide_exact(previous);
      }
    }
    previous = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

}  // namespace

LaurentPoly alexander_determinant(const SeifertMatrix& v) {
  const IntMatrix& m = v.entries();
  const std::size_t n = m.rows();
  PolyMatrix a(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = LaurentPoly(m(i, j)) - LaurentPoly::monomial(m(j, i), 1);
  return poly_determinant(std::move(a));
}

LaurentPoly alexander(const SeifertMatrix& v) { return conway_normalize(alexander_determinant(v)); }

int arf_from_alexander(const LaurentPoly& normalized_delta) {
  const Integer at_minus_one = normalized_delta.eval_int(-1);
  Integer residue = at_minus_one % 8;
  if (residue < 0) residue += 8;
  if (residue == 1) return 0;
  if (residue == 5) return 1;
  throw InvalidDeterminant("Delta(-1) = " + at_minus_one.str() + " is " + residue.str() +
                           " mod 8, expected 1 or 5");
}

int arf(const SeifertMatrix& v) { return arf_from_alexander(alexander(v)); }

int levine_tristram(const SeifertMatrix& v, double theta, double tolerance) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  if (!(theta > 0.0 && theta < kTwoPi)) {
    throw InvalidAngle("signature angle must lie in (0, 2pi), got " + std::to_string(theta));
  }
  const std::size_t n = v.dimension();
  if (n == 0) return 0;

  const double delta_abs = std::abs(alexander(v).eval_circle(theta));
  if (delta_abs <= tolerance) {
    throw SingularEvaluation(v.entries().to_string(), theta,
                             "|Delta(omega)| = " + std::to_string(delta_abs));
  }

  const std::complex<double> omega = std::polar(1.0, theta);
  const std::complex<double> left = 1.0 - omega;
  const std::complex<double> right = 1.0 - std::conj(omega);
  const IntMatrix& m = v.entries();
  Eigen::MatrixXcd h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = left * m(i, j).convert_to<double>() + right * m(j, i).convert_to<double>();
  const double scale = h.cwiseAbs().maxCoeff();

  if (n == 2) {
    // Hermitian 2x2: both eigenvalues share the sign of the trace when det > 0.
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const double det = a * d - std::norm(h(0, 1));
    if (std::abs(det) <= 1e-12 * scale * scale) {
      throw SingularEvaluation(m.to_string(), theta, "Hermitian form is degenerate");
    }
    if (det < 0) return 0;
    return a + d > 0 ? 2 : -2;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& eigenvalues = solver.eigenvalues();
  int signature = 0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    if (std::abs(eigenvalues[i]) <= 1e-12 * scale * static_cast<double>(n)) {
      throw SingularEvaluation(m.to_string(), theta, "Hermitian form has a near-zero eigenvalue");
    }
    signature += eigenvalues[i] > 0 ? 1 : -1;
  }
  return signature;
}

namespace {

HomologyClass normalized_class(Integer u, Integer w) {
  const Integer g = gcd(abs(u), abs(w));
  u /= g;
  w /= g;
  if (u < 0 || (u == 0 && w < 0)) {
    u = -u;
    w = -w;
  }
  return HomologyClass{{u, w}};
}

}  // namespace

std::vector<HomologyClass> surgery_curve_classes(const SeifertMatrix& v) {
  const IntMatrix& m = v.entries();
  if (m.rows() != 2) {
    throw DimensionMismatch("surgery curve enumeration needs a genus one (2x2) Seifert matrix");
  }
  // Q(u, w) = a u^2 + b u w + c w^2
  const Integer a = m(0, 0);
  const Integer b = m(0, 1) + m(1, 0);
  const Integer c = m(1, 1);
  // V - V^T unimodular forces b odd, so Q is never identically zero.
  const Integer disc = b * b - 4 * a * c;
  if (disc < 0) return {};
  const Integer root = boost::multiprecision::sqrt(disc);
  if (root * root != disc) return {};

  std::vector<HomologyClass> classes;
  if (a == 0) {
    // Q = w (b u + c w)
    classes.push_back(normalized_class(1, 0));
    if (b != 0) classes.push_back(normalized_class(c, -b));
  } else {
    // w != 0 for every solution; u / w = (-b ± root) / (2a).
    for (const Integer& s : {root, Integer(-root)}) {
      classes.push_back(normalized_class(-b + s, 2 * a));
    }
  }
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return classes;
}

bool is_algebraically_slice_genus1(const SeifertMatrix& v) {
  return !surgery_curve_classes(v).empty();
}

Integer self_linking(const SeifertMatrix& v, const HomologyClass& c) {
  const IntVector image = v.entries() * c.coords;
  Integer total = 0;
  for (std::size_t i = 0; i < image.size(); ++i) total += c.coords[i] * image[i];
  return total;
}

}  // namespace concordance
