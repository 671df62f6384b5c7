#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "concordance/laurent.hpp"

namespace concordance {

using IntVector = std::vector<Integer>;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  /// Rows must all have the same length.
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  IntVector column(std::size_t c) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  /// `[[3,2],[1,0]]`; the empty matrix prints as `[]`.
  std::string to_string() const;
  /// Inverse of to_string; whitespace-insensitive.
  static IntMatrix parse(std::string_view text);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntVector operator*(const IntMatrix& m, const IntVector& v);

/// Exact determinant by fraction-free elimination.  The 0x0 determinant is 1.
Integer determinant(const IntMatrix& m);

struct HermiteDecomposition {
  IntMatrix hermite;     ///< H = M·U
  IntMatrix transform;   ///< U, unimodular
  /// pivot_rows[j] is the row of the leading entry of column j, for j < rank.
  std::vector<std::size_t> pivot_rows;
};

/// Column-style Hermite normal form.  Columns 0..rank-1 carry strictly
/// increasing pivot rows with positive pivots, entries left of a pivot in
/// its row lie in [0, pivot), and the remaining columns are zero.
HermiteDecomposition hermite_normal_form(const IntMatrix& m);

/// Some x with m·x = v over Z, or nullopt if v is outside the integer
/// column space.  Throws DimensionMismatch if v.size() != m.rows().
std::optional<IntVector> colspace_member(const IntMatrix& m, const IntVector& v);

/// `(1,-2)`
std::string vector_to_string(const IntVector& v);
/// Accepts `(1,2)`, `[1,2]` or `1,2`.
IntVector parse_vector(std::string_view text);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace concordance
