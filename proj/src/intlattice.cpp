#include "concordance/intlattice.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

#include "concordance/errors.hpp"

namespace concordance {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  IntMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix n = a;
  for (auto& x : n.data_) x = -x;
  return n;
}

IntVector operator*(const IntMatrix& m, const IntVector& v) {
  if (v.size() != m.cols()) throw DimensionMismatch("matrix-vector shape mismatch");
  IntVector out(m.rows(), Integer(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Column operations applied simultaneously to H and U keep H = M·U.
struct ColumnOps {
  IntMatrix& h;
  IntMatrix& u;

  void swap(std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < h.rows(); ++r) std::swap(h(r, a), h(r, b));
    for (std::size_t r = 0; r < u.rows(); ++r) std::swap(u(r, a), u(r, b));
  }
  void negate(std::size_t a) {
    for (std::size_t r = 0; r < h.rows(); ++r) h(r, a) = -h(r, a);
    for (std::size_t r = 0; r < u.rows(); ++r) u(r, a) = -u(r, a);
  }
  // col[target] -= factor * col[source]
  void axpy(std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t r = 0; r < h.rows(); ++r) h(r, target) -= factor * h(r, source);
    for (std::size_t r = 0; r < u.rows(); ++r) u(r, target) -= factor * u(r, source);
  }
};

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  Integer r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

HermiteDecomposition hermite_normal_form(const IntMatrix& m) {
  HermiteDecomposition out{m, IntMatrix::identity(m.cols()), {}};
  ColumnOps ops{out.hermite, out.transform};
  IntMatrix& h = out.hermite;
  std::size_t next = 0;

  for (std::size_t row = 0; row < h.rows() && next < h.cols(); ++row) {
    // Euclid across columns next.. until only column `next` is nonzero in this row.
    while (true) {
      std::size_t smallest = h.cols();
      for (std::size_t c = next; c < h.cols(); ++c) {
        if (h(row, c) == 0) continue;
        if (smallest == h.cols() || abs(h(row, c)) < abs(h(row, smallest))) smallest = c;
      }
      if (smallest == h.cols()) break;
      if (smallest != next) ops.swap(smallest, next);
      bool done = true;
      for (std::size_t c = next + 1; c < h.cols(); ++c) {
        if (h(row, c) == 0) continue;
        ops.axpy(c, next, h(row, c) / h(row, next));
        if (h(row, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(row, next) == 0) continue;
    if (h(row, next) < 0) ops.negate(next);
    for (std::size_t c = 0; c < next; ++c) ops.axpy(c, next, floor_div(h(row, c), h(row, next)));
    out.pivot_rows.push_back(row);
    ++next;
  }
  return out;
}

std::optional<IntVector> colspace_member(const IntMatrix& m, const IntVector& v) {
  if (v.size() != m.rows()) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                            " against matrix with " + std::to_string(m.rows()) + " rows");
  }
  const HermiteDecomposition hnf = hermite_normal_form(m);
  const IntMatrix& h = hnf.hermite;
  const std::size_t rank = hnf.pivot_rows.size();

  // Forward substitution through the echelon columns.
  IntVector y(m.cols(), Integer(0));
  std::size_t pivot = 0;
  for (std::size_t row = 0; row < h.rows(); ++row) {
    Integer residual = v[row];
    for (std::size_t j = 0; j < pivot; ++j) residual -= h(row, j) * y[j];
    if (pivot < rank && hnf.pivot_rows[pivot] == row) {
      Integer q;
      Integer r;
      boost::multiprecision::divide_qr(residual, h(row, pivot), q, r);
      if (r != 0) return std::nullopt;
      y[pivot] = q;
      ++pivot;
    } else if (residual != 0) {
      return std::nullopt;
    }
  }
  return hnf.transform * y;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

class ListParser {
 public:
  explicit ListParser(std::string_view text) : text_(text) {}

  IntMatrix matrix() {
    expect('[');
    std::vector<IntVector> rows;
    skip_space();
    if (peek() != ']') {
      while (true) {
        expect('[');
        rows.push_back(integers(']'));
        expect(']');
        skip_space();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect(']');
    finish();
    for (const auto& row : rows) {
      if (row.size() != rows.front().size()) throw SyntaxError("ragged matrix rows", pos_);
    }
    return IntMatrix::from_rows(rows);
  }

  IntVector vector() {
    skip_space();
    char close = 0;
    if (peek() == '(') close = ')';
    if (peek() == '[') close = ']';
    if (close) ++pos_;
    IntVector v = integers(close);
    if (close) expect(close);
    finish();
    return v;
  }

  std::size_t position() const { return pos_; }

 private:
  IntVector integers(char close) {
    IntVector values;
    skip_space();
    if (close && peek() == close) return values;
    while (true) {
      values.push_back(integer());
      skip_space();
      if (peek() != ',') break;
      ++pos_;
    }
    return values;
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    const std::size_t digits = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) throw SyntaxError("expected integer", start);
    std::string token(text_.substr(start, pos_ - start));
    if (token.front() == '+') token.erase(0, 1);
    return Integer(token);
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) throw SyntaxError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  void finish() {
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError("trailing characters", pos_);
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntMatrix IntMatrix::parse(std::string_view text) { return ListParser(text).matrix(); }

IntVector parse_vector(std::string_view text) { return ListParser(text).vector(); }

std::string vector_to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.to_string(); }

}  // namespace concordance
