#include "braidforge/int_matrix.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <numeric>

#include "braidforge/error.hpp"
#include "checked.hpp"

namespace braidforge {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using detail::checked_add;
using detail::checked_mul;

std::int64_t to_int64(const cpp_int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw OverflowError("value does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

void require_same_shape(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("matrix shape mismatch");
}

using Rational = std::vector<std::vector<cpp_rational>>;

Rational to_rational(const IntMatrix& m) {
  Rational out(static_cast<std::size_t>(m.rows()), std::vector<cpp_rational>(m.cols()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Rational& a, int cols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const cpp_rational lead = a[row][c];
    for (auto& x : a[row]) x /= lead;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      const cpp_rational f = a[r][c];
      for (std::size_t j = 0; j < a[r].size(); ++j) a[r][j] -= f * a[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InvalidArgument("negative matrix dimension");
  data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  const int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  IntMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw InvalidArgument("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<IntVector> IntMatrix::to_rows() const {
  std::vector<IntVector> out;
  for (int r = 0; r < rows_; ++r) out.emplace_back(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  return out;
}

bool IntMatrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  require_same_shape(a, b);
  IntMatrix out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out(r, c) = checked_add(a(r, c), b(r, c));
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-1) * b; }

IntMatrix operator*(std::int64_t s, const IntMatrix& a) {
  IntMatrix out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out(r, c) = checked_mul(s, a(r, c));
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int s = 0; s < a.cols(); ++s) {
      const std::int64_t x = a(r, s);
      if (x == 0) continue;
      for (int c = 0; c < b.cols(); ++c) out(r, c) = checked_add(out(r, c), checked_mul(x, b(s, c)));
    }
  return out;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (static_cast<int>(v.size()) != a.cols()) throw InvalidArgument("matrix-vector shape mismatch");
  IntVector out(static_cast<std::size_t>(a.rows()), 0);
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out[r] = checked_add(out[r], checked_mul(a(r, c), v[c]));
  return out;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix out(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
  return out;
}

IntMatrix power(const IntMatrix& m, int e) {
  if (m.rows() != m.cols()) throw InvalidArgument("power of a non-square matrix");
  if (e < 0) throw InvalidArgument("negative matrix power");
  IntMatrix out = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  for (; e > 0; e >>= 1) {
    if (e & 1) out = out * base;
    if (e > 1) base = base * base;
  }
  return out;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  int rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  IntMatrix out(rows, cols);
  int r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (int r = 0; r < b.rows(); ++r)
      for (int c = 0; c < b.cols(); ++c) out(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

std::int64_t determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  const int n = m.rows();
  // Fraction-free Bareiss elimination.
  std::vector<std::vector<cpp_int>> a(static_cast<std::size_t>(n), std::vector<cpp_int>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[r][c] = m(r, c);
  cpp_int prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return to_int64(n == 0 ? cpp_int(1) : sign * a[n - 1][n - 1]);
}

int rank(const IntMatrix& m) {
  auto a = to_rational(m);
  return static_cast<int>(rref(a, m.cols()).size());
}

std::vector<IntVector> nullspace(const IntMatrix& m) {
  auto a = to_rational(m);
  const auto pivots = rref(a, m.cols());
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<IntVector> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<cpp_rational> v(static_cast<std::size_t>(m.cols()), 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    cpp_int lcm = 1;
    for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, denominator(x));
    cpp_int g = 0;
    std::vector<cpp_int> ints;
    for (const auto& x : v) {
      ints.push_back(numerator(x) * (lcm / denominator(x)));
      g = boost::multiprecision::gcd(g, ints.back());
    }
    IntVector iv;
    for (const auto& x : ints) iv.push_back(to_int64(x / g));
    out.push_back(std::move(iv));
  }
  return out;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("inverse of a non-square matrix");
  const int n = m.rows();
  auto a = to_rational(m);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[r].push_back(r == c ? 1 : 0);
  if (static_cast<int>(rref(a, n).size()) != n) throw InvalidArgument("matrix is singular");
  IntMatrix out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const auto& x = a[r][n + c];
      if (denominator(x) != 1) throw InvalidArgument("matrix is not unimodular");
      out(r, c) = to_int64(numerator(x));
    }
  return out;
}

IntVector characteristic_polynomial(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("characteristic polynomial of a non-square matrix");
  const int n = m.rows();
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  using Big = std::vector<std::vector<cpp_int>>;
  Big a(static_cast<std::size_t>(n), std::vector<cpp_int>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[r][c] = m(r, c);
  std::vector<cpp_int> coeffs(static_cast<std::size_t>(n) + 1, 0);
  coeffs[n] = 1;
  Big mk(static_cast<std::size_t>(n), std::vector<cpp_int>(n, 0));
  for (int k = 1; k <= n; ++k) {
    Big next(static_cast<std::size_t>(n), std::vector<cpp_int>(n, 0));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        for (int s = 0; s < n; ++s) next[r][c] += a[r][s] * mk[s][c];
        if (r == c) next[r][c] += coeffs[n - k + 1];
      }
    mk = std::move(next);
    cpp_int trace = 0;
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s) trace += a[r][s] * mk[s][r];
    coeffs[n - k] = -trace / k;
  }
  IntVector out;
  for (const auto& c : coeffs) out.push_back(to_int64(c));
  return out;
}

}  // namespace braidforge
