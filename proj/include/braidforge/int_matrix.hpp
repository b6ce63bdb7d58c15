#pragma once

#include <cstdint>
#include <vector>

namespace braidforge {

using IntVector = std::vector<std::int64_t>;

/// Dense row-major integer matrix. Arithmetic throws OverflowError instead
/// of wrapping.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t operator()(int r, int c) const { return data_[index(r, c)]; }
  std::int64_t& operator()(int r, int c) { return data_[index(r, c)]; }

  std::vector<IntVector> to_rows() const;
  bool is_identity() const;
  bool is_zero() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }

  int rows_ = 0;
  int cols_ = 0;
  IntVector data_;
};

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
IntMatrix operator*(std::int64_t s, const IntMatrix& a);

IntMatrix transpose(const IntMatrix& m);
/// Non-negative powers only.
IntMatrix power(const IntMatrix& m, int e);
/// Places `blocks` along the diagonal.
IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

std::int64_t determinant(const IntMatrix& m);
int rank(const IntMatrix& m);
/// Integer vectors spanning the rational nullspace, one per free column, each
/// scaled to have coprime entries.
std::vector<IntVector> nullspace(const IntMatrix& m);
/// Exact inverse of a unimodular matrix; InvalidArgument otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);
/// Coefficients c_0..c_n of det(x I - m), lowest degree first.
IntVector characteristic_polynomial(const IntMatrix& m);

}  // namespace braidforge
