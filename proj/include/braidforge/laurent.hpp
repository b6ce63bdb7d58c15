#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidforge/int_matrix.hpp"

namespace braidforge {

/// Integer Laurent polynomial in t, stored as coefficients from t^low up.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant);  // NOLINT: integers are constants
  static LaurentPoly monomial(std::int64_t coeff, int exponent);

  bool is_zero() const { return coeffs_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int exponent) const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void trim();

  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

/// E.g. "-t", "1 - t^-1", "0".
std::string to_string(const LaurentPoly& p);

class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  explicit LaurentMatrix(int dim);
  static LaurentMatrix identity(int dim);

  int dim() const { return dim_; }
  const LaurentPoly& operator()(int r, int c) const { return data_[index(r, c)]; }
  LaurentPoly& operator()(int r, int c) { return data_[index(r, c)]; }

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * dim_ + c; }

  int dim_ = 0;
  std::vector<LaurentPoly> data_;
};

/// Substitutes t = value; value must be +1 or -1 when negative powers occur.
IntMatrix evaluate(const LaurentMatrix& m, std::int64_t value);
/// Substitutes t = K blockwise, where K is square and `k_inverse` its inverse.
IntMatrix substitute(const LaurentMatrix& m, const IntMatrix& k, const IntMatrix& k_inverse);

}  // namespace braidforge
