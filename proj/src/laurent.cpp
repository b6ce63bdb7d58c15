#include "braidforge/laurent.hpp"

#include <algorithm>

#include "braidforge/error.hpp"
#include "checked.hpp"

namespace braidforge {

using detail::checked_add;
using detail::checked_mul;

LaurentPoly::LaurentPoly(std::int64_t constant) {
  if (constant != 0) coeffs_ = {constant};
}

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent) {
  LaurentPoly p(coeff);
  if (coeff != 0) p.low_ = exponent;
  return p;
}

std::int64_t LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c != 0; });
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) low_ = 0;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  LaurentPoly out;
  out.low_ = std::min(a.low_, b.low_);
  const int high = std::max(a.high(), b.high());
  for (int e = out.low_; e <= high; ++e) out.coeffs_.push_back(checked_add(a.coeff(e), b.coeff(e)));
  out.trim();
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + LaurentPoly(-1) * b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly out;
  out.low_ = a.low_ + b.low_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out.coeffs_[i + j] = checked_add(out.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  out.trim();
  return out;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int e = p.low(); e <= p.high(); ++e) {
    const std::int64_t c = p.coeff(e);
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentMatrix::LaurentMatrix(int dim) : dim_(dim) {
  if (dim < 0) throw InvalidArgument("negative matrix dimension");
  data_.assign(static_cast<std::size_t>(dim) * dim, LaurentPoly());
}

LaurentMatrix LaurentMatrix::identity(int dim) {
  LaurentMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("matrix shape mismatch");
  LaurentMatrix out(a.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int s = 0; s < a.dim(); ++s) {
      if (a(r, s).is_zero()) continue;
      for (int c = 0; c < a.dim(); ++c) out(r, c) = out(r, c) + a(r, s) * b(s, c);
    }
  return out;
}

IntMatrix evaluate(const LaurentMatrix& m, std::int64_t value) {
  IntMatrix out(m.dim(), m.dim());
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) {
      const auto& p = m(r, c);
      if (p.is_zero()) continue;
      if (p.low() < 0 && value != 1 && value != -1)
        throw InvalidArgument("negative powers need t = 1 or t = -1");
      std::int64_t sum = 0;
      for (int e = p.low(); e <= p.high(); ++e) {
        std::int64_t term = p.coeff(e);
        const int steps = e < 0 ? -e : e;
        for (int i = 0; i < steps; ++i) term = checked_mul(term, value);
        sum = checked_add(sum, term);
      }
      out(r, c) = sum;
    }
  return out;
}

IntMatrix substitute(const LaurentMatrix& m, const IntMatrix& k, const IntMatrix& k_inverse) {
  const int b = k.rows();
  IntMatrix out(m.dim() * b, m.dim() * b);
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) {
      const auto& p = m(r, c);
      if (p.is_zero()) continue;
      IntMatrix block(b, b);
      for (int e = p.low(); e <= p.high(); ++e)
        if (p.coeff(e) != 0) block = block + p.coeff(e) * power(e < 0 ? k_inverse : k, e < 0 ? -e : e);
      for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) out(r * b + i, c * b + j) = block(i, j);
    }
  return out;
}

}  // namespace braidforge
