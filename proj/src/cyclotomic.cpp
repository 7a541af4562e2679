#include "gbent/cyclotomic.hpp"

#include <cmath>
#include <numbers>

#include "gbent/error.hpp"

namespace gbent {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "cyclotomic coefficient overflow");
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "cyclotomic coefficient overflow");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "cyclotomic coefficient overflow");
  return r;
}

}  // namespace checked

CyclotomicInt::CyclotomicInt(int k) : k_(k) {
  if (k < 1 || k > kMaxK) throw Error(ErrorCode::InvalidK, "cyclotomic order exponent must be in [1, 16]");
  coeffs_.assign(std::size_t{1} << (k - 1), 0);
}

CyclotomicInt::CyclotomicInt(int k, std::vector<std::int64_t> coeffs) : CyclotomicInt(k) {
  if (coeffs.size() != coeffs_.size()) throw Error(ErrorCode::ShapeMismatch, "coefficient vector must have length 2^{k-1}");
  coeffs_ = std::move(coeffs);
}

CyclotomicInt CyclotomicInt::integer(int k, std::int64_t value) {
  CyclotomicInt r(k);
  r.coeffs_[0] = value;
  return r;
}

CyclotomicInt CyclotomicInt::zeta_pow(int k, std::int64_t e) {
  CyclotomicInt r(k);
  const std::int64_t order = std::int64_t{1} << k;
  const std::int64_t h = order / 2;
  std::int64_t t = e % order;
  if (t < 0) t += order;
  if (t >= h) {
    r.coeffs_[static_cast<std::size_t>(t - h)] = -1;
  } else {
    r.coeffs_[static_cast<std::size_t>(t)] = 1;
  }
  return r;
}

bool CyclotomicInt::is_zero() const noexcept {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CyclotomicInt::equals_integer(std::int64_t value) const noexcept {
  if (coeffs_[0] != value) return false;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) return false;
  }
  return true;
}

void CyclotomicInt::check_same_k(const CyclotomicInt& other) const {
  if (other.k_ != k_) throw Error(ErrorCode::ShapeMismatch, "cyclotomic operands of different order");
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& other) {
  check_same_k(other);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] = checked::add(coeffs_[j], other.coeffs_[j]);
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& other) {
  check_same_k(other);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] = checked::sub(coeffs_[j], other.coeffs_[j]);
  return *this;
}

CyclotomicInt& CyclotomicInt::operator*=(std::int64_t scalar) {
  for (auto& c : coeffs_) c = checked::mul(c, scalar);
  return *this;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt r = *this;
  for (auto& c : r.coeffs_) c = checked::sub(0, c);
  return r;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  a.check_same_k(b);
  const std::size_t h = a.half();
  CyclotomicInt r(a.k());
  for (std::size_t i = 0; i < h; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < h; ++j) {
      if (b.coeffs_[j] == 0) continue;
      const std::int64_t p = checked::mul(a.coeffs_[i], b.coeffs_[j]);
      const std::size_t e = i + j;
      if (e < h) {
        r.coeffs_[e] = checked::add(r.coeffs_[e], p);
      } else {
        r.coeffs_[e - h] = checked::sub(r.coeffs_[e - h], p);
      }
    }
  }
  return r;
}

std::complex<double> CyclotomicInt::evaluate() const {
  const double step = 2.0 * std::numbers::pi / static_cast<double>(std::int64_t{1} << k_);
  std::complex<double> sum = 0.0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) sum += static_cast<double>(coeffs_[j]) * std::polar(1.0, step * static_cast<double>(j));
  }
  return sum;
}

std::string CyclotomicInt::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j > 0) out += " + ";
    out += std::to_string(coeffs_[j]);
    if (j == 1) out += "*z";
    if (j > 1) out += "*z^" + std::to_string(j);
  }
  out += " (z = zeta_" + std::to_string(std::int64_t{1} << k_) + ")";
  return out;
}

CyclotomicInt conj(const CyclotomicInt& a) {
  const std::size_t h = a.half();
  std::vector<std::int64_t> c(h, 0);
  c[0] = a[0];
  for (std::size_t j = 1; j < h; ++j) c[h - j] = checked::sub(0, a[j]);
  return CyclotomicInt(a.k(), std::move(c));
}

CyclotomicInt norm_squared(const CyclotomicInt& a) { return a * conj(a); }

CyclotomicInt Sqrt2Decomposition::value() const {
  CyclotomicInt r = CyclotomicInt::zeta_pow(k, J1) * s1;
  r += CyclotomicInt::zeta_pow(k, J2) * s2;
  return r;
}

Sqrt2Decomposition sqrt2_decompose(int k, std::int64_t j) {
  if (k < 3 || k > CyclotomicInt::kMaxK) throw Error(ErrorCode::InvalidK, "sqrt(2) decomposition needs k >= 3");
  const std::int64_t h = std::int64_t{1} << (k - 1);
  const std::int64_t e = std::int64_t{1} << (k - 3);
  if (j < 0 || j >= h) throw Error(ErrorCode::IndexOutOfRange, "exponent j must lie in [0, 2^{k-1})");

  // √2 ζ^j = ζ^{j-e} + ζ^{j+e}; fold whichever exponent leaves [0, h) back
  // with ζ^h = -1.
  Sqrt2Decomposition d{k, j, 0, 0, 1, 1};
  if (j - e < 0) {
    d.J1 = j + e;
    d.s1 = 1;
    d.J2 = j - e + h;
    d.s2 = -1;
  } else if (j + e >= h) {
    d.J1 = j + e - h;
    d.s1 = -1;
    d.J2 = j - e;
    d.s2 = 1;
  } else {
    d.J1 = j - e;
    d.J2 = j + e;
  }
  return d;
}

}  // namespace gbent
