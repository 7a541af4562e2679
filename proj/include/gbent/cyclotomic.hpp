#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gbent {

// Exact element of Z[ζ] for ζ a primitive 2^k-th root of unity, in the
// power basis {1, ζ, ..., ζ^{h-1}} with h = 2^{k-1}. The relation ζ^h = -1
// is applied eagerly, so the coefficient vector always has length h and
// the representation is unique. All arithmetic is overflow-checked.
class CyclotomicInt {
 public:
  static constexpr int kMaxK = 16;

  explicit CyclotomicInt(int k);
  CyclotomicInt(int k, std::vector<std::int64_t> coeffs);

  static CyclotomicInt integer(int k, std::int64_t value);
  // ζ^e for any integer e (reduced mod 2^k).
  static CyclotomicInt zeta_pow(int k, std::int64_t e);

  int k() const noexcept { return k_; }
  std::size_t half() const noexcept { return coeffs_.size(); }
  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }
  std::int64_t operator[](std::size_t j) const noexcept { return coeffs_[j]; }

  bool is_zero() const noexcept;
  // True when the element is the rational integer `value`.
  bool equals_integer(std::int64_t value) const noexcept;

  CyclotomicInt& operator+=(const CyclotomicInt& other);
  CyclotomicInt& operator-=(const CyclotomicInt& other);
  CyclotomicInt& operator*=(std::int64_t scalar);
  CyclotomicInt operator-() const;

  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(CyclotomicInt a, std::int64_t s) { return a *= s; }
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
  friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;

  // Complex value with ζ = e^{2πi/2^k}.
  std::complex<double> evaluate() const;
  // `c0 + c1*z + ... (z = zeta_{2^k})`.
  std::string to_string() const;

 private:
  void check_same_k(const CyclotomicInt& other) const;

  int k_;
  std::vector<std::int64_t> coeffs_;
};

// Complex conjugation: ζ^j ↦ ζ^{-j} = -ζ^{h-j}.
CyclotomicInt conj(const CyclotomicInt& a);
// a · conj(a).
CyclotomicInt norm_squared(const CyclotomicInt& a);

// √2 ζ^j = s1 ζ^{J1} + s2 ζ^{J2} with 0 <= J1 < J2 <= h-1 and J2 - J1 = 2^{k-2}.
struct Sqrt2Decomposition {
  int k = 0;
  std::int64_t j = 0;
  std::int64_t J1 = 0;
  std::int64_t J2 = 0;
  int s1 = 1;
  int s2 = 1;

  CyclotomicInt value() const;
  friend bool operator==(const Sqrt2Decomposition&, const Sqrt2Decomposition&) = default;
};

// Requires k >= 3 and 0 <= j < 2^{k-1}; throws InvalidK / IndexOutOfRange.
Sqrt2Decomposition sqrt2_decompose(int k, std::int64_t j);

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

}  // namespace gbent
