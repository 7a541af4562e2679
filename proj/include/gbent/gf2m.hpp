#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace gbent {

// GF(2^m) in polynomial basis. Elements are bitmasks: bit i is the
// coefficient of x^i. Immutable after construction.
class Field {
 public:
  static constexpr int kMaxM = 16;

  // Low-weight irreducible default modulus for degree m.
  static std::uint32_t default_modulus(int m);

  // Throws BadM for m outside [1, 16] and NotIrreducible when `modulus`
  // is not an irreducible polynomial of degree m.
  explicit Field(int m);
  Field(int m, std::uint32_t modulus);

  int m() const noexcept { return m_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t size() const noexcept { return std::uint32_t{1} << m_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return a ^ b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  // Throws DivisionByZero.
  std::uint32_t inv(std::uint32_t a) const;
  // x + x^2 + ... + x^{2^{m-1}}, which lies in {0, 1}.
  int trace(std::uint32_t a) const noexcept;

  // Some b with b^4 + b + 1 = 0, scanning elements in integer order.
  std::optional<std::uint32_t> root_of_x4_x_1() const noexcept;

  std::string format(std::uint32_t a) const;

 private:
  int m_;
  std::uint32_t modulus_;
};

bool is_irreducible(std::uint32_t poly);

// d in [1, 2^m - 1) with e d ≡ 1 mod 2^m - 1. Throws NotCoprime, BadM.
std::uint64_t inverse_exponent(std::uint64_t e, int m);

}  // namespace gbent
