#include "gbent/gf2m.hpp"

#include <array>
#include <cstdio>
#include <numeric>
#include <utility>

#include "gbent/error.hpp"

namespace gbent {

namespace {

constexpr std::array<std::uint32_t, Field::kMaxM + 1> kDefaults = {
    0,     0x3,   0x7,    0xB,    0x13,   0x25,   0x43,   0x83,   0x11B,
    0x211, 0x409, 0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
};

int degree(std::uint64_t p) noexcept { return p == 0 ? -1 : 63 - __builtin_clzll(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t p) noexcept {
  const int dp = degree(p);
  for (int da = degree(a); da >= dp; da = degree(a)) a ^= p << (da - dp);
  return a;
}

}  // namespace

bool is_irreducible(std::uint32_t poly) {
  const int d = degree(poly);
  if (d < 1) return false;
  // Trial division by every polynomial of degree 1..d/2.
  for (std::uint64_t q = 2; degree(q) <= d / 2; ++q) {
    if (poly_mod(poly, q) == 0) return false;
  }
  return true;
}

std::uint32_t Field::default_modulus(int m) {
  if (m < 1 || m > kMaxM) throw Error(ErrorCode::BadM, "field degree must be in [1, 16]");
  return kDefaults[static_cast<std::size_t>(m)];
}

Field::Field(int m) : Field(m, default_modulus(m)) {}

Field::Field(int m, std::uint32_t modulus) : m_(m), modulus_(modulus) {
  if (m < 1 || m > kMaxM) throw Error(ErrorCode::BadM, "field degree must be in [1, 16]");
  if (degree(modulus) != m || !is_irreducible(modulus)) {
    throw Error(ErrorCode::NotIrreducible, "modulus is not an irreducible polynomial of degree " + std::to_string(m));
  }
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const noexcept {
  std::uint32_t r = 0;
  const std::uint32_t top = std::uint32_t{1} << m_;
  while (b != 0) {
    if (b & 1U) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= modulus_;
  }
  return r;
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t r = 1;
  while (e != 0) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "zero has no inverse");
  return pow(a, size() - 2);
}

int Field::trace(std::uint32_t a) const noexcept {
  std::uint32_t t = 0;
  std::uint32_t s = a;
  for (int i = 0; i < m_; ++i) {
    t ^= s;
    s = mul(s, s);
  }
  return static_cast<int>(t & 1U);
}

std::optional<std::uint32_t> Field::root_of_x4_x_1() const noexcept {
  for (std::uint32_t b = 1; b < size(); ++b) {
    if ((pow(b, 4) ^ b ^ 1U) == 0) return b;
  }
  return std::nullopt;
}

std::string Field::format(std::uint32_t a) const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%X", a);
  return buf;
}

std::uint64_t inverse_exponent(std::uint64_t e, int m) {
  if (m < 1 || m > Field::kMaxM) throw Error(ErrorCode::BadM, "field degree must be in [1, 16]");
  const std::int64_t order = (std::int64_t{1} << m) - 1;
  if (order == 1) return 1;
  const std::int64_t base = static_cast<std::int64_t>(e % static_cast<std::uint64_t>(order));
  if (std::gcd(base, order) != 1) {
    throw Error(ErrorCode::NotCoprime, std::to_string(e) + " is not invertible modulo " + std::to_string(order));
  }
  std::int64_t r0 = order, r1 = base, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  std::int64_t d = t0 % order;
  if (d < 0) d += order;
  if ((static_cast<__int128>(d) * base) % order != 1) throw Error(ErrorCode::InternalInconsistency, "inverse exponent check failed");
  return static_cast<std::uint64_t>(d);
}

}  // namespace gbent
