#pragma once

// Generators of known gbent functions for tests. Their gbentness follows
// from a direct character-sum computation, independent of the library.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gbent/gbf.hpp"
#include "oracles.hpp"

namespace fixture {

// f(x, y) = 2^{k-1} x·π(y) + g(y) on n = 2m, index x + 2^m y. Summing over
// x first gives H_f(u, v) = 2^m ζ^{g(y)} (-1)^{v·y} with y = π^{-1}(u), so
// f is gbent with dual f*(u, v) = g(π^{-1}(u)) + 2^{k-1} v·π^{-1}(u).
struct MaioranaMcFarland {
  int m = 0;
  int k = 0;
  std::vector<std::uint32_t> pi;
  std::vector<std::uint32_t> g;

  gbent::Gbf function() const {
    const std::uint32_t mask = (1U << m) - 1;
    return gbent::Gbf::from_function(2 * m, k, [&](std::uint64_t i) {
      const std::uint64_t x = i & mask;
      const std::uint64_t y = i >> m;
      return ((static_cast<std::uint32_t>(oracle::dot(x, pi[y])) << (k - 1)) + g[y]) & ((1U << k) - 1);
    });
  }

  gbent::Gbf dual() const {
    std::vector<std::uint32_t> inv(pi.size());
    for (std::uint32_t y = 0; y < pi.size(); ++y) inv[pi[y]] = y;
    const std::uint32_t mask = (1U << m) - 1;
    return gbent::Gbf::from_function(2 * m, k, [&](std::uint64_t i) {
      const std::uint64_t u = i & mask;
      const std::uint64_t v = i >> m;
      const std::uint32_t y = inv[u];
      return (g[y] + (static_cast<std::uint32_t>(oracle::dot(v, y)) << (k - 1))) & ((1U << k) - 1);
    });
  }
};

inline MaioranaMcFarland random_mm(int m, int k, std::mt19937_64& rng) {
  MaioranaMcFarland mm{m, k, std::vector<std::uint32_t>(std::size_t{1} << m), std::vector<std::uint32_t>(std::size_t{1} << m)};
  std::iota(mm.pi.begin(), mm.pi.end(), 0U);
  std::shuffle(mm.pi.begin(), mm.pi.end(), rng);
  for (auto& v : mm.g) v = static_cast<std::uint32_t>(rng() & ((1U << k) - 1));
  return mm;
}

// f(x, t) = g(x) + 2^{k-2} t on n + 1 variables (index x + 2^n t):
// H_f(u, w) = H_g(u) (1 ± i), so f is gbent when g is and k >= 2.
inline gbent::Gbf odd_extension(const gbent::Gbf& g) {
  const std::uint32_t step = 1U << (g.k() - 2);
  return gbent::Gbf::from_function(g.n() + 1, g.k(), [&](std::uint64_t i) {
    const std::uint64_t x = i & (g.size() - 1);
    const std::uint32_t t = static_cast<std::uint32_t>(i >> g.n());
    return (g[x] + step * t) & (g.modulus() - 1);
  });
}

inline gbent::Gbf random_even_gbent(int n, int k, std::mt19937_64& rng) { return random_mm(n / 2, k, rng).function(); }

inline gbent::Gbf random_odd_gbent(int n, int k, std::mt19937_64& rng) {
  return odd_extension(random_mm((n - 1) / 2, k, rng).function());
}

// x·y + 2 x·(M y) on F_2^2 x F_2^2 with M the companion matrix of
// t^2 + t + 1. Both a_1 and a_0 ⊕ a_1 are bent and the truncation a_0 is
// bent, so f is Z_4-bent. Precomposed with x ↦ Ax for the given mask rows.
inline gbent::Gbf z4_bent(const std::vector<std::uint32_t>& a_rows) {
  const auto apply = [&](std::uint64_t v) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < a_rows.size(); ++i) out |= static_cast<std::uint64_t>(__builtin_parity(a_rows[i] & v)) << i;
    return out;
  };
  return gbent::Gbf::from_function(4, 2, [&](std::uint64_t i0) {
    const std::uint64_t i = apply(i0);
    const std::uint64_t x = i & 3;
    const std::uint64_t y = i >> 2;
    const std::uint64_t my = ((y >> 1) & 1) | ((((y & 1) ^ ((y >> 1) & 1))) << 1);
    return static_cast<std::uint32_t>(oracle::dot(x, y) + 2 * oracle::dot(x, my));
  });
}

}  // namespace fixture
