#pragma once

// Slow reference implementations used to check the library. Nothing here
// calls into the library's transforms.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "gbent/boolfn.hpp"
#include "gbent/cyclotomic.hpp"
#include "gbent/gbf.hpp"

namespace oracle {

inline int dot(std::uint64_t u, std::uint64_t x) { return __builtin_popcountll(u & x) & 1; }

// W_f(u) by the double loop.
inline std::vector<std::int64_t> naive_wht(const gbent::BooleanFunction& f) {
  std::vector<std::int64_t> w(f.size(), 0);
  for (std::uint64_t u = 0; u < f.size(); ++u) {
    for (std::uint64_t x = 0; x < f.size(); ++x) w[u] += ((f(x) ? 1 : 0) ^ dot(u, x)) ? -1 : 1;
  }
  return w;
}

// H_f(u) in floating point with ζ = e^{2πi/2^k}.
inline std::vector<std::complex<double>> complex_gwht(const gbent::Gbf& f) {
  const double step = 2.0 * std::numbers::pi / static_cast<double>(f.modulus());
  std::vector<std::complex<double>> roots(f.modulus());
  for (std::uint32_t v = 0; v < f.modulus(); ++v) roots[v] = std::polar(1.0, step * v);
  std::vector<std::complex<double>> h(f.size(), 0.0);
  for (std::uint64_t u = 0; u < f.size(); ++u) {
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      const auto z = roots[f[x]];
      h[u] += dot(u, x) ? -z : z;
    }
  }
  return h;
}

// H_f(u) summed term by term in Z[ζ] (one ring element per point).
inline gbent::CyclotomicInt summed_gwht(const gbent::Gbf& f, std::uint64_t u) {
  gbent::CyclotomicInt acc(f.k());
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    const auto z = gbent::CyclotomicInt::zeta_pow(f.k(), f[x]);
    if (dot(u, x)) {
      acc -= z;
    } else {
      acc += z;
    }
  }
  return acc;
}

// Gbent by |H_f(u)|^2 = 2^n in floating point.
inline bool complex_is_gbent(const gbent::Gbf& f) {
  const auto h = complex_gwht(f);
  const double target = std::ldexp(1.0, f.n());
  for (const auto& v : h) {
    if (std::abs(std::norm(v) - target) > 1e-6 * target) return false;
  }
  return true;
}

// Dual of a bent function read straight from the naive spectrum.
inline gbent::BooleanFunction naive_dual(const gbent::BooleanFunction& f) {
  const auto w = naive_wht(f);
  return gbent::BooleanFunction::from_predicate(f.n(), [&](std::uint64_t u) { return w[u] < 0; });
}

inline gbent::BooleanFunction random_boolean(int n, std::mt19937_64& rng) {
  return gbent::BooleanFunction::from_predicate(n, [&](std::uint64_t) { return (rng() & 1U) != 0; });
}

inline gbent::Gbf random_gbf(int n, int k, std::mt19937_64& rng) {
  const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  return gbent::Gbf::from_function(n, k, [&](std::uint64_t) { return rng() & mask; });
}

// Σ_x (-1)^{f(x) ⊕ u·x} with f(x) from a callable, for Gray images.
template <typename Fn>
std::int64_t walsh_at(int n, Fn&& f, std::uint64_t u) {
  std::int64_t s = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) s += (f(x) ^ dot(u, x)) ? -1 : 1;
  return s;
}

// Signed rows of H_{len} as explicit ±1 vectors.
inline std::vector<std::vector<int>> signed_rows(std::size_t len) {
  std::vector<std::vector<int>> rows;
  for (int sign : {1, -1}) {
    for (std::uint64_t r = 0; r < len; ++r) {
      std::vector<int> row(len);
      for (std::uint64_t j = 0; j < len; ++j) row[j] = sign * (dot(r, j) ? -1 : 1);
      rows.push_back(row);
    }
  }
  return rows;
}

// All 896 bent functions on 4 variables, by exhaustive naive test.
inline std::vector<gbent::BooleanFunction> bent4() {
  std::vector<gbent::BooleanFunction> out;
  for (std::uint32_t t = 0; t < (1U << 16); ++t) {
    auto f = gbent::BooleanFunction::from_predicate(4, [&](std::uint64_t x) { return ((t >> x) & 1U) != 0; });
    bool bent = true;
    for (auto v : naive_wht(f)) bent = bent && (v == 4 || v == -4);
    if (bent) out.push_back(f);
  }
  return out;
}

}  // namespace oracle
