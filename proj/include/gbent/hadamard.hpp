#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

// Rows of the Sylvester-Hadamard matrix H_{2^k} and their recognition.
// Entries are computed on demand as (-1)^{popcount(j & r)}; full matrices
// are never built.
namespace gbent::hadamard {

inline int entry(std::uint64_t r, std::uint64_t j) noexcept { return (__builtin_popcountll(r & j) & 1) ? -1 : 1; }

// Row r of H_{2^k}; k = 0 gives the 1x1 matrix (1).
std::vector<int> row(int k, std::uint64_t r);

struct RowMatch {
  std::uint64_t r = 0;
  int sign = 1;
  friend bool operator==(const RowMatch&, const RowMatch&) = default;
};

// If w = sign · H^{(r)}, returns (r, sign). r is read off the entries at
// positions 2^s relative to w[0]; the whole vector is verified afterwards.
// w must have power-of-two length and entries in {-1, +1}.
std::optional<RowMatch> match_row(std::span<const int> w);

// Quadruple test: w_j w_c = w_l w_v for all distinct j, c, l, v
// with j ⊕ c ⊕ l ⊕ v = 0. Enumerated as j < c < l < v = j ⊕ c ⊕ l.
bool quadruple_condition(std::span<const int> w);

// Calls visit(j, c, l, v) for each zero-sum 4-subset of [0, length).
template <typename Visit>
bool for_each_quadruple(std::uint64_t length, Visit&& visit) {
  for (std::uint64_t j = 0; j < length; ++j) {
    for (std::uint64_t c = j + 1; c < length; ++c) {
      for (std::uint64_t l = c + 1; l < length; ++l) {
        const std::uint64_t v = j ^ c ^ l;
        if (v <= l || v >= length) continue;
        if (!visit(j, c, l, v)) return false;
      }
    }
  }
  return true;
}

std::int64_t dot(std::span<const int> a, std::span<const int> b);

}  // namespace gbent::hadamard
