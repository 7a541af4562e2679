#include "gbent/hadamard.hpp"

#include <bit>

#include "gbent/error.hpp"

namespace gbent::hadamard {

std::vector<int> row(int k, std::uint64_t r) {
  if (k < 0 || k > 30) throw Error(ErrorCode::InvalidK, "Hadamard size exponent out of range");
  const std::uint64_t len = std::uint64_t{1} << k;
  if (r >= len) throw Error(ErrorCode::IndexOutOfRange, "Hadamard row index out of range");
  std::vector<int> out(len);
  for (std::uint64_t j = 0; j < len; ++j) out[j] = entry(r, j);
  return out;
}

std::optional<RowMatch> match_row(std::span<const int> w) {
  const std::uint64_t len = w.size();
  if (len == 0 || !std::has_single_bit(len)) throw Error(ErrorCode::ShapeMismatch, "vector length must be a power of two");
  const int sign = w[0];
  if (sign != 1 && sign != -1) return std::nullopt;

  std::uint64_t r = 0;
  for (std::uint64_t pos = 1, s = 0; pos < len; pos <<= 1, ++s) {
    if (w[pos] * sign == -1) r |= std::uint64_t{1} << s;
  }
  for (std::uint64_t j = 0; j < len; ++j) {
    if (w[j] != sign * entry(r, j)) return std::nullopt;
  }
  return RowMatch{r, sign};
}

bool quadruple_condition(std::span<const int> w) {
  return for_each_quadruple(w.size(), [&](std::uint64_t j, std::uint64_t c, std::uint64_t l, std::uint64_t v) {
    return w[j] * w[c] == w[l] * w[v];
  });
}

std::int64_t dot(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::ShapeMismatch, "dot product of vectors of different length");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<std::int64_t>(a[i]) * b[i];
  return s;
}

}  // namespace gbent::hadamard
