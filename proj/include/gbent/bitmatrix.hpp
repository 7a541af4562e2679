#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

namespace gbent {

// Square matrix over F_2, at most 32 x 32. Row i is a bitmask whose bit j
// is the entry (i, j); applying to a vector x gives bit i = row_i · x.
class BitMatrix {
 public:
  static constexpr int kMaxDim = 32;

  BitMatrix() = default;
  explicit BitMatrix(int dim);
  BitMatrix(int dim, std::vector<std::uint32_t> rows);

  static BitMatrix identity(int dim);
  // Uniform over GL(dim, 2) by rejection sampling.
  static BitMatrix random_invertible(int dim, std::mt19937_64& rng);

  int dim() const noexcept { return dim_; }
  const std::vector<std::uint32_t>& rows() const noexcept { return rows_; }
  bool get(int i, int j) const { return (rows_.at(static_cast<std::size_t>(i)) >> j) & 1U; }

  std::uint32_t apply(std::uint32_t x) const noexcept;
  BitMatrix transpose() const;
  int rank() const noexcept;
  bool invertible() const noexcept { return rank() == dim_; }
  // Throws SingularMatrix.
  BitMatrix inverse() const;

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  int dim_ = 0;
  std::vector<std::uint32_t> rows_;
};

// One row per line, entries 0/1 separated by spaces; '#' lines skipped.
BitMatrix parse_matrix(std::istream& in);
BitMatrix parse_matrix(const std::string& text);
std::string format_matrix(const BitMatrix& m);

}  // namespace gbent
