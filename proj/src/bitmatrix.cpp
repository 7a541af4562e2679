#include "gbent/bitmatrix.hpp"

#include <istream>
#include <sstream>

#include "gbent/error.hpp"

namespace gbent {

BitMatrix::BitMatrix(int dim) : dim_(dim) {
  if (dim < 0 || dim > kMaxDim) throw Error(ErrorCode::ShapeMismatch, "matrix dimension must be in [0, 32]");
  rows_.assign(static_cast<std::size_t>(dim), 0);
}

BitMatrix::BitMatrix(int dim, std::vector<std::uint32_t> rows) : BitMatrix(dim) {
  if (rows.size() != rows_.size()) throw Error(ErrorCode::ShapeMismatch, "expected one row per dimension");
  const std::uint64_t limit = std::uint64_t{1} << dim;
  for (auto r : rows) {
    if (r >= limit) throw Error(ErrorCode::ShapeMismatch, "row has entries past the dimension");
  }
  rows_ = std::move(rows);
}

BitMatrix BitMatrix::identity(int dim) {
  BitMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.rows_[static_cast<std::size_t>(i)] = std::uint32_t{1} << i;
  return m;
}

BitMatrix BitMatrix::random_invertible(int dim, std::mt19937_64& rng) {
  BitMatrix m(dim);
  const std::uint64_t mask = (std::uint64_t{1} << dim) - 1;
  do {
    for (auto& r : m.rows_) r = static_cast<std::uint32_t>(rng() & mask);
  } while (!m.invertible());
  return m;
}

std::uint32_t BitMatrix::apply(std::uint32_t x) const noexcept {
  std::uint32_t y = 0;
  for (int i = 0; i < dim_; ++i) y |= static_cast<std::uint32_t>(__builtin_parity(rows_[static_cast<std::size_t>(i)] & x)) << i;
  return y;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if (get(i, j)) t.rows_[static_cast<std::size_t>(j)] |= std::uint32_t{1} << i;
    }
  }
  return t;
}

int BitMatrix::rank() const noexcept {
  std::vector<std::uint32_t> r = rows_;
  int rank = 0;
  for (int col = 0; col < dim_ && rank < dim_; ++col) {
    const std::uint32_t bit = std::uint32_t{1} << col;
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < r.size() && !(r[pivot] & bit)) ++pivot;
    if (pivot == r.size()) continue;
    std::swap(r[pivot], r[static_cast<std::size_t>(rank)]);
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i != static_cast<std::size_t>(rank) && (r[i] & bit)) r[i] ^= r[static_cast<std::size_t>(rank)];
    }
    ++rank;
  }
  return rank;
}

BitMatrix BitMatrix::inverse() const {
  std::vector<std::uint32_t> a = rows_;
  BitMatrix inv = identity(dim_);
  for (int col = 0; col < dim_; ++col) {
    const std::uint32_t bit = std::uint32_t{1} << col;
    std::size_t pivot = static_cast<std::size_t>(col);
    while (pivot < a.size() && !(a[pivot] & bit)) ++pivot;
    if (pivot == a.size()) throw Error(ErrorCode::SingularMatrix, "matrix is not invertible over F_2");
    std::swap(a[pivot], a[static_cast<std::size_t>(col)]);
    std::swap(inv.rows_[pivot], inv.rows_[static_cast<std::size_t>(col)]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i != static_cast<std::size_t>(col) && (a[i] & bit)) {
        a[i] ^= a[static_cast<std::size_t>(col)];
        inv.rows_[i] ^= inv.rows_[static_cast<std::size_t>(col)];
      }
    }
  }
  return inv;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorCode::ShapeMismatch, "matrix dimensions differ");
  // Row i of a·b is the sum of the rows of b selected by row i of a.
  BitMatrix c(a.dim_);
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    for (int j = 0; j < a.dim_; ++j) {
      if ((a.rows_[i] >> j) & 1U) c.rows_[i] ^= b.rows_[static_cast<std::size_t>(j)];
    }
  }
  return c;
}

BitMatrix parse_matrix(std::istream& in) {
  std::vector<std::uint32_t> rows;
  int width = -1;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    std::string token;
    std::uint32_t mask = 0;
    int j = 0;
    while (row >> token) {
      if (token != "0" && token != "1") throw Error(ErrorCode::Parse, "matrix entries must be 0 or 1");
      if (j >= BitMatrix::kMaxDim) throw Error(ErrorCode::Parse, "matrix row longer than 32 entries");
      if (token == "1") mask |= std::uint32_t{1} << j;
      ++j;
    }
    if (width >= 0 && j != width) throw Error(ErrorCode::Parse, "matrix rows of different lengths");
    width = j;
    rows.push_back(mask);
  }
  if (rows.empty()) throw Error(ErrorCode::Parse, "empty matrix");
  if (static_cast<int>(rows.size()) != width) throw Error(ErrorCode::Parse, "matrix is not square");
  return BitMatrix(width, std::move(rows));
}

BitMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

std::string format_matrix(const BitMatrix& m) {
  std::string out;
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      if (j > 0) out.push_back(' ');
      out.push_back(m.get(i, j) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace gbent
