#include "gbent/kernels.hpp"

#include <bit>

#include "gbent/error.hpp"

namespace gbent::kernels {
namespace {

void require_pow2(std::size_t length) {
  if (length == 0 || !std::has_single_bit(length)) {
    throw Error(ErrorCode::ShapeMismatch, "butterfly length must be a power of two");
  }
}

void require_blocks(std::span<std::int64_t> data, std::size_t width) {
  if (width == 0 || data.size() % width != 0) {
    throw Error(ErrorCode::ShapeMismatch, "block width does not divide the data length");
  }
  require_pow2(data.size() / width);
}

}  // namespace

void fwht_serial(std::span<std::int64_t> data) {
  const std::size_t len = data.size();
  require_pow2(len);
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t base = 0; base < len; base += 2 * h) {
      for (std::size_t j = base; j < base + h; ++j) {
        const std::int64_t a = data[j];
        const std::int64_t b = data[j + h];
        data[j] = a + b;
        data[j + h] = a - b;
      }
    }
  }
}

void fwht_parallel(std::span<std::int64_t> data) {
  const std::size_t len = data.size();
  require_pow2(len);
  const std::ptrdiff_t pairs = static_cast<std::ptrdiff_t>(len / 2);
  std::int64_t* p = data.data();

#pragma omp parallel if (len >= kParallelThreshold)
  for (std::size_t h = 1; h < len; h <<= 1) {
    const std::size_t low_mask = h - 1;
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < pairs; ++i) {
      const std::size_t t = static_cast<std::size_t>(i);
      const std::size_t lo = ((t & ~low_mask) << 1) | (t & low_mask);
      const std::int64_t a = p[lo];
      const std::int64_t b = p[lo + h];
      p[lo] = a + b;
      p[lo + h] = a - b;
    }
  }
}

void fwht_blocks_serial(std::span<std::int64_t> data, std::size_t width) {
  require_blocks(data, width);
  const std::size_t len = data.size() / width;
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t base = 0; base < len; base += 2 * h) {
      for (std::size_t j = base; j < base + h; ++j) {
        std::int64_t* a = data.data() + j * width;
        std::int64_t* b = data.data() + (j + h) * width;
        for (std::size_t c = 0; c < width; ++c) {
          const std::int64_t x = a[c];
          const std::int64_t y = b[c];
          a[c] = x + y;
          b[c] = x - y;
        }
      }
    }
  }
}

void fwht_blocks_parallel(std::span<std::int64_t> data, std::size_t width) {
  require_blocks(data, width);
  const std::size_t len = data.size() / width;
  const std::ptrdiff_t pairs = static_cast<std::ptrdiff_t>(len / 2);
  std::int64_t* p = data.data();

#pragma omp parallel if (data.size() >= kParallelThreshold)
  for (std::size_t h = 1; h < len; h <<= 1) {
    const std::size_t low_mask = h - 1;
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < pairs; ++i) {
      const std::size_t t = static_cast<std::size_t>(i);
      const std::size_t lo = ((t & ~low_mask) << 1) | (t & low_mask);
      std::int64_t* a = p + lo * width;
      std::int64_t* b = p + (lo + h) * width;
#pragma omp simd
      for (std::size_t c = 0; c < width; ++c) {
        const std::int64_t x = a[c];
        const std::int64_t y = b[c];
        a[c] = x + y;
        b[c] = x - y;
      }
    }
  }
}

}  // namespace gbent::kernels
