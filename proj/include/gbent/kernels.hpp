#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

// Butterfly kernels behind every spectral transform in the library.
//
// Each kernel exists twice: a plain serial loop nest, kept as the reference
// the tests compare against, and an OpenMP version that splits the pairs of
// every stage across threads. Both produce bit-identical results; integer
// addition is exact, so the schedule cannot change the output.
namespace gbent::kernels {

// Below this many scalar entries the parallel kernels run on one thread.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

// In-place unnormalized Walsh-Hadamard transform of a power-of-two length array.
void fwht_serial(std::span<std::int64_t> data);
void fwht_parallel(std::span<std::int64_t> data);

// Same transform over `data.size() / width` positions whose entries are
// blocks of `width` consecutive integers (a vector-valued butterfly). Used
// for cyclotomic-valued spectra, one coefficient vector per position.
void fwht_blocks_serial(std::span<std::int64_t> data, std::size_t width);
void fwht_blocks_parallel(std::span<std::int64_t> data, std::size_t width);

}  // namespace gbent::kernels
