#include <doctest.h>

#include <omp.h>

#include <random>
#include <vector>

#include "gbent/error.hpp"
#include "gbent/kernels.hpp"

namespace k = gbent::kernels;

namespace {

std::vector<std::int64_t> random_values(std::size_t len, std::mt19937_64& rng) {
  std::vector<std::int64_t> v(len);
  for (auto& x : v) x = static_cast<std::int64_t>(rng() % 201) - 100;
  return v;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("serial and parallel butterflies agree") {
    const int saved = omp_get_max_threads();
    omp_set_num_threads(4);
    std::mt19937_64 rng(31);
    for (int n : {0, 1, 5, 13, 14, 15, 18}) {
      const auto input = random_values(std::size_t{1} << n, rng);
      auto a = input;
      auto b = input;
      k::fwht_serial(a);
      k::fwht_parallel(b);
      CHECK(a == b);
      // Unnormalized transform applied twice scales by 2^n.
      k::fwht_parallel(b);
      for (std::size_t i = 0; i < b.size(); ++i) CHECK(b[i] == input[i] << n);
    }
    for (std::size_t width : {1, 2, 4, 8}) {
      for (int n : {3, 12, 15}) {
        const auto input = random_values(width << n, rng);
        auto a = input;
        auto b = input;
        k::fwht_blocks_serial(a, width);
        k::fwht_blocks_parallel(b, width);
        CHECK(a == b);
      }
    }
    omp_set_num_threads(saved);
  }

  TEST_CASE("block butterfly transforms each lane independently") {
    std::mt19937_64 rng(32);
    const std::size_t width = 4;
    const int n = 6;
    const auto input = random_values(width << n, rng);
    auto blocks = input;
    k::fwht_blocks_serial(blocks, width);
    for (std::size_t lane = 0; lane < width; ++lane) {
      std::vector<std::int64_t> v;
      for (std::size_t p = 0; p < (std::size_t{1} << n); ++p) v.push_back(input[p * width + lane]);
      k::fwht_serial(v);
      for (std::size_t p = 0; p < v.size(); ++p) CHECK(blocks[p * width + lane] == v[p]);
    }
  }

  TEST_CASE("shape validation") {
    std::vector<std::int64_t> bad(6);
    CHECK_THROWS_AS(k::fwht_serial(bad), gbent::Error);
    CHECK_THROWS_AS(k::fwht_parallel(bad), gbent::Error);
    CHECK_THROWS_AS(k::fwht_blocks_serial(bad, 4), gbent::Error);
    CHECK_THROWS_AS(k::fwht_blocks_parallel(bad, 4), gbent::Error);
    CHECK_THROWS_AS(k::fwht_blocks_serial(bad, 0), gbent::Error);
    std::vector<std::int64_t> three_wide{1, 2, 3, 4, 5, 6};
    k::fwht_blocks_parallel(three_wide, 3);
    CHECK(three_wide == std::vector<std::int64_t>{5, 7, 9, -3, -3, -3});
  }
}
