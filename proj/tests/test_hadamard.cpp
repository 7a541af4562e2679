#include <doctest.h>

#include <set>

#include "gbent/error.hpp"
#include "gbent/hadamard.hpp"
#include "oracles.hpp"

namespace h = gbent::hadamard;

namespace {

std::vector<int> vector_from_mask(std::size_t len, std::uint64_t mask) {
  std::vector<int> w(len);
  for (std::size_t j = 0; j < len; ++j) w[j] = ((mask >> j) & 1U) ? -1 : 1;
  return w;
}

// H_{2^k} = H_2 ⊗ H_{2^{k-1}} built by Kronecker products.
std::vector<std::vector<int>> kronecker(int k) {
  std::vector<std::vector<int>> m{{1}};
  for (int s = 0; s < k; ++s) {
    const std::size_t n = m.size();
    std::vector<std::vector<int>> next(2 * n, std::vector<int>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        next[i][j] = m[i][j];
        next[i][j + n] = m[i][j];
        next[i + n][j] = m[i][j];
        next[i + n][j + n] = -m[i][j];
      }
    }
    m = std::move(next);
  }
  return m;
}

}  // namespace

TEST_SUITE("hadamard") {
  TEST_CASE("rows match the Kronecker construction") {
    for (int k = 0; k <= 6; ++k) {
      const auto m = kronecker(k);
      for (std::size_t r = 0; r < m.size(); ++r) CHECK(h::row(k, r) == m[r]);
    }
  }

  TEST_CASE("orthogonality") {
    for (int k = 0; k <= 6; ++k) {
      const std::uint64_t len = std::uint64_t{1} << k;
      for (std::uint64_t r = 0; r < len; ++r) {
        for (std::uint64_t s = 0; s < len; ++s) {
          CHECK(h::dot(h::row(k, r), h::row(k, s)) == (r == s ? static_cast<std::int64_t>(len) : 0));
        }
      }
    }
  }

  TEST_CASE("match_row recognizes exactly the signed rows") {
    for (int k = 0; k <= 4; ++k) {
      const std::size_t len = std::size_t{1} << k;
      const auto rows = oracle::signed_rows(len);
      const std::set<std::vector<int>> row_set(rows.begin(), rows.end());
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
        const auto w = vector_from_mask(len, mask);
        const auto m = h::match_row(w);
        CHECK(m.has_value() == (row_set.count(w) == 1));
        if (m) {
          auto expect = h::row(k, m->r);
          for (auto& e : expect) e *= m->sign;
          CHECK(expect == w);
        }
      }
    }
    CHECK_THROWS_AS(h::match_row(std::vector<int>{1, 1, 1}), gbent::Error);
  }

  TEST_CASE("quadruple condition characterizes signed rows") {
    for (std::size_t len : {4, 8, 16}) {
      const auto rows = oracle::signed_rows(len);
      const std::set<std::vector<int>> row_set(rows.begin(), rows.end());
      std::size_t accepted = 0;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
        const auto w = vector_from_mask(len, mask);
        const bool q = h::quadruple_condition(w);
        accepted += q;
        CHECK(q == (row_set.count(w) == 1));
      }
      CHECK(accepted == 2 * len);
    }
  }

  TEST_CASE("quadruple enumeration") {
    std::size_t count = 0;
    h::for_each_quadruple(8, [&](std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
      CHECK((a ^ b ^ c ^ d) == 0);
      CHECK(a < b);
      CHECK(b < c);
      CHECK(c < d);
      ++count;
      return true;
    });
    // 2-flats of F_2^3 (affine planes): 14.
    CHECK(count == 14);
    std::size_t seen = 0;
    CHECK_FALSE(h::for_each_quadruple(8, [&](auto, auto, auto, auto) { return ++seen < 3; }));
    CHECK(seen == 3);
  }
}
