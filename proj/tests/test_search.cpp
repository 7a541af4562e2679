#include <doctest.h>

#include <algorithm>

#include "gbent/analysis.hpp"
#include "gbent/error.hpp"
#include "gbent/search.hpp"
#include "oracles.hpp"

using gbent::SearchMode;
using gbent::SearchOptions;

TEST_SUITE("search") {
  TEST_CASE("exhaustive counts") {
    struct Case {
      int n, k;
      std::uint64_t total, expected;
    };
    for (const auto c : {Case{1, 2, 16, 8}, Case{1, 3, 64, 16}, Case{2, 2, 256, 64}, Case{2, 3, 4096, 320},
                         Case{3, 2, 65536, 896}}) {
      const auto r = gbent::search({c.n, c.k, SearchMode::Exhaustive, 0, 1});
      CHECK(r.total == c.total);
      CHECK(r.direct_count == c.expected);
      CHECK(r.spectral_count == c.expected);
      CHECK(r.hits.size() == c.expected);
      CHECK(r.disagreements.empty());
      CHECK(std::is_sorted(r.hits.begin(), r.hits.end(), gbent::truth_table_less));
      CHECK(std::adjacent_find(r.hits.begin(), r.hits.end()) == r.hits.end());
      for (const auto& f : r.hits) CHECK(oracle::complex_is_gbent(f));
    }
  }

  TEST_CASE("GB_2^16 has 1408 members") {
    const auto r = gbent::search({2, 4, SearchMode::Exhaustive, 0, 1});
    CHECK(r.direct_count == 1408);
    CHECK(r.disagreements.empty());
  }

  TEST_CASE("random search is deterministic in the seed") {
    const SearchOptions opts{3, 3, SearchMode::Random, 20000, 7};
    const auto a = gbent::search(opts);
    const auto b = gbent::search(opts);
    CHECK(a.total == 20000);
    CHECK(a.direct_count == b.direct_count);
    CHECK(a.hits == b.hits);
    CHECK(a.direct_count == a.spectral_count);
    CHECK(a.disagreements.empty());
    CHECK(a.direct_count > 0);
    CHECK(std::is_sorted(a.hits.begin(), a.hits.end(), gbent::truth_table_less));
    for (const auto& f : a.hits) CHECK(gbent::is_gbent_quadruple(f).verdict);
  }

  TEST_CASE("search limits") {
    CHECK_THROWS_AS(gbent::search({3, 4, SearchMode::Exhaustive, 0, 1}), gbent::Error);
    try {
      gbent::search({4, 2, SearchMode::Exhaustive, 0, 1});
      FAIL("expected SpaceTooLarge");
    } catch (const gbent::Error& e) {
      CHECK(e.code() == gbent::ErrorCode::SpaceTooLarge);
    }
    CHECK_THROWS_AS(gbent::search({2, 1, SearchMode::Exhaustive, 0, 1}), gbent::Error);
    CHECK(gbent::search({4, 3, SearchMode::Random, 0, 1}).total == 0);
  }

  TEST_CASE("truth table order") {
    const gbent::Gbf a(2, 2, {0, 1, 2, 3});
    const gbent::Gbf b(2, 2, {0, 2, 0, 0});
    CHECK(gbent::truth_table_less(a, b));
    CHECK_FALSE(gbent::truth_table_less(b, a));
    CHECK_FALSE(gbent::truth_table_less(a, a));
  }
}
