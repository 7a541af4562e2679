#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "gbent/boolfn.hpp"
#include "gbent/error.hpp"
#include "oracles.hpp"

using gbent::BooleanFunction;
using gbent::SpectralKind;

namespace {

BooleanFunction from_bits(int n, std::uint64_t bits) {
  return BooleanFunction::from_predicate(n, [&](std::uint64_t x) { return ((bits >> x) & 1U) != 0; });
}

// x·π(y) ⊕ g(y) on 2m variables with a random permutation π and random g.
BooleanFunction random_mm(int m, std::mt19937_64& rng) {
  std::vector<std::uint64_t> pi(std::size_t{1} << m);
  std::iota(pi.begin(), pi.end(), 0);
  std::shuffle(pi.begin(), pi.end(), rng);
  const auto g = oracle::random_boolean(m, rng);
  return BooleanFunction::from_predicate(2 * m, [&](std::uint64_t idx) {
    const std::uint64_t x = idx & ((1U << m) - 1);
    const std::uint64_t y = idx >> m;
    return (oracle::dot(x, pi[y]) ^ static_cast<int>(g(y))) != 0;
  });
}

}  // namespace

TEST_SUITE("boolfn") {
  TEST_CASE("wht reference values") {
    CHECK(gbent::wht(BooleanFunction(2)).values == std::vector<std::int64_t>{4, 0, 0, 0});
    const auto and2 = BooleanFunction::from_predicate(2, [](std::uint64_t x) { return x == 3; });
    CHECK(gbent::wht(and2).values == std::vector<std::int64_t>{2, 2, 2, -2});
    const auto w = gbent::wht(BooleanFunction::linear(3, 5));
    for (std::uint64_t u = 0; u < 8; ++u) CHECK(w[u] == (u == 5 ? 8 : 0));
  }

  TEST_CASE("wht matches the double loop") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 12; ++n) {
      const int reps = n <= 8 ? 20 : 2;
      for (int r = 0; r < reps; ++r) {
        const auto f = oracle::random_boolean(n, rng);
        CHECK(gbent::wht(f).values == oracle::naive_wht(f));
      }
    }
  }

  TEST_CASE("Parseval and parity on random functions") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 1000; ++t) {
      const int n = 2 + static_cast<int>(rng() % 9);
      const auto f = oracle::random_boolean(n, rng);
      const auto w = gbent::wht(f);
      CHECK(w.parseval_sum() == (std::int64_t{1} << (2 * n)));
      CHECK(w[0] == static_cast<std::int64_t>(f.size()) - 2 * static_cast<std::int64_t>(f.weight()));
      CHECK(std::all_of(w.values.begin(), w.values.end(), [](std::int64_t v) { return v % 2 == 0; }));
    }
  }

  TEST_CASE("classify reference values") {
    const auto and2 = BooleanFunction::from_predicate(2, [](std::uint64_t x) { return x == 3; });
    CHECK(gbent::classify(and2).kind == SpectralKind::Bent);
    const auto zero = gbent::classify(BooleanFunction(2));
    CHECK(zero.kind == SpectralKind::Plateaued);
    CHECK(zero.s == 2);
    const auto sb = BooleanFunction::from_predicate(3, [](std::uint64_t x) { return ((x & 1) & (x >> 1 & 1)) ^ (x >> 2 & 1); });
    CHECK(gbent::classify(sb).kind == SpectralKind::SemiBent);
    CHECK(gbent::classify(sb).plateau_order() == 1);
    CHECK(gbent::classify(BooleanFunction::linear(5, 9)).plateau_order() == 5);
  }

  TEST_CASE("bent only for even n, semi-bent only for odd n") {
    for (int n = 1; n <= 4; ++n) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (1U << n)); ++bits) {
        const auto c = gbent::classify(from_bits(n, bits));
        if (c.kind == SpectralKind::Bent) CHECK(n % 2 == 0);
        if (c.kind == SpectralKind::SemiBent) CHECK(n % 2 == 1);
        if (c.kind == SpectralKind::Plateaued) CHECK((n - c.s) % 2 == 0);
      }
    }
  }

  TEST_CASE("plateaued orders above one") {
    // x0 x1 on 4 variables: values in {0, ±8}.
    const auto f = BooleanFunction::from_predicate(4, [](std::uint64_t x) { return (x & 3) == 3; });
    const auto c = gbent::classify(f);
    CHECK(c.kind == SpectralKind::Plateaued);
    CHECK(c.s == 2);
    std::mt19937_64 rng(3);
    CHECK(gbent::classify(oracle::random_boolean(10, rng)).kind == SpectralKind::General);
  }

  TEST_CASE("FlatOther for a single inadmissible magnitude") {
    const gbent::WalshSpectrum w{2, {6, 6, 6, 6}};
    CHECK(gbent::classify(w).kind == SpectralKind::FlatOther);
  }

  TEST_CASE("dual reference values and involution") {
    const auto and2 = BooleanFunction::from_predicate(2, [](std::uint64_t x) { return x == 3; });
    CHECK(gbent::dual(and2) == and2);
    // x·y on F_2^2 x F_2^2 is self-dual.
    const auto xy = BooleanFunction::from_predicate(4, [](std::uint64_t i) { return oracle::dot(i & 3, i >> 2) != 0; });
    CHECK(gbent::dual(xy) == xy);
    CHECK_THROWS_AS(gbent::dual(BooleanFunction(3)), gbent::Error);

    int bent2 = 0;
    for (std::uint64_t bits = 0; bits < 16; ++bits) {
      const auto f = from_bits(2, bits);
      if (!gbent::is_bent(gbent::wht(f))) continue;
      ++bent2;
      CHECK(gbent::dual(f) == oracle::naive_dual(f));
      CHECK(gbent::dual(gbent::dual(f)) == f);
    }
    CHECK(bent2 == 8);

    std::mt19937_64 rng(5);
    for (int m : {2, 3}) {
      for (int t = 0; t < 50; ++t) {
        const auto f = random_mm(m, rng);
        REQUIRE(gbent::is_bent(gbent::wht(f)));
        CHECK(gbent::dual(f) == oracle::naive_dual(f));
        CHECK(gbent::dual(gbent::dual(f)) == f);
      }
    }
  }

  TEST_CASE("dual raises NotBent") {
    try {
      (void)gbent::dual(BooleanFunction(4));
      FAIL("expected NotBent");
    } catch (const gbent::Error& e) {
      CHECK(e.code() == gbent::ErrorCode::NotBent);
    }
  }

  TEST_CASE("anf") {
    CHECK(gbent::anf(BooleanFunction(3)).is_zero());
    const auto and2 = BooleanFunction::from_predicate(2, [](std::uint64_t x) { return x == 3; });
    const auto c = gbent::anf(and2);
    CHECK(c.weight() == 1);
    CHECK(c(3));
    std::mt19937_64 rng(8);
    for (int n : {1, 5, 6, 7, 9}) {
      const auto f = oracle::random_boolean(n, rng);
      CHECK(gbent::anf_inverse(gbent::anf(f)) == f);
    }
    // x0 ⊕ x1 x2 evaluated from its ANF.
    auto coeffs = BooleanFunction(3);
    coeffs.set(1, true);
    coeffs.set(6, true);
    const auto g = gbent::anf_inverse(coeffs);
    for (std::uint64_t x = 0; x < 8; ++x) CHECK(g(x) == static_cast<bool>((x & 1) ^ ((x >> 1) & (x >> 2) & 1)));
  }

  TEST_CASE("bit operations keep padding clean") {
    auto f = BooleanFunction(3);
    const auto g = ~f;
    CHECK(g.weight() == 8);
    CHECK((g ^ g).is_zero());
    CHECK((g & BooleanFunction::linear(3, 1)).weight() == 4);
    CHECK((f | BooleanFunction::linear(3, 2)) == BooleanFunction::linear(3, 2));
    CHECK_THROWS_AS(f.set(8, true), gbent::Error);
    CHECK_THROWS_AS((void)f.get(8), gbent::Error);
    CHECK_THROWS_AS(f ^= BooleanFunction(4), gbent::Error);
    CHECK_THROWS_AS(BooleanFunction(0), gbent::Error);
    CHECK_THROWS_AS(BooleanFunction(25), gbent::Error);
  }

  TEST_CASE("majority") {
    std::mt19937_64 rng(2);
    const auto a = oracle::random_boolean(6, rng);
    const auto b = oracle::random_boolean(6, rng);
    CHECK(gbent::majority(a, a, b) == a);
    const auto c = oracle::random_boolean(6, rng);
    const auto m = gbent::majority(a, b, c);
    for (std::uint64_t x = 0; x < 64; ++x) CHECK(m(x) == (a(x) + b(x) + c(x) >= 2));
  }

  TEST_CASE("truth-table text format") {
    const auto f = gbent::parse_truth_table("# comment\n3\n01101001\n");
    CHECK(f.n() == 3);
    CHECK(gbent::format_truth_table(f) == "3\n01101001\n");
    CHECK(gbent::parse_truth_table(gbent::format_truth_table(f)) == f);
    std::mt19937_64 rng(4);
    for (int n : {2, 3, 6, 8}) {
      const auto g = oracle::random_boolean(n, rng);
      CHECK(gbent::parse_truth_table(gbent::format_truth_table(g, true), true) == g);
      CHECK(gbent::parse_truth_table(gbent::format_truth_table(g)) == g);
    }
    // Most-significant nibble first: bits 0..3 of "1000" -> f(3) = 1.
    const auto h = gbent::parse_truth_table("2\n8\n", true);
    CHECK(h(3));
    CHECK(h.weight() == 1);
    CHECK_THROWS_AS(gbent::parse_truth_table("3\n0110100\n"), gbent::Error);
    CHECK_THROWS_AS(gbent::parse_truth_table("3\n0110100x\n"), gbent::Error);
    CHECK_THROWS_AS(gbent::parse_truth_table("x\n01\n"), gbent::Error);
    CHECK_THROWS_AS(gbent::parse_truth_table(""), gbent::Error);
    CHECK_THROWS_AS(gbent::parse_truth_table("1\n1\n", true), gbent::Error);
  }
}
