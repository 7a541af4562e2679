#include <doctest.h>

#include <random>
#include <sstream>

#include "gbent/analysis.hpp"
#include "gbent/report_io.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using gbent::Gbf;

TEST_SUITE("report_io") {
  TEST_CASE("witness table lines") {
    std::mt19937_64 rng(61);
    const auto f = fixture::random_even_gbent(2, 2, rng);
    const auto report = gbent::is_gbent_direct(f);
    const auto table = gbent::format_witness_table(report);
    std::istringstream in(table);
    std::string line;
    std::uint64_t u = 0;
    while (std::getline(in, line)) {
      std::istringstream row(line);
      std::uint64_t uu = 0, r = 0;
      std::string sign, half;
      row >> uu >> r >> sign >> half;
      CHECK(uu == u);
      CHECK(r == report.per_u[u].row);
      CHECK(sign == (report.per_u[u].sign > 0 ? "+1" : "-1"));
      CHECK(half == "-");
      ++u;
    }
    CHECK(u == 4);

    const auto miss = gbent::format_witness_table(gbent::is_gbent_direct(Gbf(1, 2)));
    CHECK(miss.find("- -") != std::string::npos);
  }

  TEST_CASE("spectra as JSON") {
    const auto w = gbent::wht(gbent::BooleanFunction::linear(2, 1));
    const auto j = gbent::to_json(w);
    CHECK(j["n"] == 2);
    CHECK(j["values"] == nlohmann::json({0, 4, 0, 0}));
    const auto c = gbent::to_json(gbent::classify(w));
    CHECK(c["plateau_order"] == 2);

    const Gbf f(2, 3, {0, 1, 2, 3});
    const auto h = gbent::to_json(gbent::gwht(f));
    CHECK(h["k"] == 3);
    CHECK(h["values"].size() == 4);
    CHECK(h["values"][0].size() == 4);
    const auto direct = gbent::gwht(f);
    for (std::uint64_t u = 0; u < 4; ++u) {
      for (std::size_t t = 0; t < 4; ++t) CHECK(h["values"][u][t] == direct.coeffs(u)[t]);
    }
  }

  TEST_CASE("route and structure reports as JSON") {
    std::mt19937_64 rng(62);
    const auto odd = fixture::random_odd_gbent(3, 3, rng);
    const auto routes = gbent::to_json(gbent::check_all_routes(odd), true);
    CHECK(routes["gbent"] == true);
    CHECK(routes["routes_agree"] == true);
    CHECK(routes["direct"]["witnesses"].size() == 8);
    CHECK_FALSE(routes["spectral"].contains("witnesses"));
    for (const auto& row : routes["direct"]["witnesses"]) {
      CHECK(row["matched"] == true);
      CHECK(row["zero_half"] != "-");
    }

    const auto space = gbent::to_json(gbent::bent_space_report(odd));
    CHECK(space["holds"] == true);
    CHECK(space["l1_functional"] == 2);
    CHECK_FALSE(space.contains("dual_sum_closed"));

    const auto zq = gbent::to_json(gbent::is_zq_bent(fixture::z4_bent({1, 2, 4, 8})));
    CHECK(zq["zq_bent"] == true);
    CHECK(zq["truncations"].size() == 2);
  }
}
