#include "gbent/search.hpp"

#include <algorithm>
#include <random>

#include "gbent/analysis.hpp"
#include "gbent/error.hpp"

namespace gbent {

bool truth_table_less(const Gbf& a, const Gbf& b) noexcept {
  const auto va = a.values();
  const auto vb = b.values();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

namespace {

Gbf candidate_from_index(int n, int k, std::uint64_t c) {
  const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  return Gbf::from_function(n, k, [&](std::uint64_t x) { return (c >> (static_cast<std::uint64_t>(k) * x)) & mask; });
}

Gbf random_candidate(int n, int k, std::mt19937_64& rng) {
  const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  return Gbf::from_function(n, k, [&](std::uint64_t) { return rng() & mask; });
}

}  // namespace

SearchResult search(const SearchOptions& options) {
  const int n = options.n;
  const int k = options.k;
  if (n < 1 || n > BooleanFunction::kMaxVars) throw Error(ErrorCode::InvalidN, "n must be in [1, 24]");
  if (k < 2 || k > Gbf::kMaxK) throw Error(ErrorCode::InvalidK, "search needs 2 <= k <= 16");

  std::vector<Gbf> random_pool;
  std::uint64_t total = 0;
  if (options.mode == SearchMode::Exhaustive) {
    if (n > 5 || static_cast<std::uint64_t>(k) << n > 24) {
      throw Error(ErrorCode::SpaceTooLarge, "exhaustive search needs k * 2^n <= 24");
    }
    total = std::uint64_t{1} << (static_cast<std::uint64_t>(k) << n);
  } else {
    std::mt19937_64 rng(options.seed);
    random_pool.reserve(options.samples);
    for (std::uint64_t i = 0; i < options.samples; ++i) random_pool.push_back(random_candidate(n, k, rng));
    total = options.samples;
  }

  SearchResult result;
  result.total = total;
  std::uint64_t direct = 0;
  std::uint64_t spectral = 0;
  const auto count = static_cast<std::int64_t>(total);
#pragma omp parallel reduction(+ : direct, spectral)
  {
    std::vector<Gbf> hits;
    std::vector<Gbf> disagreements;
#pragma omp for schedule(dynamic, 256) nowait
    for (std::int64_t i = 0; i < count; ++i) {
      const Gbf f = options.mode == SearchMode::Exhaustive ? candidate_from_index(n, k, static_cast<std::uint64_t>(i))
                                                           : random_pool[static_cast<std::size_t>(i)];
      const bool d = is_gbent(f);
      const bool s = is_gbent_spectral(f).verdict;
      direct += d;
      spectral += s;
      if (d) hits.push_back(f);
      if (d != s) disagreements.push_back(f);
    }
#pragma omp critical
    {
      result.hits.insert(result.hits.end(), hits.begin(), hits.end());
      result.disagreements.insert(result.disagreements.end(), disagreements.begin(), disagreements.end());
    }
  }
  result.direct_count = direct;
  result.spectral_count = spectral;
  std::sort(result.hits.begin(), result.hits.end(), truth_table_less);
  std::sort(result.disagreements.begin(), result.disagreements.end(), truth_table_less);
  return result;
}

}  // namespace gbent
