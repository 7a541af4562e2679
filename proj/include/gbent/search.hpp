#pragma once

#include <cstdint>
#include <vector>

#include "gbent/gbf.hpp"

namespace gbent {

enum class SearchMode { Exhaustive, Random };

struct SearchOptions {
  int n = 2;
  int k = 2;
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t samples = 10000;  // random mode only
  std::uint64_t seed = 1;
};

struct SearchResult {
  std::uint64_t total = 0;
  std::uint64_t direct_count = 0;
  std::uint64_t spectral_count = 0;
  // Functions the definition accepts, in lexicographic truth-table order.
  // Random mode keeps repeated samples.
  std::vector<Gbf> hits;
  // Candidates on which the two routes disagree (should stay empty).
  std::vector<Gbf> disagreements;
};

// Exhaustive mode requires k 2^n <= 24 (at most 2^24 candidates) and throws
// SpaceTooLarge otherwise.
SearchResult search(const SearchOptions& options);

// Lexicographic order on (f(0), f(1), ...).
bool truth_table_less(const Gbf& a, const Gbf& b) noexcept;

}  // namespace gbent
