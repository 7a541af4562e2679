#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gbent/boolfn.hpp"
#include "gbent/cyclotomic.hpp"

namespace gbent {

// A map V_n -> Z_{2^k}: values[x] = a_0(x) + 2 a_1(x) + ... + 2^{k-1} a_{k-1}(x).
class GeneralizedBooleanFunction {
 public:
  static constexpr int kMaxK = 16;

  GeneralizedBooleanFunction() : GeneralizedBooleanFunction(1, 1) {}
  GeneralizedBooleanFunction(int n, int k);
  GeneralizedBooleanFunction(int n, int k, std::vector<std::uint32_t> values);

  template <typename Fn>
  static GeneralizedBooleanFunction from_function(int n, int k, Fn&& fn) {
    GeneralizedBooleanFunction f(n, k);
    for (std::uint64_t x = 0; x < f.size(); ++x) f.set(x, static_cast<std::uint32_t>(fn(x)));
    return f;
  }

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << n_; }
  std::uint32_t modulus() const noexcept { return std::uint32_t{1} << k_; }

  std::uint32_t operator[](std::uint64_t x) const noexcept { return values_[x]; }
  void set(std::uint64_t x, std::uint32_t value);
  std::span<const std::uint32_t> values() const noexcept { return values_; }

  friend bool operator==(const GeneralizedBooleanFunction&, const GeneralizedBooleanFunction&) = default;

 private:
  int n_;
  int k_;
  std::vector<std::uint32_t> values_;
};

using Gbf = GeneralizedBooleanFunction;

// a_j as a Boolean function (bit j of each value).
BooleanFunction coordinate(const Gbf& f, int j);
std::vector<BooleanFunction> coordinates(const Gbf& f);
// Inverse of coordinates(); k = coords.size(). Throws ShapeMismatch.
Gbf assemble(std::span<const BooleanFunction> coords);

// g_i = a_{k-1} ⊕ i_0 a_0 ⊕ ... ⊕ i_{k-2} a_{k-2}, i in [0, 2^{k-1}).
struct ComponentFamily {
  int k = 0;
  std::vector<BooleanFunction> components;
};

// Throws InvalidK for k < 2.
ComponentFamily components(const Gbf& f);

// W_{g_i} for every component, indexed by i.
std::vector<WalshSpectrum> component_spectra(const Gbf& f);

// H_f(u) = Σ_x ζ^{f(x)} (-1)^{u·x} for all u, exact in Z[ζ_{2^k}].
// Coefficients are stored position-major: 2^{k-1} integers per u.
class GwhtSpectrum {
 public:
  GwhtSpectrum() = default;
  GwhtSpectrum(int n, int k, std::vector<std::int64_t> coeffs);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << n_; }
  std::size_t width() const noexcept { return std::size_t{1} << (k_ - 1); }

  std::span<const std::int64_t> coeffs(std::uint64_t u) const noexcept {
    return {coeffs_.data() + u * width(), width()};
  }
  CyclotomicInt at(std::uint64_t u) const;
  std::span<const std::int64_t> flat() const noexcept { return coeffs_; }

  friend bool operator==(const GwhtSpectrum&, const GwhtSpectrum&) = default;

 private:
  int n_ = 0;
  int k_ = 1;
  std::vector<std::int64_t> coeffs_;
};

enum class Schedule { Serial, Parallel };

// Vector-valued butterfly started from ζ^{f(x)}.
GwhtSpectrum gwht(const Gbf& f, Schedule schedule = Schedule::Parallel);

// Independent route: 2^{k-1} Boolean transforms, S(u) = H_{2^{k-1}} W(u),
// H_f(u) = 2^{-(k-1)} Σ_t S_t ζ^t. Throws InternalInconsistency if the
// division is not exact.
GwhtSpectrum gwht_via_components(const Gbf& f);

struct SVector {
  std::vector<std::int64_t> entries;
};

SVector svector(const Gbf& f, std::uint64_t u);
SVector svector(std::span<const WalshSpectrum> component_spectra, std::uint64_t u);

// a·f mod 2^k.
Gbf scale(const Gbf& f, std::uint32_t a);
// a_0 + 2 a_1 + ... + 2^{k-t-1} a_{k-t-1} as an element of GB_n^{2^{k-t}}.
Gbf truncate(const Gbf& f, int t);

// GBF text format: line `n k`, then 2^n space-separated values in [0, 2^k).
Gbf parse_gbf(std::istream& in);
Gbf parse_gbf(const std::string& text);
std::string format_gbf(const Gbf& f);

}  // namespace gbent
