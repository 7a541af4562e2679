#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gbent/boolfn.hpp"
#include "gbent/gbf.hpp"

namespace gbent {

enum class GbentMethod { Direct, Spectral, Quadruple };
std::string_view to_string(GbentMethod method) noexcept;

// Which half of W(u) = (W_{g_0}(u), ..., W_{g_{2^{k-1}-1}}(u)) vanishes (odd n).
enum class Half { None, Low, High };
std::string_view to_string(Half half) noexcept;

// Witness at one point u. Even n: W(u) = sign · 2^{n/2} H^{(row)}_{2^{k-1}}
// (equivalently H_f(u) = sign · 2^{n/2} ζ^{row}). Odd n: the nonzero half
// of W(u) is sign · 2^{(n+1)/2} H^{(row)}_{2^{k-2}}, the other half is zero.
struct PointWitness {
  bool matched = false;
  std::uint64_t row = 0;
  int sign = 0;
  Half zero_half = Half::None;
};

struct GbentReport {
  bool verdict = false;
  GbentMethod method = GbentMethod::Direct;
  int n = 0;
  int k = 0;
  std::vector<PointWitness> per_u;
  std::vector<std::uint64_t> failures;  // empty iff verdict
};

// Definition: |H_f(u)|^2 = 2^n at every u, tested exactly as
// H_f(u) · conj(H_f(u)) = 2^n. Witnesses come from matching H_f(u) against
// ±2^{n/2} ζ^r (even n) or ±2^{(n-1)/2} √2 ζ^j (odd n).
GbentReport is_gbent_direct(const Gbf& f);
GbentReport is_gbent_direct(const Gbf& f, const GwhtSpectrum& spectrum);

// Component spectra against signed Sylvester-Hadamard rows (even n), or
// against the half-zero patterns (odd n).
GbentReport is_gbent_spectral(const Gbf& f);
GbentReport is_gbent_spectral(const Gbf& f, std::span<const WalshSpectrum> component_spectra);

// Component spectra through the zero-sum quadruple product relation.
GbentReport is_gbent_quadruple(const Gbf& f);
GbentReport is_gbent_quadruple(const Gbf& f, std::span<const WalshSpectrum> component_spectra);

// Verdict only (definition route, no witnesses).
bool is_gbent(const Gbf& f);

struct RouteAgreement {
  GbentReport direct;
  GbentReport spectral;
  GbentReport quadruple;

  bool agree() const noexcept {
    return direct.verdict == spectral.verdict && spectral.verdict == quadruple.verdict;
  }
  bool verdict() const noexcept { return direct.verdict; }
};

// All three routes on one function (component spectra shared).
RouteAgreement check_all_routes(const Gbf& f);

// Affine (semi-)bent space structure of A = a_{k-1} ⊕ <a_0, ..., a_{k-2}>.
struct BentSpaceReport {
  int n = 0;
  int k = 0;
  // Every member of A is bent (even n) or semi-bent (odd n).
  bool is_affine_bent_space = false;
  // Even n: h_0* ⊕ h_1* ⊕ h_2* ⊕ h_3* = 0 on every zero-sum quadruple of A.
  std::optional<bool> dual_sum_closed;
  // g_i g_j ⊕ g_i g_l ⊕ g_j g_l bent (even) / semi-bent (odd) for all distinct triples.
  bool mesnager_closed = false;
  // Odd n: the nonzero functional λ on V_{k-1} (unique if it exists) such
  // that L_1 = ker λ, read as component indices, realizes the per-u
  // zero / nonzero split.
  std::optional<std::uint32_t> split_functional;
  std::vector<std::uint32_t> split_basis;

  // The affine space is the space of some gbent function (any L_1).
  bool space_is_gbent() const noexcept;
  // f itself is gbent: additionally, for odd n, L_1 = <a_0, ..., a_{k-3}>,
  // i.e. λ picks out the top index bit.
  bool holds() const noexcept;
};

// Throws InvalidK for k < 2.
BentSpaceReport bent_space_report(const Gbf& f);

// W of g0 g1 ⊕ g0 g2 ⊕ g1 g2 as (W_{g0} + W_{g1} + W_{g2} - W_{g3}) / 2.
// Throws NotZeroSum unless g0 ⊕ g1 ⊕ g2 ⊕ g3 = 0.
WalshSpectrum carlet_walsh_identity(const BooleanFunction& g0, const BooleanFunction& g1,
                                    const BooleanFunction& g2, const BooleanFunction& g3);

struct ZqBentReport {
  // Definition route: |H_f(a, u)| = 2^{n/2} for all nonzero a and all u.
  bool route_definition = false;
  // Truncation route: f_t is gbent in GB_n^{2^{k-t}} for t = 0..k-1.
  bool route_truncation = false;
  std::vector<std::pair<std::uint32_t, bool>> per_multiplier;
  std::vector<bool> per_truncation;

  bool verdict() const noexcept { return route_definition && route_truncation; }
  bool consistent() const noexcept { return route_definition == route_truncation; }
};

// Throws OddN for odd n.
ZqBentReport is_zq_bent(const Gbf& f);

// Counts differences (x ⊕ x', f(x) - f(x')) over ordered pairs x != x' and
// checks the (2^n, 2^k, 2^n, 2^{n-k}) relative difference set condition.
// Throws OddN for odd n and TooLarge for n > 16.
bool verify_rds(const Gbf& f);

}  // namespace gbent
