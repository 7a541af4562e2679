#pragma once

#include <cstdint>
#include <span>

#include "gbent/boolfn.hpp"
#include "gbent/gbf.hpp"

namespace gbent {

// Dual of an even-n gbent function: H_f(u) = 2^{n/2} ζ^{f*(u)}. Built from
// the duals of the bent components g_0 = a_{k-1} and g_{2^j} = a_{k-1} ⊕ a_j:
//   b_{k-1} = a_{k-1}*,   b_j = a_{k-1}* ⊕ (a_{k-1} ⊕ a_j)*.
// The defining identity is checked at every u before returning.
// Throws OddN, NotGbent, or InternalInconsistency.
Gbf dual_gbent(const Gbf& f);

// ψ(f)(x, y) = ⊕_{i<k-1} a_i(x) y_i ⊕ a_{k-1}(x) on n + k - 1 variables,
// indexed as x + 2^n y. Throws InvalidK for k < 2 and InvalidN if n + k - 1 > 24.
BooleanFunction gray_map(const Gbf& f);

// Σ_j (-1)^{j·r} W_{g_j}(u), which equals W_{ψ(f)}(u, z_r) for every f.
std::int64_t gray_walsh_identity(const Gbf& f, std::uint64_t u, std::uint64_t r);
std::int64_t gray_walsh_identity(std::span<const WalshSpectrum> component_spectra, std::uint64_t u, std::uint64_t r);

// Plateau order the Gray image of a gbent f must have: k-1 (even n), k-2 (odd n).
int expected_gray_plateau_order(int n, int k) noexcept;

// Spectral class of ψ(f) computed by a direct transform on n + k - 1
// variables. Throws NotGbent.
SpectralClass verify_gray_plateaued(const Gbf& f);

}  // namespace gbent
