#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "gbent/bitmatrix.hpp"
#include "gbent/boolfn.hpp"
#include "gbent/gbf.hpp"
#include "gbent/gf2m.hpp"

namespace gbent {

// Points of F_{2^m} x F_{2^m} are indexed as x + 2^m y throughout.

// h(x, y) = Tr(x π(y)). Throws NotPermutation.
BooleanFunction mm_bent(const Field& field, std::span<const std::uint32_t> pi);
// Dual of mm_bent with respect to the bit dot product on indices:
// h*(u, v) = v · π^{-1}(L(u)), where Tr(L(u) x) = u · x for all x.
BooleanFunction mm_bent_dual(const Field& field, std::span<const std::uint32_t> pi);
// L from the line above, as a table over all u.
std::vector<std::uint32_t> trace_dual_map(const Field& field);

struct Example1Params {
  int m = 4;
  std::uint32_t c = 1;
};

// Tr(c(1+b) y^d x) + 2 Tr(c(1+b^{-1}) y^d x) + 4 Tr(c y^d x) in GB_{2m}^8,
// with b the first root of x^4 + x + 1, d = 11^{-1} mod 2^m - 1, 0^d = 0.
// Verified Z_8-bent before returning. Throws BadM unless m ∈ {4, 8},
// BadParameter for c = 0 or c outside the field.
Gbf example1(const Example1Params& params = {});

struct Spread {
  int m = 0;
  // subspaces[0] = {(0, y)}; subspaces[s + 1] = {(x, s x)} for s ∈ F_{2^m}.
  std::vector<std::vector<std::uint32_t>> subspaces;
};

// Throws BadM for m outside [1, 8]; the spread property is checked.
Spread regular_spread(int m);
// Each member is a subspace of size 2^m, and the nonzero points of V_{2m}
// are covered exactly once.
bool is_spread(const Spread& spread);

// f = φ(s) on U_s \ {0} for 1 <= s <= 2^m (φ given as a vector indexed by
// s - 1), f = 0 on U_0. Verified Z_{2^k}-bent before returning.
// Throws KTooLarge (k > m), NotBalanced, ShapeMismatch.
Gbf spread_zqbent(const Spread& spread, int k, std::span<const std::uint32_t> phi);
// s ↦ (s - 1) mod 2^k.
std::vector<std::uint32_t> default_phi(int m, int k);

// g0 g1 ⊕ g0 g2 ⊕ g1 g2 for bent g0, g1, g2 with g3 = g0 ⊕ g1 ⊕ g2 bent and
// g0* ⊕ g1* ⊕ g2* ⊕ g3* = 0. The result is checked to be bent with dual
// g0* g1* ⊕ g0* g2* ⊕ g1* g2*. Throws NotBent, DualSumNonzero.
BooleanFunction mesnager_secondary(const BooleanFunction& g0, const BooleanFunction& g1,
                                   const BooleanFunction& g2);

// (b_0, ..., b_{k-2}) = B (a_0, ..., a_{k-2})^T, b_{k-1} = a_{k-1} ⊕ b with
// b = Σ_i b_mask_i a_i, then every coordinate precomposed with x ↦ Ax.
struct LinearTransform {
  BitMatrix A;
  BitMatrix B;
  std::uint32_t b_mask = 0;
};

LinearTransform identity_transform(int n, int k);
// With preserve_l1, B maps the standard L_1 = <a_0, ..., a_{k-3}> to itself.
LinearTransform random_transform(int n, int k, std::mt19937_64& rng, bool preserve_l1 = false);

// True when B fixes the functional λ on component indices, i.e. B^T keeps ker λ.
bool preserves_l1(const BitMatrix& B, std::uint32_t l1_functional);

// Throws SingularMatrix, ShapeMismatch, and for odd n with `l1_functional`
// given, L1NotInvariant. A gbent input whose gbentness is guaranteed to
// survive is checked on output.
Gbf apply_equivalence(const Gbf& f, const LinearTransform& t,
                      std::optional<std::uint32_t> l1_functional = std::nullopt);

// Re-embeds f into GB_n^{2^r}: even n moves a_{k-1} to position r-1; odd n
// moves a_{k-2}, a_{k-1} to r-2, r-1. Throws NotGbent, RLessThanK, InvalidK.
Gbf lift(const Gbf& f, int r);

}  // namespace gbent
