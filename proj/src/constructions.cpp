#include "gbent/constructions.hpp"

#include <algorithm>

#include "gbent/analysis.hpp"
#include "gbent/error.hpp"

namespace gbent {

namespace {

void check_permutation(const Field& field, std::span<const std::uint32_t> pi) {
  if (pi.size() != field.size()) throw Error(ErrorCode::NotPermutation, "permutation must list 2^m images");
  std::vector<bool> seen(field.size(), false);
  for (auto v : pi) {
    if (v >= field.size() || seen[v]) throw Error(ErrorCode::NotPermutation, "map is not a bijection of the field");
    seen[v] = true;
  }
}

}  // namespace

BooleanFunction mm_bent(const Field& field, std::span<const std::uint32_t> pi) {
  check_permutation(field, pi);
  const int m = field.m();
  return BooleanFunction::from_predicate(2 * m, [&](std::uint64_t index) {
    const auto x = static_cast<std::uint32_t>(index & (field.size() - 1));
    const auto y = static_cast<std::uint32_t>(index >> m);
    return field.trace(field.mul(x, pi[y])) != 0;
  });
}

std::vector<std::uint32_t> trace_dual_map(const Field& field) {
  // The trace form is nondegenerate, so c ↦ (Tr(c e_j))_j is a bijection.
  std::vector<std::uint32_t> table(field.size(), 0);
  for (std::uint32_t c = 0; c < field.size(); ++c) {
    std::uint32_t u = 0;
    for (int j = 0; j < field.m(); ++j) u |= static_cast<std::uint32_t>(field.trace(field.mul(c, std::uint32_t{1} << j))) << j;
    table[u] = c;
  }
  return table;
}

BooleanFunction mm_bent_dual(const Field& field, std::span<const std::uint32_t> pi) {
  check_permutation(field, pi);
  std::vector<std::uint32_t> inverse(pi.size());
  for (std::uint32_t y = 0; y < pi.size(); ++y) inverse[pi[y]] = y;
  const auto L = trace_dual_map(field);
  const int m = field.m();
  return BooleanFunction::from_predicate(2 * m, [&](std::uint64_t index) {
    const auto u = static_cast<std::uint32_t>(index & (field.size() - 1));
    const auto v = static_cast<std::uint32_t>(index >> m);
    return (__builtin_popcount(v & inverse[L[u]]) & 1) != 0;
  });
}

Gbf example1(const Example1Params& params) {
  const int m = params.m;
  if (m % 4 != 0 || m % 5 == 0) throw Error(ErrorCode::BadM, "m must be divisible by 4 and not by 5");
  if (m > 8) throw Error(ErrorCode::BadM, "m > 8 is not supported (n = 2m must stay at most 16)");
  const Field field(m);
  if (params.c == 0 || params.c >= field.size()) throw Error(ErrorCode::BadParameter, "c must be a nonzero field element");
  const auto root = field.root_of_x4_x_1();
  if (!root) throw Error(ErrorCode::NoRoot, "x^4 + x + 1 has no root in GF(2^" + std::to_string(m) + ")");
  const std::uint32_t b = *root;
  const std::uint64_t d = inverse_exponent(11, m);

  const std::uint32_t c = params.c;
  const std::uint32_t c0 = field.mul(c, 1U ^ b);
  const std::uint32_t c1 = field.mul(c, 1U ^ field.inv(b));
  const std::uint32_t c2 = c;

  std::vector<std::uint32_t> yd(field.size());
  for (std::uint32_t y = 0; y < field.size(); ++y) yd[y] = y == 0 ? 0 : field.pow(y, d);

  const Gbf f = Gbf::from_function(2 * m, 3, [&](std::uint64_t index) {
    const auto x = static_cast<std::uint32_t>(index & (field.size() - 1));
    const auto y = static_cast<std::uint32_t>(index >> m);
    const std::uint32_t t = field.mul(yd[y], x);
    return field.trace(field.mul(c0, t)) + 2 * field.trace(field.mul(c1, t)) + 4 * field.trace(field.mul(c2, t));
  });
  if (!is_zq_bent(f).verdict()) throw Error(ErrorCode::InternalInconsistency, "constructed function is not Z_8-bent");
  return f;
}

bool is_spread(const Spread& spread) {
  if (spread.m < 1 || spread.m > 8) return false;
  const std::uint32_t q = std::uint32_t{1} << spread.m;
  const std::uint64_t points = std::uint64_t{1} << (2 * spread.m);
  if (spread.subspaces.size() != q + 1) return false;
  std::vector<int> cover(points, 0);
  for (const auto& U : spread.subspaces) {
    if (U.size() != q) return false;
    std::vector<bool> member(points, false);
    for (auto x : U) {
      if (x >= points || member[x]) return false;
      member[x] = true;
    }
    if (!member[0]) return false;
    for (auto x : U) {
      for (auto y : U) {
        if (!member[x ^ y]) return false;
      }
    }
    for (auto x : U) ++cover[x];
  }
  for (std::uint64_t x = 1; x < points; ++x) {
    if (cover[x] != 1) return false;
  }
  return true;
}

Spread regular_spread(int m) {
  if (m < 1 || m > 8) throw Error(ErrorCode::BadM, "regular spreads are built for 1 <= m <= 8");
  const Field field(m);
  const std::uint32_t q = field.size();
  Spread spread{m, {}};
  spread.subspaces.reserve(q + 1);
  std::vector<std::uint32_t> vertical;
  for (std::uint32_t y = 0; y < q; ++y) vertical.push_back(y << m);
  spread.subspaces.push_back(std::move(vertical));
  for (std::uint32_t s = 0; s < q; ++s) {
    std::vector<std::uint32_t> line;
    for (std::uint32_t x = 0; x < q; ++x) line.push_back(x | (field.mul(s, x) << m));
    std::sort(line.begin(), line.end());
    spread.subspaces.push_back(std::move(line));
  }
  if (!is_spread(spread)) throw Error(ErrorCode::InternalInconsistency, "regular spread failed its own check");
  return spread;
}

std::vector<std::uint32_t> default_phi(int m, int k) {
  const std::uint32_t q = std::uint32_t{1} << m;
  std::vector<std::uint32_t> phi(q);
  for (std::uint32_t s = 1; s <= q; ++s) phi[s - 1] = (s - 1) & ((std::uint32_t{1} << k) - 1);
  return phi;
}

Gbf spread_zqbent(const Spread& spread, int k, std::span<const std::uint32_t> phi) {
  const int m = spread.m;
  if (k < 1) throw Error(ErrorCode::InvalidK, "k must be positive");
  if (k > m) throw Error(ErrorCode::KTooLarge, "need k <= m");
  if (!is_spread(spread)) throw Error(ErrorCode::ShapeMismatch, "not a spread of V_{2m}");
  const std::uint32_t q = std::uint32_t{1} << m;
  if (phi.size() != q) throw Error(ErrorCode::ShapeMismatch, "phi must have 2^m entries");
  std::vector<std::uint32_t> count(std::size_t{1} << k, 0);
  for (auto v : phi) {
    if (v >= count.size()) throw Error(ErrorCode::NotBalanced, "phi value outside Z_{2^k}");
    ++count[v];
  }
  for (auto c : count) {
    if (c != q >> k) throw Error(ErrorCode::NotBalanced, "phi must take each value exactly 2^{m-k} times");
  }

  Gbf f(2 * m, k);
  for (std::uint32_t s = 1; s <= q; ++s) {
    for (auto x : spread.subspaces[s]) {
      if (x != 0) f.set(x, phi[s - 1]);
    }
  }
  if (!is_zq_bent(f).verdict()) throw Error(ErrorCode::InternalInconsistency, "spread function is not Z_q-bent");
  return f;
}

BooleanFunction mesnager_secondary(const BooleanFunction& g0, const BooleanFunction& g1,
                                   const BooleanFunction& g2) {
  const BooleanFunction g3 = g0 ^ g1 ^ g2;
  const BooleanFunction* g[] = {&g0, &g1, &g2, &g3};
  std::vector<BooleanFunction> duals;
  for (const auto* h : g) {
    const auto w = wht(*h);
    if (!is_bent(w)) throw Error(ErrorCode::NotBent, "every g_i, including g0 ⊕ g1 ⊕ g2, must be bent");
    duals.push_back(dual_from_spectrum(w));
  }
  if (!(duals[0] ^ duals[1] ^ duals[2] ^ duals[3]).is_zero()) {
    throw Error(ErrorCode::DualSumNonzero, "g0* ⊕ g1* ⊕ g2* ⊕ g3* is not zero, so the majority is not bent");
  }
  BooleanFunction out = majority(g0, g1, g2);
  const auto w = wht(out);
  if (!is_bent(w) || dual_from_spectrum(w) != majority(duals[0], duals[1], duals[2])) {
    throw Error(ErrorCode::InternalInconsistency, "majority function failed its bent/dual check");
  }
  return out;
}

LinearTransform identity_transform(int n, int k) {
  return {BitMatrix::identity(n), BitMatrix::identity(k - 1), 0};
}

bool preserves_l1(const BitMatrix& B, std::uint32_t l1_functional) { return B.apply(l1_functional) == l1_functional; }

LinearTransform random_transform(int n, int k, std::mt19937_64& rng, bool preserve_l1) {
  if (k < 1) throw Error(ErrorCode::InvalidK, "k must be positive");
  LinearTransform t;
  t.A = BitMatrix::random_invertible(n, rng);
  const std::uint32_t standard = k >= 2 ? std::uint32_t{1} << (k - 2) : 0;
  do {
    t.B = BitMatrix::random_invertible(k - 1, rng);
  } while (preserve_l1 && k >= 2 && !preserves_l1(t.B, standard));
  t.b_mask = k >= 2 ? static_cast<std::uint32_t>(rng() & ((std::uint64_t{1} << (k - 1)) - 1)) : 0;
  return t;
}

Gbf apply_equivalence(const Gbf& f, const LinearTransform& t, std::optional<std::uint32_t> l1_functional) {
  const int n = f.n();
  const int k = f.k();
  if (t.A.dim() != n) throw Error(ErrorCode::ShapeMismatch, "A must be n x n");
  if (t.B.dim() != k - 1) throw Error(ErrorCode::ShapeMismatch, "B must be (k-1) x (k-1)");
  if (t.b_mask >> (k - 1) != 0) throw Error(ErrorCode::ShapeMismatch, "b must combine a_0, ..., a_{k-2} only");
  if (!t.A.invertible() || !t.B.invertible()) throw Error(ErrorCode::SingularMatrix, "A and B must be invertible over F_2");
  if (n % 2 != 0 && l1_functional && !preserves_l1(t.B, *l1_functional)) {
    throw Error(ErrorCode::L1NotInvariant, "B does not leave L_1 invariant");
  }

  const std::uint32_t top_bit = std::uint32_t{1} << (k - 1);
  const std::uint32_t low = top_bit - 1;
  const Gbf out = Gbf::from_function(n, k, [&](std::uint64_t x) {
    const std::uint32_t v = f[t.A.apply(static_cast<std::uint32_t>(x))];
    const std::uint32_t a = v & low;
    const std::uint32_t top = (v >> (k - 1)) ^ static_cast<std::uint32_t>(__builtin_parity(a & t.b_mask));
    return t.B.apply(a) | (top << (k - 1));
  });

  // Even n: always preserved. Odd n: preserved when B keeps the half split.
  const bool guaranteed = n % 2 == 0 || k < 2 || preserves_l1(t.B, std::uint32_t{1} << (k - 2));
  if (guaranteed && is_gbent(f) && !is_gbent(out)) {
    throw Error(ErrorCode::InternalInconsistency, "equivalence transform lost gbentness");
  }
  return out;
}

Gbf lift(const Gbf& f, int r) {
  const int k = f.k();
  if (r < k) throw Error(ErrorCode::RLessThanK, "lift target r must satisfy r >= k");
  if (r > Gbf::kMaxK) throw Error(ErrorCode::InvalidK, "lift target r must be at most 16");
  if (!is_gbent(f)) throw Error(ErrorCode::NotGbent, "only gbent functions are lifted");
  const bool odd = f.n() % 2 != 0;
  const int kept = odd ? k - 2 : k - 1;
  const Gbf out = Gbf::from_function(f.n(), r, [&](std::uint64_t x) {
    const std::uint32_t v = f[x];
    std::uint32_t w = v & ((std::uint32_t{1} << kept) - 1);
    w |= ((v >> (k - 1)) & 1U) << (r - 1);
    if (odd) w |= ((v >> (k - 2)) & 1U) << (r - 2);
    return w;
  });
  if (!is_gbent(out)) throw Error(ErrorCode::InternalInconsistency, "lifted function is not gbent");
  return out;
}

}  // namespace gbent
