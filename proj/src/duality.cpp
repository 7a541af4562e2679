#include "gbent/duality.hpp"

#include "gbent/analysis.hpp"
#include "gbent/error.hpp"
#include "gbent/hadamard.hpp"

namespace gbent {

Gbf dual_gbent(const Gbf& f) {
  if (f.n() % 2 != 0) throw Error(ErrorCode::OddN, "the Z_{2^k}-valued dual is only defined for even n");
  const auto spectrum = gwht(f);
  if (!is_gbent_direct(f, spectrum).verdict) throw Error(ErrorCode::NotGbent, "dual requested for a function that is not gbent");

  const int k = f.k();
  const auto a = coordinates(f);
  const auto top = static_cast<std::size_t>(k - 1);
  const BooleanFunction top_dual = dual(a[top]);

  std::vector<BooleanFunction> b(a.size(), BooleanFunction(f.n()));
  b[top] = top_dual;
  for (std::size_t j = 0; j + 1 < a.size(); ++j) b[j] = top_dual ^ dual(a[top] ^ a[j]);
  Gbf result = assemble(b);

  const std::int64_t flat = std::int64_t{1} << (f.n() / 2);
  for (std::uint64_t u = 0; u < f.size(); ++u) {
    if (spectrum.at(u) != CyclotomicInt::zeta_pow(k, result[u]) * flat) {
      throw Error(ErrorCode::InternalInconsistency, "H_f(u) != 2^{n/2} ζ^{f*(u)} at u = " + std::to_string(u));
    }
  }
  if (!is_gbent(result)) throw Error(ErrorCode::InternalInconsistency, "dual is not gbent");
  return result;
}

BooleanFunction gray_map(const Gbf& f) {
  if (f.k() < 2) throw Error(ErrorCode::InvalidK, "the Gray map needs k >= 2");
  const int vars = f.n() + f.k() - 1;
  if (vars > BooleanFunction::kMaxVars) throw Error(ErrorCode::InvalidN, "Gray image would exceed 24 variables");
  const int n = f.n();
  const std::uint64_t x_mask = f.size() - 1;
  const std::uint32_t top = f.k() - 1;
  return BooleanFunction::from_predicate(vars, [&](std::uint64_t index) {
    const std::uint64_t x = index & x_mask;
    const std::uint64_t y = index >> n;
    const std::uint32_t v = f[x];
    const std::uint32_t low = v & ((std::uint32_t{1} << top) - 1);
    return ((__builtin_popcountll(low & y) + (v >> top)) & 1) != 0;
  });
}

std::int64_t gray_walsh_identity(std::span<const WalshSpectrum> spectra, std::uint64_t u, std::uint64_t r) {
  if (r >= spectra.size()) throw Error(ErrorCode::IndexOutOfRange, "Hadamard row index out of range");
  std::int64_t s = 0;
  for (std::size_t j = 0; j < spectra.size(); ++j) s += hadamard::entry(r, j) * spectra[j][u];
  return s;
}

std::int64_t gray_walsh_identity(const Gbf& f, std::uint64_t u, std::uint64_t r) {
  if (u >= f.size()) throw Error(ErrorCode::IndexOutOfRange, "point outside V_n");
  return gray_walsh_identity(component_spectra(f), u, r);
}

int expected_gray_plateau_order(int n, int k) noexcept { return n % 2 == 0 ? k - 1 : k - 2; }

SpectralClass verify_gray_plateaued(const Gbf& f) {
  if (!is_gbent(f)) throw Error(ErrorCode::NotGbent, "Gray plateau check needs a gbent function");
  return classify(wht(gray_map(f)));
}

}  // namespace gbent
