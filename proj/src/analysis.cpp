#include "gbent/analysis.hpp"

#include <cstdlib>

#include "gbent/cyclotomic.hpp"
#include "gbent/error.hpp"
#include "gbent/hadamard.hpp"

namespace gbent {
namespace {

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

bool has_flat_modulus(std::span<const std::int64_t> coeffs, int k, std::int64_t target) {
  const CyclotomicInt h(k, std::vector<std::int64_t>(coeffs.begin(), coeffs.end()));
  return norm_squared(h).equals_integer(target);
}

// H_f(u) = sign · 2^{n/2} ζ^r with r in [0, 2^{k-1}).
std::optional<PointWitness> match_even(std::span<const std::int64_t> c, int n) {
  const std::int64_t flat = pow2(n / 2);
  std::optional<PointWitness> found;
  for (std::size_t r = 0; r < c.size(); ++r) {
    if (c[r] == 0) continue;
    if (found || std::llabs(c[r]) != flat) return std::nullopt;
    found = PointWitness{true, r, c[r] > 0 ? 1 : -1, Half::None};
  }
  return found;
}

// H_f(u) = σ 2^{(n-1)/2} (s1 ζ^{J1} + s2 ζ^{J2}) with J2 = J1 + 2^{k-2}.
std::optional<PointWitness> match_odd(std::span<const std::int64_t> c, int n,
                                      std::span<const Sqrt2Decomposition> decompositions) {
  const std::int64_t scale = pow2((n - 1) / 2);
  auto try_terms = [&](std::size_t J1, int s1, std::size_t J2, int s2) -> std::optional<PointWitness> {
    for (int sigma : {1, -1}) {
      if (c[J1] != sigma * s1 * scale || c[J2] != sigma * s2 * scale) continue;
      bool rest_zero = true;
      for (std::size_t t = 0; t < c.size() && rest_zero; ++t) {
        if (t != J1 && t != J2 && c[t] != 0) rest_zero = false;
      }
      if (!rest_zero) continue;
      const int lead = sigma * s1;
      const int trail = sigma * s2;
      // Equal signs on S_r and S_{r+2^{k-2}} come from a nonzero low half.
      return PointWitness{true, J1, lead, lead == trail ? Half::High : Half::Low};
    }
    return std::nullopt;
  };

  if (c.size() == 2) {  // k = 2: √2 ζ_4^j has no decomposition inside Z[i]; use 1 ± i directly
    const int s1 = c[0] >= 0 ? 1 : -1;
    const int s2 = c[1] >= 0 ? 1 : -1;
    return try_terms(0, s1, 1, s2);
  }
  for (const auto& d : decompositions) {
    if (auto w = try_terms(static_cast<std::size_t>(d.J1), d.s1, static_cast<std::size_t>(d.J2), d.s2)) return w;
  }
  return std::nullopt;
}

std::vector<int> signs_of(std::span<const std::int64_t> values) {
  std::vector<int> w(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) w[i] = values[i] > 0 ? 1 : -1;
  return w;
}

bool all_magnitude(std::span<const std::int64_t> values, std::int64_t magnitude) {
  for (auto v : values) {
    if (std::llabs(v) != magnitude) return false;
  }
  return true;
}

bool all_zero(std::span<const std::int64_t> values) {
  for (auto v : values) {
    if (v != 0) return false;
  }
  return true;
}

// Row index read from the entries at positions 2^s, relative to w[0].
PointWitness row_from_powers_of_two(std::span<const int> w, Half zero_half) {
  std::uint64_t r = 0;
  for (std::uint64_t pos = 1, s = 0; pos < w.size(); pos <<= 1, ++s) {
    if (w[pos] != w[0]) r |= std::uint64_t{1} << s;
  }
  return PointWitness{true, r, w[0], zero_half};
}

std::vector<std::int64_t> column(std::span<const WalshSpectrum> spectra, std::uint64_t u) {
  std::vector<std::int64_t> out(spectra.size());
  for (std::size_t i = 0; i < spectra.size(); ++i) out[i] = spectra[i][u];
  return out;
}

void check_spectra_shape(const Gbf& f, std::span<const WalshSpectrum> spectra) {
  if (spectra.size() != (std::size_t{1} << (f.k() - 1))) throw Error(ErrorCode::ShapeMismatch, "need 2^{k-1} component spectra");
  for (const auto& s : spectra) {
    if (s.n != f.n()) throw Error(ErrorCode::ShapeMismatch, "component spectrum on the wrong number of variables");
  }
}

GbentReport make_report(const Gbf& f, GbentMethod method) {
  GbentReport r;
  r.method = method;
  r.n = f.n();
  r.k = f.k();
  r.per_u.resize(f.size());
  return r;
}

void finish(GbentReport& report) { report.verdict = report.failures.empty(); }

// k = 1: gbent coincides with bent.
GbentReport boolean_route(const Gbf& f, GbentMethod method) {
  GbentReport report = make_report(f, method);
  const auto spectrum = wht(coordinate(f, 0));
  const std::int64_t flat = pow2(f.n() / 2);
  for (std::uint64_t u = 0; u < f.size(); ++u) {
    if (f.n() % 2 == 0 && std::llabs(spectrum[u]) == flat) {
      report.per_u[u] = PointWitness{true, 0, spectrum[u] > 0 ? 1 : -1, Half::None};
    } else {
      report.failures.push_back(u);
    }
  }
  finish(report);
  return report;
}

// Odd n: which half of W(u) vanishes while the other half has entries ±magnitude.
std::optional<Half> zero_half_of(std::span<const std::int64_t> w, std::int64_t magnitude) {
  const std::size_t m = w.size() / 2;
  const auto low = w.subspan(0, m);
  const auto high = w.subspan(m);
  if (all_zero(low) && all_magnitude(high, magnitude)) return Half::Low;
  if (all_zero(high) && all_magnitude(low, magnitude)) return Half::High;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(GbentMethod method) noexcept {
  switch (method) {
    case GbentMethod::Direct: return "direct";
    case GbentMethod::Spectral: return "spectral";
    case GbentMethod::Quadruple: return "quadruple";
  }
  return "direct";
}

std::string_view to_string(Half half) noexcept {
  switch (half) {
    case Half::None: return "-";
    case Half::Low: return "low";
    case Half::High: return "high";
  }
  return "-";
}

GbentReport is_gbent_direct(const Gbf& f, const GwhtSpectrum& spectrum) {
  if (spectrum.n() != f.n() || spectrum.k() != f.k()) throw Error(ErrorCode::ShapeMismatch, "spectrum does not belong to f");
  GbentReport report = make_report(f, GbentMethod::Direct);
  const int n = f.n();
  const int k = f.k();
  const std::int64_t target = pow2(n);

  std::vector<Sqrt2Decomposition> decompositions;
  if (n % 2 == 1 && k >= 3) {
    for (std::int64_t j = 0; j < pow2(k - 1); ++j) decompositions.push_back(sqrt2_decompose(k, j));
  }

  for (std::uint64_t u = 0; u < f.size(); ++u) {
    const auto c = spectrum.coeffs(u);
    if (!has_flat_modulus(c, k, target)) {
      report.failures.push_back(u);
      continue;
    }
    std::optional<PointWitness> w;
    if (k == 1) {
      // |W(u)|^2 = 2^n with W(u) an integer forces even n.
      w = PointWitness{true, 0, c[0] > 0 ? 1 : -1, Half::None};
    } else if (n % 2 == 0) {
      w = match_even(c, n);
    } else {
      w = match_odd(c, n, decompositions);
    }
    if (!w) {
      throw Error(ErrorCode::InternalInconsistency,
                  "|H_f(u)| = 2^{n/2} but H_f(u) has no root-of-unity form at u = " + std::to_string(u));
    }
    report.per_u[u] = *w;
  }
  finish(report);
  return report;
}

GbentReport is_gbent_direct(const Gbf& f) { return is_gbent_direct(f, gwht(f)); }

GbentReport is_gbent_spectral(const Gbf& f, std::span<const WalshSpectrum> spectra) {
  if (f.k() == 1) return boolean_route(f, GbentMethod::Spectral);
  check_spectra_shape(f, spectra);
  GbentReport report = make_report(f, GbentMethod::Spectral);
  const int n = f.n();

  for (std::uint64_t u = 0; u < f.size(); ++u) {
    const auto w = column(spectra, u);
    std::optional<PointWitness> witness;
    if (n % 2 == 0) {
      const std::int64_t flat = pow2(n / 2);
      if (all_magnitude(w, flat)) {
        if (auto m = hadamard::match_row(signs_of(w))) witness = PointWitness{true, m->r, m->sign, Half::None};
      }
    } else {
      const std::int64_t magnitude = pow2((n + 1) / 2);
      if (auto half = zero_half_of(w, magnitude)) {
        const std::size_t m = w.size() / 2;
        const auto nonzero = *half == Half::Low ? std::span<const std::int64_t>(w).subspan(m)
                                                : std::span<const std::int64_t>(w).subspan(0, m);
        if (auto match = hadamard::match_row(signs_of(nonzero))) {
          witness = PointWitness{true, match->r, match->sign, *half};
        }
      }
    }
    if (witness) {
      report.per_u[u] = *witness;
    } else {
      report.failures.push_back(u);
    }
  }
  finish(report);
  return report;
}

GbentReport is_gbent_spectral(const Gbf& f) {
  if (f.k() == 1) return boolean_route(f, GbentMethod::Spectral);
  return is_gbent_spectral(f, component_spectra(f));
}

GbentReport is_gbent_quadruple(const Gbf& f, std::span<const WalshSpectrum> spectra) {
  if (f.k() == 1) return boolean_route(f, GbentMethod::Quadruple);
  check_spectra_shape(f, spectra);
  GbentReport report = make_report(f, GbentMethod::Quadruple);
  const int n = f.n();

  // All components must be bent (even n) / semi-bent (odd n) globally.
  bool components_ok = true;
  for (const auto& s : spectra) components_ok = components_ok && (n % 2 == 0 ? is_bent(s) : is_semi_bent(s));

  for (std::uint64_t u = 0; u < f.size(); ++u) {
    const auto w = column(spectra, u);
    std::optional<PointWitness> witness;
    if (components_ok && n % 2 == 0) {
      const auto signs = signs_of(w);
      if (hadamard::quadruple_condition(signs)) witness = row_from_powers_of_two(signs, Half::None);
    } else if (components_ok) {
      const std::int64_t magnitude = pow2((n + 1) / 2);
      if (auto half = zero_half_of(w, magnitude)) {
        const std::size_t m = w.size() / 2;
        const auto nonzero = *half == Half::Low ? std::span<const std::int64_t>(w).subspan(m)
                                                : std::span<const std::int64_t>(w).subspan(0, m);
        const auto signs = signs_of(nonzero);
        if (hadamard::quadruple_condition(signs)) witness = row_from_powers_of_two(signs, *half);
      }
    }
    if (witness) {
      report.per_u[u] = *witness;
    } else {
      report.failures.push_back(u);
    }
  }
  finish(report);
  return report;
}

GbentReport is_gbent_quadruple(const Gbf& f) {
  if (f.k() == 1) return boolean_route(f, GbentMethod::Quadruple);
  return is_gbent_quadruple(f, component_spectra(f));
}

bool is_gbent(const Gbf& f) {
  const auto spectrum = gwht(f);
  const std::int64_t target = pow2(f.n());
  for (std::uint64_t u = 0; u < f.size(); ++u) {
    if (!has_flat_modulus(spectrum.coeffs(u), f.k(), target)) return false;
  }
  return true;
}

RouteAgreement check_all_routes(const Gbf& f) {
  RouteAgreement out;
  out.direct = is_gbent_direct(f);
  if (f.k() == 1) {
    out.spectral = is_gbent_spectral(f);
    out.quadruple = is_gbent_quadruple(f);
    return out;
  }
  const auto spectra = component_spectra(f);
  out.spectral = is_gbent_spectral(f, spectra);
  out.quadruple = is_gbent_quadruple(f, spectra);
  return out;
}

bool BentSpaceReport::space_is_gbent() const noexcept {
  if (!is_affine_bent_space || !mesnager_closed) return false;
  if (n % 2 == 0) return dual_sum_closed.value_or(false);
  return split_functional.has_value();
}

bool BentSpaceReport::holds() const noexcept {
  if (!space_is_gbent()) return false;
  return n % 2 == 0 || *split_functional == std::uint32_t{1} << (k - 2);
}

BentSpaceReport bent_space_report(const Gbf& f) {
  if (f.k() < 2) throw Error(ErrorCode::InvalidK, "bent-space analysis needs k >= 2");
  const auto family = components(f);
  const auto& g = family.components;
  const std::size_t h = g.size();
  const int n = f.n();
  const bool even = n % 2 == 0;

  BentSpaceReport report;
  report.n = n;
  report.k = f.k();

  std::vector<WalshSpectrum> spectra;
  spectra.reserve(h);
  for (const auto& gi : g) spectra.push_back(wht(gi));

  auto member_ok = [&](const WalshSpectrum& s) { return even ? is_bent(s) : is_semi_bent(s); };

  report.is_affine_bent_space = true;
  for (const auto& s : spectra) report.is_affine_bent_space = report.is_affine_bent_space && member_ok(s);

  if (even) {
    if (!report.is_affine_bent_space) {
      report.dual_sum_closed = false;
    } else {
      std::vector<BooleanFunction> duals;
      duals.reserve(h);
      for (const auto& s : spectra) duals.push_back(dual_from_spectrum(s));
      report.dual_sum_closed = hadamard::for_each_quadruple(h, [&](std::uint64_t j, std::uint64_t c, std::uint64_t l, std::uint64_t v) {
        return (duals[j] ^ duals[c] ^ duals[l] ^ duals[v]).is_zero();
      });
    }
  }

  report.mesnager_closed = true;
  for (std::size_t i = 0; i < h && report.mesnager_closed; ++i) {
    for (std::size_t j = i + 1; j < h && report.mesnager_closed; ++j) {
      for (std::size_t l = j + 1; l < h && report.mesnager_closed; ++l) {
        report.mesnager_closed = member_ok(wht(majority(g[i], g[j], g[l])));
      }
    }
  }

  if (!even) {
    // Hyperplanes of the index space V_{k-1} are the kernels of nonzero functionals.
    for (std::uint32_t lambda = 1; lambda < h && !report.split_functional; ++lambda) {
      bool works = true;
      for (std::uint64_t u = 0; u < f.size() && works; ++u) {
        bool zero_on_kernel = true;
        bool nonzero_on_kernel = true;
        for (std::uint32_t i = 0; i < h; ++i) {
          const bool in_kernel = (__builtin_popcount(lambda & i) & 1) == 0;
          const bool zero = spectra[i][u] == 0;
          if (zero != in_kernel) zero_on_kernel = false;
          if (zero == in_kernel) nonzero_on_kernel = false;
        }
        works = zero_on_kernel || nonzero_on_kernel;
      }
      if (works) {
        report.split_functional = lambda;
        // Basis of ker λ: greedy over the kernel's elements.
        std::vector<std::uint32_t> basis;
        std::vector<std::uint32_t> span_set{0};
        for (std::uint32_t i = 1; i < h; ++i) {
          if ((__builtin_popcount(lambda & i) & 1) != 0) continue;
          bool spanned = false;
          for (auto s : span_set) spanned = spanned || s == i;
          if (spanned) continue;
          basis.push_back(i);
          const std::size_t size = span_set.size();
          for (std::size_t t = 0; t < size; ++t) span_set.push_back(span_set[t] ^ i);
        }
        report.split_basis = std::move(basis);
      }
    }
  }
  return report;
}

WalshSpectrum carlet_walsh_identity(const BooleanFunction& g0, const BooleanFunction& g1, const BooleanFunction& g2,
                                    const BooleanFunction& g3) {
  if (!(g0 ^ g1 ^ g2 ^ g3).is_zero()) throw Error(ErrorCode::NotZeroSum, "g0 ⊕ g1 ⊕ g2 ⊕ g3 is not the zero function");
  const auto w0 = wht(g0);
  const auto w1 = wht(g1);
  const auto w2 = wht(g2);
  const auto w3 = wht(g3);
  WalshSpectrum out{g0.n(), std::vector<std::int64_t>(g0.size())};
  for (std::uint64_t u = 0; u < g0.size(); ++u) {
    const std::int64_t twice = w0[u] + w1[u] + w2[u] - w3[u];
    if (twice % 2 != 0) throw Error(ErrorCode::InternalInconsistency, "odd Walsh sum in the majority identity");
    out.values[u] = twice / 2;
  }
  return out;
}

ZqBentReport is_zq_bent(const Gbf& f) {
  if (f.n() % 2 != 0) throw Error(ErrorCode::OddN, "Z_q-bentness is defined here for even n only");
  ZqBentReport report;
  report.route_definition = true;
  for (std::uint32_t a = 1; a < f.modulus(); ++a) {
    const bool ok = is_gbent(scale(f, a));
    report.per_multiplier.emplace_back(a, ok);
    report.route_definition = report.route_definition && ok;
  }
  report.route_truncation = true;
  for (int t = 0; t < f.k(); ++t) {
    const bool ok = is_gbent(truncate(f, t));
    report.per_truncation.push_back(ok);
    report.route_truncation = report.route_truncation && ok;
  }
  return report;
}

bool verify_rds(const Gbf& f) {
  if (f.n() % 2 != 0) throw Error(ErrorCode::OddN, "relative difference sets are checked for even n only");
  if (f.n() > 16) throw Error(ErrorCode::TooLarge, "pair counting is capped at n = 16");
  if (f.k() > f.n()) return false;
  const std::uint64_t size = f.size();
  const std::uint32_t q = f.modulus();
  const std::uint64_t lambda = std::uint64_t{1} << (f.n() - f.k());
  const std::ptrdiff_t shifts = static_cast<std::ptrdiff_t>(size);
  bool ok = true;

  // Pairs with x ⊕ x' = 0 are x = x', so (0, b != 0) never occurs; only the
  // nonzero shifts need counting.
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
  for (std::ptrdiff_t ds = 1; ds < shifts; ++ds) {
    const std::uint64_t d = static_cast<std::uint64_t>(ds);
    std::vector<std::uint64_t> counts(q, 0);
    for (std::uint64_t x = 0; x < size; ++x) ++counts[(f[x ^ d] + q - f[x]) & (q - 1)];
    for (auto c : counts) ok = ok && c == lambda;
  }
  return ok;
}

}  // namespace gbent
