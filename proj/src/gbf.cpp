#include "gbent/gbf.hpp"

#include <istream>
#include <sstream>

#include "gbent/error.hpp"
#include "gbent/hadamard.hpp"
#include "gbent/kernels.hpp"

namespace gbent {

GeneralizedBooleanFunction::GeneralizedBooleanFunction(int n, int k) : n_(n), k_(k) {
  if (n < 1 || n > BooleanFunction::kMaxVars) throw Error(ErrorCode::InvalidN, "generalized Boolean functions need 1 <= n <= 24");
  if (k < 1 || k > kMaxK) throw Error(ErrorCode::InvalidK, "modulus exponent must be in [1, 16]");
  values_.assign(size(), 0);
}

GeneralizedBooleanFunction::GeneralizedBooleanFunction(int n, int k, std::vector<std::uint32_t> values)
    : GeneralizedBooleanFunction(n, k) {
  if (values.size() != values_.size()) throw Error(ErrorCode::ShapeMismatch, "expected 2^n values");
  for (auto v : values) {
    if (v >= modulus()) throw Error(ErrorCode::ShapeMismatch, "value outside [0, 2^k)");
  }
  values_ = std::move(values);
}

void GeneralizedBooleanFunction::set(std::uint64_t x, std::uint32_t value) {
  if (x >= size()) throw Error(ErrorCode::IndexOutOfRange, "index out of range");
  if (value >= modulus()) throw Error(ErrorCode::ShapeMismatch, "value outside [0, 2^k)");
  values_[x] = value;
}

BooleanFunction coordinate(const Gbf& f, int j) {
  if (j < 0 || j >= f.k()) throw Error(ErrorCode::IndexOutOfRange, "coordinate index out of range");
  return BooleanFunction::from_predicate(f.n(), [&](std::uint64_t x) { return ((f[x] >> j) & 1U) != 0; });
}

std::vector<BooleanFunction> coordinates(const Gbf& f) {
  std::vector<BooleanFunction> out;
  out.reserve(static_cast<std::size_t>(f.k()));
  for (int j = 0; j < f.k(); ++j) out.push_back(coordinate(f, j));
  return out;
}

Gbf assemble(std::span<const BooleanFunction> coords) {
  if (coords.empty() || coords.size() > static_cast<std::size_t>(Gbf::kMaxK)) {
    throw Error(ErrorCode::ShapeMismatch, "need between 1 and 16 coordinate functions");
  }
  const int n = coords[0].n();
  for (const auto& c : coords) {
    if (c.n() != n) throw Error(ErrorCode::ShapeMismatch, "coordinate functions on different numbers of variables");
  }
  Gbf f(n, static_cast<int>(coords.size()));
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    std::uint32_t v = 0;
    for (std::size_t j = 0; j < coords.size(); ++j) v |= static_cast<std::uint32_t>(coords[j](x)) << j;
    f.set(x, v);
  }
  return f;
}

ComponentFamily components(const Gbf& f) {
  if (f.k() < 2) throw Error(ErrorCode::InvalidK, "component functions need k >= 2");
  const auto a = coordinates(f);
  const int k = f.k();
  ComponentFamily family{k, {}};
  const std::size_t count = std::size_t{1} << (k - 1);
  family.components.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    BooleanFunction g = a[static_cast<std::size_t>(k - 1)];
    for (int j = 0; j < k - 1; ++j) {
      if ((i >> j) & 1U) g ^= a[static_cast<std::size_t>(j)];
    }
    family.components.push_back(std::move(g));
  }
  return family;
}

std::vector<WalshSpectrum> component_spectra(const Gbf& f) {
  const auto family = components(f);
  std::vector<WalshSpectrum> out;
  out.reserve(family.components.size());
  for (const auto& g : family.components) out.push_back(wht(g));
  return out;
}

GwhtSpectrum::GwhtSpectrum(int n, int k, std::vector<std::int64_t> coeffs) : n_(n), k_(k), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != size() * width()) throw Error(ErrorCode::ShapeMismatch, "GWHT coefficient storage has the wrong size");
}

CyclotomicInt GwhtSpectrum::at(std::uint64_t u) const {
  if (u >= size()) throw Error(ErrorCode::IndexOutOfRange, "spectrum index out of range");
  const auto c = coeffs(u);
  return CyclotomicInt(k_, std::vector<std::int64_t>(c.begin(), c.end()));
}

GwhtSpectrum gwht(const Gbf& f, Schedule schedule) {
  const std::size_t width = std::size_t{1} << (f.k() - 1);
  const std::uint32_t h = static_cast<std::uint32_t>(width);
  std::vector<std::int64_t> data(f.size() * width, 0);
  // ζ^v for v >= h is -ζ^{v-h}.
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    const std::uint32_t v = f[x];
    if (v < h) {
      data[x * width + v] = 1;
    } else {
      data[x * width + (v - h)] = -1;
    }
  }
  if (schedule == Schedule::Serial) {
    kernels::fwht_blocks_serial(data, width);
  } else {
    kernels::fwht_blocks_parallel(data, width);
  }
  return GwhtSpectrum(f.n(), f.k(), std::move(data));
}

SVector svector(std::span<const WalshSpectrum> spectra, std::uint64_t u) {
  const std::size_t h = spectra.size();
  SVector s{std::vector<std::int64_t>(h, 0)};
  for (std::size_t t = 0; t < h; ++t) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < h; ++i) acc += hadamard::entry(t, i) * spectra[i][u];
    s.entries[t] = acc;
  }
  return s;
}

SVector svector(const Gbf& f, std::uint64_t u) {
  if (u >= f.size()) throw Error(ErrorCode::IndexOutOfRange, "point outside V_n");
  const auto spectra = component_spectra(f);
  return svector(spectra, u);
}

GwhtSpectrum gwht_via_components(const Gbf& f) {
  const auto spectra = component_spectra(f);
  const std::size_t h = spectra.size();
  const std::int64_t divisor = static_cast<std::int64_t>(h);
  std::vector<std::int64_t> coeffs(f.size() * h);
  for (std::uint64_t u = 0; u < f.size(); ++u) {
    const auto s = svector(spectra, u);
    for (std::size_t t = 0; t < h; ++t) {
      if (s.entries[t] % divisor != 0) {
        throw Error(ErrorCode::InternalInconsistency, "S-vector entry not divisible by 2^{k-1}");
      }
      coeffs[u * h + t] = s.entries[t] / divisor;
    }
  }
  return GwhtSpectrum(f.n(), f.k(), std::move(coeffs));
}

Gbf scale(const Gbf& f, std::uint32_t a) {
  const std::uint64_t mask = f.modulus() - 1;
  return Gbf::from_function(f.n(), f.k(), [&](std::uint64_t x) { return (static_cast<std::uint64_t>(a) * f[x]) & mask; });
}

Gbf truncate(const Gbf& f, int t) {
  if (t < 0 || t >= f.k()) throw Error(ErrorCode::InvalidK, "truncation order must lie in [0, k)");
  const int k = f.k() - t;
  const std::uint32_t mask = (std::uint32_t{1} << k) - 1;
  return Gbf::from_function(f.n(), k, [&](std::uint64_t x) { return f[x] & mask; });
}

Gbf parse_gbf(std::istream& in) {
  std::string line;
  auto next_line = [&]() {
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw Error(ErrorCode::Parse, "missing `n k` header");
  std::istringstream header(line);
  long long n = 0, k = 0;
  std::string extra;
  if (!(header >> n >> k) || (header >> extra)) throw Error(ErrorCode::Parse, "header must be `n k`");
  if (n < 1 || n > BooleanFunction::kMaxVars) throw Error(ErrorCode::Parse, "n out of range [1, 24]");
  if (k < 1 || k > Gbf::kMaxK) throw Error(ErrorCode::Parse, "k out of range [1, 16]");

  Gbf f(static_cast<int>(n), static_cast<int>(k));
  std::uint64_t x = 0;
  while (next_line()) {
    std::istringstream body(line);
    std::string token;
    while (body >> token) {
      if (x >= f.size()) throw Error(ErrorCode::Parse, "more than 2^n values");
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(token, &used);
      } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "non-integer value `" + token + "`");
      }
      if (used != token.size() || token[0] == '-') throw Error(ErrorCode::Parse, "non-integer value `" + token + "`");
      if (v >= f.modulus()) throw Error(ErrorCode::Parse, "value outside [0, 2^k)");
      f.set(x++, static_cast<std::uint32_t>(v));
    }
  }
  if (x != f.size()) throw Error(ErrorCode::Parse, "expected 2^n values");
  return f;
}

Gbf parse_gbf(const std::string& text) {
  std::istringstream in(text);
  return parse_gbf(in);
}

std::string format_gbf(const Gbf& f) {
  std::string out = std::to_string(f.n()) + " " + std::to_string(f.k()) + "\n";
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    if (x > 0) out.push_back(' ');
    out += std::to_string(f[x]);
  }
  out.push_back('\n');
  return out;
}

}  // namespace gbent
