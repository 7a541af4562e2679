#include "gbent/boolfn.hpp"

#include <bit>
#include <cstdlib>
#include <istream>
#include <sstream>

#include "gbent/error.hpp"
#include "gbent/kernels.hpp"

namespace gbent {
namespace {

std::size_t word_count(int n) { return n >= 6 ? (std::size_t{1} << (n - 6)) : 1; }

// Masks selecting the in-word positions whose index bit i is zero.
constexpr std::uint64_t kLowHalfMask[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

int parse_var_count(const std::string& line) {
  std::istringstream ss(line);
  int n = -1;
  std::string rest;
  if (!(ss >> n) || (ss >> rest)) throw Error(ErrorCode::Parse, "expected a single integer n on the header line");
  if (n < 1 || n > BooleanFunction::kMaxVars) throw Error(ErrorCode::Parse, "n out of range [1, 24]");
  return n;
}

}  // namespace

BooleanFunction::BooleanFunction(int n) : n_(n) {
  if (n < 1 || n > kMaxVars) throw Error(ErrorCode::InvalidN, "Boolean functions need 1 <= n <= 24");
  words_.assign(word_count(n), 0);
}

BooleanFunction BooleanFunction::linear(int n, std::uint64_t u) {
  return from_predicate(n, [u](std::uint64_t x) { return (std::popcount(u & x) & 1) != 0; });
}

bool BooleanFunction::get(std::uint64_t x) const {
  if (x >= size()) throw Error(ErrorCode::IndexOutOfRange, "truth-table index out of range");
  return (*this)(x);
}

void BooleanFunction::set(std::uint64_t x, bool value) {
  if (x >= size()) throw Error(ErrorCode::IndexOutOfRange, "truth-table index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (x & 63);
  if (value) {
    words_[x >> 6] |= bit;
  } else {
    words_[x >> 6] &= ~bit;
  }
}

std::uint64_t BooleanFunction::weight() const noexcept {
  std::uint64_t w = 0;
  for (auto word : words_) w += static_cast<std::uint64_t>(std::popcount(word));
  return w;
}

bool BooleanFunction::is_zero() const noexcept {
  for (auto word : words_) {
    if (word != 0) return false;
  }
  return true;
}

void BooleanFunction::check_same_n(const BooleanFunction& other) const {
  if (other.n_ != n_) throw Error(ErrorCode::ShapeMismatch, "Boolean functions on different numbers of variables");
}

void BooleanFunction::clear_padding() noexcept {
  if (n_ < 6) words_[0] &= (std::uint64_t{1} << (std::uint64_t{1} << n_)) - 1;
}

BooleanFunction& BooleanFunction::operator^=(const BooleanFunction& other) {
  check_same_n(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BooleanFunction& BooleanFunction::operator&=(const BooleanFunction& other) {
  check_same_n(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BooleanFunction& BooleanFunction::operator|=(const BooleanFunction& other) {
  check_same_n(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BooleanFunction BooleanFunction::operator~() const {
  BooleanFunction r = *this;
  for (auto& word : r.words_) word = ~word;
  r.clear_padding();
  return r;
}

std::int64_t WalshSpectrum::parseval_sum() const {
  std::int64_t total = 0;
  for (auto v : values) total += v * v;
  return total;
}

int SpectralClass::plateau_order() const noexcept {
  switch (kind) {
    case SpectralKind::Bent: return 0;
    case SpectralKind::SemiBent: return 1;
    case SpectralKind::Plateaued: return s;
    default: return -1;
  }
}

std::string SpectralClass::to_string() const {
  switch (kind) {
    case SpectralKind::Bent: return "bent";
    case SpectralKind::SemiBent: return "semi-bent";
    case SpectralKind::Plateaued: return "plateaued(" + std::to_string(s) + ")";
    case SpectralKind::FlatOther: return "flat-other";
    case SpectralKind::General: return "general";
  }
  return "general";
}

WalshSpectrum wht(const BooleanFunction& f) {
  WalshSpectrum out;
  out.n = f.n();
  out.values.resize(f.size());
  for (std::uint64_t x = 0; x < f.size(); ++x) out.values[x] = f(x) ? -1 : 1;
  kernels::fwht_parallel(out.values);
  return out;
}

SpectralClass classify(const WalshSpectrum& spectrum) {
  const int n = spectrum.n;
  std::int64_t magnitude = 0;
  bool has_zero = false;
  for (auto v : spectrum.values) {
    const std::int64_t a = std::llabs(v);
    if (a == 0) {
      has_zero = true;
    } else if (magnitude == 0) {
      magnitude = a;
    } else if (a != magnitude) {
      return {SpectralKind::General, -1};
    }
  }
  if (magnitude == 0) return {SpectralKind::General, -1};
  if (!std::has_single_bit(static_cast<std::uint64_t>(magnitude))) return {SpectralKind::FlatOther, -1};

  const int e = std::countr_zero(static_cast<std::uint64_t>(magnitude));
  const int s = 2 * e - n;
  if (s < 0 || s > n) return {SpectralKind::FlatOther, -1};
  if (s == n) return {SpectralKind::Plateaued, n};
  if (s == 0) return has_zero ? SpectralClass{SpectralKind::FlatOther, -1} : SpectralClass{SpectralKind::Bent, 0};
  if (s == 1) return {SpectralKind::SemiBent, 1};
  return {SpectralKind::Plateaued, s};
}

bool is_bent(const WalshSpectrum& spectrum) { return classify(spectrum).kind == SpectralKind::Bent; }

bool is_semi_bent(const WalshSpectrum& spectrum) { return spectrum.n % 2 == 1 && classify(spectrum).plateau_order() == 1; }

BooleanFunction dual_from_spectrum(const WalshSpectrum& spectrum) {
  if (spectrum.n % 2 != 0) throw Error(ErrorCode::NotBent, "bent functions need an even number of variables");
  const std::int64_t flat = std::int64_t{1} << (spectrum.n / 2);
  BooleanFunction d(spectrum.n);
  for (std::uint64_t u = 0; u < spectrum.values.size(); ++u) {
    const std::int64_t w = spectrum.values[u];
    if (w == -flat) {
      d.set(u, true);
    } else if (w != flat) {
      throw Error(ErrorCode::NotBent, "|W_f(u)| != 2^{n/2} at u = " + std::to_string(u));
    }
  }
  return d;
}

BooleanFunction dual(const BooleanFunction& f) { return dual_from_spectrum(wht(f)); }

BooleanFunction anf(const BooleanFunction& f) {
  std::vector<std::uint64_t> w(f.words().begin(), f.words().end());
  const int in_word = f.n() < 6 ? f.n() : 6;
  for (auto& word : w) {
    for (int i = 0; i < in_word; ++i) word ^= (word & kLowHalfMask[i]) << (1U << i);
  }
  for (std::size_t stride = 1; stride < w.size(); stride <<= 1) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if ((j & stride) != 0) w[j] ^= w[j ^ stride];
    }
  }
  BooleanFunction out(f.n());
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    if ((w[x >> 6] >> (x & 63)) & 1U) out.set(x, true);
  }
  return out;
}

BooleanFunction anf_inverse(const BooleanFunction& coefficients) { return anf(coefficients); }

BooleanFunction majority(const BooleanFunction& g0, const BooleanFunction& g1, const BooleanFunction& g2) {
  return (g0 & g1) ^ (g0 & g2) ^ (g1 & g2);
}

BooleanFunction parse_truth_table(std::istream& in, bool hex) {
  std::string line;
  if (!next_content_line(in, line)) throw Error(ErrorCode::Parse, "missing header line");
  const int n = parse_var_count(line);

  std::string body;
  while (next_content_line(in, line)) {
    for (char c : line) {
      if (c != ' ' && c != '\t' && c != '\r') body.push_back(c);
    }
  }

  BooleanFunction f(n);
  if (!hex) {
    if (body.size() != f.size()) throw Error(ErrorCode::Parse, "expected 2^n binary digits");
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      if (body[x] == '1') {
        f.set(x, true);
      } else if (body[x] != '0') {
        throw Error(ErrorCode::Parse, "truth table must contain only 0 and 1");
      }
    }
    return f;
  }

  if (n < 2) throw Error(ErrorCode::Parse, "hex form needs n >= 2");
  const std::uint64_t digits = f.size() / 4;
  if (body.size() != digits) throw Error(ErrorCode::Parse, "expected 2^n/4 hex digits");
  for (std::uint64_t d = 0; d < digits; ++d) {
    const char c = body[d];
    int nibble;
    if (c >= '0' && c <= '9') {
      nibble = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      nibble = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      nibble = c - 'A' + 10;
    } else {
      throw Error(ErrorCode::Parse, "invalid hex digit");
    }
    const std::uint64_t base = 4 * (digits - 1 - d);
    for (int b = 0; b < 4; ++b) {
      if ((nibble >> b) & 1) f.set(base + static_cast<std::uint64_t>(b), true);
    }
  }
  return f;
}

BooleanFunction parse_truth_table(const std::string& text, bool hex) {
  std::istringstream in(text);
  return parse_truth_table(in, hex);
}

std::string format_truth_table(const BooleanFunction& f, bool hex) {
  std::string out = std::to_string(f.n()) + "\n";
  if (!hex) {
    for (std::uint64_t x = 0; x < f.size(); ++x) out.push_back(f(x) ? '1' : '0');
  } else {
    if (f.n() < 2) throw Error(ErrorCode::InvalidN, "hex form needs n >= 2");
    static constexpr char kDigits[] = "0123456789abcdef";
    const std::uint64_t digits = f.size() / 4;
    for (std::uint64_t d = 0; d < digits; ++d) {
      const std::uint64_t base = 4 * (digits - 1 - d);
      int nibble = 0;
      for (int b = 0; b < 4; ++b) nibble |= static_cast<int>(f(base + static_cast<std::uint64_t>(b))) << b;
      out.push_back(kDigits[nibble]);
    }
  }
  out.push_back('\n');
  return out;
}

}  // namespace gbent
