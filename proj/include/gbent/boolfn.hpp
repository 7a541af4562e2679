#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace gbent {

// Truth table of a map F_2^n -> F_2, packed 64 entries per word.
//
// Entry x holds f(x), where bit i of the integer x is the value of x_i.
// Bits past 2^n in the last word are kept zero so that word-wise equality
// and weight are exact.
class BooleanFunction {
 public:
  static constexpr int kMaxVars = 24;

  BooleanFunction() : BooleanFunction(1) {}
  explicit BooleanFunction(int n);

  template <typename Pred>
  static BooleanFunction from_predicate(int n, Pred&& pred) {
    BooleanFunction f(n);
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      if (pred(x)) f.set(x, true);
    }
    return f;
  }

  // x ↦ u·x.
  static BooleanFunction linear(int n, std::uint64_t u);

  int n() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << n_; }

  bool operator()(std::uint64_t x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1U; }
  bool get(std::uint64_t x) const;
  void set(std::uint64_t x, bool value);

  std::uint64_t weight() const noexcept;
  bool is_zero() const noexcept;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  BooleanFunction& operator^=(const BooleanFunction& other);
  BooleanFunction& operator&=(const BooleanFunction& other);
  BooleanFunction& operator|=(const BooleanFunction& other);
  BooleanFunction operator~() const;

  friend BooleanFunction operator^(BooleanFunction a, const BooleanFunction& b) { return a ^= b; }
  friend BooleanFunction operator&(BooleanFunction a, const BooleanFunction& b) { return a &= b; }
  friend BooleanFunction operator|(BooleanFunction a, const BooleanFunction& b) { return a |= b; }
  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  void check_same_n(const BooleanFunction& other) const;
  void clear_padding() noexcept;

  int n_;
  std::vector<std::uint64_t> words_;
};

struct WalshSpectrum {
  int n = 0;
  std::vector<std::int64_t> values;

  std::int64_t operator[](std::uint64_t u) const { return values[u]; }
  std::int64_t parseval_sum() const;
};

enum class SpectralKind { Bent, SemiBent, Plateaued, FlatOther, General };

struct SpectralClass {
  SpectralKind kind = SpectralKind::General;
  int s = -1;  // plateau order; meaningful for Bent (0), SemiBent (1), Plateaued

  // The s with W ∈ {0, ±2^{(n+s)/2}}, or -1 when the spectrum is not plateaued.
  int plateau_order() const noexcept;
  std::string to_string() const;

  friend bool operator==(const SpectralClass&, const SpectralClass&) = default;
};

// Walsh-Hadamard spectrum via the in-place butterfly; O(n 2^n).
WalshSpectrum wht(const BooleanFunction& f);

// Bent / SemiBent / Plateaued(s) / General. Affine spectra (a single
// ±2^n entry) are reported as Plateaued(n).
SpectralClass classify(const WalshSpectrum& spectrum);
inline SpectralClass classify(const BooleanFunction& f) { return classify(wht(f)); }

bool is_bent(const WalshSpectrum& spectrum);
// Values in {0, ±2^{(n+1)/2}}, n odd. Unlike classify, this includes the
// affine functions of one variable.
bool is_semi_bent(const WalshSpectrum& spectrum);

// f* with W_f(u) = 2^{n/2} (-1)^{f*(u)}; throws NotBent.
BooleanFunction dual(const BooleanFunction& f);
BooleanFunction dual_from_spectrum(const WalshSpectrum& spectrum);

// Möbius transform: coefficient at mask m is the ANF coefficient of the
// monomial ∏_{i ∈ m} x_i. The transform is an involution over F_2.
BooleanFunction anf(const BooleanFunction& f);
BooleanFunction anf_inverse(const BooleanFunction& coefficients);

// g0 g1 ⊕ g0 g2 ⊕ g1 g2.
BooleanFunction majority(const BooleanFunction& g0, const BooleanFunction& g1,
                         const BooleanFunction& g2);

// Truth-table text format: line `n`, then 2^n characters 0/1 in index
// order; with hex=true, 2^n/4 hex digits, most-significant nibble first.
// Lines starting with '#' are comments.
BooleanFunction parse_truth_table(std::istream& in, bool hex = false);
BooleanFunction parse_truth_table(const std::string& text, bool hex = false);
std::string format_truth_table(const BooleanFunction& f, bool hex = false);

}  // namespace gbent
