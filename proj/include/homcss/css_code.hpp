#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "homcss/chain_complex.hpp"
#include "homcss/f2linalg.hpp"

namespace homcss {

/// Largest kernel dimension exact enumeration will walk by default.
inline constexpr std::size_t kDefaultBudget = 26;
/// Hard ceiling: kernel enumeration keeps its index in 64 bits.
inline constexpr std::size_t kMaxBudget = 62;

struct SearchOptions {
  std::size_t budget = kDefaultBudget;
  std::size_t w_max = 4;
  unsigned workers = 1;
};

/// Minimum distance, either exact (lo == hi, witness set) or a certified
/// interval.
struct Distance {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::vector<std::size_t> witness;

  bool exact() const { return lo == hi; }
};

struct CodeParams {
  std::size_t n = 0;
  std::size_t k = 0;
  Distance d;

  double rate() const { return n ? double(k) / double(n) : 0.0; }
  double delta_lo() const { return n ? double(d.lo) / double(n) : 0.0; }
  double delta_hi() const { return n ? double(d.hi) / double(n) : 0.0; }
  double zemor_lo() const { return n ? double(k) * d.lo * d.lo / double(n) : 0.0; }
  double zemor_hi() const { return n ? double(k) * d.hi * d.hi / double(n) : 0.0; }
};

/// CSS code (B_i, B^i) of a chain complex in degree i.
///
/// The cycle side searches ker ∂_i for vectors outside the column span of
/// ∂_{i+1}; the cocycle side searches ker δ_i for vectors outside the row
/// span of ∂_i.
class CssCode {
 public:
  /// Throws ValidationError on an invalid complex and InvalidArgument on a
  /// degree outside 0..D.
  static CssCode build(const ChainComplex& x, std::size_t degree);

  std::size_t n() const { return n_; }
  std::size_t degree() const { return degree_; }

  /// W1 generators, one per row: columns of ∂_{i+1}.
  const F2Matrix& w1() const { return w1_; }
  /// W2 generators, one per row: rows of ∂_i.
  const F2Matrix& w2() const { return w2_; }

 private:
  std::size_t n_ = 0;
  std::size_t degree_ = 0;
  F2Matrix w1_;
  F2Matrix w2_;
};

/// n − rank W1 − rank W2.
std::size_t code_dimension(const CssCode& code);

/// Largest generator weight over W1 ∪ W2.
std::size_t ldpc_check(const CssCode& code);

/// Both sides, by Gray-code walk over each kernel. Throws BudgetError when a
/// kernel dimension exceeds opts.budget and NoNontrivialClass when k = 0.
CodeParams distance_exact(const CssCode& code, const SearchOptions& opts = {});

/// Both sides, all supports of weight ≤ opts.w_max in increasing weight.
/// Exact when a witness is found, else [w_max + 1, n].
CodeParams distance_bounded(const CssCode& code, const SearchOptions& opts = {});

/// Exact when both kernels fit the budget, bounded otherwise.
CodeParams distance_auto(const CssCode& code, const SearchOptions& opts = {});

/// Minimum weight over Z_i ∖ B_i only. Uses exact enumeration within budget,
/// otherwise bounded search; throws BudgetError if neither certifies.
Distance combinatorial_systole(const ChainComplex& x, std::size_t degree,
                               const SearchOptions& opts = {});

struct ZemorRow {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d_lo = 0;
  std::size_t d_hi = 0;
  double ratio_lo = 0;
  double ratio_hi = 0;
  /// log_n(k d²); absent when n ≤ 1 or k = 0.
  std::optional<double> exponent_lo;
  std::optional<double> exponent_hi;
  /// k d² ≥ n^{1+ε} certified by the lower end of the interval.
  bool exceeds = false;
};

std::vector<ZemorRow> zemor_report(const std::vector<CodeParams>& params,
                                   double epsilon = 0.0);

/// {"n","k","d":{"exact"}|{"lo","hi"},"rate","delta","zemor","witness"}.
std::string params_to_json(const CodeParams& p);

}  // namespace homcss
