#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "homcss/f2linalg.hpp"

namespace homcss {

struct ValidationReport {
  bool valid = true;
  /// Set when invalid: the first (i, cell) with ∂_i ∂_{i+1} (cell) ≠ 0.
  std::size_t degree = 0;
  std::size_t cell = 0;
  std::string diagnostic;
};

struct HomologyProfile {
  std::vector<std::size_t> betti;
  /// ranks[i] = rank ∂_i for i = 0..D+1; ranks[0] and ranks[D+1] are zero.
  std::vector<std::size_t> ranks;
};

/// Finite chain complex over GF(2). boundary(i) maps C_i → C_{i-1}.
class ChainComplex {
 public:
  using Labels = std::vector<std::vector<std::string>>;

  ChainComplex() = default;
  /// boundaries[k] is ∂_{k+1}. Shapes must chain; ∂∂ = 0 is NOT checked here
  /// (see validate()).
  ChainComplex(std::vector<std::size_t> cell_counts,
               std::vector<F2Matrix> boundaries, Labels labels = {});

  static ChainComplex point();

  std::size_t dim() const { return counts_.size() - 1; }
  std::size_t cells(std::size_t i) const { return counts_.at(i); }
  const std::vector<std::size_t>& cell_counts() const { return counts_; }

  /// ∂_i for 1 ≤ i ≤ D.
  const F2Matrix& boundary(std::size_t i) const;
  /// ∂_i for any i; zero matrices outside 1..D.
  F2Matrix boundary_or_zero(std::size_t i) const;
  /// δ_i = ∂_{i+1}ᵀ : C_i → C_{i+1}.
  F2Matrix coboundary(std::size_t i) const;

  const Labels& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }

  bool operator==(const ChainComplex& other) const = default;

 private:
  std::vector<std::size_t> counts_{1};
  std::vector<F2Matrix> boundaries_;
  Labels labels_;
};

ValidationReport validate(const ChainComplex& x);
/// Throws ValidationError when x does not validate.
HomologyProfile homology(const ChainComplex& x);
long long euler_characteristic(const ChainComplex& x);
/// Reversed, transposed complex: degree k holds C_{D-k} with ∂'_k = δ_{D-k}.
ChainComplex cochain_complex(const ChainComplex& x);
/// Total complex of the tensor product; cells ordered by (dim a, index a,
/// index b).
ChainComplex tensor_product(const ChainComplex& x, const ChainComplex& y);

std::string to_json(const ChainComplex& x);
ChainComplex complex_from_json(const std::string& text);

}  // namespace homcss
