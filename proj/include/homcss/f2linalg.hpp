#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homcss {

/// Bit-packed vector over the two-element field.
class F2Vector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  F2Vector() = default;
  explicit F2Vector(std::size_t length);
  F2Vector(std::size_t length, const std::vector<std::size_t>& support);

  std::size_t size() const { return length_; }
  bool get(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t weight() const;
  bool is_zero() const;
  /// Lowest set index, or size() when zero.
  std::size_t first_set() const;
  std::vector<std::size_t> support() const;

  F2Vector& operator^=(const F2Vector& other);
  friend F2Vector operator^(F2Vector a, const F2Vector& b) { return a ^= b; }
  bool operator==(const F2Vector& other) const = default;

  /// Mod-2 inner product.
  bool dot(const F2Vector& other) const;

  const std::vector<Word>& words() const { return words_; }
  std::vector<Word>& words() { return words_; }

 private:
  std::size_t length_ = 0;
  std::vector<Word> words_;
};

/// Lexicographic order on sorted supports: the vector owning the lowest
/// differing index comes first.
bool support_lex_less(const F2Vector& a, const F2Vector& b);

/// Sparse-input, bit-packed-row matrix over the two-element field.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);
  /// Repeated (row, col) pairs cancel in pairs.
  F2Matrix(std::size_t rows, std::size_t cols,
           const std::vector<std::pair<std::size_t, std::size_t>>& entries);

  static F2Matrix identity(std::size_t n);
  static F2Matrix from_rows(std::size_t cols, std::vector<F2Vector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
  void flip(std::size_t r, std::size_t c) { data_[r].flip(c); }
  const F2Vector& row(std::size_t r) const { return data_[r]; }
  F2Vector column(std::size_t c) const;
  const std::vector<F2Vector>& row_vectors() const { return data_; }

  /// Nonzero entries, sorted lexicographically.
  std::vector<std::pair<std::size_t, std::size_t>> entries() const;
  std::size_t nonzeros() const;
  bool is_zero() const;

  F2Matrix transpose() const;
  F2Matrix operator*(const F2Matrix& rhs) const;
  F2Vector apply(const F2Vector& v) const;
  bool operator==(const F2Matrix& other) const = default;

  std::size_t max_row_weight() const;
  std::size_t max_col_weight() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F2Vector> data_;
};

std::size_t rank(const F2Matrix& m);

/// Basis of {v : Mv = 0}, one vector per free column of the reduced row
/// echelon form, in ascending free-column order.
std::vector<F2Vector> kernel_basis(const F2Matrix& m);

/// Some x with Mx = v, free variables set to zero; nullopt if v is not in
/// the column space. Throws DimensionError when v.size() != m.rows().
std::optional<F2Vector> solve_membership(const F2Matrix& m, const F2Vector& v);

/// Incremental span over GF(2), keyed by each member's lowest set index.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t length) : length_(length) {}

  /// Reduces v against the basis; zero result means v is in the span.
  F2Vector reduce(F2Vector v) const;
  bool contains(const F2Vector& v) const { return reduce(v).is_zero(); }
  /// Returns true if v was independent and has been added.
  bool insert(const F2Vector& v);

  std::size_t dimension() const { return basis_.size(); }
  std::size_t length() const { return length_; }

 private:
  std::size_t length_;
  // Sorted by pivot (lowest set bit).
  std::vector<std::pair<std::size_t, F2Vector>> basis_;
};

/// "rows cols" header then one "r c" line per entry, sorted.
std::string to_matrix_text(const F2Matrix& m);
F2Matrix parse_matrix_text(const std::string& text);

}  // namespace homcss
