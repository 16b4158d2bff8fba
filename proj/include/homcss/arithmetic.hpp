#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homcss {

using BigInt = boost::multiprecision::cpp_int;

/// a + b√2 with arbitrary-precision integer parts.
struct ZSqrt2 {
  BigInt a = 0;
  BigInt b = 0;

  ZSqrt2() = default;
  ZSqrt2(BigInt a_, BigInt b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}

  static ZSqrt2 sqrt2() { return {0, 1}; }

  ZSqrt2 conjugate() const { return {a, -b}; }
  /// a² − 2b², the product with the conjugate.
  BigInt norm() const { return a * a - 2 * b * b; }
  bool is_zero() const { return a == 0 && b == 0; }
  /// (φ₁(x), φ₂(x)): the two real embeddings.
  std::pair<double, double> embed() const;

  ZSqrt2& operator+=(const ZSqrt2& o);
  ZSqrt2& operator-=(const ZSqrt2& o);
  ZSqrt2& operator*=(const ZSqrt2& o);
  friend ZSqrt2 operator+(ZSqrt2 x, const ZSqrt2& y) { return x += y; }
  friend ZSqrt2 operator-(ZSqrt2 x, const ZSqrt2& y) { return x -= y; }
  friend ZSqrt2 operator*(ZSqrt2 x, const ZSqrt2& y) { return x *= y; }
  ZSqrt2 operator-() const { return {-a, -b}; }
  bool operator==(const ZSqrt2& o) const { return a == o.a && b == o.b; }

  std::string to_string() const;
};

/// x / y when the quotient lies in Z[√2].
std::optional<ZSqrt2> exact_divide(const ZSqrt2& x, const ZSqrt2& y);

/// Square matrix A + B√2.
class ZSqrt2Matrix {
 public:
  ZSqrt2Matrix() = default;
  explicit ZSqrt2Matrix(std::size_t size);
  static ZSqrt2Matrix identity(std::size_t size);
  static ZSqrt2Matrix from_parts(const std::vector<std::vector<BigInt>>& a,
                                 const std::vector<std::vector<BigInt>>& b);

  std::size_t size() const { return n_; }
  ZSqrt2& at(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const ZSqrt2& at(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  std::vector<std::vector<BigInt>> a_part() const;
  std::vector<std::vector<BigInt>> b_part() const;

  ZSqrt2Matrix operator*(const ZSqrt2Matrix& rhs) const;
  ZSqrt2Matrix transpose() const;
  bool operator==(const ZSqrt2Matrix& o) const { return n_ == o.n_ && data_ == o.data_; }
  bool is_identity() const { return *this == identity(n_); }

 private:
  std::size_t n_ = 0;
  std::vector<ZSqrt2> data_;
};

/// Diagonal quadratic form Σ c_i x_i².
struct QuadraticForm {
  std::vector<ZSqrt2> diagonal;

  std::size_t size() const { return diagonal.size(); }
  /// −√2 x₀² + Σ_{i=1}^D x_i².
  static QuadraticForm sqrt2_form(std::size_t d);
  /// +√2 x₀² + Σ_{i=1}^D x_i².
  static QuadraticForm twisted_form(std::size_t d);
  /// −x₀² + Σ_{i=1}^D x_i².
  static QuadraticForm integral_form(std::size_t d);

  QuadraticForm conjugate() const;
  ZSqrt2 evaluate(const std::vector<ZSqrt2>& v) const;
  ZSqrt2 pair(const std::vector<ZSqrt2>& u, const std::vector<ZSqrt2>& v) const;
  bool operator==(const QuadraticForm& o) const { return diagonal == o.diagonal; }
};

/// Fraction-free (Bareiss) elimination; every division is exact in Z[√2].
ZSqrt2 determinant(const ZSqrt2Matrix& m);

/// MᵀFM = F and det M = 1, exactly.
bool preserves_form(const ZSqrt2Matrix& m, const QuadraticForm& q);

/// F⁻¹MᵀF. Throws InvalidArgument if M does not preserve q.
ZSqrt2Matrix group_inverse(const ZSqrt2Matrix& m, const QuadraticForm& q);

/// Entry-wise conjugation. Requires preserves_form(m, q); asserts the result
/// preserves q.conjugate() and throws ValidationError otherwise.
ZSqrt2Matrix galois_twist(const ZSqrt2Matrix& m, const QuadraticForm& q);

/// max |entry| over A and B.
BigInt entry_norm(const ZSqrt2Matrix& m);

/// 3(D+1) · max_i |s_i|, so that any word of length w has norm ≤ C₂^w.
BigInt growth_constant(const std::vector<ZSqrt2Matrix>& generators);

/// Residues (Ā, B̄) mod N of A + B√2.
class QuotientElement {
 public:
  QuotientElement(std::size_t size, std::uint64_t modulus);
  static QuotientElement identity(std::size_t size, std::uint64_t modulus);

  std::size_t size() const { return n_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t a(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  std::uint64_t b(std::size_t r, std::size_t c) const { return b_[r * n_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint64_t a, std::uint64_t b);

  /// Product in (Z/N)[√2]: (ā, b̄)(c̄, d̄) = (āc̄ + 2b̄d̄, ād̄ + b̄c̄).
  QuotientElement operator*(const QuotientElement& rhs) const;
  bool operator==(const QuotientElement& o) const = default;
  bool is_identity() const { return *this == identity(n_, modulus_); }

  /// Fixed-width big-endian bytes of Ā then B̄, row-major.
  std::string key() const;
  std::string key_hex() const;

 private:
  std::size_t n_;
  std::uint64_t modulus_;
  std::vector<std::uint64_t> a_;
  std::vector<std::uint64_t> b_;
};

/// Throws InvalidArgument when N < 2.
QuotientElement reduce_mod(const ZSqrt2Matrix& m, std::uint64_t modulus);

/// A ≡ Id and B ≡ 0 (mod N).
bool gamma_member(const ZSqrt2Matrix& m, std::uint64_t modulus);

struct EntryWitness {
  bool holds = false;
  std::size_t row = 0;
  std::size_t col = 0;
  char part = 'A';  // 'A' for A − Id, 'B' for B
  BigInt value = 0;
};

/// Largest |entry| of (A − Id, B), checked against N − 1. Throws
/// InvalidArgument for the identity or a non-member of Γ_N.
EntryWitness entry_bound_check(const ZSqrt2Matrix& m, std::uint64_t modulus);

/// ⌈log(N−1) / log C₂⌉: the fewest generators any nonidentity Γ_N element
/// can be a word in. Zero when N − 1 ≤ 1.
std::size_t word_length_lower_bound(std::uint64_t modulus, double growth);

struct ClosureResult {
  std::size_t order = 0;
  bool complete = true;  // false when the cap stopped the search
  BigInt ambient_bound;  // N^{2(D+1)²}
  bool within_bound = true;
  /// Canonical keys (hex) of every element reached, sorted.
  std::vector<std::string> keys;
  /// words[i] = generator indices whose product reaches keys[i].
  std::vector<std::vector<std::size_t>> words;
};

/// Breadth-first closure of the reduced generators under right
/// multiplication.
ClosureResult quotient_closure(const std::vector<ZSqrt2Matrix>& generators,
                               std::uint64_t modulus, std::size_t cap);

/// Nonidentity Γ_N elements w·w'⁻¹ found where two words w, w' in the
/// generators reduce to the same residue during the closure search.
/// Deduplicated, in discovery order.
std::vector<ZSqrt2Matrix> gamma_search(const std::vector<ZSqrt2Matrix>& generators,
                                       const QuadraticForm& q,
                                       std::uint64_t modulus, std::size_t cap);

/// All M with MᵀFM = F, det M = 1, and every entry a + b√2 with |a| ≤ ha,
/// |b| ≤ hb, found column by column. Identity excluded. At most `limit`
/// results, in enumeration order.
std::vector<ZSqrt2Matrix> search_form_preserving(const QuadraticForm& q,
                                                 std::int64_t ha, std::int64_t hb,
                                                 std::size_t limit = 10000);

/// c₁ log N − c₂.
double injectivity_radius_bound(double modulus, double c1, double c2);

std::string generators_to_json(const std::vector<ZSqrt2Matrix>& gens);
std::vector<ZSqrt2Matrix> generators_from_json(const std::string& text);

}  // namespace homcss
