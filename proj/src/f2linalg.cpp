#include "homcss/f2linalg.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "homcss/error.hpp"

namespace homcss {

namespace {

std::size_t word_count(std::size_t bits) {
  return (bits + F2Vector::kWordBits - 1) / F2Vector::kWordBits;
}

// Row-reduces in place to reduced row echelon form. Pivot columns are chosen
// left to right, pivot rows are the lowest-index candidates. Returns the
// pivot column of each leading row.
std::vector<std::size_t> reduce_rows(std::vector<F2Vector>& rows,
                                     std::size_t cols,
                                     F2Vector* rhs = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t p = next;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    if (p != next) {
      std::swap(rows[p], rows[next]);
      if (rhs) {
        bool a = rhs->get(p), b = rhs->get(next);
        rhs->set(p, b);
        rhs->set(next, a);
      }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(c)) {
        rows[r] ^= rows[next];
        if (rhs && rhs->get(next)) rhs->flip(r);
      }
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

}  // namespace

F2Vector::F2Vector(std::size_t length)
    : length_(length), words_(word_count(length), 0) {}

F2Vector::F2Vector(std::size_t length, const std::vector<std::size_t>& support)
    : F2Vector(length) {
  for (auto i : support) {
    if (i >= length) throw DimensionError("support index out of range");
    flip(i);
  }
}

void F2Vector::set(std::size_t i, bool value) {
  const Word bit = Word{1} << (i % kWordBits);
  if (value)
    words_[i / kWordBits] |= bit;
  else
    words_[i / kWordBits] &= ~bit;
}

std::size_t F2Vector::weight() const {
  std::size_t w = 0;
  for (auto x : words_) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

bool F2Vector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](Word x) { return x == 0; });
}

std::size_t F2Vector::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * kWordBits + std::countr_zero(words_[w]);
  return length_;
}

std::vector<std::size_t> F2Vector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word x = words_[w];
    while (x) {
      out.push_back(w * kWordBits + std::countr_zero(x));
      x &= x - 1;
    }
  }
  return out;
}

F2Vector& F2Vector::operator^=(const F2Vector& other) {
  if (other.length_ != length_) throw DimensionError("vector length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool F2Vector::dot(const F2Vector& other) const {
  if (other.length_ != length_) throw DimensionError("vector length mismatch");
  Word acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w)
    acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

bool support_lex_less(const F2Vector& a, const F2Vector& b) {
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t w = 0; w < wa.size(); ++w) {
    const auto diff = wa[w] ^ wb[w];
    if (diff) return (wa[w] >> std::countr_zero(diff)) & 1U;
  }
  return false;
}

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, F2Vector(cols)) {}

F2Matrix::F2Matrix(
    std::size_t rows, std::size_t cols,
    const std::vector<std::pair<std::size_t, std::size_t>>& entries)
    : F2Matrix(rows, cols) {
  for (const auto& [r, c] : entries) {
    if (r >= rows || c >= cols) throw DimensionError("matrix entry out of range");
    data_[r].flip(c);
  }
}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].set(i);
  return m;
}

F2Matrix F2Matrix::from_rows(std::size_t cols, std::vector<F2Vector> rows) {
  F2Matrix m;
  m.rows_ = rows.size();
  m.cols_ = cols;
  for (const auto& r : rows)
    if (r.size() != cols) throw DimensionError("row length mismatch");
  m.data_ = std::move(rows);
  return m;
}

F2Vector F2Matrix::column(std::size_t c) const {
  F2Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (data_[r].get(c)) v.set(r);
  return v;
}

std::vector<std::pair<std::size_t, std::size_t>> F2Matrix::entries() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t r = 0; r < rows_; ++r)
    for (auto c : data_[r].support()) out.emplace_back(r, c);
  return out;
}

std::size_t F2Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.weight();
  return n;
}

bool F2Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const F2Vector& r) { return r.is_zero(); });
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (auto c : data_[r].support()) t.data_[c].set(r);
  return t;
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
  F2Matrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (auto k : data_[r].support()) out.data_[r] ^= rhs.data_[k];
  return out;
}

F2Vector F2Matrix::apply(const F2Vector& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
  F2Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (data_[r].dot(v)) out.set(r);
  return out;
}

std::size_t F2Matrix::max_row_weight() const {
  std::size_t w = 0;
  for (const auto& r : data_) w = std::max(w, r.weight());
  return w;
}

std::size_t F2Matrix::max_col_weight() const {
  std::vector<std::size_t> counts(cols_, 0);
  for (const auto& r : data_)
    for (auto c : r.support()) ++counts[c];
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

std::size_t rank(const F2Matrix& m) {
  auto rows = m.row_vectors();
  return reduce_rows(rows, m.cols()).size();
}

std::vector<F2Vector> kernel_basis(const F2Matrix& m) {
  auto rows = m.row_vectors();
  const auto pivots = reduce_rows(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<F2Vector> basis;
  basis.reserve(m.cols() - pivots.size());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    F2Vector v(m.cols());
    v.set(free);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (rows[r].get(free)) v.set(pivots[r]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<F2Vector> solve_membership(const F2Matrix& m, const F2Vector& v) {
  if (v.size() != m.rows())
    throw DimensionError("solve_membership: vector length " +
                         std::to_string(v.size()) + " != matrix rows " +
                         std::to_string(m.rows()));
  auto rows = m.row_vectors();
  F2Vector rhs = v;
  const auto pivots = reduce_rows(rows, m.cols(), &rhs);
  for (std::size_t r = pivots.size(); r < rows.size(); ++r)
    if (rhs.get(r)) return std::nullopt;
  F2Vector x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (rhs.get(r)) x.set(pivots[r]);
  return x;
}

F2Vector EchelonBasis::reduce(F2Vector v) const {
  if (v.size() != length_) throw DimensionError("echelon basis length mismatch");
  for (const auto& [pivot, b] : basis_)
    if (v.get(pivot)) v ^= b;
  return v;
}

bool EchelonBasis::insert(const F2Vector& v) {
  auto r = reduce(v);
  const auto pivot = r.first_set();
  if (pivot == length_) return false;
  auto pos = std::lower_bound(
      basis_.begin(), basis_.end(), pivot,
      [](const auto& entry, std::size_t p) { return entry.first < p; });
  basis_.insert(pos, {pivot, std::move(r)});
  return true;
}

std::string to_matrix_text(const F2Matrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (const auto& [r, c] : m.entries()) out << r << ' ' << c << '\n';
  return out.str();
}

F2Matrix parse_matrix_text(const std::string& text) {
  std::istringstream in(text);
  long long rows = -1, cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0)
    throw ParseError("matrix text: expected \"rows cols\" header");
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  long long r = 0, c = 0;
  while (in >> r) {
    if (!(in >> c)) throw ParseError("matrix text: dangling row index");
    if (r < 0 || c < 0 || r >= rows || c >= cols)
      throw ParseError("matrix text: entry (" + std::to_string(r) + ", " +
                       std::to_string(c) + ") out of range");
    entries.emplace_back(r, c);
  }
  if (!in.eof()) throw ParseError("matrix text: non-numeric token");
  std::sort(entries.begin(), entries.end());
  if (std::adjacent_find(entries.begin(), entries.end()) != entries.end())
    throw ParseError("matrix text: duplicate entry");
  return F2Matrix(rows, cols, entries);
}

}  // namespace homcss
