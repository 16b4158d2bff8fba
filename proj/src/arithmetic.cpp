#include "homcss/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

#include "json.hpp"

#include "homcss/error.hpp"

namespace homcss {

namespace {

using nlohmann::json;

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

std::uint64_t residue(const BigInt& x, std::uint64_t modulus) {
  BigInt r = x % modulus;
  if (r < 0) r += modulus;
  return r.convert_to<std::uint64_t>();
}

json big_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto digits = s.substr(!s.empty() && s[0] == '-');
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); }))
      throw ParseError("generator JSON: bad integer \"" + s + "\"");
    return BigInt(s);
  }
  throw ParseError("generator JSON: entries must be integers");
}

std::string to_hex(const std::string& bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (unsigned char ch : bytes) {
    out.push_back(kDigits[ch >> 4]);
    out.push_back(kDigits[ch & 0xF]);
  }
  return out;
}

}  // namespace

std::pair<double, double> ZSqrt2::embed() const {
  const double x = a.convert_to<double>();
  const double y = b.convert_to<double>() * std::sqrt(2.0);
  return {x + y, x - y};
}

ZSqrt2& ZSqrt2::operator+=(const ZSqrt2& o) {
  a += o.a;
  b += o.b;
  return *this;
}

ZSqrt2& ZSqrt2::operator-=(const ZSqrt2& o) {
  a -= o.a;
  b -= o.b;
  return *this;
}

ZSqrt2& ZSqrt2::operator*=(const ZSqrt2& o) {
  BigInt na = a * o.a + 2 * b * o.b;
  BigInt nb = a * o.b + b * o.a;
  a = std::move(na);
  b = std::move(nb);
  return *this;
}

std::string ZSqrt2::to_string() const {
  if (b == 0) return a.str();
  std::string s = a == 0 ? "" : a.str();
  if (b < 0)
    s += "-";
  else if (a != 0)
    s += "+";
  if (abs_big(b) != 1) s += abs_big(b).str();
  return s + "r2";
}

std::optional<ZSqrt2> exact_divide(const ZSqrt2& x, const ZSqrt2& y) {
  const BigInt n = y.norm();
  if (n == 0) return std::nullopt;
  const ZSqrt2 num = x * y.conjugate();
  if (num.a % n != 0 || num.b % n != 0) return std::nullopt;
  return ZSqrt2{num.a / n, num.b / n};
}

ZSqrt2Matrix::ZSqrt2Matrix(std::size_t size) : n_(size), data_(size * size) {}

ZSqrt2Matrix ZSqrt2Matrix::identity(std::size_t size) {
  ZSqrt2Matrix m(size);
  for (std::size_t i = 0; i < size; ++i) m.at(i, i) = ZSqrt2(1);
  return m;
}

ZSqrt2Matrix ZSqrt2Matrix::from_parts(const std::vector<std::vector<BigInt>>& a,
                                      const std::vector<std::vector<BigInt>>& b) {
  const auto n = a.size();
  if (b.size() != n) throw DimensionError("A and B differ in size");
  ZSqrt2Matrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (a[r].size() != n || b[r].size() != n)
      throw DimensionError("generator matrices must be square");
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = ZSqrt2(a[r][c], b[r][c]);
  }
  return m;
}

std::vector<std::vector<BigInt>> ZSqrt2Matrix::a_part() const {
  std::vector<std::vector<BigInt>> out(n_, std::vector<BigInt>(n_));
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) out[r][c] = at(r, c).a;
  return out;
}

std::vector<std::vector<BigInt>> ZSqrt2Matrix::b_part() const {
  std::vector<std::vector<BigInt>> out(n_, std::vector<BigInt>(n_));
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) out[r][c] = at(r, c).b;
  return out;
}

ZSqrt2Matrix ZSqrt2Matrix::operator*(const ZSqrt2Matrix& rhs) const {
  if (n_ != rhs.n_) throw DimensionError("matrix size mismatch");
  ZSqrt2Matrix out(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t k = 0; k < n_; ++k) {
      const auto& x = at(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < n_; ++c) out.at(r, c) += x * rhs.at(k, c);
    }
  return out;
}

ZSqrt2Matrix ZSqrt2Matrix::transpose() const {
  ZSqrt2Matrix out(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) out.at(c, r) = at(r, c);
  return out;
}

QuadraticForm QuadraticForm::sqrt2_form(std::size_t d) {
  QuadraticForm q{std::vector<ZSqrt2>(d + 1, ZSqrt2(1))};
  q.diagonal[0] = ZSqrt2(0, -1);
  return q;
}

QuadraticForm QuadraticForm::twisted_form(std::size_t d) {
  QuadraticForm q{std::vector<ZSqrt2>(d + 1, ZSqrt2(1))};
  q.diagonal[0] = ZSqrt2(0, 1);
  return q;
}

QuadraticForm QuadraticForm::integral_form(std::size_t d) {
  QuadraticForm q{std::vector<ZSqrt2>(d + 1, ZSqrt2(1))};
  q.diagonal[0] = ZSqrt2(-1);
  return q;
}

QuadraticForm QuadraticForm::conjugate() const {
  QuadraticForm q;
  for (const auto& c : diagonal) q.diagonal.push_back(c.conjugate());
  return q;
}

ZSqrt2 QuadraticForm::pair(const std::vector<ZSqrt2>& u,
                           const std::vector<ZSqrt2>& v) const {
  ZSqrt2 s;
  for (std::size_t i = 0; i < diagonal.size(); ++i) s += diagonal[i] * u[i] * v[i];
  return s;
}

ZSqrt2 QuadraticForm::evaluate(const std::vector<ZSqrt2>& v) const {
  return pair(v, v);
}

ZSqrt2 determinant(const ZSqrt2Matrix& m) {
  const auto n = m.size();
  if (n == 0) return ZSqrt2(1);
  auto w = m;
  bool negate = false;
  ZSqrt2 prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && w.at(p, k).is_zero()) ++p;
      if (p == n) return ZSqrt2(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(w.at(k, c), w.at(p, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const auto num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        const auto q = exact_divide(num, prev);
        if (!q) throw Error("determinant: inexact Bareiss division");
        w.at(i, j) = *q;
      }
      w.at(i, k) = ZSqrt2(0);
    }
    prev = w.at(k, k);
  }
  const auto det = w.at(n - 1, n - 1);
  return negate ? -det : det;
}

bool preserves_form(const ZSqrt2Matrix& m, const QuadraticForm& q) {
  const auto n = m.size();
  if (q.size() != n) throw DimensionError("form and matrix sizes differ");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ZSqrt2 s;
      for (std::size_t k = 0; k < n; ++k)
        s += m.at(k, i) * q.diagonal[k] * m.at(k, j);
      if (!(s == (i == j ? q.diagonal[i] : ZSqrt2(0)))) return false;
    }
  return determinant(m) == ZSqrt2(1);
}

ZSqrt2Matrix group_inverse(const ZSqrt2Matrix& m, const QuadraticForm& q) {
  if (!preserves_form(m, q))
    throw InvalidArgument("group_inverse: matrix does not preserve the form");
  const auto n = m.size();
  ZSqrt2Matrix inv(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = exact_divide(m.at(j, i) * q.diagonal[j], q.diagonal[i]);
      if (!v) throw Error("group_inverse: inverse leaves Z[sqrt2]");
      inv.at(i, j) = *v;
    }
  return inv;
}

ZSqrt2Matrix galois_twist(const ZSqrt2Matrix& m, const QuadraticForm& q) {
  if (!preserves_form(m, q))
    throw InvalidArgument("galois_twist: matrix does not preserve the form");
  ZSqrt2Matrix out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) out.at(r, c) = m.at(r, c).conjugate();
  if (!preserves_form(out, q.conjugate()))
    throw ValidationError("galois_twist: result does not preserve the twisted form");
  return out;
}

BigInt entry_norm(const ZSqrt2Matrix& m) {
  BigInt best = 0;
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) {
      best = std::max(best, abs_big(m.at(r, c).a));
      best = std::max(best, abs_big(m.at(r, c).b));
    }
  return best;
}

BigInt growth_constant(const std::vector<ZSqrt2Matrix>& generators) {
  if (generators.empty()) throw InvalidArgument("growth_constant: no generators");
  BigInt top = 0;
  for (const auto& g : generators) top = std::max(top, entry_norm(g));
  return BigInt(3 * generators.front().size()) * top;
}

QuotientElement::QuotientElement(std::size_t size, std::uint64_t modulus)
    : n_(size), modulus_(modulus), a_(size * size, 0), b_(size * size, 0) {
  if (modulus < 2) throw InvalidArgument("modulus must be at least 2");
}

QuotientElement QuotientElement::identity(std::size_t size, std::uint64_t modulus) {
  QuotientElement e(size, modulus);
  for (std::size_t i = 0; i < size; ++i) e.a_[i * size + i] = 1;
  return e;
}

void QuotientElement::set(std::size_t r, std::size_t c, std::uint64_t a,
                          std::uint64_t b) {
  a_[r * n_ + c] = a % modulus_;
  b_[r * n_ + c] = b % modulus_;
}

QuotientElement QuotientElement::operator*(const QuotientElement& rhs) const {
  if (n_ != rhs.n_ || modulus_ != rhs.modulus_)
    throw DimensionError("quotient elements from different rings");
  using u128 = unsigned __int128;
  QuotientElement out(n_, modulus_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) {
      u128 sa = 0, sb = 0;
      for (std::size_t k = 0; k < n_; ++k) {
        const u128 xa = a_[r * n_ + k], xb = b_[r * n_ + k];
        const u128 ya = rhs.a_[k * n_ + c], yb = rhs.b_[k * n_ + c];
        sa = (sa + xa * ya % modulus_ + 2 * (xb * yb % modulus_)) % modulus_;
        sb = (sb + xa * yb % modulus_ + xb * ya % modulus_) % modulus_;
      }
      out.a_[r * n_ + c] = static_cast<std::uint64_t>(sa);
      out.b_[r * n_ + c] = static_cast<std::uint64_t>(sb);
    }
  return out;
}

std::string QuotientElement::key() const {
  std::size_t width = 1;
  while (width < 8 && (modulus_ - 1) >> (8 * width)) ++width;
  std::string out;
  out.reserve(2 * a_.size() * width);
  for (const auto* part : {&a_, &b_})
    for (auto v : *part)
      for (std::size_t byte = width; byte-- > 0;)
        out.push_back(static_cast<char>((v >> (8 * byte)) & 0xFF));
  return out;
}

std::string QuotientElement::key_hex() const { return to_hex(key()); }

QuotientElement reduce_mod(const ZSqrt2Matrix& m, std::uint64_t modulus) {
  QuotientElement e(m.size(), modulus);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c)
      e.set(r, c, residue(m.at(r, c).a, modulus), residue(m.at(r, c).b, modulus));
  return e;
}

bool gamma_member(const ZSqrt2Matrix& m, std::uint64_t modulus) {
  return reduce_mod(m, modulus).is_identity();
}

EntryWitness entry_bound_check(const ZSqrt2Matrix& m, std::uint64_t modulus) {
  if (m.is_identity()) throw InvalidArgument("entry_bound_check: identity matrix");
  if (!gamma_member(m, modulus))
    throw InvalidArgument("entry_bound_check: matrix is not in Gamma_N");
  EntryWitness w;
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) {
      const BigInt ra = abs_big(m.at(r, c).a - (r == c ? 1 : 0));
      const BigInt rb = abs_big(m.at(r, c).b);
      if (ra > w.value) w = {false, r, c, 'A', ra};
      if (rb > w.value) w = {false, r, c, 'B', rb};
    }
  w.holds = w.value >= BigInt(modulus) - 1;
  return w;
}

std::size_t word_length_lower_bound(std::uint64_t modulus, double growth) {
  if (modulus <= 2 || growth <= 1.0) return 0;
  const double w = std::log(double(modulus - 1)) / std::log(growth);
  return static_cast<std::size_t>(std::ceil(w - 1e-12));
}

ClosureResult quotient_closure(const std::vector<ZSqrt2Matrix>& generators,
                               std::uint64_t modulus, std::size_t cap) {
  if (modulus < 2) throw InvalidArgument("modulus must be at least 2");
  if (generators.empty()) throw InvalidArgument("quotient_closure: no generators");
  const auto n = generators.front().size();
  std::vector<QuotientElement> reduced;
  for (const auto& g : generators) reduced.push_back(reduce_mod(g, modulus));

  std::map<std::string, std::vector<std::size_t>> seen;
  std::deque<std::pair<QuotientElement, std::string>> queue;
  auto start = QuotientElement::identity(n, modulus);
  seen[start.key()] = {};
  queue.emplace_back(start, start.key());

  ClosureResult out;
  while (!queue.empty()) {
    const auto [x, xkey] = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < reduced.size(); ++g) {
      auto y = x * reduced[g];
      auto ykey = y.key();
      if (seen.count(ykey)) continue;
      if (seen.size() >= cap) {
        out.complete = false;
        break;
      }
      auto word = seen.at(xkey);
      word.push_back(g);
      seen.emplace(ykey, std::move(word));
      queue.emplace_back(std::move(y), std::move(ykey));
    }
    if (!out.complete) break;
  }

  out.order = seen.size();
  out.ambient_bound = boost::multiprecision::pow(BigInt(modulus),
                                                 static_cast<unsigned>(2 * n * n));
  out.within_bound = BigInt(out.order) <= out.ambient_bound;
  for (const auto& [key, word] : seen) {
    out.keys.push_back(to_hex(key));
    out.words.push_back(word);
  }
  return out;
}

std::vector<ZSqrt2Matrix> gamma_search(const std::vector<ZSqrt2Matrix>& generators,
                                       const QuadraticForm& q,
                                       std::uint64_t modulus, std::size_t cap) {
  if (generators.empty()) throw InvalidArgument("gamma_search: no generators");
  const auto n = generators.front().size();
  std::map<std::string, ZSqrt2Matrix> lift;
  std::deque<ZSqrt2Matrix> queue;
  const auto id = ZSqrt2Matrix::identity(n);
  lift.emplace(reduce_mod(id, modulus).key(), id);
  queue.push_back(id);

  std::vector<ZSqrt2Matrix> found;
  std::set<std::string> found_keys;
  const auto fingerprint = [](const ZSqrt2Matrix& m) {
    std::string s;
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t c = 0; c < m.size(); ++c) s += m.at(r, c).to_string() + ";";
    return s;
  };

  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      auto y = x * g;
      const auto key = reduce_mod(y, modulus).key();
      auto it = lift.find(key);
      if (it == lift.end()) {
        if (lift.size() >= cap) continue;
        lift.emplace(key, y);
        queue.push_back(std::move(y));
        continue;
      }
      if (it->second == y) continue;
      auto element = y * group_inverse(it->second, q);
      if (element.is_identity()) continue;
      if (found_keys.insert(fingerprint(element)).second)
        found.push_back(std::move(element));
    }
  }
  return found;
}

std::vector<ZSqrt2Matrix> search_form_preserving(const QuadraticForm& q,
                                                 std::int64_t ha, std::int64_t hb,
                                                 std::size_t limit) {
  const auto n = q.size();
  if (ha < 0 || hb < 0) throw InvalidArgument("heights must be non-negative");

  std::vector<ZSqrt2> values;
  for (std::int64_t a = -ha; a <= ha; ++a)
    for (std::int64_t b = -hb; b <= hb; ++b) values.emplace_back(a, b);

  // Candidate columns per target value of the form.
  std::vector<std::vector<std::vector<ZSqrt2>>> candidates(n);
  std::vector<std::size_t> digits(n, 0);
  std::vector<ZSqrt2> v(n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) v[i] = values[digits[i]];
    const auto value = q.evaluate(v);
    for (std::size_t j = 0; j < n; ++j)
      if (value == q.diagonal[j]) candidates[j].push_back(v);
    std::size_t pos = 0;
    while (pos < n && ++digits[pos] == values.size()) digits[pos++] = 0;
    if (pos == n) break;
  }

  std::vector<ZSqrt2Matrix> out;
  std::vector<const std::vector<ZSqrt2>*> cols(n, nullptr);
  const auto recurse = [&](auto&& self, std::size_t j) -> void {
    if (out.size() >= limit) return;
    if (j == n) {
      ZSqrt2Matrix m(n);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) m.at(r, c) = (*cols[c])[r];
      if (!m.is_identity() && determinant(m) == ZSqrt2(1)) out.push_back(std::move(m));
      return;
    }
    for (const auto& cand : candidates[j]) {
      bool orthogonal = true;
      for (std::size_t i = 0; i < j && orthogonal; ++i)
        orthogonal = q.pair(*cols[i], cand).is_zero();
      if (!orthogonal) continue;
      cols[j] = &cand;
      self(self, j + 1);
      if (out.size() >= limit) return;
    }
  };
  recurse(recurse, 0);
  return out;
}

double injectivity_radius_bound(double modulus, double c1, double c2) {
  if (c1 <= 0) throw InvalidArgument("c1 must be positive");
  return c1 * std::log(modulus) - c2;
}

std::string generators_to_json(const std::vector<ZSqrt2Matrix>& gens) {
  json out = json::array();
  for (const auto& g : gens) {
    json a = json::array(), b = json::array();
    for (std::size_t r = 0; r < g.size(); ++r) {
      json ra = json::array(), rb = json::array();
      for (std::size_t c = 0; c < g.size(); ++c) {
        ra.push_back(big_to_json(g.at(r, c).a));
        rb.push_back(big_to_json(g.at(r, c).b));
      }
      a.push_back(ra);
      b.push_back(rb);
    }
    out.push_back({{"A", a}, {"B", b}});
  }
  return out.dump();
}

std::vector<ZSqrt2Matrix> generators_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("generator JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("generator JSON: expected a list");
  std::vector<ZSqrt2Matrix> out;
  for (const auto& g : j) {
    if (!g.is_object() || !g.contains("A"))
      throw ParseError("generator JSON: each generator needs \"A\"");
    const auto parse_part = [](const json& part) {
      std::vector<std::vector<BigInt>> m;
      if (!part.is_array()) throw ParseError("generator JSON: matrix must be a list");
      for (const auto& row : part) {
        if (!row.is_array()) throw ParseError("generator JSON: row must be a list");
        std::vector<BigInt> r;
        for (const auto& e : row) r.push_back(big_from_json(e));
        m.push_back(std::move(r));
      }
      return m;
    };
    auto a = parse_part(g["A"]);
    std::vector<std::vector<BigInt>> b;
    if (g.contains("B"))
      b = parse_part(g["B"]);
    else
      b.assign(a.size(), std::vector<BigInt>(a.size(), 0));
    out.push_back(ZSqrt2Matrix::from_parts(a, b));
  }
  if (!out.empty())
    for (const auto& g : out)
      if (g.size() != out.front().size())
        throw ParseError("generator JSON: generators differ in size");
  return out;
}

}  // namespace homcss
