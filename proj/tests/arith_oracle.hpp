#pragma once

// Brute-force reference for small quotient groups: 3x3 integer residue
// matrices (B = 0) preserving diag(−1, 1, 1) mod N with determinant 1.

#include <array>
#include <set>
#include <vector>

#include "homcss/arithmetic.hpp"

namespace oracle {

using Residue3 = std::array<long long, 9>;

inline long long mod(long long v, long long n) { return ((v % n) + n) % n; }

inline Residue3 residue_mul(const Residue3& a, const Residue3& b, long long n) {
  Residue3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      long long s = 0;
      for (int k = 0; k < 3; ++k) s += a[i * 3 + k] * b[k * 3 + j];
      out[i * 3 + j] = mod(s, n);
    }
  return out;
}

inline bool preserves_integral_mod(const Residue3& m, long long n) {
  const std::array<long long, 3> f = {-1, 1, 1};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      long long s = 0;
      for (int k = 0; k < 3; ++k) s += m[k * 3 + i] * f[k] * m[k * 3 + j];
      if (mod(s, n) != mod(i == j ? f[i] : 0, n)) return false;
    }
  const long long d = m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
                      m[2] * (m[3] * m[7] - m[4] * m[6]);
  return mod(d, n) == 1;
}

// Every residue matrix in the ambient group, by exhaustive enumeration.
inline std::set<Residue3> ambient_group(long long n) {
  std::set<Residue3> out;
  long long total = 1;
  for (int i = 0; i < 9; ++i) total *= n;
  Residue3 m{};
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < 9; ++i, c /= n) m[i] = c % n;
    if (preserves_integral_mod(m, n)) out.insert(m);
  }
  return out;
}

inline Residue3 residue_of(const homcss::ZSqrt2Matrix& g, long long n) {
  Residue3 x{};
  for (int i = 0; i < 9; ++i) x[i] = mod(g.at(i / 3, i % 3).a.convert_to<long long>(), n);
  return x;
}

// Depth-first closure under left multiplication, restricted to `ambient`.
inline std::set<Residue3> reachable_within(const std::vector<homcss::ZSqrt2Matrix>& gens,
                                           const std::set<Residue3>& ambient, long long n) {
  std::vector<Residue3> g;
  for (const auto& gen : gens) g.push_back(residue_of(gen, n));
  std::set<Residue3> reached;
  const Residue3 id = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  std::vector<Residue3> stack = {id};
  reached.insert(id);
  while (!stack.empty()) {
    const auto top = stack.back();
    stack.pop_back();
    for (const auto& x : g) {
      const auto y = residue_mul(x, top, n);
      if (ambient.count(y) && reached.insert(y).second) stack.push_back(y);
    }
  }
  return reached;
}

}  // namespace oracle
