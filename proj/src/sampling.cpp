#include "homcss/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "homcss/error.hpp"

namespace homcss {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("Rng::below needs a positive bound");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

Permutation Rng::permutation(std::size_t m) {
  Permutation p(m);
  for (std::size_t i = 0; i < m; ++i) p[i] = i;
  for (std::size_t i = m; i > 1; --i) std::swap(p[i - 1], p[below(i)]);
  return p;
}

std::vector<Facet> random_facets(Rng& rng, std::size_t vertices, std::size_t count,
                                 std::size_t size) {
  if (size > vertices) throw InvalidArgument("facet larger than vertex set");
  std::vector<Facet> out;
  for (std::size_t f = 0; f < count; ++f) {
    const auto perm = rng.permutation(vertices);
    Facet facet(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(facet.begin(), facet.end());
    out.push_back(std::move(facet));
  }
  return out;
}

namespace {

Permutation shift(std::size_t m, std::size_t by) {
  Permutation p(m);
  for (std::size_t s = 0; s < m; ++s) p[s] = (s + by) % m;
  return p;
}

// Side length if `x` is toric_grid(L) output, else 0.
std::size_t toric_side(const ChainComplex& x) {
  if (x.dim() != 2 || !x.has_labels()) return 0;
  const auto n = x.cells(0);
  const auto side = static_cast<std::size_t>(std::lround(std::sqrt(double(n))));
  if (side < 2 || side * side != n) return 0;
  if (x.cells(1) != 2 * n || x.cells(2) != n) return 0;
  if (x.labels()[1].front() != "h(0,0)") return 0;
  return side;
}

}  // namespace

VoltageCover random_voltages(Rng& rng, const ChainComplex& base, std::size_t sheets) {
  VoltageCover cover;
  cover.sheets = sheets;
  if (base.dim() < 1) return cover;
  const auto edges = base.cells(1);
  std::vector<Permutation> twist(edges, shift(sheets, 0));

  if (const auto side = toric_side(base)) {
    // Horizontal edges leaving column L−1 carry a, vertical edges leaving
    // row L−1 carry b; commuting shifts keep every square flat.
    const auto a = rng.below(sheets), b = rng.below(sheets);
    for (std::size_t x = 0; x < side; ++x)
      for (std::size_t y = 0; y < side; ++y) {
        const auto v = x * side + y;
        if (x == side - 1) twist[2 * v] = shift(sheets, a);
        if (y == side - 1) twist[2 * v + 1] = shift(sheets, b);
      }
  } else if (base.dim() == 1) {
    for (auto& p : twist) p = rng.permutation(sheets);
  }

  // Toric edges run toward the wrapped neighbour, which may have the lower
  // index; express the twist in the lower-to-higher convention.
  const auto d1t = base.boundary(1).transpose();
  std::vector<Permutation> gauge;
  for (std::size_t v = 0; v < base.cells(0); ++v) gauge.push_back(rng.permutation(sheets));
  for (std::size_t e = 0; e < edges; ++e) {
    const auto ends = d1t.row(e).support();
    if (ends.size() != 2) continue;
    Permutation p = twist[e];
    if (toric_side(base)) {
      // Grid edge e leaves vertex e/2; if that is the higher endpoint the
      // stored voltage must be inverted.
      const auto source = e / 2;
      if (source == ends[1]) {
        Permutation inv(sheets);
        for (std::size_t s = 0; s < sheets; ++s) inv[p[s]] = s;
        p = inv;
      }
    }
    // Gauge: p' = g_head ∘ p ∘ g_tail⁻¹.
    Permutation tail_inv(sheets);
    for (std::size_t s = 0; s < sheets; ++s) tail_inv[gauge[ends[0]][s]] = s;
    Permutation out(sheets);
    for (std::size_t s = 0; s < sheets; ++s) out[s] = gauge[ends[1]][p[tail_inv[s]]];
    cover.voltages[e] = out;
  }
  return cover;
}

ZSqrt2Matrix random_word(Rng& rng, const std::vector<ZSqrt2Matrix>& generators,
                         std::size_t length) {
  if (generators.empty() || length == 0)
    throw InvalidArgument("random_word needs generators and positive length");
  auto m = generators[rng.below(generators.size())];
  for (std::size_t i = 1; i < length; ++i) m = m * generators[rng.below(generators.size())];
  return m;
}

}  // namespace homcss
