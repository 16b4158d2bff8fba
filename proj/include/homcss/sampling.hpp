#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "homcss/arithmetic.hpp"
#include "homcss/builders.hpp"

namespace homcss {

/// SplitMix64: identical streams on every platform for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  Permutation permutation(std::size_t m);

 private:
  std::uint64_t state_;
};

/// `count` facets of `size` distinct vertices drawn from 0..vertices-1.
std::vector<Facet> random_facets(Rng& rng, std::size_t vertices, std::size_t count,
                                 std::size_t size);

/// Flat voltages for `base`: a random gauge transformation of a flat
/// twist. On a toric grid of side L (detected by cell counts and labels) the
/// twist wraps the two cycles by commuting cyclic shifts; elsewhere it is
/// trivial unless the complex has no 2-cells, in which case every edge gets an
/// independent random permutation.
VoltageCover random_voltages(Rng& rng, const ChainComplex& base, std::size_t sheets);

/// Product of `length` generators chosen uniformly (length ≥ 1).
ZSqrt2Matrix random_word(Rng& rng, const std::vector<ZSqrt2Matrix>& generators,
                         std::size_t length);

}  // namespace homcss
