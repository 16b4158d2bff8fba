#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "homcss/chain_complex.hpp"

namespace homcss {

using Facet = std::vector<long long>;

/// Downward closure of the facets; faces sorted lexicographically within
/// each dimension and labelled by their vertex lists.
ChainComplex from_facets(const std::vector<Facet>& facets);

/// Periodic L×L square grid: L² vertices, 2L² edges, L² square faces.
/// Vertex (x, y) has index xL + y, its horizontal and vertical edges are
/// 2(xL + y) and 2(xL + y) + 1, and face (x, y) has index xL + y.
ChainComplex toric_grid(std::size_t side);

/// Cycle graph on n ≥ 2 vertices (edge j joins j and j+1 mod n).
ChainComplex cycle_graph(std::size_t n);

struct DualComplex {
  ChainComplex complex;
  /// bijection[i][c] = index in degree D-i of X' of the i-cell c of X.
  std::vector<std::vector<std::size_t>> bijection;
};

/// Chain-level Poincaré dual. Requires every (D-1)-cell to lie in exactly
/// two D-cells; throws ValidationError naming the first that does not.
DualComplex dualize(const ChainComplex& x);

/// True iff P(δ_i α) = ∂'_{D-i}(P α) for every basis cochain α and every i.
bool duality_identity_holds(const ChainComplex& x, const DualComplex& dual);

using Permutation = std::vector<std::size_t>;

/// Sheet permutations on 1-cells. An edge runs from its lower-index vertex
/// to its higher one; crossing it in that direction sends sheet s to
/// voltages[e][s]. Missing edges carry the identity.
struct VoltageCover {
  std::size_t sheets = 1;
  std::map<std::size_t, Permutation> voltages;
};

struct CoverResult {
  /// Cell (c, s) has index c·m + s in every dimension.
  ChainComplex complex;
  /// projection[i][cover cell] = base cell.
  std::vector<std::vector<std::size_t>> projection;
};

/// Finite cover defined by a flat voltage assignment. Throws
/// ValidationError naming the first cell around which the voltages do not
/// compose to the identity.
CoverResult build_cover(const ChainComplex& base, const VoltageCover& cover);

}  // namespace homcss
