#include "homcss/builders.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "homcss/error.hpp"

namespace homcss {

namespace {

std::string join_vertices(const std::vector<long long>& face) {
  std::string s;
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(face[i]);
  }
  return s;
}

std::string grid_label(char kind, std::size_t x, std::size_t y) {
  return std::string(1, kind) + "(" + std::to_string(x) + "," +
         std::to_string(y) + ")";
}

}  // namespace

ChainComplex from_facets(const std::vector<Facet>& facets) {
  std::vector<Facet> normalized;
  for (auto f : facets) {
    for (auto v : f)
      if (v < 0) throw InvalidArgument("negative vertex index in facet");
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (!f.empty()) normalized.push_back(std::move(f));
  }
  if (normalized.empty()) return ChainComplex({0}, {});

  std::set<Facet> faces_all;
  for (const auto& f : normalized) {
    if (f.size() > 24) throw InvalidArgument("facet too large for closure");
    const auto n = f.size();
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
      Facet face;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (1U << b)) face.push_back(f[b]);
      faces_all.insert(std::move(face));
    }
  }

  std::size_t top = 0;
  for (const auto& f : faces_all) top = std::max(top, f.size() - 1);
  std::vector<std::vector<Facet>> faces(top + 1);
  for (const auto& f : faces_all) faces[f.size() - 1].push_back(f);  // sorted

  std::vector<std::map<Facet, std::size_t>> index(top + 1);
  for (std::size_t k = 0; k <= top; ++k)
    for (std::size_t i = 0; i < faces[k].size(); ++i) index[k][faces[k][i]] = i;

  std::vector<std::size_t> counts;
  ChainComplex::Labels labels(top + 1);
  for (std::size_t k = 0; k <= top; ++k) {
    counts.push_back(faces[k].size());
    for (const auto& f : faces[k]) labels[k].push_back(join_vertices(f));
  }

  std::vector<F2Matrix> maps;
  for (std::size_t k = 1; k <= top; ++k) {
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    for (std::size_t c = 0; c < faces[k].size(); ++c) {
      const auto& f = faces[k][c];
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        Facet g;
        for (std::size_t j = 0; j < f.size(); ++j)
          if (j != drop) g.push_back(f[j]);
        entries.emplace_back(index[k - 1].at(g), c);
      }
    }
    maps.emplace_back(counts[k - 1], counts[k], entries);
  }
  return ChainComplex(std::move(counts), std::move(maps), std::move(labels));
}

ChainComplex toric_grid(std::size_t side) {
  if (side < 2) throw InvalidArgument("toric_grid needs L >= 2");
  const auto L = side;
  const auto vertex = [L](std::size_t x, std::size_t y) {
    return (x % L) * L + (y % L);
  };
  const auto hedge = [&](std::size_t x, std::size_t y) { return 2 * vertex(x, y); };
  const auto vedge = [&](std::size_t x, std::size_t y) {
    return 2 * vertex(x, y) + 1;
  };

  std::vector<std::pair<std::size_t, std::size_t>> d1, d2;
  ChainComplex::Labels labels(3);
  for (std::size_t x = 0; x < L; ++x)
    for (std::size_t y = 0; y < L; ++y) {
      d1.emplace_back(vertex(x, y), hedge(x, y));
      d1.emplace_back(vertex(x + 1, y), hedge(x, y));
      d1.emplace_back(vertex(x, y), vedge(x, y));
      d1.emplace_back(vertex(x, y + 1), vedge(x, y));
      const auto f = vertex(x, y);
      d2.emplace_back(hedge(x, y), f);
      d2.emplace_back(hedge(x, y + 1), f);
      d2.emplace_back(vedge(x, y), f);
      d2.emplace_back(vedge(x + 1, y), f);
      labels[0].push_back(grid_label('p', x, y));
      labels[1].push_back(grid_label('h', x, y));
      labels[1].push_back(grid_label('v', x, y));
      labels[2].push_back(grid_label('f', x, y));
    }
  const auto n = L * L;
  return ChainComplex({n, 2 * n, n},
                      {F2Matrix(n, 2 * n, d1), F2Matrix(2 * n, n, d2)},
                      std::move(labels));
}

ChainComplex cycle_graph(std::size_t n) {
  if (n < 2) throw InvalidArgument("cycle_graph needs at least 2 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> d1;
  ChainComplex::Labels labels(2);
  for (std::size_t j = 0; j < n; ++j) {
    d1.emplace_back(j, j);
    d1.emplace_back((j + 1) % n, j);
    labels[0].push_back(std::to_string(j));
    labels[1].push_back(std::to_string(j) + "-" + std::to_string((j + 1) % n));
  }
  return ChainComplex({n, n}, {F2Matrix(n, n, d1)}, std::move(labels));
}

DualComplex dualize(const ChainComplex& x) {
  const auto report = validate(x);
  if (!report.valid) throw ValidationError(report.diagnostic);
  const auto d = x.dim();
  if (d >= 1) {
    const auto& top = x.boundary(d);
    for (std::size_t r = 0; r < top.rows(); ++r) {
      const auto cofaces = top.row(r).weight();
      if (cofaces != 2)
        throw ValidationError("not a closed pseudomanifold: " +
                              std::to_string(d - 1) + "-cell " +
                              std::to_string(r) + " lies in " +
                              std::to_string(cofaces) + " top cells");
    }
  }
  DualComplex out{cochain_complex(x), {}};
  out.bijection.resize(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    out.bijection[i].resize(x.cells(i));
    for (std::size_t c = 0; c < x.cells(i); ++c) out.bijection[i][c] = c;
  }
  return out;
}

bool duality_identity_holds(const ChainComplex& x, const DualComplex& dual) {
  const auto d = x.dim();
  if (dual.complex.dim() != d) return false;
  for (std::size_t i = 0; i < d; ++i) {
    const auto delta = x.coboundary(i);                  // C^i → C^{i+1}
    const auto& dprime = dual.complex.boundary(d - i);   // C'_{D-i} → C'_{D-i-1}
    const auto& p_in = dual.bijection[i];
    const auto& p_out = dual.bijection[i + 1];
    for (std::size_t c = 0; c < x.cells(i); ++c) {
      // Left: P(δ e_c). Right: ∂'(P e_c) = column p_in[c] of ∂'.
      F2Vector lhs(dprime.rows());
      for (std::size_t r = 0; r < delta.rows(); ++r)
        if (delta.get(r, c)) lhs.flip(p_out[r]);
      if (!(lhs == dprime.column(p_in[c]))) return false;
    }
  }
  return true;
}

CoverResult build_cover(const ChainComplex& base, const VoltageCover& cover) {
  const auto m = cover.sheets;
  if (m == 0) throw InvalidArgument("cover needs at least one sheet");
  const auto d = base.dim();
  const auto nv = base.cells(0);

  const auto compose = [](const Permutation& outer, const Permutation& inner) {
    Permutation p(inner.size());
    for (std::size_t s = 0; s < inner.size(); ++s) p[s] = outer[inner[s]];
    return p;
  };

  Permutation identity(m);
  for (std::size_t s = 0; s < m; ++s) identity[s] = s;

  std::vector<Permutation> volt;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  if (d >= 1) {
    const auto edges = base.cells(1);
    volt.assign(edges, identity);
    for (const auto& [e, p] : cover.voltages) {
      if (e >= edges)
        throw InvalidArgument("voltage on nonexistent edge " + std::to_string(e));
      if (p.size() != m)
        throw InvalidArgument("voltage on edge " + std::to_string(e) +
                              " is not a permutation of " + std::to_string(m) +
                              " sheets");
      std::vector<bool> seen(m, false);
      for (auto s : p) {
        if (s >= m || seen[s])
          throw InvalidArgument("voltage on edge " + std::to_string(e) +
                                " is not a permutation");
        seen[s] = true;
      }
      volt[e] = p;
    }
    const auto d1t = base.boundary(1).transpose();
    for (std::size_t e = 0; e < edges; ++e) {
      const auto s = d1t.row(e).support();
      if (s.size() != 2)
        throw InvalidArgument("edge " + std::to_string(e) +
                              " does not have two distinct endpoints");
      ends.emplace_back(s[0], s[1]);
    }
  } else if (!cover.voltages.empty()) {
    throw InvalidArgument("voltages given on a complex without edges");
  }

  // faces[k][c] = support of ∂_k column c.
  std::vector<std::vector<std::vector<std::size_t>>> faces(d + 1);
  for (std::size_t k = 1; k <= d; ++k) {
    const auto t = base.boundary(k).transpose();
    faces[k].resize(base.cells(k));
    for (std::size_t c = 0; c < base.cells(k); ++c) faces[k][c] = t.row(c).support();
  }

  // Closure vertex/edge sets and the lowest vertex of each cell.
  std::vector<std::vector<std::vector<std::size_t>>> cl_vertices(d + 1),
      cl_edges(d + 1);
  std::vector<std::vector<std::size_t>> base_vertex(d + 1);
  cl_vertices[0].resize(nv);
  cl_edges[0].resize(nv);
  base_vertex[0].resize(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    cl_vertices[0][v] = {v};
    base_vertex[0][v] = v;
  }
  for (std::size_t k = 1; k <= d; ++k) {
    const auto n = base.cells(k);
    cl_vertices[k].resize(n);
    cl_edges[k].resize(n);
    base_vertex[k].resize(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::set<std::size_t> vs, es;
      if (k == 1) es.insert(c);
      for (auto g : faces[k][c]) {
        vs.insert(cl_vertices[k - 1][g].begin(), cl_vertices[k - 1][g].end());
        es.insert(cl_edges[k - 1][g].begin(), cl_edges[k - 1][g].end());
      }
      if (vs.empty())
        throw InvalidArgument(std::to_string(k) + "-cell " + std::to_string(c) +
                              " has empty boundary");
      cl_vertices[k][c].assign(vs.begin(), vs.end());
      cl_edges[k][c].assign(es.begin(), es.end());
      base_vertex[k][c] = *vs.begin();
    }
  }

  std::vector<std::size_t> counts(d + 1);
  ChainComplex::Labels labels;
  std::vector<std::vector<std::size_t>> projection(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    counts[k] = base.cells(k) * m;
    projection[k].resize(counts[k]);
    for (std::size_t c = 0; c < base.cells(k); ++c)
      for (std::size_t s = 0; s < m; ++s) projection[k][c * m + s] = c;
  }
  if (base.has_labels()) {
    labels.resize(d + 1);
    for (std::size_t k = 0; k <= d; ++k)
      for (std::size_t c = 0; c < base.cells(k); ++c)
        for (std::size_t s = 0; s < m; ++s)
          labels[k].push_back(base.labels()[k][c] + "@" + std::to_string(s));
  }

  std::vector<F2Matrix> maps;
  for (std::size_t k = 1; k <= d; ++k) {
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    for (std::size_t c = 0; c < base.cells(k); ++c) {
      // Transport sheets from the base vertex across the closure's 1-skeleton.
      std::map<std::size_t, Permutation> at;
      at[base_vertex[k][c]] = identity;
      std::deque<std::size_t> queue{base_vertex[k][c]};
      std::map<std::size_t, std::vector<std::size_t>> incident;
      for (auto e : cl_edges[k][c]) {
        incident[ends[e].first].push_back(e);
        incident[ends[e].second].push_back(e);
      }
      while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        for (auto e : incident[v]) {
          const auto [tail, head] = ends[e];
          const auto w = (v == tail) ? head : tail;
          if (at.count(w)) continue;
          if (v == tail) {
            at[w] = compose(volt[e], at[v]);
          } else {
            Permutation inv(m);
            for (std::size_t s = 0; s < m; ++s) inv[volt[e][s]] = s;
            at[w] = compose(inv, at[v]);
          }
          queue.push_back(w);
        }
      }
      if (at.size() != cl_vertices[k][c].size())
        throw ValidationError(std::to_string(k) + "-cell " + std::to_string(c) +
                              " has a disconnected closure");
      for (auto e : cl_edges[k][c]) {
        const auto [tail, head] = ends[e];
        if (compose(volt[e], at[tail]) != at[head])
          throw ValidationError("voltages are not flat around " +
                                std::to_string(k) + "-cell " + std::to_string(c));
      }
      for (auto g : faces[k][c]) {
        const auto& to_face = at.at(base_vertex[k - 1][g]);
        for (std::size_t s = 0; s < m; ++s)
          entries.emplace_back(g * m + to_face[s], c * m + s);
      }
    }
    maps.emplace_back(counts[k - 1], counts[k], entries);
  }
  return {ChainComplex(std::move(counts), std::move(maps), std::move(labels)),
          std::move(projection)};
}

}  // namespace homcss
