#include "homcss/chain_complex.hpp"

#include "json.hpp"

#include "homcss/error.hpp"

namespace homcss {

using nlohmann::json;

ChainComplex::ChainComplex(std::vector<std::size_t> cell_counts,
                           std::vector<F2Matrix> boundaries, Labels labels)
    : counts_(std::move(cell_counts)),
      boundaries_(std::move(boundaries)),
      labels_(std::move(labels)) {
  if (counts_.empty()) throw DimensionError("complex needs at least C_0");
  if (boundaries_.size() != counts_.size() - 1)
    throw DimensionError("expected " + std::to_string(counts_.size() - 1) +
                         " boundary matrices, got " +
                         std::to_string(boundaries_.size()));
  for (std::size_t i = 1; i < counts_.size(); ++i) {
    const auto& b = boundaries_[i - 1];
    if (b.rows() != counts_[i - 1] || b.cols() != counts_[i])
      throw DimensionError("boundary " + std::to_string(i) + " has shape " +
                           std::to_string(b.rows()) + "x" +
                           std::to_string(b.cols()) + ", expected " +
                           std::to_string(counts_[i - 1]) + "x" +
                           std::to_string(counts_[i]));
  }
  if (!labels_.empty()) {
    if (labels_.size() != counts_.size())
      throw DimensionError("labels must cover every dimension");
    for (std::size_t i = 0; i < counts_.size(); ++i)
      if (labels_[i].size() != counts_[i])
        throw DimensionError("label count mismatch in dimension " +
                             std::to_string(i));
  }
}

ChainComplex ChainComplex::point() { return ChainComplex({1}, {}); }

const F2Matrix& ChainComplex::boundary(std::size_t i) const {
  if (i < 1 || i > dim())
    throw DimensionError("no boundary map in degree " + std::to_string(i));
  return boundaries_[i - 1];
}

F2Matrix ChainComplex::boundary_or_zero(std::size_t i) const {
  if (i >= 1 && i <= dim()) return boundaries_[i - 1];
  if (i == 0) return F2Matrix(0, counts_[0]);
  return F2Matrix(counts_[dim()], 0);
}

F2Matrix ChainComplex::coboundary(std::size_t i) const {
  return boundary_or_zero(i + 1).transpose();
}

ValidationReport validate(const ChainComplex& x) {
  ValidationReport report;
  for (std::size_t i = 1; i < x.dim(); ++i) {
    const auto product = x.boundary(i) * x.boundary(i + 1);
    if (product.is_zero()) continue;
    // Offending (i+1)-cell: lowest column of the product with a nonzero.
    const auto t = product.transpose();
    std::size_t cell = 0;
    while (t.row(cell).is_zero()) ++cell;
    const auto hit = t.row(cell).first_set();
    report.valid = false;
    report.degree = i + 1;
    report.cell = cell;
    report.diagnostic = "boundary of boundary is nonzero: d_" +
                        std::to_string(i) + " d_" + std::to_string(i + 1) +
                        " of " + std::to_string(i + 1) + "-cell " +
                        std::to_string(cell) + " hits " + std::to_string(i - 1) +
                        "-cell " + std::to_string(hit);
    return report;
  }
  return report;
}

HomologyProfile homology(const ChainComplex& x) {
  const auto report = validate(x);
  if (!report.valid) throw ValidationError(report.diagnostic);
  const auto d = x.dim();
  HomologyProfile h;
  h.ranks.assign(d + 2, 0);
  for (std::size_t i = 1; i <= d; ++i) h.ranks[i] = rank(x.boundary(i));
  h.betti.resize(d + 1);
  for (std::size_t i = 0; i <= d; ++i)
    h.betti[i] = x.cells(i) - h.ranks[i] - h.ranks[i + 1];
  return h;
}

long long euler_characteristic(const ChainComplex& x) {
  long long chi = 0;
  for (std::size_t i = 0; i <= x.dim(); ++i)
    chi += (i % 2 ? -1 : 1) * static_cast<long long>(x.cells(i));
  return chi;
}

ChainComplex cochain_complex(const ChainComplex& x) {
  const auto d = x.dim();
  std::vector<std::size_t> counts(d + 1);
  std::vector<F2Matrix> maps;
  ChainComplex::Labels labels;
  for (std::size_t k = 0; k <= d; ++k) counts[k] = x.cells(d - k);
  for (std::size_t k = 1; k <= d; ++k)
    maps.push_back(x.boundary(d - k + 1).transpose());
  if (x.has_labels())
    for (std::size_t k = 0; k <= d; ++k) labels.push_back(x.labels()[d - k]);
  return ChainComplex(std::move(counts), std::move(maps), std::move(labels));
}

ChainComplex tensor_product(const ChainComplex& x, const ChainComplex& y) {
  const auto dx = x.dim(), dy = y.dim(), d = dx + dy;

  // offset[k][a] = first index of the (a, k-a) block inside degree k.
  std::vector<std::vector<std::size_t>> offset(d + 1);
  std::vector<std::size_t> counts(d + 1, 0);
  for (std::size_t k = 0; k <= d; ++k) {
    offset[k].assign(dx + 1, 0);
    for (std::size_t a = 0; a <= dx; ++a) {
      offset[k][a] = counts[k];
      if (k >= a && k - a <= dy) counts[k] += x.cells(a) * y.cells(k - a);
    }
  }

  std::vector<F2Matrix> maps;
  for (std::size_t k = 1; k <= d; ++k) {
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    for (std::size_t a = 0; a <= dx; ++a) {
      if (a > k || k - a > dy) continue;
      const auto b = k - a;
      const auto ny = y.cells(b);
      // (∂σ) ⊗ τ
      if (a >= 1) {
        for (const auto& [r, c] : x.boundary(a).entries())
          for (std::size_t t = 0; t < ny; ++t)
            entries.emplace_back(offset[k - 1][a - 1] + r * ny + t,
                                 offset[k][a] + c * ny + t);
      }
      // σ ⊗ (∂τ)
      if (b >= 1) {
        const auto ny_low = y.cells(b - 1);
        for (std::size_t s = 0; s < x.cells(a); ++s)
          for (const auto& [r, c] : y.boundary(b).entries())
            entries.emplace_back(offset[k - 1][a] + s * ny_low + r,
                                 offset[k][a] + s * ny + c);
      }
    }
    maps.emplace_back(counts[k - 1], counts[k], entries);
  }

  ChainComplex::Labels labels;
  if (x.has_labels() && y.has_labels()) {
    labels.resize(d + 1);
    for (std::size_t k = 0; k <= d; ++k)
      for (std::size_t a = 0; a <= dx; ++a) {
        if (a > k || k - a > dy) continue;
        for (const auto& ls : x.labels()[a])
          for (const auto& lt : y.labels()[k - a])
            labels[k].push_back(ls + "x" + lt);
      }
  }
  return ChainComplex(std::move(counts), std::move(maps), std::move(labels));
}

std::string to_json(const ChainComplex& x) {
  json j;
  j["dim"] = x.dim();
  j["cells"] = x.cell_counts();
  j["boundaries"] = json::array();
  for (std::size_t i = 1; i <= x.dim(); ++i)
    j["boundaries"].push_back(to_matrix_text(x.boundary(i)));
  if (x.has_labels()) j["labels"] = x.labels();
  return j.dump();
}

ChainComplex complex_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("complex JSON: ") + e.what());
  }
  try {
    const auto d = j.at("dim").get<std::size_t>();
    auto counts = j.at("cells").get<std::vector<std::size_t>>();
    if (counts.size() != d + 1)
      throw ParseError("complex JSON: \"cells\" must have dim+1 entries");
    std::vector<F2Matrix> maps;
    for (const auto& block : j.at("boundaries"))
      maps.push_back(parse_matrix_text(block.get<std::string>()));
    ChainComplex::Labels labels;
    if (j.contains("labels") && !j["labels"].is_null())
      labels = j["labels"].get<ChainComplex::Labels>();
    return ChainComplex(std::move(counts), std::move(maps), std::move(labels));
  } catch (const json::exception& e) {
    throw ParseError(std::string("complex JSON: ") + e.what());
  }
}

}  // namespace homcss
