#include "homcss/reports.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

#include "homcss/bounds.hpp"
#include "homcss/error.hpp"
#include "homcss/sampling.hpp"

namespace homcss::reports {

namespace {

using ojson = nlohmann::ordered_json;

ojson parse(const std::string& text, const char* what) {
  try {
    return ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

ojson matrix_json(const ZSqrt2Matrix& m) {
  return parse(generators_to_json({m}), "matrix")[0];
}

ojson residue_json(const QuotientElement& e) {
  ojson a = ojson::array(), b = ojson::array();
  for (std::size_t r = 0; r < e.size(); ++r) {
    ojson ra = ojson::array(), rb = ojson::array();
    for (std::size_t c = 0; c < e.size(); ++c) {
      ra.push_back(e.a(r, c));
      rb.push_back(e.b(r, c));
    }
    a.push_back(ra);
    b.push_back(rb);
  }
  return {{"A", a}, {"B", b}};
}

ojson interval_or_value(double lo, double hi, bool exact) {
  if (exact) return lo;
  return {{"lo", lo}, {"hi", hi}};
}

}  // namespace

std::string validation(const ChainComplex& x) {
  const auto rep = homcss::validate(x);
  ojson j;
  j["valid"] = rep.valid;
  j["dim"] = x.dim();
  j["cells"] = x.cell_counts();
  if (!rep.valid) {
    j["degree"] = rep.degree;
    j["cell"] = rep.cell;
    j["diagnostic"] = rep.diagnostic;
  }
  return j.dump();
}

std::string homology(const ChainComplex& x) {
  const auto h = homcss::homology(x);
  long long alt = 0;
  for (std::size_t i = 0; i < h.betti.size(); ++i)
    alt += (i % 2 ? -1 : 1) * static_cast<long long>(h.betti[i]);
  ojson j;
  j["dim"] = x.dim();
  j["cells"] = x.cell_counts();
  j["betti"] = h.betti;
  j["ranks"] = h.ranks;
  j["euler"] = euler_characteristic(x);
  j["euler_from_betti"] = alt;
  return j.dump();
}

std::string dual(const ChainComplex& x, const DualComplex& d) {
  ojson j;
  j["cells"] = x.cell_counts();
  j["dual_cells"] = d.complex.cell_counts();
  j["duality_identity"] = duality_identity_holds(x, d);
  return j.dump();
}

std::string cover(const ChainComplex& base, const CoverResult& c, std::size_t sheets) {
  bool commutes = true;
  for (std::size_t k = 1; k <= base.dim() && commutes; ++k) {
    // proj ∘ ∂ = ∂ ∘ proj on every cover cell.
    const auto& up = c.complex.boundary(k);
    const auto& down = base.boundary(k);
    const auto upt = up.transpose();
    for (std::size_t cell = 0; cell < c.complex.cells(k) && commutes; ++cell) {
      F2Vector projected(base.cells(k - 1));
      for (auto f : upt.row(cell).support()) projected.flip(c.projection[k - 1][f]);
      commutes = projected == down.column(c.projection[k][cell]);
    }
  }
  ojson j;
  j["sheets"] = sheets;
  j["base_cells"] = base.cell_counts();
  j["cells"] = c.complex.cell_counts();
  j["base_euler"] = euler_characteristic(base);
  j["euler"] = euler_characteristic(c.complex);
  j["projection_commutes"] = commutes;
  return j.dump();
}

VoltageCover voltages_from_json(const std::string& text, std::size_t sheets) {
  const auto j = parse(text, "voltage JSON");
  if (!j.is_object()) throw ParseError("voltage JSON: expected an object");
  VoltageCover v;
  v.sheets = sheets;
  for (const auto& [key, perm] : j.items()) {
    std::size_t pos = 0;
    unsigned long edge = 0;
    try {
      edge = std::stoul(key, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != key.size() || key.empty())
      throw ParseError("voltage JSON: key \"" + key + "\" is not an edge index");
    if (!perm.is_array()) throw ParseError("voltage JSON: permutation must be a list");
    Permutation p;
    for (const auto& s : perm) {
      if (!s.is_number_unsigned()) throw ParseError("voltage JSON: bad sheet index");
      p.push_back(s.get<std::size_t>());
    }
    v.voltages[edge] = std::move(p);
  }
  return v;
}

std::string voltages_to_json(const VoltageCover& v) {
  ojson j = ojson::object();
  for (const auto& [e, p] : v.voltages) j[std::to_string(e)] = p;
  return j.dump();
}

std::vector<Facet> facets_from_json(const std::string& text) {
  const auto j = parse(text, "facet JSON");
  try {
    return j.get<std::vector<Facet>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("facet JSON: ") + e.what());
  }
}

std::string code_params(const ChainComplex& x, std::size_t degree,
                        const SearchOptions& opts) {
  const auto code = CssCode::build(x, degree);
  const auto k = code_dimension(code);
  const auto betti = homcss::homology(x).betti.at(degree);
  ojson j;
  j["degree"] = degree;
  j["n"] = code.n();
  j["k"] = k;
  j["betti"] = betti;
  j["w1_generators"] = code.w1().rows();
  j["w2_generators"] = code.w2().rows();
  j["ldpc"] = ldpc_check(code);
  if (k == 0) {
    j["d"] = nullptr;
    j["note"] = "no nontrivial class";
    return j.dump();
  }
  const auto p = parse(params_to_json(distance_auto(code, opts)), "params");
  for (const auto& key : {"d", "rate", "delta", "zemor", "witness"}) j[key] = p[key];
  return j.dump();
}

std::string distance(const ChainComplex& x, std::size_t degree, DistanceMode mode,
                     const SearchOptions& opts) {
  const auto code = CssCode::build(x, degree);
  CodeParams p;
  const char* name = "auto";
  switch (mode) {
    case DistanceMode::Exact:
      p = distance_exact(code, opts);
      name = "exact";
      break;
    case DistanceMode::Bounded:
      p = distance_bounded(code, opts);
      name = "bounded";
      break;
    case DistanceMode::Auto:
      p = distance_auto(code, opts);
      break;
  }
  ojson j;
  j["degree"] = degree;
  j["mode"] = name;
  const auto body = parse(params_to_json(p), "params");
  for (const auto& [key, v] : body.items()) j[key] = v;
  return j.dump();
}

std::string systole(const ChainComplex& x, std::size_t degree, const SearchOptions& opts) {
  const auto d = combinatorial_systole(x, degree, opts);
  ojson j;
  j["degree"] = degree;
  j["systole"] = d.lo;
  j["witness"] = d.witness;
  return j.dump();
}

CodeParams params_from_json(const std::string& text) {
  return [&] {
    const auto j = parse(text, "params JSON");
    try {
      CodeParams p;
      p.n = j.at("n").get<std::size_t>();
      p.k = j.at("k").get<std::size_t>();
      const auto& d = j.at("d");
      if (d.contains("exact")) {
        p.d.lo = p.d.hi = d["exact"].get<std::size_t>();
      } else {
        p.d.lo = d.at("lo").get<std::size_t>();
        p.d.hi = d.at("hi").get<std::size_t>();
      }
      if (j.contains("witness")) p.d.witness = j["witness"].get<std::vector<std::size_t>>();
      return p;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("params JSON: ") + e.what());
    }
  }();
}

std::string zemor(const std::string& params_json, double epsilon) {
  const auto arr = parse(params_json, "zemor input");
  if (!arr.is_array()) throw ParseError("zemor input: expected a list of reports");
  std::vector<CodeParams> params;
  for (const auto& item : arr) params.push_back(params_from_json(item.dump()));
  const auto rows = zemor_report(params, epsilon);
  ojson j;
  j["epsilon"] = epsilon;
  j["rows"] = ojson::array();
  for (const auto& r : rows) {
    const bool exact = r.d_lo == r.d_hi;
    ojson row;
    row["n"] = r.n;
    row["k"] = r.k;
    row["d"] = exact ? ojson{{"exact", r.d_lo}} : ojson{{"lo", r.d_lo}, {"hi", r.d_hi}};
    row["zemor"] = interval_or_value(r.ratio_lo, r.ratio_hi, exact);
    if (r.exponent_lo)
      row["log_n_kd2"] = interval_or_value(*r.exponent_lo, *r.exponent_hi, exact);
    else
      row["log_n_kd2"] = nullptr;
    row["exceeds_1_plus_epsilon"] = r.exceeds;
    j["rows"].push_back(row);
  }
  return j.dump();
}

QuadraticForm form_for(int form_id, std::size_t size) {
  if (size == 0) throw InvalidArgument("form needs at least one variable");
  switch (form_id) {
    case 0:
      return QuadraticForm::sqrt2_form(size - 1);
    case 1:
      return QuadraticForm::twisted_form(size - 1);
    case 2:
      return QuadraticForm::integral_form(size - 1);
    default:
      throw InvalidArgument("unknown quadratic form id " + std::to_string(form_id));
  }
}

std::string arith_verify(const std::vector<ZSqrt2Matrix>& gens, const QuadraticForm& q) {
  ojson j;
  j["size"] = q.size();
  j["generators"] = ojson::array();
  bool all = true;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const bool ok = preserves_form(gens[i], q);
    all = all && ok;
    j["generators"].push_back({{"index", i},
                               {"preserves_form", ok},
                               {"determinant", determinant(gens[i]).to_string()},
                               {"entry_norm", entry_norm(gens[i]).str()}});
  }
  j["all_valid"] = all;
  if (!gens.empty()) j["growth_constant"] = growth_constant(gens).str();
  return j.dump();
}

std::string arith_twist(const std::vector<ZSqrt2Matrix>& gens, const QuadraticForm& q) {
  ojson j;
  j["twisted"] = ojson::array();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto t = galois_twist(gens[i], q);
    double phi2 = 0;
    for (std::size_t r = 0; r < t.size(); ++r)
      for (std::size_t c = 0; c < t.size(); ++c)
        phi2 = std::max(phi2, std::abs(gens[i].at(r, c).embed().second));
    auto m = matrix_json(t);
    m["preserves_twisted_form"] = preserves_form(t, q.conjugate());
    m["max_abs_phi2_entry"] = phi2;
    j["twisted"].push_back(m);
  }
  return j.dump();
}

std::string arith_reduce(const std::vector<ZSqrt2Matrix>& gens, std::uint64_t modulus) {
  ojson j;
  j["modulus"] = modulus;
  j["residues"] = ojson::array();
  for (const auto& g : gens) {
    const auto e = reduce_mod(g, modulus);
    auto r = residue_json(e);
    r["key"] = e.key_hex();
    r["identity"] = e.is_identity();
    j["residues"].push_back(r);
  }
  return j.dump();
}

std::string arith_closure(const std::vector<ZSqrt2Matrix>& gens, std::uint64_t modulus,
                          std::size_t cap, bool transcript) {
  const auto c = quotient_closure(gens, modulus, cap);
  ojson j;
  j["modulus"] = modulus;
  j["order"] = c.order;
  j["complete"] = c.complete;
  j["ambient_bound"] = c.ambient_bound.str();
  j["within_bound"] = c.within_bound;
  if (transcript) j["transcript"] = c.keys;
  return j.dump();
}

std::string arith_gamma(const std::vector<ZSqrt2Matrix>& gens, const QuadraticForm& q,
                        std::uint64_t modulus, std::size_t cap) {
  ojson j;
  j["modulus"] = modulus;
  j["generator_members"] = ojson::array();
  for (const auto& g : gens) j["generator_members"].push_back(gamma_member(g, modulus));
  const auto found = gamma_search(gens, q, modulus, cap);
  bool all = true;
  for (const auto& m : found) all = all && gamma_member(m, modulus) && preserves_form(m, q);
  j["found"] = found.size();
  j["all_members"] = all;
  j["elements"] = ojson::array();
  for (std::size_t i = 0; i < std::min<std::size_t>(found.size(), 16); ++i)
    j["elements"].push_back(matrix_json(found[i]));
  return j.dump();
}

std::string arith_entry_bound(const std::vector<ZSqrt2Matrix>& gens,
                              const QuadraticForm& q, std::uint64_t modulus,
                              std::size_t cap) {
  const auto found = gamma_search(gens, q, modulus, cap);
  const auto c2 = growth_constant(gens);
  ojson j;
  j["modulus"] = modulus;
  j["checked"] = found.size();
  j["growth_constant"] = c2.str();
  j["word_length_lower_bound"] =
      word_length_lower_bound(modulus, c2.convert_to<double>());
  bool all = true;
  BigInt smallest = -1;
  for (const auto& m : found) {
    const auto w = entry_bound_check(m, modulus);
    all = all && w.holds;
    if (smallest < 0 || w.value < smallest) smallest = w.value;
  }
  j["all_hold"] = all;
  j["min_witness_value"] = found.empty() ? ojson(nullptr) : ojson(smallest.str());
  return j.dump();
}

std::string arith_growth(const std::vector<ZSqrt2Matrix>& gens, std::uint64_t seed,
                         std::size_t samples, std::size_t max_length) {
  if (gens.empty()) throw InvalidArgument("growth check needs generators");
  if (max_length == 0) throw InvalidArgument("max_length must be positive");
  Rng rng(seed);
  const auto c2 = growth_constant(gens);
  const BigInt c(3 * gens.front().size());
  std::size_t product_violations = 0, word_violations = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto l1 = 1 + rng.below(max_length), l2 = 1 + rng.below(max_length);
    const auto m1 = random_word(rng, gens, l1);
    const auto m2 = random_word(rng, gens, l2);
    if (entry_norm(m1 * m2) > c * entry_norm(m1) * entry_norm(m2)) ++product_violations;
    if (entry_norm(m1) > boost::multiprecision::pow(c2, static_cast<unsigned>(l1)))
      ++word_violations;
  }
  ojson j;
  j["seed"] = seed;
  j["samples"] = samples;
  j["max_length"] = max_length;
  j["product_constant"] = c.str();
  j["growth_constant"] = c2.str();
  j["product_violations"] = product_violations;
  j["word_violations"] = word_violations;
  return j.dump();
}

std::string arith_injrad(double modulus, double c1, double c2, double growth) {
  ojson j;
  j["modulus"] = modulus;
  j["c1"] = c1;
  j["c2"] = c2;
  j["radius_bound"] = injectivity_radius_bound(modulus, c1, c2);
  if (growth > 1.0) {
    j["growth_constant"] = growth;
    j["word_length_lower_bound"] =
        word_length_lower_bound(static_cast<std::uint64_t>(modulus), growth);
  }
  return j.dump();
}

std::string bounds_gauss_bonnet(long long chi, unsigned dim) {
  const auto g = gauss_bonnet(chi, dim);
  ojson j;
  j["chi"] = chi;
  j["dim"] = dim;
  j["volume"] = g.volume;
  j["valid"] = g.valid;
  return j.dump();
}

std::string bounds_h2(double volume) {
  const auto h = h2_lower_bound(volume);
  ojson j;
  j["volume"] = volume;
  j["h2_lower_bound"] = h.bound;
  j["hundredth_threshold"] = h.hundredth_threshold;
  return j.dump();
}

std::string bounds_anderson(unsigned i, double radius) {
  const auto a = anderson_bound(i, radius);
  ojson j;
  j["i"] = i;
  j["R"] = radius;
  j["volume"] = a.volume;
  j["exponential_ratio"] = a.exponential_ratio ? ojson(*a.exponential_ratio) : ojson(nullptr);
  return j.dump();
}

std::string bounds_monotonicity(unsigned k, const std::vector<double>& grid,
                                const std::vector<std::pair<double, double>>& profile) {
  const auto rep = monotonicity_audit(k, grid, profile);
  ojson j;
  j["k"] = k;
  j["points"] = ojson::array();
  for (const auto& p : rep.points)
    j["points"].push_back({{"r", p.r},
                           {"fd_derivative", p.fd_derivative},
                           {"sphere_area", p.sphere_area},
                           {"rel_error", p.rel_error},
                           {"calibration_slope", p.calibration_slope}});
  j["max_rel_error"] = rep.max_rel_error;
  j["segments_checked"] = rep.segments_checked;
  j["violations"] = ojson::array();
  for (const auto& v : rep.violations)
    j["violations"].push_back({{"r", v.r}, {"slope", v.slope}, {"required", v.required}});
  return j.dump();
}

}  // namespace homcss::reports
