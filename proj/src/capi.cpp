#include "homcss/homcss.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "homcss/bounds.hpp"
#include "homcss/builders.hpp"
#include "homcss/chain_complex.hpp"
#include "homcss/css_code.hpp"
#include "homcss/error.hpp"
#include "homcss/reports.hpp"
#include "homcss/sampling.hpp"

struct hc_complex {
  homcss::ChainComplex rep;
};

namespace {

thread_local std::string last_error;

hc_status fail(hc_status s, const char* msg) {
  last_error = msg;
  return s;
}

template <class F>
hc_status guard(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const homcss::BudgetError& e) {
    return fail(HC_BUDGET_EXCEEDED, e.what());
  } catch (const homcss::ValidationError& e) {
    return fail(HC_VALIDATION_FAILED, e.what());
  } catch (const homcss::NoNontrivialClass& e) {
    return fail(HC_NO_NONTRIVIAL_CLASS, e.what());
  } catch (const homcss::ParseError& e) {
    return fail(HC_PARSE_ERROR, e.what());
  } catch (const homcss::DimensionError& e) {
    return fail(HC_DIMENSION_ERROR, e.what());
  } catch (const homcss::InvalidArgument& e) {
    return fail(HC_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HC_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(HC_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(HC_INTERNAL_ERROR, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void emit(char** out, const std::string& s) {
  if (out) *out = copy_string(s);
}

hc_status wrap(homcss::ChainComplex x, hc_complex** out) {
  *out = new hc_complex{std::move(x)};
  return HC_OK;
}

void require(const void* p, const char* name) {
  if (!p) throw homcss::InvalidArgument(std::string(name) + " is null");
}

homcss::SearchOptions options(const hc_search_options* o) {
  homcss::SearchOptions s;
  if (o) {
    s.budget = o->budget;
    s.w_max = o->w_max;
    s.workers = o->workers ? o->workers : 1;
  }
  if (s.budget > homcss::kMaxBudget)
    throw homcss::InvalidArgument("budget exceeds " + std::to_string(homcss::kMaxBudget));
  return s;
}

std::vector<homcss::ZSqrt2Matrix> gens(const char* json) {
  require(json, "gens_json");
  return homcss::generators_from_json(json);
}

homcss::QuadraticForm form(hc_form f, const std::vector<homcss::ZSqrt2Matrix>& g) {
  if (g.empty()) throw homcss::InvalidArgument("no generators");
  return homcss::reports::form_for(static_cast<int>(f), g.front().size());
}

}  // namespace

extern "C" {

const char* hc_version(void) { return "0.1.0"; }

const char* hc_last_error(void) { return last_error.c_str(); }

const char* hc_status_name(hc_status status) {
  switch (status) {
    case HC_OK: return "ok";
    case HC_INVALID_ARGUMENT: return "invalid_argument";
    case HC_VALIDATION_FAILED: return "validation_failed";
    case HC_BUDGET_EXCEEDED: return "budget_exceeded";
    case HC_NO_NONTRIVIAL_CLASS: return "no_nontrivial_class";
    case HC_PARSE_ERROR: return "parse_error";
    case HC_DIMENSION_ERROR: return "dimension_error";
    case HC_INTERNAL_ERROR: return "internal_error";
  }
  return "unknown";
}

void hc_string_free(char* s) { std::free(s); }

void hc_search_options_default(hc_search_options* opts) {
  if (!opts) return;
  opts->budget = homcss::kDefaultBudget;
  opts->w_max = 4;
  opts->workers = 1;
}

hc_status hc_complex_from_json(const char* json, hc_complex** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    return wrap(homcss::complex_from_json(json), out);
  });
}

hc_status hc_complex_to_json(const hc_complex* x, char** out) {
  return guard([&] {
    require(x, "complex");
    require(out, "out");
    emit(out, homcss::to_json(x->rep));
    return HC_OK;
  });
}

hc_status hc_complex_point(hc_complex** out) {
  return guard([&] {
    require(out, "out");
    return wrap(homcss::ChainComplex::point(), out);
  });
}

hc_status hc_complex_toric(size_t side, hc_complex** out) {
  return guard([&] {
    require(out, "out");
    return wrap(homcss::toric_grid(side), out);
  });
}

hc_status hc_complex_cycle(size_t vertices, hc_complex** out) {
  return guard([&] {
    require(out, "out");
    return wrap(homcss::cycle_graph(vertices), out);
  });
}

hc_status hc_complex_from_facets(const char* facets_json, hc_complex** out) {
  return guard([&] {
    require(facets_json, "facets_json");
    require(out, "out");
    return wrap(homcss::from_facets(homcss::reports::facets_from_json(facets_json)), out);
  });
}

hc_status hc_complex_random(uint64_t seed, size_t vertices, size_t facets,
                            size_t facet_size, hc_complex** out) {
  return guard([&] {
    require(out, "out");
    homcss::Rng rng(seed);
    return wrap(homcss::from_facets(homcss::random_facets(rng, vertices, facets, facet_size)),
                out);
  });
}

hc_status hc_complex_product(const hc_complex* x, const hc_complex* y, hc_complex** out) {
  return guard([&] {
    require(x, "x");
    require(y, "y");
    require(out, "out");
    return wrap(homcss::tensor_product(x->rep, y->rep), out);
  });
}

hc_status hc_complex_cochain(const hc_complex* x, hc_complex** out) {
  return guard([&] {
    require(x, "complex");
    require(out, "out");
    return wrap(homcss::cochain_complex(x->rep), out);
  });
}

hc_status hc_complex_dual(const hc_complex* x, hc_complex** out, char** report) {
  return guard([&] {
    require(x, "complex");
    require(out, "out");
    auto d = homcss::dualize(x->rep);
    emit(report, homcss::reports::dual(x->rep, d));
    return wrap(std::move(d.complex), out);
  });
}

hc_status hc_complex_cover(const hc_complex* x, size_t sheets, const char* voltages_json,
                           hc_complex** out, char** report) {
  return guard([&] {
    require(x, "complex");
    require(voltages_json, "voltages_json");
    require(out, "out");
    const auto v = homcss::reports::voltages_from_json(voltages_json, sheets);
    auto c = homcss::build_cover(x->rep, v);
    emit(report, homcss::reports::cover(x->rep, c, sheets));
    return wrap(std::move(c.complex), out);
  });
}

hc_status hc_complex_random_voltages(const hc_complex* x, uint64_t seed, size_t sheets,
                                     char** voltages_json) {
  return guard([&] {
    require(x, "complex");
    require(voltages_json, "voltages_json");
    if (sheets == 0) throw homcss::InvalidArgument("sheets must be positive");
    homcss::Rng rng(seed);
    emit(voltages_json,
         homcss::reports::voltages_to_json(homcss::random_voltages(rng, x->rep, sheets)));
    return HC_OK;
  });
}

hc_status hc_complex_validate(const hc_complex* x, char** report) {
  return guard([&] {
    require(x, "complex");
    const auto rep = homcss::validate(x->rep);
    emit(report, homcss::reports::validation(x->rep));
    if (!rep.valid) return fail(HC_VALIDATION_FAILED, rep.diagnostic.c_str());
    return HC_OK;
  });
}

hc_status hc_complex_homology(const hc_complex* x, char** report) {
  return guard([&] {
    require(x, "complex");
    require(report, "report");
    emit(report, homcss::reports::homology(x->rep));
    return HC_OK;
  });
}

hc_status hc_complex_euler(const hc_complex* x, long long* out) {
  return guard([&] {
    require(x, "complex");
    require(out, "out");
    *out = homcss::euler_characteristic(x->rep);
    return HC_OK;
  });
}

size_t hc_complex_dim(const hc_complex* x) { return x ? x->rep.dim() : 0; }

size_t hc_complex_cells(const hc_complex* x, size_t degree) {
  if (!x || degree > x->rep.dim()) return 0;
  return x->rep.cells(degree);
}

void hc_complex_free(hc_complex* x) { delete x; }

hc_status hc_code_params(const hc_complex* x, size_t degree, const hc_search_options* opts,
                         char** report) {
  return guard([&] {
    require(x, "complex");
    require(report, "report");
    emit(report, homcss::reports::code_params(x->rep, degree, options(opts)));
    return HC_OK;
  });
}

hc_status hc_code_distance(const hc_complex* x, size_t degree, hc_distance_mode mode,
                           const hc_search_options* opts, char** report) {
  return guard([&] {
    require(x, "complex");
    require(report, "report");
    homcss::reports::DistanceMode m;
    switch (mode) {
      case HC_DISTANCE_AUTO: m = homcss::reports::DistanceMode::Auto; break;
      case HC_DISTANCE_EXACT: m = homcss::reports::DistanceMode::Exact; break;
      case HC_DISTANCE_BOUNDED: m = homcss::reports::DistanceMode::Bounded; break;
      default: throw homcss::InvalidArgument("unknown distance mode");
    }
    emit(report, homcss::reports::distance(x->rep, degree, m, options(opts)));
    return HC_OK;
  });
}

hc_status hc_code_systole(const hc_complex* x, size_t degree, const hc_search_options* opts,
                          char** report) {
  return guard([&] {
    require(x, "complex");
    require(report, "report");
    emit(report, homcss::reports::systole(x->rep, degree, options(opts)));
    return HC_OK;
  });
}

hc_status hc_code_ldpc(const hc_complex* x, size_t degree, size_t* out) {
  return guard([&] {
    require(x, "complex");
    require(out, "out");
    *out = homcss::ldpc_check(homcss::CssCode::build(x->rep, degree));
    return HC_OK;
  });
}

hc_status hc_zemor_report(const char* params_json, double epsilon, char** report) {
  return guard([&] {
    require(params_json, "params_json");
    require(report, "report");
    emit(report, homcss::reports::zemor(params_json, epsilon));
    return HC_OK;
  });
}

hc_status hc_arith_verify(const char* gens_json, hc_form f, char** report) {
  return guard([&] {
    require(report, "report");
    const auto g = gens(gens_json);
    emit(report, homcss::reports::arith_verify(g, form(f, g)));
    return HC_OK;
  });
}

hc_status hc_arith_twist(const char* gens_json, hc_form f, char** report) {
  return guard([&] {
    require(report, "report");
    const auto g = gens(gens_json);
    emit(report, homcss::reports::arith_twist(g, form(f, g)));
    return HC_OK;
  });
}

hc_status hc_arith_reduce(const char* gens_json, uint64_t modulus, char** report) {
  return guard([&] {
    require(report, "report");
    emit(report, homcss::reports::arith_reduce(gens(gens_json), modulus));
    return HC_OK;
  });
}

hc_status hc_arith_closure(const char* gens_json, uint64_t modulus, size_t cap,
                           int transcript, char** report) {
  return guard([&] {
    require(report, "report");
    emit(report,
         homcss::reports::arith_closure(gens(gens_json), modulus, cap, transcript != 0));
    return HC_OK;
  });
}

hc_status hc_arith_gamma(const char* gens_json, hc_form f, uint64_t modulus, size_t cap,
                         char** report) {
  return guard([&] {
    require(report, "report");
    const auto g = gens(gens_json);
    emit(report, homcss::reports::arith_gamma(g, form(f, g), modulus, cap));
    return HC_OK;
  });
}

hc_status hc_arith_entry_bound(const char* gens_json, hc_form f, uint64_t modulus,
                               size_t cap, char** report) {
  return guard([&] {
    require(report, "report");
    const auto g = gens(gens_json);
    emit(report, homcss::reports::arith_entry_bound(g, form(f, g), modulus, cap));
    return HC_OK;
  });
}

hc_status hc_arith_growth(const char* gens_json, uint64_t seed, size_t samples,
                          size_t max_length, char** report) {
  return guard([&] {
    require(report, "report");
    emit(report, homcss::reports::arith_growth(gens(gens_json), seed, samples, max_length));
    return HC_OK;
  });
}

hc_status hc_arith_search(hc_form f, size_t dimension, int64_t height_a, int64_t height_b,
                          size_t limit, char** gens_json) {
  return guard([&] {
    require(gens_json, "gens_json");
    if (height_a < 0 || height_b < 0) throw homcss::InvalidArgument("negative height");
    const auto q = homcss::reports::form_for(static_cast<int>(f), dimension + 1);
    emit(gens_json, homcss::generators_to_json(
                        homcss::search_form_preserving(q, height_a, height_b, limit)));
    return HC_OK;
  });
}

hc_status hc_arith_injrad(double modulus, double c1, double c2, double growth,
                          char** report) {
  return guard([&] {
    require(report, "report");
    emit(report, homcss::reports::arith_injrad(modulus, c1, c2, growth));
    return HC_OK;
  });
}

hc_status hc_bounds_sphere_volume(unsigned n, double* out) {
  return guard([&] {
    require(out, "out");
    *out = homcss::sphere_volume(n);
    return HC_OK;
  });
}

hc_status hc_bounds_hyperbolic_ball(unsigned k, double r, double* out) {
  return guard([&] {
    require(out, "out");
    if (k == 0 || r < 0) throw homcss::InvalidArgument("need k >= 1 and r >= 0");
    *out = homcss::hyperbolic_ball_volume(k, r);
    return HC_OK;
  });
}

hc_status hc_bounds_cone(unsigned k, double r, double base, int hyperbolic, double* out) {
  return guard([&] {
    require(out, "out");
    *out = hyperbolic ? homcss::cone_volume_hyperbolic(k, r, base)
                      : homcss::cone_volume_euclidean(k, r, base);
    return HC_OK;
  });
}

hc_status hc_bounds_gauss_bonnet(long long chi, unsigned dim, char** report) {
  return guard([&] {
    require(report, "report");
    emit(report, homcss::reports::bounds_gauss_bonnet(chi, dim));
    return HC_OK;
  });
}

hc_status hc_bounds_h2(double volume, char** report) {
  return guard([&] {
    require(report, "report");
    emit(report, homcss::reports::bounds_h2(volume));
    return HC_OK;
  });
}

hc_status hc_bounds_anderson(unsigned i, double radius, char** report) {
  return guard([&] {
    require(report, "report");
    emit(report, homcss::reports::bounds_anderson(i, radius));
    return HC_OK;
  });
}

hc_status hc_bounds_monotonicity(unsigned k, const double* grid, size_t grid_len,
                                 const double* profile_r, const double* profile_v,
                                 size_t profile_len, char** report) {
  return guard([&] {
    require(report, "report");
    if (grid_len) require(grid, "grid");
    if (profile_len) {
      require(profile_r, "profile_r");
      require(profile_v, "profile_v");
    }
    std::vector<double> g(grid, grid + grid_len);
    std::vector<std::pair<double, double>> profile;
    for (size_t i = 0; i < profile_len; ++i) profile.emplace_back(profile_r[i], profile_v[i]);
    emit(report, homcss::reports::bounds_monotonicity(k, g, profile));
    return HC_OK;
  });
}

}  // extern "C"
