// homcss: command-line front end over the C API.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "homcss/homcss.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;

struct Failure {
  hc_status status;
  std::string message;
};

void check(hc_status s) {
  if (s != HC_OK) throw Failure{s, hc_last_error()};
}

struct ComplexDeleter {
  void operator()(hc_complex* x) const { hc_complex_free(x); }
};
using Complex = std::unique_ptr<hc_complex, ComplexDeleter>;

json take(char* s) {
  std::string text(s ? s : "null");
  hc_string_free(s);
  return json::parse(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{HC_INVALID_ARGUMENT, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Globals {
  std::size_t budget = 26;
  std::size_t w_max = 4;
  unsigned workers = 1;
  std::uint64_t seed = 0;
  std::string output;
  bool quiet = false;

  hc_search_options options() const { return {budget, w_max, workers}; }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::size_t to_size(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw Failure{HC_INVALID_ARGUMENT, "not a count: " + s};
  return static_cast<std::size_t>(v);
}

// SPEC is toric:L, cycle:N, point, torus4:L (toric L ⊗ toric L),
// random:V:F:S (seeded by --seed), facets:FILE, or a complex JSON file.
Complex load_complex(const std::string& spec, const Globals& g) {
  hc_complex* raw = nullptr;
  const auto parts = split(spec, ':');
  const auto& kind = parts.empty() ? spec : parts[0];
  if (kind == "toric" && parts.size() == 2) {
    check(hc_complex_toric(to_size(parts[1]), &raw));
  } else if (kind == "cycle" && parts.size() == 2) {
    check(hc_complex_cycle(to_size(parts[1]), &raw));
  } else if (spec == "point") {
    check(hc_complex_point(&raw));
  } else if (kind == "torus4" && parts.size() == 2) {
    Complex t;
    check(hc_complex_toric(to_size(parts[1]), &raw));
    t.reset(raw);
    check(hc_complex_product(t.get(), t.get(), &raw));
  } else if (kind == "random" && parts.size() == 4) {
    check(hc_complex_random(g.seed, to_size(parts[1]), to_size(parts[2]),
                            to_size(parts[3]), &raw));
  } else if (kind == "facets" && parts.size() == 2) {
    check(hc_complex_from_facets(read_file(parts[1]).c_str(), &raw));
  } else {
    check(hc_complex_from_json(read_file(spec).c_str(), &raw));
  }
  return Complex(raw);
}

json complex_json(const hc_complex* x) {
  char* s = nullptr;
  check(hc_complex_to_json(x, &s));
  return take(s);
}

hc_form parse_form(const std::string& name) {
  if (name == "sqrt2") return HC_FORM_SQRT2;
  if (name == "twisted") return HC_FORM_TWISTED;
  if (name == "integral") return HC_FORM_INTEGRAL;
  throw Failure{HC_INVALID_ARGUMENT, "unknown form " + name};
}

std::vector<double> parse_grid(const std::string& spec) {
  const auto p = split(spec, ':');
  if (p.size() != 3) throw Failure{HC_INVALID_ARGUMENT, "grid must be a:b:step"};
  const double a = std::stod(p[0]), b = std::stod(p[1]), step = std::stod(p[2]);
  if (!(step > 0) || b < a) throw Failure{HC_INVALID_ARGUMENT, "bad grid " + spec};
  std::vector<double> grid;
  const auto count = static_cast<std::size_t>((b - a) / step + 1e-9);
  for (std::size_t i = 0; i <= count; ++i) grid.push_back(a + static_cast<double>(i) * step);
  return grid;
}

std::pair<std::vector<double>, std::vector<double>> read_profile(const std::string& path) {
  std::vector<double> r, v;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto cells = split(line, ',');
    if (cells.size() != 2) throw Failure{HC_PARSE_ERROR, "profile row: " + line};
    try {
      r.push_back(std::stod(cells[0]));
      v.push_back(std::stod(cells[1]));
    } catch (const std::exception&) {
      if (r.empty() && v.empty()) continue;  // header row
      throw Failure{HC_PARSE_ERROR, "profile row: " + line};
    }
  }
  return {r, v};
}

// Options actually seen on the selected subcommand chain, in declaration
// order; defaults included so the record is complete.
json config_of(const CLI::App* app, const Globals& g) {
  json cfg;
  cfg["budget"] = g.budget;
  cfg["w_max"] = g.w_max;
  cfg["workers"] = g.workers;
  cfg["seed"] = g.seed;
  for (const auto* opt : app->get_options()) {
    const auto name = opt->get_name(false, true);
    const std::string key = opt->get_single_name();
    if (name.empty() || key == "help") continue;
    if (!opt->get_type_size_max() || opt->get_expected_max() == 0) {
      cfg[key] = opt->count() > 0;
      continue;
    }
    if (opt->count())
      cfg[key] = opt->as<std::string>();
    else if (!opt->get_default_str().empty())
      cfg[key] = opt->get_default_str();
  }
  return cfg;
}

void print_summary(std::ostream& os, const std::string& command, const json& result) {
  os << command << "\n";
  if (!result.is_object()) {
    os << "  " << result.dump() << "\n";
    return;
  }
  for (const auto& [k, v] : result.items()) {
    if (v.is_array() && v.size() > 8) {
      os << "  " << k << ": [" << v.size() << " items]\n";
    } else if (v.is_object() && v.dump().size() > 120) {
      os << "  " << k << ": {...}\n";
    } else {
      os << "  " << k << ": " << v.dump() << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homcss: homological CSS codes, arithmetic groups and volume bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  if (const char* env = std::getenv("HOMCSS_BUDGET")) {
    try {
      g.budget = to_size(env);
    } catch (const Failure&) {
      std::cerr << "HOMCSS_BUDGET must be a non-negative integer\n";
      return kExitUsage;
    }
  }
  app.add_option("--budget", g.budget, "Max kernel dimension for exact enumeration")
      ->capture_default_str();
  app.add_option("--w-max", g.w_max, "Weight cap for bounded search")->capture_default_str();
  app.add_option("--workers", g.workers, "Worker threads")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--output,-o", g.output, "Write JSON here instead of stdout");
  app.add_flag("--quiet,-q", g.quiet, "Human-readable summary instead of JSON");

  std::string complex_spec = "toric:3", left, right, voltages_file, mode = "auto";
  std::size_t degree = 1, sheets = 2;
  bool random_voltages = false;

  auto* cx = app.add_subcommand("complex", "Build and inspect chain complexes");
  cx->require_subcommand(1);
  auto add_complex = [&](CLI::App* sub) {
    sub->add_option("--complex,-c", complex_spec,
                    "toric:L | cycle:N | point | torus4:L | random:V:F:S | facets:FILE | FILE")
        ->capture_default_str();
  };
  auto* cx_build = cx->add_subcommand("build", "Emit the complex as JSON");
  add_complex(cx_build);
  auto* cx_validate = cx->add_subcommand("validate", "Check that every ∂∂ vanishes");
  add_complex(cx_validate);
  auto* cx_homology = cx->add_subcommand("homology", "Betti numbers over Z2");
  add_complex(cx_homology);
  auto* cx_dual = cx->add_subcommand("dual", "Poincaré dual complex");
  add_complex(cx_dual);
  auto* cx_cover = cx->add_subcommand("cover", "Finite cover from flat voltages");
  add_complex(cx_cover);
  cx_cover->add_option("--sheets,-m", sheets, "Number of sheets")->capture_default_str();
  cx_cover->add_option("--voltages", voltages_file, "JSON {edge: permutation}");
  cx_cover->add_flag("--random", random_voltages, "Sample flat voltages with --seed");
  auto* cx_product = cx->add_subcommand("product", "Tensor product of two complexes");
  cx_product->add_option("--left", left, "First factor")->required();
  cx_product->add_option("--right", right, "Second factor")->required();

  auto* code = app.add_subcommand("code", "CSS codes of a complex");
  code->require_subcommand(1);
  auto add_code = [&](CLI::App* sub) {
    add_complex(sub);
    sub->add_option("--degree,-d", degree, "Homological degree")->capture_default_str();
  };
  auto* code_params = code->add_subcommand("params", "n, k, LDPC weight and distance");
  add_code(code_params);
  auto* code_distance = code->add_subcommand("distance", "Minimum distance");
  add_code(code_distance);
  code_distance->add_option("--mode", mode, "auto | exact | bounded")
      ->check(CLI::IsMember({"auto", "exact", "bounded"}))
      ->capture_default_str();
  auto* code_systole = code->add_subcommand("systole", "Smallest nontrivial cycle");
  add_code(code_systole);
  std::optional<double> min_face_volume, max_face_volume;
  code_systole->add_option("--min-face-volume", min_face_volume,
                           "Smallest i-face volume, scales the weight to a volume bound");
  code_systole->add_option("--max-face-volume", max_face_volume, "Largest i-face volume")
      ->needs("--min-face-volume");
  auto* code_ldpc = code->add_subcommand("ldpc", "Largest generator weight");
  add_code(code_ldpc);
  auto* code_zemor = code->add_subcommand("zemor", "k d² / n across a family");
  std::string family = "toric", range = "2..4", zemor_input;
  double epsilon = 0.0;
  code_zemor->add_option("--family", family, "toric | torus4")->capture_default_str();
  code_zemor->add_option("--L", range, "Side lengths a..b")->capture_default_str();
  code_zemor->add_option("--input", zemor_input, "JSON list of distance reports");
  code_zemor->add_option("--epsilon", epsilon, "Exponent margin")->capture_default_str();

  auto* ar = app.add_subcommand("arith", "Arithmetic groups over Z[√2]");
  ar->require_subcommand(1);
  std::string gens_file, form_name = "sqrt2";
  std::uint64_t modulus = 3;
  std::size_t cap = 100000, samples = 1000, max_len = 6, dimension = 2, limit = 10000;
  bool transcript = false;
  std::int64_t ha = 1, hb = 1;
  double inj_n = 1e6, c1 = 1.0, c2 = 0.0, growth = 0.0;
  auto add_gens = [&](CLI::App* sub, bool with_form) {
    sub->add_option("--gens", gens_file, "Generator JSON file")->required();
    if (with_form)
      sub->add_option("--form", form_name, "sqrt2 | twisted | integral")
          ->capture_default_str();
  };
  auto* ar_verify = ar->add_subcommand("verify", "Check generators preserve the form");
  add_gens(ar_verify, true);
  auto* ar_twist = ar->add_subcommand("twist", "Galois-conjugate generators");
  add_gens(ar_twist, true);
  auto* ar_reduce = ar->add_subcommand("reduce", "Residues mod N");
  add_gens(ar_reduce, false);
  auto* ar_closure = ar->add_subcommand("closure", "Order of the reduced group");
  add_gens(ar_closure, false);
  ar_closure->add_flag("--transcript", transcript, "Include every element key");
  auto* ar_gamma = ar->add_subcommand("gamma", "Find elements of Γ_N");
  add_gens(ar_gamma, true);
  auto* ar_entry = ar->add_subcommand("entry-bound", "Entry bound on found Γ_N elements");
  add_gens(ar_entry, true);
  auto* ar_growth = ar->add_subcommand("growth", "Sampled entry-growth check");
  add_gens(ar_growth, false);
  ar_growth->add_option("--samples", samples, "Word pairs")->capture_default_str();
  ar_growth->add_option("--max-len", max_len, "Longest word")->capture_default_str();
  for (auto* sub : {ar_reduce, ar_closure, ar_gamma, ar_entry})
    sub->add_option("--N", modulus, "Modulus")->capture_default_str();
  for (auto* sub : {ar_closure, ar_gamma, ar_entry})
    sub->add_option("--cap", cap, "Element cap")->capture_default_str();
  auto* ar_search = ar->add_subcommand("search", "Form-preserving matrices of small height");
  ar_search->add_option("--form", form_name, "sqrt2 | twisted | integral")
      ->capture_default_str();
  ar_search->add_option("--dim", dimension, "D (matrices are D+1 square)")
      ->capture_default_str();
  ar_search->add_option("--ha", ha, "Bound on |a|")->capture_default_str();
  ar_search->add_option("--hb", hb, "Bound on |b|")->capture_default_str();
  ar_search->add_option("--limit", limit, "Result cap")->capture_default_str();
  auto* ar_injrad = ar->add_subcommand("injrad", "Injectivity radius c1 log N - c2");
  ar_injrad->add_option("--N", inj_n, "Modulus")->capture_default_str();
  ar_injrad->add_option("--c1", c1)->capture_default_str();
  ar_injrad->add_option("--c2", c2)->capture_default_str();
  ar_injrad->add_option("--growth", growth, "Growth constant for the word-length side");

  auto* bd = app.add_subcommand("bounds", "Volume calculators");
  bd->require_subcommand(1);
  unsigned n_sphere = 4, k = 2, i_dim = 2, dim = 4;
  long long chi = 2;
  double radius = 1.0, volume = 1.0, base = 1.0;
  std::string grid = "0.1:5:0.1", profile_file;
  bool hyperbolic = false;
  auto* bd_sphere = bd->add_subcommand("sphere-volume", "Volume of the unit n-sphere");
  bd_sphere->add_option("n", n_sphere, "Sphere dimension")->required();
  auto* bd_gb = bd->add_subcommand("gauss-bonnet", "Volume from Euler characteristic");
  bd_gb->add_option("--chi", chi, "Euler characteristic")->required();
  bd_gb->add_option("--dim", dim, "Even manifold dimension")->capture_default_str();
  auto* bd_h2 = bd->add_subcommand("h2", "Lower bound on dim H2 from volume");
  bd_h2->add_option("--volume", volume, "Manifold volume")->required();
  auto* bd_anderson = bd->add_subcommand("anderson", "Hyperbolic i-ball volume");
  bd_anderson->add_option("--i", i_dim, "Cycle dimension")->capture_default_str();
  bd_anderson->add_option("--R", radius, "Injectivity radius")->required();
  auto* bd_ball = bd->add_subcommand("hyperbolic-ball", "Hyperbolic k-ball volume");
  bd_ball->add_option("--k", k, "Ball dimension")->capture_default_str();
  bd_ball->add_option("--r", radius, "Radius")->required();
  auto* bd_cone = bd->add_subcommand("cone", "Cone volume over a base");
  bd_cone->add_option("--k", k, "Cone dimension")->capture_default_str();
  bd_cone->add_option("--r", radius, "Radius")->required();
  bd_cone->add_option("--base", base, "Volume of the base")->required();
  bd_cone->add_flag("--hyperbolic", hyperbolic, "Hyperbolic instead of Euclidean cone");
  auto* bd_mono = bd->add_subcommand("monotonicity", "Audit d/dr VHB_k and a V(r) profile");
  bd_mono->add_option("--k", k, "Ball dimension")->capture_default_str();
  bd_mono->add_option("--grid", grid, "a:b:step")->capture_default_str();
  bd_mono->add_option("--profile", profile_file, "CSV of r,V rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const CLI::App* leaf = &app;
  std::string command;
  while (!leaf->get_subcommands().empty()) {
    leaf = leaf->get_subcommands().front();
    command += (command.empty() ? "" : " ") + leaf->get_name();
  }

  json report;
  report["command"] = command;
  report["config"] = config_of(leaf, g);
  int exit_code = kExitOk;
  const auto opts = g.options();

  auto run = [&]() -> json {
    char* s = nullptr;
    if (leaf == cx_build) {
      return complex_json(load_complex(complex_spec, g).get());
    }
    if (leaf == cx_validate) {
      const auto x = load_complex(complex_spec, g);
      const auto st = hc_complex_validate(x.get(), &s);
      if (st == HC_VALIDATION_FAILED) exit_code = kExitValidation;
      else if (st != HC_OK) check(st);
      return take(s);
    }
    if (leaf == cx_homology) {
      const auto x = load_complex(complex_spec, g);
      check(hc_complex_homology(x.get(), &s));
      return take(s);
    }
    if (leaf == cx_dual) {
      const auto x = load_complex(complex_spec, g);
      hc_complex* d = nullptr;
      check(hc_complex_dual(x.get(), &d, &s));
      Complex dual(d);
      auto r = take(s);
      r["complex"] = complex_json(dual.get());
      return r;
    }
    if (leaf == cx_cover) {
      const auto x = load_complex(complex_spec, g);
      std::string volts;
      if (random_voltages) {
        check(hc_complex_random_voltages(x.get(), g.seed, sheets, &s));
        volts = s;
        hc_string_free(s);
      } else if (!voltages_file.empty()) {
        volts = read_file(voltages_file);
      } else {
        volts = "{}";
      }
      hc_complex* c = nullptr;
      check(hc_complex_cover(x.get(), sheets, volts.c_str(), &c, &s));
      Complex cov(c);
      auto r = take(s);
      r["voltages"] = json::parse(volts);
      r["complex"] = complex_json(cov.get());
      return r;
    }
    if (leaf == cx_product) {
      const auto a = load_complex(left, g);
      const auto b = load_complex(right, g);
      hc_complex* p = nullptr;
      check(hc_complex_product(a.get(), b.get(), &p));
      return complex_json(Complex(p).get());
    }
    if (leaf == code_params) {
      const auto x = load_complex(complex_spec, g);
      check(hc_code_params(x.get(), degree, &opts, &s));
      return take(s);
    }
    if (leaf == code_distance) {
      const auto x = load_complex(complex_spec, g);
      const auto m = mode == "exact"     ? HC_DISTANCE_EXACT
                     : mode == "bounded" ? HC_DISTANCE_BOUNDED
                                         : HC_DISTANCE_AUTO;
      check(hc_code_distance(x.get(), degree, m, &opts, &s));
      return take(s);
    }
    if (leaf == code_systole) {
      const auto x = load_complex(complex_spec, g);
      check(hc_code_systole(x.get(), degree, &opts, &s));
      auto j = take(s);
      if (min_face_volume) {
        const double w = j["systole"].get<double>();
        if (*min_face_volume <= 0 || (max_face_volume && *max_face_volume < *min_face_volume))
          throw Failure{HC_INVALID_ARGUMENT, "face volumes must satisfy 0 < min <= max"};
        json v = {{"min_face_volume", *min_face_volume}, {"volume_lo", *min_face_volume * w}};
        if (max_face_volume) {
          v["max_face_volume"] = *max_face_volume;
          v["volume_hi"] = *max_face_volume * w;
        }
        j["volume"] = v;
      }
      return j;
    }
    if (leaf == code_ldpc) {
      const auto x = load_complex(complex_spec, g);
      std::size_t w = 0;
      check(hc_code_ldpc(x.get(), degree, &w));
      return json{{"degree", degree}, {"max_generator_weight", w}};
    }
    if (leaf == code_zemor) {
      json inputs = json::array();
      json family_rows = json::array();
      if (!zemor_input.empty()) {
        inputs = json::parse(read_file(zemor_input));
      } else {
        const auto bounds = range.find("..");
        if (bounds == std::string::npos)
          throw Failure{HC_INVALID_ARGUMENT, "--L must be a..b"};
        const auto lo = to_size(range.substr(0, bounds));
        const auto hi = to_size(range.substr(bounds + 2));
        const std::size_t deg = family == "torus4" ? 2 : 1;
        if (family != "toric" && family != "torus4")
          throw Failure{HC_INVALID_ARGUMENT, "unknown family " + family};
        for (auto L = lo; L <= hi; ++L) {
          const auto x = load_complex(family + ":" + std::to_string(L), g);
          check(hc_code_distance(x.get(), deg, HC_DISTANCE_AUTO, &opts, &s));
          auto r = take(s);
          family_rows.push_back({{"L", L}, {"degree", deg}});
          inputs.push_back(r);
        }
      }
      check(hc_zemor_report(inputs.dump().c_str(), epsilon, &s));
      auto r = take(s);
      for (std::size_t i = 0; i < family_rows.size() && i < r["rows"].size(); ++i) {
        json row = family_rows[i];
        for (const auto& [key, v] : r["rows"][i].items()) row[key] = v;
        r["rows"][i] = row;
      }
      return r;
    }
    if (leaf == ar_search) {
      check(hc_arith_search(parse_form(form_name), dimension, ha, hb, limit, &s));
      auto found = take(s);
      return json{{"count", found.size()}, {"generators", found}};
    }
    if (leaf == ar_injrad) {
      check(hc_arith_injrad(inj_n, c1, c2, growth, &s));
      return take(s);
    }
    if (leaf->get_parent() == ar) {
      const auto gens = read_file(gens_file);
      const auto form = leaf == ar_reduce || leaf == ar_closure || leaf == ar_growth
                            ? HC_FORM_SQRT2
                            : parse_form(form_name);
      if (leaf == ar_verify) check(hc_arith_verify(gens.c_str(), form, &s));
      else if (leaf == ar_twist) check(hc_arith_twist(gens.c_str(), form, &s));
      else if (leaf == ar_reduce) check(hc_arith_reduce(gens.c_str(), modulus, &s));
      else if (leaf == ar_closure)
        check(hc_arith_closure(gens.c_str(), modulus, cap, transcript, &s));
      else if (leaf == ar_gamma) check(hc_arith_gamma(gens.c_str(), form, modulus, cap, &s));
      else if (leaf == ar_entry)
        check(hc_arith_entry_bound(gens.c_str(), form, modulus, cap, &s));
      else if (leaf == ar_growth)
        check(hc_arith_growth(gens.c_str(), g.seed, samples, max_len, &s));
      auto r = take(s);
      if (leaf == ar_verify && !r["all_valid"].get<bool>()) exit_code = kExitValidation;
      return r;
    }
    if (leaf == bd_sphere) {
      double v = 0;
      check(hc_bounds_sphere_volume(n_sphere, &v));
      return json{{"n", n_sphere}, {"volume", v}};
    }
    if (leaf == bd_gb) {
      check(hc_bounds_gauss_bonnet(chi, dim, &s));
      return take(s);
    }
    if (leaf == bd_h2) {
      check(hc_bounds_h2(volume, &s));
      return take(s);
    }
    if (leaf == bd_anderson) {
      check(hc_bounds_anderson(i_dim, radius, &s));
      return take(s);
    }
    if (leaf == bd_ball) {
      double v = 0;
      check(hc_bounds_hyperbolic_ball(k, radius, &v));
      return json{{"k", k}, {"r", radius}, {"volume", v}};
    }
    if (leaf == bd_cone) {
      double v = 0;
      check(hc_bounds_cone(k, radius, base, hyperbolic, &v));
      return json{{"k", k}, {"r", radius}, {"base", base}, {"hyperbolic", hyperbolic},
                  {"volume", v}};
    }
    if (leaf == bd_mono) {
      const auto gr = parse_grid(grid);
      std::vector<double> pr, pv;
      if (!profile_file.empty()) std::tie(pr, pv) = read_profile(profile_file);
      check(hc_bounds_monotonicity(k, gr.data(), gr.size(), pr.data(), pv.data(), pr.size(),
                                   &s));
      return take(s);
    }
    throw Failure{HC_INVALID_ARGUMENT, "no handler for " + command};
  };

  try {
    report["result"] = run();
  } catch (const Failure& f) {
    report["error"] = {{"status", hc_status_name(f.status)}, {"message", f.message}};
    std::cerr << "homcss " << command << ": " << f.message << "\n";
    exit_code = f.status == HC_VALIDATION_FAILED ? kExitValidation
                : f.status == HC_BUDGET_EXCEEDED ? kExitBudget
                                                 : kExitFailure;
  } catch (const std::exception& e) {
    report["error"] = {{"status", "internal_error"}, {"message", e.what()}};
    std::cerr << "homcss " << command << ": " << e.what() << "\n";
    exit_code = kExitFailure;
  }

  std::ostringstream out;
  if (g.quiet) {
    print_summary(out, command,
                  report.contains("result") ? report["result"] : report["error"]);
  } else {
    out << report.dump() << "\n";
  }
  if (g.output.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(g.output, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << g.output << "\n";
      return kExitFailure;
    }
    f << out.str();
  }
  return exit_code;
}
