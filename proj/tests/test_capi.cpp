// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "homcss/homcss.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

json take(char* s) {
  REQUIRE(s != nullptr);
  auto j = json::parse(s);
  hc_string_free(s);
  return j;
}

struct Handle {
  hc_complex* p = nullptr;
  ~Handle() { hc_complex_free(p); }
};

}  // namespace

TEST_CASE("status names and defaults") {
  CHECK(std::string(hc_status_name(HC_OK)) == "ok");
  CHECK(std::string(hc_status_name(HC_BUDGET_EXCEEDED)) == "budget_exceeded");
  hc_search_options o;
  hc_search_options_default(&o);
  CHECK(o.budget == 26);
  CHECK(o.w_max == 4);
  CHECK(o.workers == 1);
  CHECK(std::strlen(hc_version()) > 0);
}

TEST_CASE("toric code params through the C API") {
  Handle t;
  REQUIRE(hc_complex_toric(3, &t.p) == HC_OK);
  CHECK(hc_complex_dim(t.p) == 2);
  CHECK(hc_complex_cells(t.p, 1) == 18);
  CHECK(hc_complex_cells(t.p, 7) == 0);
  char* s = nullptr;
  REQUIRE(hc_code_params(t.p, 1, nullptr, &s) == HC_OK);
  const auto j = take(s);
  CHECK(j["n"] == 18);
  CHECK(j["k"] == 2);
  CHECK(j["d"]["exact"] == 3);
  size_t w = 0;
  CHECK(hc_code_ldpc(t.p, 1, &w) == HC_OK);
  CHECK(w == 4);
  long long chi = 1;
  CHECK(hc_complex_euler(t.p, &chi) == HC_OK);
  CHECK(chi == 0);
}

TEST_CASE("error mapping") {
  Handle t;
  REQUIRE(hc_complex_toric(2, &t.p) == HC_OK);
  Handle t4;
  REQUIRE(hc_complex_product(t.p, t.p, &t4.p) == HC_OK);
  char* s = nullptr;
  CHECK(hc_code_distance(t4.p, 2, HC_DISTANCE_EXACT, nullptr, &s) == HC_BUDGET_EXCEEDED);
  CHECK(std::string(hc_last_error()).find("51") != std::string::npos);
  CHECK(s == nullptr);

  Handle tet;
  REQUIRE(hc_complex_from_facets("[[0,1,2],[0,1,3],[0,2,3],[1,2,3]]", &tet.p) == HC_OK);
  CHECK(hc_code_distance(tet.p, 1, HC_DISTANCE_AUTO, nullptr, &s) == HC_NO_NONTRIVIAL_CLASS);
  hc_complex* bad = nullptr;
  CHECK(hc_complex_from_json("{", &bad) == HC_PARSE_ERROR);
  CHECK(bad == nullptr);
  CHECK(hc_complex_toric(1, &bad) == HC_INVALID_ARGUMENT);
  CHECK(hc_complex_toric(2, nullptr) == HC_INVALID_ARGUMENT);

  Handle edge;
  REQUIRE(hc_complex_from_facets("[[0,1]]", &edge.p) == HC_OK);
  hc_complex* d = nullptr;
  CHECK(hc_complex_dual(edge.p, &d, nullptr) == HC_VALIDATION_FAILED);
  CHECK(hc_complex_cover(t.p, 2, "{\"0\":[1,0]}", &d, nullptr) == HC_VALIDATION_FAILED);

  const char* corrupted =
      R"({"dim":2,"cells":[4,8,4],"boundaries":["4 8\n0 0\n","8 4\n0 0\n"]})";
  Handle c;
  REQUIRE(hc_complex_from_json(corrupted, &c.p) == HC_OK);
  CHECK(hc_complex_validate(c.p, &s) == HC_VALIDATION_FAILED);
  const auto rep = take(s);
  CHECK(rep["valid"] == false);
  CHECK(rep.contains("diagnostic"));
}

TEST_CASE("json round trip and cover") {
  Handle t;
  REQUIRE(hc_complex_toric(2, &t.p) == HC_OK);
  char* text = nullptr;
  REQUIRE(hc_complex_to_json(t.p, &text) == HC_OK);
  Handle back;
  REQUIRE(hc_complex_from_json(text, &back.p) == HC_OK);
  char* text2 = nullptr;
  REQUIRE(hc_complex_to_json(back.p, &text2) == HC_OK);
  CHECK(std::string(text) == std::string(text2));
  hc_string_free(text);
  hc_string_free(text2);

  char* volts = nullptr;
  REQUIRE(hc_complex_random_voltages(t.p, 5, 3, &volts) == HC_OK);
  Handle cov;
  char* rep = nullptr;
  REQUIRE(hc_complex_cover(t.p, 3, volts, &cov.p, &rep) == HC_OK);
  hc_string_free(volts);
  const auto r = take(rep);
  CHECK(r["euler"] == 0);
  CHECK(r["projection_commutes"] == true);
  CHECK(hc_complex_cells(cov.p, 2) == 12);
}

TEST_CASE("arithmetic and bounds entry points") {
  const char* gens = R"([{"A":[[3,2,2],[2,2,1],[2,1,2]]},{"A":[[1,0,0],[0,0,-1],[0,1,0]]}])";
  char* s = nullptr;
  REQUIRE(hc_arith_verify(gens, HC_FORM_INTEGRAL, &s) == HC_OK);
  CHECK(take(s)["all_valid"] == true);
  REQUIRE(hc_arith_verify(gens, HC_FORM_SQRT2, &s) == HC_OK);
  CHECK(take(s)["all_valid"] == false);
  REQUIRE(hc_arith_closure(gens, 3, 1000, 0, &s) == HC_OK);
  CHECK(take(s)["order"] == 24);
  REQUIRE(hc_arith_entry_bound(gens, HC_FORM_INTEGRAL, 5, 100000, &s) == HC_OK);
  CHECK(take(s)["all_hold"] == true);
  CHECK(hc_arith_reduce(gens, 1, &s) == HC_INVALID_ARGUMENT);
  CHECK(hc_arith_verify("[{}]", HC_FORM_SQRT2, &s) == HC_PARSE_ERROR);
  REQUIRE(hc_arith_search(HC_FORM_SQRT2, 2, 3, 2, 100, &s) == HC_OK);
  CHECK(take(s).size() == 39);
  REQUIRE(hc_arith_injrad(1e6, 1.0, 0.0, 75.0, &s) == HC_OK);
  CHECK(take(s)["word_length_lower_bound"] == 4);

  double v = 0;
  REQUIRE(hc_bounds_sphere_volume(4, &v) == HC_OK);
  CHECK(v == doctest::Approx(26.318945));
  CHECK(hc_bounds_gauss_bonnet(2, 3, &s) == HC_INVALID_ARGUMENT);
  const double grid[] = {1.0, 0.5};
  CHECK(hc_bounds_monotonicity(3, grid, 2, nullptr, nullptr, 0, &s) == HC_INVALID_ARGUMENT);
}

TEST_CASE("last error is per thread") {
  hc_complex* bad = nullptr;
  CHECK(hc_complex_toric(1, &bad) == HC_INVALID_ARGUMENT);
  std::string other;
  std::thread th([&] {
    hc_complex* x = nullptr;
    hc_complex_toric(2, &x);
    other = hc_last_error();
    hc_complex_free(x);
  });
  th.join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(hc_last_error()).empty());
}
