#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "homcss/arithmetic.hpp"
#include "homcss/builders.hpp"
#include "homcss/chain_complex.hpp"
#include "homcss/css_code.hpp"

// JSON reports shared by the C API and tests. Every function returns a
// compact, key-ordered JSON document; equal inputs give equal bytes.
namespace homcss::reports {

enum class DistanceMode { Auto, Exact, Bounded };

std::string validation(const ChainComplex& x);
std::string homology(const ChainComplex& x);
std::string dual(const ChainComplex& x, const DualComplex& d);
std::string cover(const ChainComplex& base, const CoverResult& c, std::size_t sheets);

VoltageCover voltages_from_json(const std::string& text, std::size_t sheets);
std::string voltages_to_json(const VoltageCover& v);
std::vector<Facet> facets_from_json(const std::string& text);

std::string code_params(const ChainComplex& x, std::size_t degree,
                        const SearchOptions& opts);
std::string distance(const ChainComplex& x, std::size_t degree, DistanceMode mode,
                     const SearchOptions& opts);
std::string systole(const ChainComplex& x, std::size_t degree, const SearchOptions& opts);
std::string zemor(const std::string& params_json, double epsilon);
CodeParams params_from_json(const std::string& text);

QuadraticForm form_for(int form_id, std::size_t size);
std::string arith_verify(const std::vector<ZSqrt2Matrix>& gens, const QuadraticForm& q);
std::string arith_twist(const std::vector<ZSqrt2Matrix>& gens, const QuadraticForm& q);
std::string arith_reduce(const std::vector<ZSqrt2Matrix>& gens, std::uint64_t modulus);
std::string arith_closure(const std::vector<ZSqrt2Matrix>& gens, std::uint64_t modulus,
                          std::size_t cap, bool transcript);
std::string arith_gamma(const std::vector<ZSqrt2Matrix>& gens, const QuadraticForm& q,
                        std::uint64_t modulus, std::size_t cap);
std::string arith_entry_bound(const std::vector<ZSqrt2Matrix>& gens,
                              const QuadraticForm& q, std::uint64_t modulus,
                              std::size_t cap);
std::string arith_growth(const std::vector<ZSqrt2Matrix>& gens, std::uint64_t seed,
                         std::size_t samples, std::size_t max_length);
std::string arith_injrad(double modulus, double c1, double c2, double growth);

std::string bounds_gauss_bonnet(long long chi, unsigned dim);
std::string bounds_h2(double volume);
std::string bounds_anderson(unsigned i, double radius);
std::string bounds_monotonicity(unsigned k, const std::vector<double>& grid,
                                const std::vector<std::pair<double, double>>& profile);

}  // namespace homcss::reports
