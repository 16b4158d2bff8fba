#include "homcss/css_code.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <thread>

#include "json.hpp"

#include "homcss/error.hpp"

namespace homcss {

namespace {

// One half of the distance problem: vectors in ker(check) that pair
// nontrivially with some logical (equivalently, lie outside the row span of
// the other generator matrix).
struct Side {
  const F2Matrix* check;
  std::vector<F2Vector> logicals;
};

// Complement of rowspan(check) inside ker(span).
std::vector<F2Vector> logical_basis(const F2Matrix& check, const F2Matrix& span) {
  EchelonBasis trivial(check.cols());
  for (const auto& r : check.row_vectors()) trivial.insert(r);
  std::vector<F2Vector> out;
  for (const auto& v : kernel_basis(span))
    if (trivial.insert(v)) out.push_back(v);
  return out;
}

struct Best {
  std::size_t weight = std::numeric_limits<std::size_t>::max();
  F2Vector vector;

  bool found() const { return weight != std::numeric_limits<std::size_t>::max(); }
  void offer(const F2Vector& v, std::size_t w) {
    if (w < weight || (w == weight && support_lex_less(v, vector))) {
      weight = w;
      vector = v;
    }
  }
  void merge(const Best& other) {
    if (other.found()) offer(other.vector, other.weight);
  }
};

template <class Fn>
void run_workers(unsigned workers, Fn&& fn) {
  if (workers <= 1) {
    fn(0U);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(fn, w);
  for (auto& t : pool) t.join();
}

// Gray-code walk over all nonzero combinations of the kernel basis.
Best enumerate_side(const Side& side, const SearchOptions& opts) {
  const auto basis = kernel_basis(*side.check);
  const auto z = basis.size();
  if (z > opts.budget || z > kMaxBudget)
    throw BudgetError("kernel dimension " + std::to_string(z) +
                          " exceeds enumeration budget " +
                          std::to_string(std::min(opts.budget, kMaxBudget)),
                      z);
  const auto n = side.check->cols();
  const auto k = side.logicals.size();

  std::vector<F2Vector> masks;
  for (const auto& b : basis) {
    F2Vector m(k);
    for (std::size_t j = 0; j < k; ++j)
      if (b.dot(side.logicals[j])) m.set(j);
    masks.push_back(std::move(m));
  }

  const std::uint64_t total = std::uint64_t{1} << z;
  const unsigned workers = std::max(1U, opts.workers);
  std::vector<Best> partial(workers);

  run_workers(workers, [&](unsigned w) {
    const std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
    const std::uint64_t hi = lo + total / workers + (w < total % workers ? 1 : 0);
    if (lo >= hi) return;
    F2Vector cur(n), mask(k);
    const std::uint64_t gray = lo ^ (lo >> 1);
    for (std::size_t b = 0; b < z; ++b)
      if ((gray >> b) & 1U) {
        cur ^= basis[b];
        mask ^= masks[b];
      }
    auto& best = partial[w];
    for (std::uint64_t t = lo;;) {
      if (t != 0 && !mask.is_zero()) {
        const auto wt = cur.weight();
        if (wt <= best.weight) best.offer(cur, wt);
      }
      if (++t >= hi) break;
      const auto bit = static_cast<std::size_t>(std::countr_zero(t));
      cur ^= basis[bit];
      mask ^= masks[bit];
    }
  });

  Best best;
  for (const auto& p : partial) best.merge(p);
  return best;
}

// Depth-first search over supports of exactly `weight` elements in
// lexicographic order, pruning partial supports whose syndrome can no longer
// cancel.
class BoundedSearch {
 public:
  explicit BoundedSearch(const Side& side) : side_(side) {
    const auto& h = *side.check;
    n_ = h.cols();
    const auto ht = h.transpose();
    columns_ = ht.row_vectors();
    max_col_ = std::vector<std::size_t>(h.rows(), 0);
    for (std::size_t r = 0; r < h.rows(); ++r) {
      const auto s = h.row(r).support();
      max_col_[r] = s.empty() ? 0 : s.back();
    }
    col_weight_ = h.max_col_weight();
    const auto k = side.logicals.size();
    cell_masks_.assign(n_, F2Vector(k));
    for (std::size_t j = 0; j < k; ++j)
      for (auto c : side.logicals[j].support()) cell_masks_[c].set(j);
  }

  Best search(std::size_t weight, unsigned workers) const {
    Best best;
    if (weight == 0 || weight > n_) return best;
    workers = std::max(1U, workers);
    std::vector<Best> partial(workers);
    run_workers(workers, [&](unsigned w) {
      State st{F2Vector(side_.check->rows()), F2Vector(side_.logicals.size()), {}};
      for (std::size_t first = w; first < n_; first += workers) {
        apply(st, first);
        if (dfs(st, first, weight - 1)) {
          partial[w].offer(F2Vector(n_, st.chosen), weight);
          break;  // later leading elements are lexicographically larger
        }
        apply(st, first);
      }
    });
    for (const auto& p : partial) best.merge(p);
    return best;
  }

 private:
  struct State {
    F2Vector syndrome;
    F2Vector mask;
    std::vector<std::size_t> chosen;
  };

  void apply(State& st, std::size_t c) const {
    st.syndrome ^= columns_[c];
    st.mask ^= cell_masks_[c];
    if (!st.chosen.empty() && st.chosen.back() == c)
      st.chosen.pop_back();
    else
      st.chosen.push_back(c);
  }

  bool viable(const State& st, std::size_t last, std::size_t remaining) const {
    const auto sw = st.syndrome.weight();
    if (sw > remaining * col_weight_) return false;
    for (auto r : st.syndrome.support())
      if (max_col_[r] <= last) return false;
    return true;
  }

  bool dfs(State& st, std::size_t last, std::size_t remaining) const {
    if (remaining == 0) return st.syndrome.is_zero() && !st.mask.is_zero();
    if (!viable(st, last, remaining)) return false;
    for (std::size_t c = last + 1; c + remaining <= n_; ++c) {
      apply(st, c);
      if (dfs(st, c, remaining - 1)) return true;
      apply(st, c);
    }
    return false;
  }

  const Side& side_;
  std::size_t n_ = 0;
  std::vector<F2Vector> columns_;
  std::vector<std::size_t> max_col_;
  std::size_t col_weight_ = 0;
  std::vector<F2Vector> cell_masks_;
};

struct Sides {
  Side cycles;
  Side cocycles;
};

Sides make_sides(const CssCode& code) {
  return {Side{&code.w2(), logical_basis(code.w2(), code.w1())},
          Side{&code.w1(), logical_basis(code.w1(), code.w2())}};
}

Distance from_best(const Best& best) {
  Distance d;
  d.lo = d.hi = best.weight;
  d.witness = best.vector.support();
  return d;
}

Best bounded_min(const std::vector<const Side*>& sides, const SearchOptions& opts,
                 std::size_t n) {
  std::vector<BoundedSearch> searches;
  for (auto* s : sides) searches.emplace_back(*s);
  const auto cap = std::min(opts.w_max, n);
  for (std::size_t w = 1; w <= cap; ++w) {
    Best best;
    for (const auto& s : searches) best.merge(s.search(w, opts.workers));
    if (best.found()) return best;
  }
  return {};
}

}  // namespace

CssCode CssCode::build(const ChainComplex& x, std::size_t degree) {
  const auto report = validate(x);
  if (!report.valid) throw ValidationError(report.diagnostic);
  if (degree > x.dim())
    throw InvalidArgument("degree " + std::to_string(degree) +
                          " outside 0.." + std::to_string(x.dim()));
  CssCode code;
  code.degree_ = degree;
  code.n_ = x.cells(degree);
  code.w1_ = x.coboundary(degree);        // ∂_{i+1}ᵀ
  code.w2_ = x.boundary_or_zero(degree);  // ∂_i
  return code;
}

std::size_t code_dimension(const CssCode& code) {
  return code.n() - rank(code.w1()) - rank(code.w2());
}

std::size_t ldpc_check(const CssCode& code) {
  return std::max(code.w1().max_row_weight(), code.w2().max_row_weight());
}

CodeParams distance_exact(const CssCode& code, const SearchOptions& opts) {
  CodeParams p;
  p.n = code.n();
  p.k = code_dimension(code);
  if (p.k == 0) throw NoNontrivialClass();
  const auto sides = make_sides(code);
  Best best = enumerate_side(sides.cycles, opts);
  best.merge(enumerate_side(sides.cocycles, opts));
  p.d = from_best(best);
  return p;
}

CodeParams distance_bounded(const CssCode& code, const SearchOptions& opts) {
  CodeParams p;
  p.n = code.n();
  p.k = code_dimension(code);
  if (p.k == 0) throw NoNontrivialClass();
  const auto sides = make_sides(code);
  const auto best = bounded_min({&sides.cycles, &sides.cocycles}, opts, p.n);
  if (best.found()) {
    p.d = from_best(best);
  } else {
    p.d.lo = opts.w_max + 1;
    p.d.hi = p.n;
  }
  return p;
}

CodeParams distance_auto(const CssCode& code, const SearchOptions& opts) {
  const auto z_cycles = code.n() - rank(code.w2());
  const auto z_cocycles = code.n() - rank(code.w1());
  const auto limit = std::min(opts.budget, kMaxBudget);
  if (z_cycles <= limit && z_cocycles <= limit) return distance_exact(code, opts);
  return distance_bounded(code, opts);
}

Distance combinatorial_systole(const ChainComplex& x, std::size_t degree,
                               const SearchOptions& opts) {
  const auto code = CssCode::build(x, degree);
  if (code_dimension(code) == 0) throw NoNontrivialClass();
  const Side cycles{&code.w2(), logical_basis(code.w2(), code.w1())};
  const auto z = code.n() - rank(code.w2());
  if (z <= std::min(opts.budget, kMaxBudget))
    return from_best(enumerate_side(cycles, opts));
  const auto best = bounded_min({&cycles}, opts, code.n());
  if (!best.found())
    throw BudgetError("cycle space dimension " + std::to_string(z) +
                          " exceeds budget and no cycle of weight <= " +
                          std::to_string(opts.w_max) + " is nontrivial",
                      z);
  return from_best(best);
}

std::vector<ZemorRow> zemor_report(const std::vector<CodeParams>& params,
                                   double epsilon) {
  std::vector<ZemorRow> rows;
  for (const auto& p : params) {
    ZemorRow r;
    r.n = p.n;
    r.k = p.k;
    r.d_lo = p.d.lo;
    r.d_hi = p.d.hi;
    r.ratio_lo = p.zemor_lo();
    r.ratio_hi = p.zemor_hi();
    if (p.n > 1 && p.k > 0) {
      const auto logn = std::log(double(p.n));
      r.exponent_lo = std::log(double(p.k) * p.d.lo * p.d.lo) / logn;
      r.exponent_hi = std::log(double(p.k) * p.d.hi * p.d.hi) / logn;
      r.exceeds = *r.exponent_lo >= 1.0 + epsilon;
    }
    rows.push_back(r);
  }
  return rows;
}

std::string params_to_json(const CodeParams& p) {
  nlohmann::ordered_json j;
  j["n"] = p.n;
  j["k"] = p.k;
  if (p.d.exact()) {
    j["d"] = {{"exact", p.d.lo}};
    j["rate"] = p.rate();
    j["delta"] = p.delta_lo();
    j["zemor"] = p.zemor_lo();
  } else {
    j["d"] = {{"lo", p.d.lo}, {"hi", p.d.hi}};
    j["rate"] = p.rate();
    j["delta"] = {{"lo", p.delta_lo()}, {"hi", p.delta_hi()}};
    j["zemor"] = {{"lo", p.zemor_lo()}, {"hi", p.zemor_hi()}};
  }
  j["witness"] = p.d.witness;
  return j.dump();
}

}  // namespace homcss
