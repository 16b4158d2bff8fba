#include "homcss/bounds.hpp"

#include <cmath>
#include <numbers>

#include "homcss/error.hpp"

namespace homcss {

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double fa,
                    double b, double fb, double m, double fm, double whole,
                    double eps, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * eps)
    return left + right + delta / 15.0;
  return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * eps, depth - 1) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * eps, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  // Coarse magnitude estimate from a composite rule sets the relative floor.
  double scale = 0.0;
  constexpr int kProbe = 64;
  for (int i = 0; i <= kProbe; ++i) scale += std::abs(f(a + (b - a) * i / kProbe));
  scale *= std::abs(b - a) / kProbe;
  const double eps = std::max(cfg.abs_tol, cfg.rel_tol * scale);
  return simpson_step(f, a, fa, b, fb, m, fm, whole, eps, cfg.max_depth);
}

double sphere_volume(unsigned n) {
  // |S^n| = 2π/(n−1) |S^{n−2}|, from |S^0| = 2 and |S^1| = 2π.
  double v = (n % 2 == 0) ? 2.0 : 2.0 * std::numbers::pi;
  for (unsigned m = (n % 2 == 0) ? 2 : 3; m <= n; m += 2)
    v *= 2.0 * std::numbers::pi / double(m - 1);
  return v;
}

double euclidean_sphere_area(unsigned k, double r) {
  if (k == 0) return 0.0;
  return sphere_volume(k - 1) * std::pow(r, double(k - 1));
}

double euclidean_ball_volume(unsigned k, double r) {
  if (k == 0) return 1.0;
  return sphere_volume(k - 1) * std::pow(r, double(k)) / double(k);
}

double hyperbolic_sphere_area(unsigned k, double r) {
  if (k == 0) return 0.0;
  return sphere_volume(k - 1) * std::pow(std::sinh(r), double(k - 1));
}

double hyperbolic_ball_volume(unsigned k, double r, const QuadratureConfig& cfg) {
  if (r < 0) throw InvalidArgument("radius must be non-negative");
  if (k == 0) throw InvalidArgument("dimension must be at least 1");
  return integrate([k](double t) { return hyperbolic_sphere_area(k, t); }, 0.0, r,
                   cfg);
}

GaussBonnet gauss_bonnet(long long chi, unsigned dim) {
  if (dim % 2 != 0) throw InvalidArgument("Gauss-Bonnet needs even dimension");
  const unsigned n = dim / 2;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  GaussBonnet g;
  g.volume = sign * double(chi) * sphere_volume(dim) / 2.0;
  g.valid = g.volume > 0.0;
  return g;
}

H2Bound h2_lower_bound(double volume) {
  if (volume <= 0) throw InvalidArgument("volume must be positive");
  const double s4 = sphere_volume(4);
  return {2.0 / s4 * volume - 2.0, 2.0 / (2.0 / s4 - 0.01)};
}

AndersonBound anderson_bound(unsigned i, double radius, const QuadratureConfig& cfg) {
  if (i < 1) throw InvalidArgument("cycle dimension must be at least 1");
  AndersonBound out;
  out.volume = hyperbolic_ball_volume(i, radius, cfg);
  if (radius >= 1.0)
    out.exponential_ratio = out.volume / std::exp(double(i - 1) * radius);
  return out;
}

double cone_volume_euclidean(unsigned k, double r, double base_volume) {
  if (base_volume < 0 || r <= 0 || k == 0)
    throw InvalidArgument("cone needs k >= 1, r > 0, base >= 0");
  return r / double(k) * base_volume;
}

double cone_volume_hyperbolic(unsigned k, double r, double base_volume,
                              const QuadratureConfig& cfg) {
  if (base_volume < 0 || r <= 0 || k == 0)
    throw InvalidArgument("cone needs k >= 1, r > 0, base >= 0");
  return hyperbolic_ball_volume(k, r, cfg) / hyperbolic_sphere_area(k, r) *
         base_volume;
}

MonotonicityReport monotonicity_audit(
    unsigned k, const std::vector<double>& grid,
    const std::vector<std::pair<double, double>>& profile, double tolerance,
    const QuadratureConfig& cfg) {
  if (k == 0) throw InvalidArgument("dimension must be at least 1");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] <= 0) throw InvalidArgument("grid radii must be positive");
    if (i && grid[i] <= grid[i - 1])
      throw InvalidArgument("grid must be strictly increasing");
  }
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i].first <= 0)
      throw InvalidArgument("profile radii must be positive");
    if (i && profile[i].first <= profile[i - 1].first)
      throw InvalidArgument("profile must be strictly increasing in r");
  }

  const auto area = [k](double t) { return hyperbolic_sphere_area(k, t); };
  MonotonicityReport rep;
  rep.k = k;
  for (double r : grid) {
    MonotonicityPoint p;
    p.r = r;
    const double h = 1e-4 * std::min(1.0, r);
    // VHB(r+h) − VHB(r−h), taken as one integral to avoid cancellation.
    p.fd_derivative = integrate(area, r - h, r + h, cfg) / (2.0 * h);
    p.sphere_area = area(r);
    p.rel_error = std::abs(p.fd_derivative - p.sphere_area) / p.sphere_area;
    const double vhb = hyperbolic_ball_volume(k, r, cfg);
    // d/dr (V / VHB_k) for V = VHB_k, with V' taken from the differences.
    p.calibration_slope = (p.fd_derivative - p.sphere_area) / vhb;
    rep.max_rel_error = std::max(rep.max_rel_error, p.rel_error);
    rep.points.push_back(p);
  }

  for (std::size_t i = 0; i + 1 < profile.size(); ++i) {
    const auto [r0, v0] = profile[i];
    const auto [r1, v1] = profile[i + 1];
    const double mid = 0.5 * (r0 + r1);
    const double v_mid = 0.5 * (v0 + v1);
    const double slope = (v1 - v0) / (r1 - r0);
    const double required =
        area(mid) / hyperbolic_ball_volume(k, mid, cfg) * v_mid;
    ++rep.segments_checked;
    if (slope < required - tolerance * std::abs(required))
      rep.violations.push_back({mid, slope, required});
  }
  return rep;
}

}  // namespace homcss
