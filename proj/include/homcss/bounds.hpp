#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace homcss {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  /// Relative floor on the error target, so large integrals stop at
  /// roundoff instead of chasing an unreachable absolute tolerance.
  double rel_tol = 1e-14;
  int max_depth = 60;
};

/// Adaptive Simpson with Richardson correction.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg = {});

/// Total volume of the unit n-sphere S^n ⊂ R^{n+1}.
double sphere_volume(unsigned n);
/// Volume of the Euclidean k-ball of radius r.
double euclidean_ball_volume(unsigned k, double r);
/// (k−1)-volume of the Euclidean sphere of radius r bounding a k-ball.
double euclidean_sphere_area(unsigned k, double r);

/// Vol(S^{k−1}) sinh^{k−1}(r): boundary of the hyperbolic k-ball.
double hyperbolic_sphere_area(unsigned k, double r);
/// ∫₀^r hyperbolic_sphere_area(k, t) dt by quadrature.
double hyperbolic_ball_volume(unsigned k, double r, const QuadratureConfig& cfg = {});

struct GaussBonnet {
  double volume = 0;
  /// False when the formula yields a non-positive volume, which no closed
  /// hyperbolic manifold has.
  bool valid = true;
};

/// Vol = (−1)^n χ Vol(S^{2n}) / 2 for a closed hyperbolic 2n-manifold.
/// Throws InvalidArgument for odd dimension.
GaussBonnet gauss_bonnet(long long chi, unsigned dim);

struct H2Bound {
  double bound = 0;
  /// Volume above which the bound exceeds V/100.
  double hundredth_threshold = 0;
};

/// (2 / Vol S⁴) V − 2.
H2Bound h2_lower_bound(double volume);

struct AndersonBound {
  double volume = 0;
  /// VHB_i(R) / e^{(i−1)R}; absent for R < 1.
  std::optional<double> exponential_ratio;
};

AndersonBound anderson_bound(unsigned i, double radius,
                             const QuadratureConfig& cfg = {});

/// (r/k) · base.
double cone_volume_euclidean(unsigned k, double r, double base_volume);
/// (VHB_k(r) / VHS_{k−1}(r)) · base.
double cone_volume_hyperbolic(unsigned k, double r, double base_volume,
                              const QuadratureConfig& cfg = {});

struct MonotonicityPoint {
  double r = 0;
  double fd_derivative = 0;
  double sphere_area = 0;
  double rel_error = 0;
  double calibration_slope = 0;
};

struct ProfileViolation {
  double r = 0;  // segment midpoint
  double slope = 0;
  double required = 0;
};

struct MonotonicityReport {
  unsigned k = 0;
  std::vector<MonotonicityPoint> points;
  double max_rel_error = 0;
  std::vector<ProfileViolation> violations;
  std::size_t segments_checked = 0;
};

/// (a) central differences of VHB_k against VHS_{k−1} on the grid;
/// (b) V = VHB_k gives ratio 1; (c) for a piecewise-linear profile, checks
/// V' ≥ (VHS_{k−1}/VHB_k) V at each segment midpoint, within relative
/// slack `tolerance`. Throws InvalidArgument on a non-increasing grid.
MonotonicityReport monotonicity_audit(
    unsigned k, const std::vector<double>& grid,
    const std::vector<std::pair<double, double>>& profile = {},
    double tolerance = 1e-9, const QuadratureConfig& cfg = {});

}  // namespace homcss
