#pragma once

// Images of coordinate lines y = const and x = const, with discontinuity
// detection, plus finite-difference checks of analyticity.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <optional>
#include <utility>
#include <vector>

#include "complex_kernel.hpp"
#include "errors.hpp"
#include "gallery.hpp"
#include "quadrature.hpp"
#include "sc_core.hpp"

namespace scmap {

enum class LineOrientation { Horizontal, Vertical };

/// A coordinate line of the z-plane: y = level (Horizontal) or x = level
/// (Vertical), sampled over [lo, hi].
struct LineRequest {
  LineOrientation orientation = LineOrientation::Horizontal;
  double level = 0.0;
  double lo = 0.0;
  double hi = 1.0;
  int samples = 2;

  void validate() const {
    if (!std::isfinite(level) || !std::isfinite(lo) || !std::isfinite(hi))
      throw ArgumentError("LineRequest: non-finite bounds");
    if (!(lo < hi))
      throw ArgumentError("LineRequest: span requires lo < hi");
    if (samples < 2)
      throw ArgumentError("LineRequest: at least two samples are required");
    if (orientation == LineOrientation::Horizontal && level == 0.0)
      throw ArgumentError("LineRequest: horizontal line on the real axis; use +/- epsilon");
  }

  friend bool operator==(const LineRequest&, const LineRequest&) = default;
};

struct Polyline {
  std::vector<Complex> points;        // w-plane
  std::vector<Complex> source_points; // z-plane
  /// Index j flags a discontinuity between points[j-1] and points[j].
  std::vector<std::size_t> breaks;
  /// Samples that fell on a prevertex; their points are NaN.
  std::vector<std::size_t> skipped;
};

struct SamplingOptions {
  /// Offset of R+/R- from the real axis.
  double epsilon = 1e-6;
  /// A jump larger than this multiple of the median step is a break candidate.
  double jump_factor = 50.0;
  /// Bisection depth used to tell steep continuous stretches from jumps.
  int refine_depth = 40;
};

/// Quadrature ran out of budget part way along a line.
class PolylineConvergenceError : public ConvergenceError {
public:
  PolylineConvergenceError(const ConvergenceError& cause, Polyline partial)
      : ConvergenceError(cause.what(), cause.report()), partial_(std::move(partial)) {}

  const Polyline& partial() const { return partial_; }

private:
  Polyline partial_;
};

/// Anything with value(z) and derivative(z): ScMap, GalleryMap.
template <class M>
concept ConformalMap = requires(const M& m, Complex z) {
  { m.value(z) } -> std::convertible_to<Complex>;
  { m.derivative(z) } -> std::convertible_to<Complex>;
  { m.spec() } -> std::convertible_to<const SCSpec&>;
};

namespace detail {

inline const ScMap& quadrature_of(const ScMap& m) { return m; }
inline const ScMap& quadrature_of(const GalleryMap& m) { return m.quadrature(); }

inline std::optional<Complex> try_closed_form(const ScMap&, Complex) { return std::nullopt; }
inline std::optional<Complex> try_closed_form(const GalleryMap& m, Complex z) {
  if (m.has_closed_form(z))
    return closed_form_eval(m.entry(), z);
  return std::nullopt;
}

/// Evaluates the map at z: closed form when available, otherwise quadrature
/// from `prev` (same half-plane) or from the map's own reference points.
template <ConformalMap M>
Complex evaluate_sample(const M& map, Complex z, const std::optional<std::pair<Complex, Complex>>& prev) {
  if (auto cf = try_closed_form(map, z))
    return *cf;
  const ScMap& q = quadrature_of(map);
  if (prev && prev->first.imag() * z.imag() > 0.0)
    return map_point(q.spec(), z, Anchor{prev->first, prev->second}, q.options()).value;
  return q.value(z);
}

inline std::vector<Complex> line_sources(const LineRequest& req, double epsilon) {
  std::vector<Complex> zs;
  const int n = req.samples;
  if (req.orientation == LineOrientation::Horizontal) {
    for (int j = 0; j < n; ++j)
      zs.emplace_back(req.lo + (req.hi - req.lo) * j / (n - 1), req.level);
    return zs;
  }
  const double x = req.level;
  if (req.lo < 0.0 && req.hi > 0.0 && n >= 4) {
    // Regular samples keep half a step clear of y = 0 on each side; the two
    // one-sided limits x -/+ i epsilon are placed in between.
    const int regular = n - 2;
    int neg = static_cast<int>(std::lround(regular * (-req.lo) / (req.hi - req.lo)));
    neg = std::clamp(neg, 1, regular - 1);
    const int pos = regular - neg;
    const double step_neg = -req.lo / (neg - 0.5);
    const double step_pos = req.hi / (pos - 0.5);
    for (int j = 0; j < neg; ++j)
      zs.emplace_back(x, req.lo + j * step_neg);
    zs.emplace_back(x, -epsilon);
    zs.emplace_back(x, epsilon);
    for (int j = pos - 1; j >= 0; --j)
      zs.emplace_back(x, req.hi - j * step_pos);
    return zs;
  }
  for (int j = 0; j < n; ++j) {
    double y = req.lo + (req.hi - req.lo) * j / (n - 1);
    if (y == 0.0)
      y = req.hi > 0.0 ? epsilon : -epsilon;
    zs.emplace_back(x, y);
  }
  return zs;
}

inline double median(std::vector<double> v) {
  if (v.empty())
    return 0.0;
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

/// True when the image of the z-segment [za, zb] (one half-plane) still has
/// a step above `threshold` after `depth` bisections.
template <ConformalMap M>
bool persists_after_refinement(const M& map, Complex za, Complex wa, Complex zb, Complex wb,
                               double threshold, int depth) {
  if (std::abs(wb - wa) <= threshold)
    return false;
  if (depth == 0)
    return true;
  const Complex zm = 0.5 * (za + zb);
  if (zm == za || zm == zb)
    return true;
  const Complex wm = evaluate_sample(map, zm, std::make_pair(za, wa));
  return persists_after_refinement(map, za, wa, zm, wm, threshold, depth - 1) ||
         persists_after_refinement(map, zm, wm, zb, wb, threshold, depth - 1);
}

} // namespace detail

/// Samples the image of one coordinate line. Consecutive samples whose image
/// step exceeds jump_factor x the median step are break candidates; within
/// one half-plane a candidate is confirmed only if bisection cannot shrink
/// it, across the real axis the one-sided limits decide directly.
template <ConformalMap M>
Polyline sample_line(const M& map, const LineRequest& req, const SamplingOptions& opts = {}) {
  req.validate();
  if (!(opts.epsilon > 0.0))
    throw ArgumentError("sample_line: epsilon must be positive");

  Polyline line;
  line.source_points = detail::line_sources(req, opts.epsilon);
  const SCSpec& spec = map.spec();
  const double clearance = detail::quadrature_of(map).options().clearance;

  std::optional<std::pair<Complex, Complex>> prev;
  for (std::size_t j = 0; j < line.source_points.size(); ++j) {
    const Complex z = line.source_points[j];
    if (spec.distance_to_prevertices(z) < clearance) {
      line.skipped.push_back(j);
      line.points.emplace_back(std::nan(""), std::nan(""));
      continue;
    }
    try {
      const Complex w = detail::evaluate_sample(map, z, prev);
      line.points.push_back(w);
      prev = std::make_pair(z, w);
    } catch (const ConvergenceError& err) {
      throw PolylineConvergenceError(err, line);
    }
  }

  std::vector<double> steps;
  for (std::size_t j = 1; j < line.points.size(); ++j) {
    const double d = std::abs(line.points[j] - line.points[j - 1]);
    if (std::isfinite(d))
      steps.push_back(d);
  }
  const double threshold = opts.jump_factor * detail::median(steps);

  for (std::size_t j = 1; j < line.points.size(); ++j) {
    const Complex za = line.source_points[j - 1];
    const Complex zb = line.source_points[j];
    const Complex wa = line.points[j - 1];
    const Complex wb = line.points[j];
    const double d = std::abs(wb - wa);
    if (!std::isfinite(d) || !(d > threshold))
      continue;
    bool jump = false;
    if (za.imag() * zb.imag() < 0.0) {
      jump = true;
    } else {
      try {
        jump = detail::persists_after_refinement(map, za, wa, zb, wb, threshold, opts.refine_depth);
      } catch (const ConvergenceError& err) {
        throw PolylineConvergenceError(err, line);
      }
    }
    if (jump)
      line.breaks.push_back(j);
  }
  return line;
}

namespace detail {

template <class F>
Complex evaluate_any(const F& f, Complex z) {
  if constexpr (ConformalMap<F>)
    return f.value(z);
  else
    return f(z);
}

template <class F>
void check_stencil(const F& f, Complex z, double h) {
  if (!(h > 0.0) || !std::isfinite(h))
    throw ArgumentError("finite-difference step must be positive");
  if constexpr (ConformalMap<F>) {
    if (!(std::abs(z.imag()) > h))
      throw DomainError("finite-difference stencil crosses the real axis");
    if (f.spec().distance_to_prevertices(z) <= h)
      throw DomainError("finite-difference stencil touches a prevertex");
  }
}

} // namespace detail

/// max(|u_x - v_y|, |u_y + v_x|) by central differences with step h. Accepts
/// an SC map or any callable Complex -> Complex.
template <class F>
double cauchy_riemann_residual(const F& f, Complex z, double h) {
  detail::check_stencil(f, z, h);
  const Complex east = detail::evaluate_any(f, z + h);
  const Complex west = detail::evaluate_any(f, z - h);
  const Complex north = detail::evaluate_any(f, z + Complex(0.0, h));
  const Complex south = detail::evaluate_any(f, z - Complex(0.0, h));
  const Complex d_dx = (east - west) / (2.0 * h);
  const Complex d_dy = (north - south) / (2.0 * h);
  return std::max(std::abs(d_dx.real() - d_dy.imag()), std::abs(d_dy.real() + d_dx.imag()));
}

struct HarmonicResidual {
  double laplacian_u;
  double laplacian_v;
};

/// |Laplacian u| and |Laplacian v| by the 5-point stencil with step h.
template <class F>
HarmonicResidual harmonic_residual(const F& f, Complex z, double h) {
  detail::check_stencil(f, z, h);
  const Complex centre = detail::evaluate_any(f, z);
  const Complex sum = detail::evaluate_any(f, z + h) + detail::evaluate_any(f, z - h) +
                      detail::evaluate_any(f, z + Complex(0.0, h)) +
                      detail::evaluate_any(f, z - Complex(0.0, h));
  const Complex lap = (sum - 4.0 * centre) / (h * h);
  return {std::abs(lap.real()), std::abs(lap.imag())};
}

struct TangentCheck {
  PrincipalAngle phi;
  double identity_residual;
};

inline constexpr double kTangentSecant = 1e-6;

/// Image-curve direction phi = theta + arg(dw/dz) for a curve through z with
/// direction theta, compared against the direction of a short secant of the
/// image. The secant is integrated directly (closed form difference where
/// available) so it stays accurate at length 1e-6.
template <ConformalMap M>
TangentCheck tangent_orientation_check(const M& map, Complex z, double theta) {
  const Complex slope = map.derivative(z);
  if (slope == Complex(0.0, 0.0))
    throw SingularPointError("tangent_orientation_check: derivative vanishes");
  const PrincipalAngle phi = wrap_principal(theta + principal_angle(slope).radians());
  const Complex dz = std::polar(kTangentSecant, theta);
  Complex dw;
  const auto a = detail::try_closed_form(map, z);
  const auto b = detail::try_closed_form(map, z + dz);
  if (a && b) {
    dw = *b - *a;
  } else {
    const ScMap& q = detail::quadrature_of(map);
    dw = map_point(q.spec(), z + dz, Anchor{z, 0.0}, q.options()).value;
  }
  const double measured = principal_angle(dw).radians();
  return {phi, std::abs(wrap_principal(phi.radians() - measured).radians())};
}

} // namespace scmap
