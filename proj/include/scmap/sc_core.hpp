#pragma once

// Schwarz-Christoffel maps of the upper and lower half-planes:
//
//   dw/dz = C / prod_i (z - x_i)^{k_i},      w(z) = K + C * int_{base}^{z} ...
//
// Every power uses the (-pi, pi] angle convention (see branch_power), which
// is what makes a single formula serve both half-planes. The lower half-plane
// map is the continuation of the upper one across the real ray x > x_n.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "complex_kernel.hpp"
#include "errors.hpp"
#include "quadrature.hpp"

namespace scmap {

/// Prevertex location on the real axis together with its exponent.
struct PreVertex {
  double x = 0.0;
  double k = 0.0;

  friend bool operator==(const PreVertex&, const PreVertex&) = default;
};

enum class HalfPlane { Upper, Lower };

/// Contour taxonomy by |sum k|: a (< 1), b (= 1), c (in (1, 2)), d (= 2).
enum class ContourType { A, B, C, D };

inline constexpr double kTypeEqualityTol = 1e-12;

inline char to_letter(ContourType t) {
  switch (t) {
  case ContourType::A: return 'a';
  case ContourType::B: return 'b';
  case ContourType::C: return 'c';
  case ContourType::D: return 'd';
  }
  return '?';
}

inline const char* to_string(HalfPlane h) { return h == HalfPlane::Upper ? "upper" : "lower"; }

/// +1 for the upper half-plane, -1 for the lower one.
inline double side_sign(HalfPlane h) { return h == HalfPlane::Upper ? 1.0 : -1.0; }

/// Immutable map definition: constants C and K, ordered prevertices, and the
/// base point of the real axis whose (upper-side) image is K.
class SCSpec {
public:
  /// Throws ArgumentError when an invariant is violated. Without an explicit
  /// base the first prevertex with k < 1 is used (0 when there are none and
  /// n == 0, otherwise a regular point left of x_1).
  SCSpec(Complex c, Complex kay, std::vector<PreVertex> prevertices,
         std::optional<double> base = std::nullopt)
      : c_(c), kay_(kay), prevertices_(std::move(prevertices)) {
    if (!is_finite(c_) || !is_finite(kay_))
      throw ArgumentError("SCSpec: C and K must be finite");
    if (c_ == Complex(0.0, 0.0))
      throw ArgumentError("SCSpec: C must be non-zero");
    for (std::size_t i = 0; i < prevertices_.size(); ++i) {
      const PreVertex& p = prevertices_[i];
      if (!std::isfinite(p.x) || !std::isfinite(p.k))
        throw ArgumentError("SCSpec: prevertex components must be finite");
      if (std::abs(p.k) > 2.0)
        throw ArgumentError("SCSpec: |k_i| must not exceed 2");
      if (i > 0 && !(prevertices_[i - 1].x < p.x))
        throw ArgumentError("SCSpec: prevertices must be strictly increasing in x");
    }
    const double s = sum_k();
    if (s < -2.0 - kTypeEqualityTol || s > 2.0 + kTypeEqualityTol)
      throw ArgumentError("SCSpec: sum of exponents must lie in [-2, 2]");

    if (base) {
      if (!std::isfinite(*base))
        throw ArgumentError("SCSpec: base must be finite");
      for (const PreVertex& p : prevertices_)
        if (p.x == *base && p.k >= 1.0)
          throw ArgumentError("SCSpec: base sits on a prevertex whose image is at infinity");
      base_ = *base;
    } else if (prevertices_.empty()) {
      base_ = 0.0;
    } else {
      auto it = std::find_if(prevertices_.begin(), prevertices_.end(),
                             [](const PreVertex& p) { return p.k < 1.0; });
      base_ = it != prevertices_.end() ? it->x : prevertices_.front().x - 1.0;
    }
  }

  Complex c() const { return c_; }
  Complex kay() const { return kay_; }
  double base() const { return base_; }
  std::span<const PreVertex> prevertices() const { return prevertices_; }
  std::size_t n() const { return prevertices_.size(); }

  double sum_k() const {
    return std::accumulate(prevertices_.begin(), prevertices_.end(), 0.0,
                           [](double acc, const PreVertex& p) { return acc + p.k; });
  }

  /// True when z coincides with one of the prevertices.
  bool is_prevertex(Complex z) const {
    return z.imag() == 0.0 && std::any_of(prevertices_.begin(), prevertices_.end(),
                                          [&](const PreVertex& p) { return p.x == z.real(); });
  }

  double distance_to_prevertices(Complex z) const {
    double d = std::numeric_limits<double>::infinity();
    for (const PreVertex& p : prevertices_)
      d = std::min(d, std::abs(z - p.x));
    return d;
  }

  friend bool operator==(const SCSpec&, const SCSpec&) = default;

private:
  Complex c_;
  Complex kay_;
  std::vector<PreVertex> prevertices_;
  double base_ = 0.0;
};

/// C / prod branch_power(z, x_i, k_i). Points on the real axis take the
/// limit from above (the angle convention assigns +pi to negative reals).
inline Complex sc_derivative(const SCSpec& spec, Complex z) {
  Complex denom(1.0, 0.0);
  for (const PreVertex& p : spec.prevertices()) {
    if (z == Complex(p.x, 0.0))
      throw SingularPointError("sc_derivative: z is a prevertex");
    denom *= branch_power(z, p.x, p.k);
  }
  return spec.c() / denom;
}

inline ContourType classify(const SCSpec& spec) {
  const double s = std::abs(spec.sum_k());
  if (std::abs(s - 1.0) <= kTypeEqualityTol)
    return ContourType::B;
  if (std::abs(s - 2.0) <= kTypeEqualityTol)
    return ContourType::D;
  return s < 1.0 ? ContourType::A : ContourType::C;
}

struct Orientations {
  PrincipalAngle alpha0;
  PrincipalAngle alphaN;
};

/// Direction of the initial ray (x < x_1) and the final ray (x > x_n) of the
/// boundary image.
inline Orientations orientations(const SCSpec& spec, HalfPlane half) {
  const double arg_c = principal_angle(spec.c()).radians();
  const double sigma = spec.sum_k();
  return {wrap_principal(arg_c - side_sign(half) * kPi * sigma), principal_angle(spec.c())};
}

/// Direction change at each vertex: k_i * pi on the upper side, negated on
/// the lower side.
inline std::vector<double> turn_angles(const SCSpec& spec, HalfPlane half) {
  std::vector<double> turns;
  turns.reserve(spec.n());
  for (const PreVertex& p : spec.prevertices())
    turns.push_back(side_sign(half) * p.k * kPi);
  return turns;
}

namespace detail {

/// prod_{j != skip} |x - x_j|^{-k_j}; the modulus of the integrand on the
/// real axis with one factor optionally removed.
inline double modulus_without(const SCSpec& spec, double x, std::size_t skip) {
  double log_sum = 0.0;
  const auto pv = spec.prevertices();
  for (std::size_t j = 0; j < pv.size(); ++j) {
    if (j == skip)
      continue;
    log_sum -= pv[j].k * std::log(std::abs(x - pv[j].x));
  }
  return std::exp(log_sum);
}

inline constexpr std::size_t kNoPrevertex = static_cast<std::size_t>(-1);

inline std::size_t prevertex_index(const SCSpec& spec, double x) {
  const auto pv = spec.prevertices();
  for (std::size_t j = 0; j < pv.size(); ++j)
    if (pv[j].x == x)
      return j;
  return kNoPrevertex;
}

/// int_a^b prod |x - x_j|^{-k_j} dx for a < b with no prevertex strictly
/// inside (a, b). An endpoint that is a prevertex with 0 < k < 1 is handled
/// by the substitution s = |x - x_j|^{1-k}, which removes the singularity.
inline QuadratureReport modulus_integral(const SCSpec& spec, double a, double b,
                                         const QuadratureOptions& opts) {
  QuadratureReport total;
  if (a == b)
    return total;
  const double mid = 0.5 * (a + b);
  QuadratureOptions half_opts = opts;
  half_opts.abs_tol = 0.5 * opts.abs_tol;

  auto piece = [&](double end, double inner, double dir) {
    // Integrates from the endpoint `end` to `inner` (dir = +1 when end < inner).
    const std::size_t j = prevertex_index(spec, end);
    if (j != kNoPrevertex && spec.prevertices()[j].k > 0.0) {
      const double k = spec.prevertices()[j].k;
      const double p = 1.0 / (1.0 - k);
      const double s_max = std::pow(std::abs(inner - end), 1.0 - k);
      return integrate(
          [&](double s) {
            const double x = end + dir * std::pow(s, p);
            return Complex(p * modulus_without(spec, x, j), 0.0);
          },
          0.0, s_max, half_opts);
    }
    return integrate(
        [&](double x) { return Complex(modulus_without(spec, x, kNoPrevertex), 0.0); },
        std::min(end, inner), std::max(end, inner), half_opts);
  };

  const QuadratureReport left = piece(a, mid, 1.0);
  const QuadratureReport right = piece(b, mid, -1.0);
  total.value = left.value + right.value;
  total.abs_error_estimate = left.abs_error_estimate + right.abs_error_estimate;
  total.subdivisions = left.subdivisions + right.subdivisions;
  total.path = {Complex(a, 0.0), Complex(b, 0.0)};
  return total;
}

/// int_b^inf prod |x - x_j|^{-k_j} dx for b >= x_n, sum k > 1. The infinite
/// part uses x = o + R s^{-1/(sigma-1)}, under which the integrand becomes
/// R/(sigma-1) * prod |R + (o - x_j) u|^{-k_j} with u = s^{1/(sigma-1)}.
inline QuadratureReport right_tail_integral(const SCSpec& spec, double b,
                                            const QuadratureOptions& opts) {
  const auto pv = spec.prevertices();
  const double sigma = spec.sum_k();
  const double o = pv.back().x;
  const double span = std::max(1.0, pv.back().x - pv.front().x);
  const double r = std::max(b - o, 0.0) + span;

  QuadratureOptions half_opts = opts;
  half_opts.abs_tol = 0.5 * opts.abs_tol;
  QuadratureReport near = modulus_integral(spec, b, o + r, half_opts);
  const double q = 1.0 / (sigma - 1.0);
  QuadratureReport far = integrate(
      [&](double s) {
        const double u = std::pow(s, q);
        double log_sum = 0.0;
        for (const PreVertex& p : pv)
          log_sum -= p.k * std::log(r + (o - p.x) * u);
        return Complex(r * q * std::exp(log_sum), 0.0);
      },
      0.0, 1.0, half_opts);
  near.value += far.value;
  near.abs_error_estimate += far.abs_error_estimate;
  near.subdivisions += far.subdivisions;
  return near;
}

/// Mirror image x -> -x of the prevertex list (same exponents).
inline SCSpec mirrored(const SCSpec& spec) {
  std::vector<PreVertex> pv;
  for (auto it = spec.prevertices().rbegin(); it != spec.prevertices().rend(); ++it)
    pv.push_back({-it->x, it->k});
  return SCSpec(spec.c(), spec.kay(), std::move(pv), -spec.base());
}

} // namespace detail

/// Length of the boundary segment between prevertices i and i+1 (0-based,
/// 0 <= i < n-1). Infinite when either endpoint exponent is >= 1.
inline double segment_length(const SCSpec& spec, std::size_t i,
                             const QuadratureOptions& opts = {}) {
  if (spec.n() < 2 || i + 1 >= spec.n())
    throw ArgumentError("segment_length: segment index out of range");
  const auto pv = spec.prevertices();
  if (pv[i].k >= 1.0 || pv[i + 1].k >= 1.0)
    return std::numeric_limits<double>::infinity();
  QuadratureOptions o = opts;
  o.abs_tol = opts.abs_tol / std::abs(spec.c());
  return std::abs(spec.c()) * detail::modulus_integral(spec, pv[i].x, pv[i + 1].x, o).value.real();
}

/// Vertices, turns and end-ray orientations of the image of R+ (Upper) or
/// R- (Lower).
struct BoundaryImage {
  HalfPlane half = HalfPlane::Upper;
  /// w_i (Upper) or W_i (Lower); entries at infinity hold (inf, inf).
  std::vector<Complex> vertices;
  std::vector<bool> vertex_at_infinity;
  std::vector<double> turns;
  PrincipalAngle alpha0;
  PrincipalAngle alphaN;
  bool w_infinity_finite = false;
  /// Image of z = infinity when finite, reached along the final ray.
  Complex w_infinity{std::numeric_limits<double>::infinity(),
                     std::numeric_limits<double>::infinity()};
  /// |w_infinity via final ray - w_infinity via initial ray|; 0 when infinite.
  double closure_gap = 0.0;
  std::vector<double> segment_lengths;
};

namespace detail {

/// Values of the boundary map on one side of the real axis. The axis is cut
/// by the prevertices into n+1 gaps; each gap gets one regular reference
/// point whose image is stored, and everything else is integrated from there.
struct AxisWalk {
  std::vector<double> gap_points;    // n + 1 regular points
  std::vector<Complex> gap_values;   // images of gap_points
  std::vector<Complex> vertices;     // images of prevertices (inf if unreachable)
  std::vector<bool> at_infinity;
  Complex w_infinity_right{std::numeric_limits<double>::infinity(), 0.0};
  Complex w_infinity_left{std::numeric_limits<double>::infinity(), 0.0};
};

/// C * exp(-s i pi S_g): constant factor of dw/dz along gap g, where S_g is
/// the sum of exponents to the right of the gap.
inline Complex gap_factor(const SCSpec& spec, HalfPlane half, std::size_t gap) {
  double right_sum = 0.0;
  const auto pv = spec.prevertices();
  for (std::size_t j = gap; j < pv.size(); ++j)
    right_sum += pv[j].k;
  return spec.c() * std::polar(1.0, -side_sign(half) * kPi * right_sum);
}

inline std::vector<double> gap_points(const SCSpec& spec) {
  const auto pv = spec.prevertices();
  if (pv.empty())
    return {spec.base()};
  const double span = std::max(1.0, pv.back().x - pv.front().x);
  std::vector<double> pts;
  pts.push_back(pv.front().x - span);
  for (std::size_t i = 1; i < pv.size(); ++i)
    pts.push_back(0.5 * (pv[i - 1].x + pv[i].x));
  pts.push_back(pv.back().x + span);
  return pts;
}

/// Signed integral of the real-axis modulus from a to b (either order).
inline double signed_modulus_integral(const SCSpec& spec, double a, double b,
                                      const QuadratureOptions& opts) {
  if (a == b)
    return 0.0;
  if (a < b)
    return modulus_integral(spec, a, b, opts).value.real();
  return -modulus_integral(spec, b, a, opts).value.real();
}

/// Image difference w(gap_points[g+1]) - w(gap_points[g]) on one side,
/// crossing prevertex g either along the axis (k < 1) or over a small
/// semicircle in the side's half-plane (k >= 1).
inline Complex cross_prevertex(const SCSpec& spec, HalfPlane half, std::size_t g,
                               const std::vector<double>& pts, const QuadratureOptions& opts) {
  const PreVertex& p = spec.prevertices()[g];
  const Complex left = gap_factor(spec, half, g);
  const Complex right = gap_factor(spec, half, g + 1);
  if (p.k < 1.0) {
    return left * signed_modulus_integral(spec, pts[g], p.x, opts) +
           right * signed_modulus_integral(spec, p.x, pts[g + 1], opts);
  }
  const double rho = 0.5 * std::min(p.x - pts[g], pts[g + 1] - p.x);
  const double theta_end = 0.0;
  const double theta_start = side_sign(half) * kPi;
  const QuadratureReport arc = integrate_contour(
      [&](Complex z) { return sc_derivative(spec, z); },
      {ArcLeg{Complex(p.x, 0.0), rho, theta_start, theta_end}}, opts);
  return left * signed_modulus_integral(spec, pts[g], p.x - rho, opts) + arc.value +
         right * signed_modulus_integral(spec, p.x + rho, pts[g + 1], opts);
}

/// Walks one side of the axis starting from a known image `start_value` at
/// the regular-or-finite point `start_x`.
inline AxisWalk walk_axis(const SCSpec& spec, HalfPlane half, double start_x, Complex start_value,
                          const QuadratureOptions& opts) {
  AxisWalk walk;
  const auto pv = spec.prevertices();
  const std::size_t n = pv.size();
  walk.gap_points = gap_points(spec);
  walk.gap_values.assign(n + 1, Complex(0.0, 0.0));
  walk.vertices.assign(n, Complex(std::numeric_limits<double>::infinity(),
                                  std::numeric_limits<double>::infinity()));
  walk.at_infinity.assign(n, true);

  // Gap holding start_x; a prevertex start belongs to the gap on its right.
  std::size_t g0 = 0;
  while (g0 < n && pv[g0].x <= start_x)
    ++g0;
  const std::size_t j = prevertex_index(spec, start_x);
  if (j != kNoPrevertex) {
    walk.gap_values[j + 1] =
        start_value + gap_factor(spec, half, j + 1) *
                          signed_modulus_integral(spec, start_x, walk.gap_points[j + 1], opts);
    g0 = j + 1;
  } else {
    walk.gap_values[g0] =
        start_value + gap_factor(spec, half, g0) *
                          signed_modulus_integral(spec, start_x, walk.gap_points[g0], opts);
  }
  for (std::size_t g = g0; g < n; ++g)
    walk.gap_values[g + 1] = walk.gap_values[g] + cross_prevertex(spec, half, g, walk.gap_points, opts);
  for (std::size_t g = g0; g-- > 0;)
    walk.gap_values[g] = walk.gap_values[g + 1] - cross_prevertex(spec, half, g, walk.gap_points, opts);

  for (std::size_t i = 0; i < n; ++i) {
    if (pv[i].k >= 1.0)
      continue;
    walk.vertices[i] = walk.gap_values[i] + gap_factor(spec, half, i) *
                                                signed_modulus_integral(spec, walk.gap_points[i], pv[i].x, opts);
    walk.at_infinity[i] = false;
  }

  if (n > 0 && spec.sum_k() > 1.0 + kTypeEqualityTol) {
    walk.w_infinity_right =
        walk.gap_values[n] + spec.c() * right_tail_integral(spec, walk.gap_points[n], opts).value.real();
    const SCSpec mirror = mirrored(spec);
    walk.w_infinity_left =
        walk.gap_values[0] - gap_factor(spec, half, 0) *
                                 right_tail_integral(mirror, -walk.gap_points[0], opts).value.real();
  }
  return walk;
}

} // namespace detail

/// The SC map of both half-planes, evaluated by contour quadrature from
/// precomputed real-axis reference images. Immutable after construction.
class ScMap {
public:
  explicit ScMap(SCSpec spec, QuadratureOptions opts = {})
      : spec_(std::move(spec)), opts_(opts) {
    upper_ = detail::walk_axis(spec_, HalfPlane::Upper, spec_.base(), spec_.kay(), opts_);
    // Both sides agree on x > x_n, where every angle is zero.
    const std::size_t last = upper_.gap_points.size() - 1;
    lower_ = detail::walk_axis(spec_, HalfPlane::Lower, upper_.gap_points[last],
                               upper_.gap_values[last], opts_);
  }

  const SCSpec& spec() const { return spec_; }
  const QuadratureOptions& options() const { return opts_; }

  const detail::AxisWalk& walk(HalfPlane half) const {
    return half == HalfPlane::Upper ? upper_ : lower_;
  }

  Complex derivative(Complex z) const { return sc_derivative(spec_, z); }

  /// w(z) for z off the real axis, with its quadrature report.
  QuadratureReport evaluate(Complex z) const;

  Complex value(Complex z) const { return evaluate(z).value; }

  /// A regular real-axis point with its image on the given side, usable as a
  /// quadrature anchor (approached from within `half`).
  std::pair<double, Complex> reference_point(HalfPlane half, double near_x) const {
    const detail::AxisWalk& w = walk(half);
    std::size_t best = 0;
    for (std::size_t g = 1; g < w.gap_points.size(); ++g)
      if (std::abs(w.gap_points[g] - near_x) < std::abs(w.gap_points[best] - near_x))
        best = g;
    return {w.gap_points[best], w.gap_values[best]};
  }

private:
  SCSpec spec_;
  QuadratureOptions opts_;
  detail::AxisWalk upper_;
  detail::AxisWalk lower_;
};

inline HalfPlane half_plane_of(Complex z) {
  if (z.imag() > 0.0)
    return HalfPlane::Upper;
  if (z.imag() < 0.0)
    return HalfPlane::Lower;
  throw DomainError("half_plane_of: point lies on the real axis");
}

namespace detail {

/// Admissible contour from z0 to z inside the closed half-plane of `half`:
/// the straight segment, unless it passes within a quarter of its length of
/// a prevertex, in which case a rectangle lifted away from the axis.
inline std::vector<Complex> default_path(const SCSpec& spec, Complex z0, Complex z, HalfPlane half) {
  const double len = std::abs(z - z0);
  bool lift = false;
  for (const PreVertex& p : spec.prevertices())
    if (distance_to_segment(Complex(p.x, 0.0), z0, z) < 0.25 * len)
      lift = true;
  if (!lift)
    return {z0, z};
  const double height =
      side_sign(half) * std::max({std::abs(z0.imag()), std::abs(z.imag()), 0.5 * len});
  return {z0, Complex(z0.real(), height), Complex(z.real(), height), z};
}

inline void check_path(const SCSpec& spec, const std::vector<Complex>& path, HalfPlane half,
                       double clearance) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (side_sign(half) * path[i].imag() < 0.0)
      throw DomainError("map_point: contour leaves the half-plane");
    if (i > 0)
      for (const PreVertex& p : spec.prevertices())
        if (distance_to_segment(Complex(p.x, 0.0), path[i - 1], path[i]) < clearance)
          throw SingularPointError("map_point: contour passes within clearance of a prevertex");
  }
}

} // namespace detail

/// Anchor pair (z0, w0 = w(z0)) used to fix the integration constant.
struct Anchor {
  Complex z0;
  Complex w0;
};

/// w0 + int_{z0}^{z} dw/dz along an admissible contour. With `via` empty the
/// default path is used; otherwise the contour visits the given waypoints.
/// Both endpoints must lie in the same open half-plane.
inline QuadratureReport map_point(const SCSpec& spec, Complex z, const Anchor& anchor,
                                  const QuadratureOptions& opts = {},
                                  const std::vector<Complex>& via = {}) {
  if (spec.is_prevertex(z) || spec.is_prevertex(anchor.z0))
    throw SingularPointError("map_point: endpoint is a prevertex");
  if (!is_finite(z) || !is_finite(anchor.z0))
    throw DomainError("map_point: non-finite endpoint");
  if (z == anchor.z0) {
    QuadratureReport r;
    r.value = anchor.w0;
    r.path = {z};
    return r;
  }
  const HalfPlane half = half_plane_of(anchor.z0);
  if (half_plane_of(z) != half)
    throw DomainError("map_point: z and z0 lie in different half-planes");
  if (spec.distance_to_prevertices(z) < opts.clearance ||
      spec.distance_to_prevertices(anchor.z0) < opts.clearance)
    throw SingularPointError("map_point: endpoint within clearance of a prevertex");

  std::vector<Complex> path;
  if (via.empty()) {
    path = detail::default_path(spec, anchor.z0, z, half);
  } else {
    path.push_back(anchor.z0);
    path.insert(path.end(), via.begin(), via.end());
    path.push_back(z);
  }
  detail::check_path(spec, path, half, opts.clearance);

  QuadratureReport report = integrate_contour([&](Complex zeta) { return sc_derivative(spec, zeta); },
                                              polyline_legs(path), opts);
  report.value += anchor.w0;
  report.path = path;
  return report;
}

inline QuadratureReport ScMap::evaluate(Complex z) const {
  const HalfPlane half = half_plane_of(z);
  if (!is_finite(z))
    throw DomainError("ScMap: non-finite point");
  if (spec_.distance_to_prevertices(z) < opts_.clearance)
    throw SingularPointError("ScMap: point within clearance of a prevertex");
  const auto [x0, w0] = reference_point(half, z.real());
  // Leave the axis vertically, travel at a safe height, come down onto z.
  const double gap = spec_.n() == 0 ? 1.0 : spec_.distance_to_prevertices(Complex(x0, 0.0));
  const double height = side_sign(half) * std::max(std::abs(z.imag()), gap);
  std::vector<Complex> path = {Complex(x0, 0.0), Complex(x0, height), Complex(z.real(), height), z};
  QuadratureReport report = integrate_contour([&](Complex zeta) { return sc_derivative(spec_, zeta); },
                                              polyline_legs(path), opts_);
  report.value += w0;
  report.path = std::move(path);
  return report;
}

/// Full boundary skeleton for one half-plane.
inline BoundaryImage boundary_image(const ScMap& map, HalfPlane half) {
  const SCSpec& spec = map.spec();
  const detail::AxisWalk& walk = map.walk(half);
  BoundaryImage img;
  img.half = half;
  img.vertices = walk.vertices;
  img.vertex_at_infinity = walk.at_infinity;
  img.turns = turn_angles(spec, half);
  const Orientations o = orientations(spec, half);
  img.alpha0 = o.alpha0;
  img.alphaN = o.alphaN;
  img.w_infinity_finite = spec.n() > 0 && spec.sum_k() > 1.0 + kTypeEqualityTol;
  if (img.w_infinity_finite) {
    img.w_infinity = walk.w_infinity_right;
    img.closure_gap = std::abs(walk.w_infinity_right - walk.w_infinity_left);
  }
  for (std::size_t i = 0; i + 1 < spec.n(); ++i)
    img.segment_lengths.push_back(segment_length(spec, i, map.options()));
  return img;
}

inline BoundaryImage boundary_image(const SCSpec& spec, HalfPlane half,
                                    const QuadratureOptions& opts = {}) {
  return boundary_image(ScMap(spec, opts), half);
}

/// Reflection of w across the line through `through` with direction `angle`.
inline Complex reflect_across_line(Complex w, Complex through, double angle) {
  return through + std::polar(1.0, 2.0 * angle) * std::conj(w - through);
}

} // namespace scmap
