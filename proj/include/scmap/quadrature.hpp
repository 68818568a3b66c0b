#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature for complex-valued integrands,
// over real intervals and over piecewise contours built from straight legs
// and circular arcs.

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "complex_kernel.hpp"

namespace scmap {

struct QuadratureOptions {
  double abs_tol = 1e-9;
  double rel_tol = 0.0;
  int max_subdivisions = 1 << 14;
  /// Minimum distance a contour keeps from the integrand's singular points.
  double clearance = 1e-8;
};

/// Outcome of one contour integral.
struct QuadratureReport {
  Complex value{0.0, 0.0};
  double abs_error_estimate = 0.0;
  int subdivisions = 0;
  std::vector<Complex> path;
};

/// Tolerance not met within the subdivision budget. Carries the best
/// available (partial) result.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, QuadratureReport partial)
      : std::runtime_error(what), report_(std::move(partial)) {}

  const QuadratureReport& report() const { return report_; }

private:
  QuadratureReport report_;
};

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  Complex value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gk15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Complex kronrod = kKronrodWeights[7] * f(center);
  Complex gauss = kGaussWeights[3] * f(center);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const Complex sum = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[j] * sum;
    if (j % 2 == 1)
      gauss += kGaussWeights[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

} // namespace detail

/// Integrates f over [a, b]. Throws ConvergenceError with the partial report
/// if the tolerance is not reached within the subdivision budget, and
/// DomainError if the integrand produces a non-finite value.
template <class F>
QuadratureReport integrate(const F& f, double a, double b, const QuadratureOptions& opts = {}) {
  QuadratureReport report;
  if (a == b)
    return report;

  std::priority_queue<detail::Panel> panels;
  panels.push(detail::gk15(f, a, b));
  Complex total = panels.top().value;
  double error = panels.top().error;

  auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };

  while (error > target()) {
    if (report.subdivisions >= opts.max_subdivisions) {
      report.value = total;
      report.abs_error_estimate = error;
      throw ConvergenceError("integrate: subdivision budget exhausted", report);
    }
    const detail::Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= std::min(worst.a, worst.b) || mid >= std::max(worst.a, worst.b)) {
      // Panel can no longer be split in double precision.
      report.value = total;
      report.abs_error_estimate = error;
      throw ConvergenceError("integrate: panel width underflow", report);
    }
    panels.pop();
    const detail::Panel left = detail::gk15(f, worst.a, mid);
    const detail::Panel right = detail::gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++report.subdivisions;
  }

  // Re-sum to shed the drift accumulated by incremental updates.
  total = {0.0, 0.0};
  error = 0.0;
  while (!panels.empty()) {
    total += panels.top().value;
    error += panels.top().error;
    panels.pop();
  }
  if (!is_finite(total))
    throw DomainError("integrate: integrand produced a non-finite value");
  report.value = total;
  report.abs_error_estimate = error;
  return report;
}

/// Straight contour leg from `from` to `to`.
struct LineLeg {
  Complex from;
  Complex to;
};

/// Circular arc centre + radius * exp(i t), t running from `theta_from` to
/// `theta_to` (either direction).
struct ArcLeg {
  Complex centre;
  double radius;
  double theta_from;
  double theta_to;
};

using ContourLeg = std::variant<LineLeg, ArcLeg>;

inline Complex leg_start(const ContourLeg& leg) {
  if (const auto* line = std::get_if<LineLeg>(&leg))
    return line->from;
  const auto& arc = std::get<ArcLeg>(leg);
  return arc.centre + std::polar(arc.radius, arc.theta_from);
}

inline Complex leg_end(const ContourLeg& leg) {
  if (const auto* line = std::get_if<LineLeg>(&leg))
    return line->to;
  const auto& arc = std::get<ArcLeg>(leg);
  return arc.centre + std::polar(arc.radius, arc.theta_to);
}

/// Integral of f(zeta) d zeta along a chain of legs. The tolerance is shared
/// evenly between legs; subdivision counts add up.
template <class F>
QuadratureReport integrate_contour(const F& f, const std::vector<ContourLeg>& legs,
                                   const QuadratureOptions& opts = {}) {
  QuadratureReport report;
  if (legs.empty())
    return report;
  report.path.push_back(leg_start(legs.front()));

  QuadratureOptions leg_opts = opts;
  leg_opts.abs_tol = opts.abs_tol / static_cast<double>(legs.size());

  for (const ContourLeg& leg : legs) {
    QuadratureReport piece;
    try {
      if (const auto* line = std::get_if<LineLeg>(&leg)) {
        const Complex a = line->from;
        const Complex d = line->to - line->from;
        piece = integrate([&](double t) { return f(a + t * d) * d; }, 0.0, 1.0, leg_opts);
      } else {
        const auto& arc = std::get<ArcLeg>(leg);
        piece = integrate(
            [&](double t) {
              const Complex e = std::polar(1.0, t);
              return f(arc.centre + arc.radius * e) * (Complex(0.0, arc.radius) * e);
            },
            arc.theta_from, arc.theta_to, leg_opts);
      }
    } catch (const ConvergenceError& err) {
      report.value += err.report().value;
      report.abs_error_estimate += err.report().abs_error_estimate;
      report.subdivisions += err.report().subdivisions;
      report.path.push_back(leg_end(leg));
      throw ConvergenceError(err.what(), report);
    }
    report.value += piece.value;
    report.abs_error_estimate += piece.abs_error_estimate;
    report.subdivisions += piece.subdivisions;
    report.path.push_back(leg_end(leg));
  }
  return report;
}

/// Contour legs visiting the given waypoints in order.
inline std::vector<ContourLeg> polyline_legs(const std::vector<Complex>& waypoints) {
  std::vector<ContourLeg> legs;
  for (std::size_t i = 1; i < waypoints.size(); ++i)
    if (waypoints[i] != waypoints[i - 1])
      legs.emplace_back(LineLeg{waypoints[i - 1], waypoints[i]});
  return legs;
}

/// Distance from point p to the segment [a, b].
inline double distance_to_segment(Complex p, Complex a, Complex b) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0)
    return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

} // namespace scmap
