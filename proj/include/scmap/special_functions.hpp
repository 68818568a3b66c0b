#pragma once

// Complex special functions behind the closed-form example maps.

#include <algorithm>
#include <cmath>
#include <vector>

#include "complex_kernel.hpp"
#include "errors.hpp"
#include "quadrature.hpp"

namespace scmap {

struct HypergeometricParams {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
};

namespace detail {

inline bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

} // namespace detail

/// Gauss hypergeometric function 2F1(a, b; c; zeta) on |zeta| < 1 by its
/// Taylor series, and at zeta = 1 by Gauss's summation theorem.
inline Complex hyp2f1(const HypergeometricParams& p, Complex zeta) {
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.c))
    throw DomainError("hyp2f1: non-finite parameter");
  if (detail::is_nonpositive_integer(p.c))
    throw DomainError("hyp2f1: c must not be zero or a negative integer");
  if (!is_finite(zeta))
    throw DomainError("hyp2f1: non-finite argument");

  if (zeta == Complex(1.0, 0.0)) {
    const double excess = p.c - p.a - p.b;
    if (excess <= 0.0)
      throw DivergenceError("hyp2f1: series diverges at zeta = 1 unless c - a - b > 0");
    return std::tgamma(p.c) * std::tgamma(excess) / (std::tgamma(p.c - p.a) * std::tgamma(p.c - p.b));
  }
  if (std::abs(zeta) >= 1.0)
    throw DomainError("hyp2f1: argument outside the unit disk");

  constexpr int kMaxTerms = 10'000'000;
  Complex sum(1.0, 0.0);
  Complex term(1.0, 0.0);
  int small_in_a_row = 0;
  for (int n = 0; n < kMaxTerms; ++n) {
    const double dn = n;
    term *= (p.a + dn) * (p.b + dn) / ((p.c + dn) * (dn + 1.0)) * zeta;
    sum += term;
    if (term == Complex(0.0, 0.0))
      return sum; // terminating series
    if (std::abs(term) < 1e-15 * (1.0 + std::abs(sum))) {
      if (++small_in_a_row == 2)
        return sum;
    } else {
      small_in_a_row = 0;
    }
  }
  throw DomainError("hyp2f1: series did not converge");
}

struct EllipticArgs {
  Complex z_upper;
  double modulus = 0.0;
};

namespace detail {

inline constexpr double kBranchDetourRadius = 1e-6;

// Waypoint-free contour 0 -> target with circular detours around any branch
// point the straight segment passes within the detour radius of.
inline std::vector<ContourLeg> detoured_segment(Complex target, const std::vector<double>& branch_points) {
  std::vector<ContourLeg> legs;
  const double side = target.imag() < 0.0 ? -1.0 : 1.0;
  const double len = std::abs(target);
  const Complex dir = target / len;

  struct Hit {
    double t_in;
    double t_out;
    double b;
  };
  std::vector<Hit> hits;
  for (double b : branch_points) {
    const Complex bp(b, 0.0);
    if (bp == target)
      continue; // integrable endpoint singularity, no detour
    const double t_close = (bp * std::conj(dir)).real();
    if (t_close <= 0.0 || t_close >= len)
      continue;
    const double d = std::abs(bp - t_close * dir);
    if (d >= kBranchDetourRadius)
      continue;
    const double half_chord = std::sqrt(kBranchDetourRadius * kBranchDetourRadius - d * d);
    hits.push_back({std::max(0.0, t_close - half_chord), std::min(len, t_close + half_chord), b});
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& l, const Hit& r) { return l.t_in < r.t_in; });

  Complex cursor(0.0, 0.0);
  for (const Hit& h : hits) {
    const Complex entry = h.t_in * dir;
    const Complex exit = h.t_out * dir;
    if (entry != cursor)
      legs.emplace_back(LineLeg{cursor, entry});
    double theta_in = std::arg(entry - h.b);
    double theta_out = std::arg(exit - h.b);
    // Go round on the side of the target, never across the cut.
    if (side > 0.0) {
      theta_in = std::abs(theta_in);
      theta_out = std::abs(theta_out);
    } else {
      theta_in = -std::abs(theta_in);
      theta_out = -std::abs(theta_out);
    }
    legs.emplace_back(ArcLeg{Complex(h.b, 0.0), kBranchDetourRadius, theta_in, theta_out});
    cursor = exit;
  }
  if (cursor != target)
    legs.emplace_back(LineLeg{cursor, target});
  return legs;
}

} // namespace detail

/// Incomplete elliptic integral of the second kind,
///   E(Z, k) = int_0^Z sqrt(1 - k^2 t^2) / sqrt(1 - t^2) dt,
/// with principal square roots of each radicand. The path is the straight
/// segment 0 -> Z with small circular detours around nearby branch points.
/// A real Z beyond a branch point is taken as the limit from the upper
/// half-plane.
inline Complex ellip_e_incomplete(const EllipticArgs& args, const QuadratureOptions& opts = {1e-13, 1e-14}) {
  const Complex z = args.z_upper;
  const double k = args.modulus;
  if (!is_finite(z) || !std::isfinite(k))
    throw DomainError("ellip_e_incomplete: non-finite input");
  if (k < 0.0)
    throw DomainError("ellip_e_incomplete: modulus must be non-negative");
  if (z == Complex(0.0, 0.0))
    return {0.0, 0.0};

  auto integrand = [k](Complex t) {
    return principal_sqrt(1.0 - k * k * t * t) / principal_sqrt(1.0 - t * t);
  };

  std::vector<double> branch_points = {-1.0, 1.0};
  if (k > 0.0) {
    branch_points.push_back(-1.0 / k);
    branch_points.push_back(1.0 / k);
  }

  std::vector<ContourLeg> legs;
  const double first_cut = k > 1.0 ? 1.0 / k : 1.0;
  if (z.imag() == 0.0 && std::abs(z.real()) > first_cut) {
    // On a cut: arrive from above so the value matches the upper half-plane.
    const Complex apex(0.5 * z.real(), 0.5 * std::abs(z.real()));
    legs = {LineLeg{0.0, apex}, LineLeg{apex, z}};
  } else {
    legs = detail::detoured_segment(z, branch_points);
  }

  const bool singular_end = std::any_of(branch_points.begin(), branch_points.end(),
                                        [&](double b) { return Complex(b, 0.0) == z; });
  if (!singular_end)
    return integrate_contour(integrand, legs, opts).value;

  // Last leg ends on a branch point: t = Z + (A - Z) s^2 absorbs the inverse
  // square root there.
  const LineLeg last = std::get<LineLeg>(legs.back());
  legs.pop_back();
  QuadratureOptions split = opts;
  split.abs_tol = 0.5 * opts.abs_tol;
  Complex head(0.0, 0.0);
  if (!legs.empty())
    head = integrate_contour(integrand, legs, split).value;
  const Complex d = last.from - last.to;
  const Complex tail =
      integrate([&](double s) { return integrand(last.to + d * (s * s)) * (2.0 * s) * d; }, 0.0, 1.0, split)
          .value;
  return head - tail;
}

/// Logarithm with imaginary part in (-pi, pi].
inline Complex principal_log(Complex w) {
  if (w == Complex(0.0, 0.0))
    throw SingularPointError("principal_log: log of zero");
  return {std::log(std::abs(w)), principal_angle(w).radians()};
}

/// Inverse hyperbolic cosine log(z + sqrt(z+1) sqrt(z-1)): real part >= 0,
/// imaginary part in (-pi, pi], and derivative 1/(sqrt(z+1) sqrt(z-1)) with
/// principal roots.
inline Complex acosh_principal(Complex z) {
  if (!is_finite(z))
    throw DomainError("acosh_principal: non-finite input");
  return principal_log(z + principal_sqrt(z + 1.0) * principal_sqrt(z - 1.0));
}

} // namespace scmap
