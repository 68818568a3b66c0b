#pragma once

// Complex helpers built around a single angle convention: every angle of a
// complex number lives in the half-open interval (-pi, pi].

#include <cmath>
#include <complex>
#include <numbers>

#include "errors.hpp"

namespace scmap {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// An angle in (-pi, pi]. Construction from a raw value that is outside the
/// interval throws; use wrap_principal() to bring arbitrary angles in range.
class PrincipalAngle {
public:
  constexpr PrincipalAngle() = default;

  explicit PrincipalAngle(double radians) : radians_(radians) {
    if (!(radians > -kPi && radians <= kPi))
      throw DomainError("PrincipalAngle: value outside (-pi, pi]");
  }

  constexpr double radians() const { return radians_; }
  constexpr operator double() const { return radians_; }

  friend constexpr bool operator==(PrincipalAngle, PrincipalAngle) = default;

private:
  double radians_ = 0.0;
};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Argument of omega in (-pi, pi]. Negative reals give +pi regardless of the
/// sign of a zero imaginary part.
inline PrincipalAngle principal_angle(Complex omega) {
  if (omega == Complex(0.0, 0.0))
    throw DomainError("principal_angle: angle of zero is undefined");
  if (!is_finite(omega))
    throw DomainError("principal_angle: non-finite input");
  double theta = std::atan2(omega.imag(), omega.real());
  if (theta == -kPi)
    theta = kPi;
  return PrincipalAngle(theta);
}

/// theta + 2*pi*m for the unique integer m that lands in (-pi, pi].
inline PrincipalAngle wrap_principal(double theta) {
  if (!std::isfinite(theta))
    throw DomainError("wrap_principal: non-finite angle");
  double r = theta - kTwoPi * std::ceil((theta - kPi) / kTwoPi);
  // ceil() can land one period off when theta - pi is a rounding hair away
  // from a multiple of 2*pi.
  if (r > kPi)
    r -= kTwoPi;
  else if (r <= -kPi)
    r += kTwoPi;
  return PrincipalAngle(r);
}

/// (z - x)^k with modulus |z-x|^k and phase k * principal_angle(z - x).
/// The phase is used as is, never re-wrapped.
inline Complex branch_power(Complex z, double x, double k) {
  const Complex d = z - x;
  if (d == Complex(0.0, 0.0))
    throw SingularPointError("branch_power: z coincides with the branch point");
  const double phase = k * principal_angle(d).radians();
  return std::polar(std::pow(std::abs(d), k), phase);
}

/// omega^p on the principal branch, with 0^p = 0 for p > 0.
inline Complex principal_pow(Complex omega, double p) {
  if (omega == Complex(0.0, 0.0)) {
    if (p > 0.0)
      return {0.0, 0.0};
    if (p == 0.0)
      return {1.0, 0.0};
    throw SingularPointError("principal_pow: zero raised to a negative power");
  }
  return std::polar(std::pow(std::abs(omega), p), p * principal_angle(omega).radians());
}

inline Complex principal_sqrt(Complex omega) { return principal_pow(omega, 0.5); }

} // namespace scmap
