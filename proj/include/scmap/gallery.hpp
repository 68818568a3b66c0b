#pragma once

// The five worked example maps: one of each contour type plus the pillar in
// a channel. Each entry pairs an SCSpec with an independent closed form.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "complex_kernel.hpp"
#include "errors.hpp"
#include "sc_core.hpp"
#include "special_functions.hpp"

namespace scmap {

enum class GalleryName { TypeA, TypeB, TypeC, TypeD, Pillar };

inline constexpr std::array<GalleryName, 5> kGalleryNames = {
    GalleryName::TypeA, GalleryName::TypeB, GalleryName::TypeC, GalleryName::TypeD,
    GalleryName::Pillar};

inline std::string_view to_string(GalleryName name) {
  switch (name) {
  case GalleryName::TypeA: return "type-a";
  case GalleryName::TypeB: return "type-b";
  case GalleryName::TypeC: return "type-c";
  case GalleryName::TypeD: return "type-d";
  case GalleryName::Pillar: return "pillar";
  }
  return "";
}

inline std::optional<GalleryName> parse_gallery_name(std::string_view s) {
  for (GalleryName n : kGalleryNames)
    if (to_string(n) == s)
      return n;
  return std::nullopt;
}

inline constexpr double kPillarK = 1.3;

inline const HypergeometricParams kTypeCSeries{0.5, 2.0 / 3.0, 1.5};
inline const HypergeometricParams kTypeDSeries{0.25, 0.75, 1.25};

/// alpha = 2F1(1/2, 2/3; 3/2; 1), the type-c scale constant.
inline double type_c_alpha() { return hyp2f1(kTypeCSeries, 1.0).real(); }

struct GalleryEntry {
  GalleryName name;
  SCSpec spec;
  /// Closed form valid in the closed upper half-plane (real points are upper
  /// limits) wherever `in_domain` holds.
  std::function<Complex(Complex)> upper_closed_form;
  std::function<bool(Complex)> in_domain;
  Anchor anchor;
  /// A point on the final ray x > x_n of the boundary image; the lower map is
  /// the mirror image of the upper one in the line through it along arg C.
  Complex final_ray_point;
};

inline GalleryEntry entry(GalleryName name) {
  auto everywhere = [](Complex) { return true; };
  // z^2 must stay in the disk where the hypergeometric series is summed.
  auto unit_disk = [](Complex z) { return std::abs(z) < 1.0 || z * z == Complex(1.0, 0.0); };

  auto finish = [](GalleryName n, SCSpec spec, std::function<Complex(Complex)> cf,
                   std::function<bool(Complex)> dom) {
    const Complex z0(0.0, 0.5);
    const Complex last(spec.prevertices().back().x, 0.0);
    return GalleryEntry{n, std::move(spec), cf, std::move(dom), Anchor{z0, cf(z0)}, cf(last)};
  };

  switch (name) {
  case GalleryName::TypeA: {
    SCSpec spec(1.0, 0.0, {{0.0, 0.5}}, 0.0);
    const Complex kay = spec.kay();
    return finish(name, std::move(spec),
                  [kay](Complex z) { return 2.0 * principal_sqrt(z) + kay; }, everywhere);
  }
  case GalleryName::TypeB: {
    SCSpec spec(1.0, 0.0, {{-1.0, 0.5}, {1.0, 0.5}}, 1.0);
    const Complex kay = spec.kay();
    return finish(name, std::move(spec), [kay](Complex z) { return acosh_principal(z) + kay; },
                  everywhere);
  }
  case GalleryName::TypeC: {
    const Complex kay = type_c_alpha() * std::polar(1.0, 2.0 * kPi / 3.0);
    SCSpec spec(1.0, kay, {{-1.0, 2.0 / 3.0}, {1.0, 2.0 / 3.0}}, 0.0);
    const Complex phase = -std::polar(1.0, kPi / 3.0);
    return finish(name, std::move(spec),
                  [kay, phase](Complex z) { return phase * z * hyp2f1(kTypeCSeries, z * z) + kay; },
                  unit_disk);
  }
  case GalleryName::TypeD: {
    const Complex kay(0.0, std::sqrt(2.0) * hyp2f1(kTypeDSeries, 1.0).real());
    SCSpec spec(1.0, kay, {{-1.0, 0.75}, {0.0, 0.5}, {1.0, 0.75}}, 0.0);
    const Complex phase = -2.0 * spec.c() * std::polar(1.0, kPi / 4.0);
    return finish(name, std::move(spec),
                  [kay, phase](Complex z) {
                    return phase * principal_sqrt(z) * hyp2f1(kTypeDSeries, z * z) + kay;
                  },
                  unit_disk);
  }
  case GalleryName::Pillar: {
    const Complex kay(0.0, kPillarK);
    SCSpec spec(1.0, kay, {{-2.0, 0.5}, {-1.0, -0.5}, {1.0, -0.5}, {2.0, 0.5}}, 0.0);
    return finish(name, std::move(spec),
                  [kay](Complex z) { return ellip_e_incomplete({0.5 * z, 2.0}) + kay; }, everywhere);
  }
  }
  throw ArgumentError("entry: unknown gallery name");
}

inline bool closed_form_available(const GalleryEntry& e, Complex z) {
  return e.in_domain(z.imag() < 0.0 ? std::conj(z) : z);
}

/// Closed-form image of z. Real z is taken from the upper side; lower
/// half-plane points use the mirror law about the final ray. Throws
/// DomainError when z lies outside the closed form's domain (callers fall
/// back to quadrature).
inline Complex closed_form_eval(const GalleryEntry& e, Complex z) {
  if (!is_finite(z))
    throw DomainError("closed_form_eval: non-finite point");
  if (!closed_form_available(e, z))
    throw DomainError("closed_form_eval: point outside the closed form's domain");
  if (z.imag() >= 0.0)
    return e.upper_closed_form(z);
  const double arg_c = principal_angle(e.spec.c()).radians();
  return reflect_across_line(e.upper_closed_form(std::conj(z)), e.final_ray_point, arg_c);
}

struct PillarDimensions {
  double a; // height v_2 - v_1
  double b; // width u_3 - u_2
};

/// Pillar height and width from the two finite boundary segments.
inline PillarDimensions pillar_dimensions() {
  const GalleryEntry pillar = entry(GalleryName::Pillar);
  QuadratureOptions opts;
  opts.abs_tol = 1e-12;
  return {segment_length(pillar.spec, 2, opts), segment_length(pillar.spec, 1, opts)};
}

/// Gallery map: closed form where available, contour quadrature elsewhere.
class GalleryMap {
public:
  explicit GalleryMap(GalleryName name, QuadratureOptions opts = {})
      : entry_(scmap::entry(name)), quadrature_(entry_.spec, opts) {}

  const GalleryEntry& entry() const { return entry_; }
  const ScMap& quadrature() const { return quadrature_; }
  const SCSpec& spec() const { return entry_.spec; }

  bool has_closed_form(Complex z) const { return closed_form_available(entry_, z); }

  Complex value(Complex z) const {
    if (has_closed_form(z))
      return closed_form_eval(entry_, z);
    return quadrature_.value(z);
  }

  Complex derivative(Complex z) const { return sc_derivative(entry_.spec, z); }

private:
  GalleryEntry entry_;
  ScMap quadrature_;
};

} // namespace scmap
