#include <gtest/gtest.h>

#include "support.hpp"

using namespace scmap;

namespace {

LineRequest horizontal(double y, double lo, double hi, int n) { return {LineOrientation::Horizontal, y, lo, hi, n}; }
LineRequest vertical(double x, double lo, double hi, int n) { return {LineOrientation::Vertical, x, lo, hi, n}; }

} // namespace

TEST(LineRequest, Validation) {
  EXPECT_THROW(horizontal(1.0, 1.0, 0.0, 10).validate(), ArgumentError);
  EXPECT_THROW(horizontal(1.0, 0.0, 1.0, 1).validate(), ArgumentError);
  EXPECT_THROW(horizontal(0.0, 0.0, 1.0, 10).validate(), ArgumentError);
  EXPECT_NO_THROW(vertical(0.5, -1.0, 1.0, 10).validate());
}

TEST(SampleLine, TypeAHorizontalJustAboveAxisIsLShaped) {
  const GalleryMap m(GalleryName::TypeA);
  const Polyline pl = sample_line(m, horizontal(1e-6, -9.0, 9.0, 400));
  EXPECT_TRUE(pl.breaks.empty());
  EXPECT_EQ(pl.points.size(), 400u);
  // Left end high on the v axis, right end out on the u axis.
  EXPECT_NEAR(pl.points.front().real(), 0.0, 1e-5);
  EXPECT_NEAR(pl.points.front().imag(), 6.0, 1e-5);
  EXPECT_NEAR(pl.points.back().real(), 6.0, 1e-5);
  EXPECT_NEAR(pl.points.back().imag(), 0.0, 1e-5);
}

TEST(SampleLine, TypeAVerticalLines) {
  const GalleryMap m(GalleryName::TypeA);
  const Polyline left = sample_line(m, vertical(-4.0, -3.0, 3.0, 200));
  ASSERT_EQ(left.breaks.size(), 1u);
  const std::size_t j = left.breaks[0];
  EXPECT_LT(left.source_points[j - 1].imag(), 0.0);
  EXPECT_GT(left.source_points[j].imag(), 0.0);
  EXPECT_EQ(left.points.size(), 200u);
  EXPECT_TRUE(sample_line(m, vertical(4.0, -3.0, 3.0, 200)).breaks.empty());
}

TEST(SampleLine, QuadratureOnlyMapMatchesGallery) {
  const GalleryMap g(GalleryName::TypeB);
  const ScMap q(g.spec());
  const auto a = sample_line(g, horizontal(0.5, -3.0, 3.0, 40));
  const auto b = sample_line(q, horizontal(0.5, -3.0, 3.0, 40));
  for (std::size_t i = 0; i < a.points.size(); ++i)
    EXPECT_LT(std::abs(a.points[i] - b.points[i]), 1e-7);
  EXPECT_TRUE(b.breaks.empty());
}

TEST(SampleLine, TwoSamplesGiveTwoPoints) {
  const auto pl = sample_line(GalleryMap(GalleryName::Pillar), horizontal(1.0, -1.0, 1.0, 2));
  EXPECT_EQ(pl.points.size(), 2u);
}

TEST(SampleLine, PrevertexSampleIsSkipped) {
  const GalleryMap m(GalleryName::TypeB);
  SamplingOptions o;
  o.epsilon = 1e-10; // inside the quadrature clearance
  const auto pl = sample_line(m, vertical(1.0, 0.0, 1.0, 11), o);
  ASSERT_EQ(pl.skipped.size(), 1u);
  EXPECT_EQ(pl.skipped[0], 0u);
  EXPECT_FALSE(is_finite(pl.points[0]));
}

TEST(SampleLine, ConvergenceFailureCarriesPartialPolyline) {
  // A tiny budget suffices for the axis walk and the smooth stretch of the
  // line, then runs out as the line passes over the prevertex.
  const ScMap m(entry(GalleryName::TypeA).spec, QuadratureOptions{1e-13, 0.0, 2});
  try {
    sample_line(m, horizontal(0.01, -3.0, 3.0, 25));
    FAIL() << "expected PolylineConvergenceError";
  } catch (const PolylineConvergenceError& e) {
    const Polyline& partial = e.partial();
    EXPECT_GT(partial.points.size(), 0u);
    EXPECT_LT(partial.points.size(), 25u);
    EXPECT_EQ(partial.source_points.size(), 25u);
    for (std::size_t i = 0; i < partial.points.size(); ++i)
      EXPECT_LT(std::abs(partial.points[i] - 2.0 * principal_sqrt(partial.source_points[i])), 1e-9);
  }
}

TEST(SampleLine, HorizontalLinesHaveNoBreaks) {
  for (GalleryName n : kGalleryNames) {
    const GalleryMap m(n);
    for (double y : {-1.5, -1e-6, 1e-6, 0.7})
      EXPECT_TRUE(sample_line(m, horizontal(y, -4.0, 4.0, 120)).breaks.empty()) << to_string(n) << " y=" << y;
  }
}

TEST(SampleLine, UpperAndLowerBoundaryImagesCoincideBeyondLastPrevertex) {
  const double eps = 1e-6;
  for (GalleryName n : kGalleryNames) {
    const GalleryMap m(n);
    const double xn = m.spec().prevertices().back().x;
    const auto up = sample_line(m, horizontal(eps, xn + 0.1, xn + 6.0, 60));
    const auto lo = sample_line(m, horizontal(-eps, xn + 0.1, xn + 6.0, 60));
    double max_slope = 0.0;
    for (Complex z : up.source_points)
      max_slope = std::max(max_slope, std::abs(m.derivative(z)));
    for (std::size_t i = 0; i < up.points.size(); ++i)
      EXPECT_LT(std::abs(up.points[i] - lo.points[i]), 10.0 * eps * max_slope) << to_string(n);
  }
}

TEST(LineSources, VerticalCrossingKeepsCountAndInsertsLimits) {
  const auto zs = detail::line_sources(vertical(1.0, -3.0, 3.0, 10), 1e-6);
  ASSERT_EQ(zs.size(), 10u);
  int near_axis = 0;
  for (Complex z : zs) {
    EXPECT_NE(z.imag(), 0.0);
    if (std::abs(z.imag()) == 1e-6)
      ++near_axis;
  }
  EXPECT_EQ(near_axis, 2);
}

TEST(Residuals, SurrogateFunctions) {
  auto square = [](Complex z) { return z * z; };
  EXPECT_LE(cauchy_riemann_residual(square, Complex(0.3, 0.2), 1e-4), 1e-8);
  const auto hs = harmonic_residual(square, Complex(1.3, -0.2), 1e-4);
  EXPECT_LE(hs.laplacian_u, 1e-6);
  EXPECT_LE(hs.laplacian_v, 1e-6);

  auto skew = [](Complex z) { return Complex(z.real() + z.imag(), z.real() - z.imag()); };
  EXPECT_NEAR(cauchy_riemann_residual(skew, Complex(0.5, 0.5), 1e-4), 2.0, 1e-10);

  auto x_squared = [](Complex z) { return Complex(z.real() * z.real(), 0.0); };
  EXPECT_NEAR(harmonic_residual(x_squared, Complex(0.5, 0.5), 1e-3).laplacian_u, 2.0, 1e-6);
}

TEST(Residuals, GalleryMaps) {
  EXPECT_LE(cauchy_riemann_residual(GalleryMap(GalleryName::TypeA), Complex(1.0, 1.0), 1e-4), 1e-6);
  const auto h = harmonic_residual(GalleryMap(GalleryName::TypeB), Complex(2.0, 1.0), 1e-3);
  EXPECT_LE(h.laplacian_u, 1e-4);
  EXPECT_LE(h.laplacian_v, 1e-4);
}

TEST(Residuals, StencilErrors) {
  const GalleryMap m(GalleryName::TypeA);
  EXPECT_THROW(cauchy_riemann_residual(m, Complex(1.0, 5e-5), 1e-4), DomainError);
  EXPECT_THROW(cauchy_riemann_residual(m, Complex(1.0, 1.0), 0.0), ArgumentError);
}

TEST(TangentCheck, SpecExamples) {
  const GalleryMap a(GalleryName::TypeA);
  const auto h = tangent_orientation_check(a, Complex(1.0, 1.0), 0.0);
  EXPECT_NEAR(h.phi, -kPi / 8, 1e-14);
  EXPECT_LT(h.identity_residual, 1e-5);
  const auto v = tangent_orientation_check(a, Complex(1.0, 1.0), kPi / 2);
  EXPECT_NEAR(v.phi, 3 * kPi / 8, 1e-14);

  const ScMap identity(SCSpec(1.0, 0.0, {}));
  const auto t = tangent_orientation_check(identity, Complex(0.3, 0.4), 1.1);
  EXPECT_NEAR(t.phi, 1.1, 1e-15);
  EXPECT_LT(t.identity_residual, 1e-9);
}

TEST(TangentCheck, PropertyRandomSpecs) {
  proptest::Gen g(61);
  for (int i = 0; i < 20; ++i) {
    const ScMap m(g.spec());
    Complex z = g.complex_in(-3, 3, 0.2, 2);
    if (i % 2)
      z = std::conj(z);
    EXPECT_LT(tangent_orientation_check(m, z, g.uniform(-3, 3)).identity_residual, 1e-4);
  }
}
