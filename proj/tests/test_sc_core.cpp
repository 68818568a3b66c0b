#include <gtest/gtest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "support.hpp"

using namespace scmap;

namespace {

SCSpec type_a() { return SCSpec(1.0, 0.0, {{0.0, 0.5}}, 0.0); }
SCSpec type_b() { return SCSpec(1.0, 0.0, {{-1.0, 0.5}, {1.0, 0.5}}, 1.0); }
SCSpec type_d() { return SCSpec(1.0, 0.0, {{-1.0, 0.75}, {0.0, 0.5}, {1.0, 0.75}}, 0.0); }
SCSpec pillar() { return SCSpec(1.0, 0.0, {{-2.0, 0.5}, {-1.0, -0.5}, {1.0, -0.5}, {2.0, 0.5}}, 0.0); }

void expect_close(Complex a, Complex b, double tol) { EXPECT_LT(std::abs(a - b), tol) << a << " vs " << b; }

} // namespace

TEST(SCSpec, RejectsInvalidInput) {
  EXPECT_THROW(SCSpec(0.0, 0.0, {{0.0, 0.5}}), ArgumentError);
  EXPECT_THROW(SCSpec(1.0, 0.0, {{1.0, 0.5}, {0.0, 0.5}}), ArgumentError);
  EXPECT_THROW(SCSpec(1.0, 0.0, {{0.0, 0.5}, {0.0, 0.2}}), ArgumentError);
  EXPECT_THROW(SCSpec(1.0, 0.0, {{0.0, 2.5}}), ArgumentError);
  EXPECT_THROW(SCSpec(1.0, 0.0, {{0.0, 1.5}, {1.0, 1.0}}), ArgumentError);
  EXPECT_THROW(SCSpec(1.0, Complex(INFINITY, 0.0), {}), ArgumentError);
  EXPECT_THROW(SCSpec(1.0, 0.0, {{0.0, 1.0}}, 0.0), ArgumentError);
}

TEST(SCSpec, DefaultBase) {
  EXPECT_DOUBLE_EQ(SCSpec(1.0, 0.0, {}).base(), 0.0);
  EXPECT_DOUBLE_EQ(SCSpec(1.0, 0.0, {{-1.0, 1.0}, {2.0, 0.5}}).base(), 2.0);
  EXPECT_DOUBLE_EQ(SCSpec(1.0, 0.0, {{-1.0, 1.0}, {2.0, 1.0}}).base(), -2.0);
}

TEST(ScDerivative, SpecExamples) {
  expect_close(sc_derivative(type_a(), 4.0), 0.5, 1e-15);
  expect_close(sc_derivative(type_a(), Complex(-4.0, 1e-9)), Complex(0.0, -0.5), 1e-9);
  SCSpec p(1.0, 0.0, {{-2.0, 0.5}, {-1.0, -0.5}, {1.0, -0.5}, {2.0, 0.5}});
  expect_close(sc_derivative(p, 3.0), std::sqrt(8.0 / 5.0), 1e-14);
  EXPECT_THROW(sc_derivative(type_a(), 0.0), SingularPointError);
}

TEST(Classify, SpecExamples) {
  EXPECT_EQ(classify(type_a()), ContourType::A);
  EXPECT_EQ(classify(type_b()), ContourType::B);
  EXPECT_EQ(classify(pillar()), ContourType::A);
  EXPECT_EQ(classify(type_d()), ContourType::D);
  EXPECT_EQ(classify(SCSpec(1.0, 0.0, {{-1.0, 2.0 / 3}, {1.0, 2.0 / 3}})), ContourType::C);
  EXPECT_EQ(classify(SCSpec(1.0, 0.0, {{-1.0, -0.75}, {1.0, -0.75}})), ContourType::C);
}

TEST(Orientations, SpecExamples) {
  const auto up = orientations(type_a(), HalfPlane::Upper);
  EXPECT_DOUBLE_EQ(up.alpha0, -kPi / 2);
  EXPECT_DOUBLE_EQ(up.alphaN, 0.0);
  const auto lo = orientations(type_a(), HalfPlane::Lower);
  EXPECT_DOUBLE_EQ(lo.alpha0, kPi / 2);
  const SCSpec p(std::polar(1.0, 0.7), 0.0, {{-2.0, 0.5}, {-1.0, -0.5}, {1.0, -0.5}, {2.0, 0.5}});
  for (HalfPlane h : {HalfPlane::Upper, HalfPlane::Lower}) {
    EXPECT_NEAR(orientations(p, h).alpha0, 0.7, 1e-15);
    EXPECT_NEAR(orientations(p, h).alphaN, 0.7, 1e-15);
  }
}

TEST(TurnAngles, SpecExamples) {
  const auto up = turn_angles(type_d(), HalfPlane::Upper);
  const auto lo = turn_angles(type_d(), HalfPlane::Lower);
  const std::vector<double> expect = {3 * kPi / 4, kPi / 2, 3 * kPi / 4};
  ASSERT_EQ(up.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_DOUBLE_EQ(up[i], expect[i]);
    EXPECT_EQ(lo[i], -up[i]);
  }
  EXPECT_EQ(turn_angles(SCSpec(1.0, 0.0, {{0.0, 0.0}}), HalfPlane::Upper), std::vector<double>{0.0});
}

TEST(SegmentLength, TypeBIsPi) {
  EXPECT_NEAR(segment_length(type_b(), 0), kPi, 1e-9);
}

TEST(SegmentLength, PillarAgainstTanhSinh) {
  boost::math::quadrature::tanh_sinh<double> ts;
  // 2 - x comes from the exact endpoint distance near x = 2.
  auto f = [](double x, double xc) {
    const double two_minus_x = x < 1.5 ? 2.0 - x : xc;
    return std::sqrt((x * x - 1.0) / (two_minus_x * (2.0 + x)));
  };
  auto g = [](double x) { return std::sqrt((1.0 - x * x) / (4.0 - x * x)); };
  EXPECT_NEAR(segment_length(pillar(), 2), ts.integrate(f, 1.0, 2.0, 1e-14), 1e-10);
  EXPECT_NEAR(segment_length(pillar(), 1), ts.integrate(g, -1.0, 1.0, 1e-14), 1e-10);
  // 30-digit values computed independently with mpmath.quad.
  EXPECT_NEAR(segment_length(pillar(), 2), 1.34385423138709742, 1e-10);
  EXPECT_NEAR(segment_length(pillar(), 1), 0.81259777291992049, 1e-10);
}

TEST(SegmentLength, ErrorsAndInfinity) {
  EXPECT_THROW(segment_length(type_b(), 1), ArgumentError);
  EXPECT_THROW(segment_length(type_a(), 0), ArgumentError);
  EXPECT_TRUE(std::isinf(segment_length(SCSpec(1.0, 0.0, {{-1.0, 1.0}, {1.0, 0.5}}), 0)));
}

TEST(MapPoint, SpecExamples) {
  const auto r = map_point(type_a(), Complex(0.0, 4.0), Anchor{Complex(0.0, 1.0), 2.0 * std::polar(1.0, kPi / 4)});
  expect_close(r.value, 4.0 * std::polar(1.0, kPi / 4), 1e-9);

  const Complex z0(2.0, 1e-6);
  const auto b = map_point(type_b(), Complex(-1.0, 1e-6), Anchor{z0, acosh_principal(z0)});
  expect_close(b.value, Complex(0.0, kPi), 2e-3);

  const auto same = map_point(type_b(), z0, Anchor{z0, Complex(3.0, 4.0)});
  EXPECT_EQ(same.value, Complex(3.0, 4.0));
  EXPECT_EQ(same.subdivisions, 0);
}

TEST(MapPoint, Errors) {
  const Anchor a{Complex(0.0, 1.0), 0.0};
  EXPECT_THROW(map_point(type_a(), 0.0, a), SingularPointError);
  EXPECT_THROW(map_point(type_a(), Complex(1.0, -1.0), a), DomainError);
  EXPECT_THROW(map_point(type_a(), Complex(1e-10, 1e-10), a), SingularPointError);
  QuadratureOptions tight;
  tight.abs_tol = 1e-15;
  tight.max_subdivisions = 1;
  EXPECT_THROW(map_point(type_a(), Complex(5.0, 0.01), Anchor{Complex(-5.0, 0.01), 0.0}, tight),
               ConvergenceError);
}

TEST(MapPoint, PropertyPathIndependence) {
  proptest::Gen g(31);
  for (int i = 0; i < 30; ++i) {
    const SCSpec s = g.spec();
    const Complex z0 = g.complex_in(-3, 3, 0.2, 2), z = g.complex_in(-3, 3, 0.2, 2);
    const Complex via = g.complex_in(-3, 3, 0.5, 3);
    const QuadratureReport direct = map_point(s, z, {z0, 0.0});
    const QuadratureReport bent = map_point(s, z, {z0, 0.0}, {}, {via});
    const double bound = 2.0 * (direct.abs_error_estimate + bent.abs_error_estimate) + 1e-13;
    EXPECT_LE(std::abs(direct.value - bent.value), bound);
  }
}

TEST(ScMap, PropertyDerivativeConsistencyWithRichardson) {
  proptest::Gen g(32);
  for (int i = 0; i < 30; ++i) {
    const ScMap m(g.spec(), QuadratureOptions{1e-13});
    Complex z = g.complex_in(-3, 3, 0.3, 2);
    if (i % 2)
      z = std::conj(z);
    const Complex d = m.derivative(z);
    const Complex w0 = m.value(z);
    auto quotient = [&](double h) { return (map_point(m.spec(), z + h, {z, w0}, m.options()).value - w0) / h; };
    const Complex q1 = quotient(1e-3), q2 = quotient(1e-4);
    const double e1 = std::abs(q1 - d), e2 = std::abs(q2 - d);
    // First-order behaviour: the error shrinks roughly tenfold.
    EXPECT_LT(e1, 1e-2 * (1 + std::abs(d)));
    EXPECT_GT(e1 / e2, 5.0);
    // Richardson extrapolation removes the O(h) term.
    const Complex rich = (10.0 * q2 - q1) / 9.0;
    EXPECT_LT(std::abs(rich - d), 0.05 * e2 + 1e-9);
  }
}

TEST(BoundaryImage, TypeAAndTypeBVertices) {
  const auto a = boundary_image(type_a(), HalfPlane::Upper);
  expect_close(a.vertices[0], 0.0, 1e-12);
  EXPECT_FALSE(a.w_infinity_finite);
  const auto b = boundary_image(type_b(), HalfPlane::Upper);
  expect_close(b.vertices[0], Complex(0.0, kPi), 1e-9);
  expect_close(b.vertices[1], 0.0, 1e-12);
  const auto bl = boundary_image(type_b(), HalfPlane::Lower);
  expect_close(bl.vertices[0], Complex(0.0, -kPi), 1e-9);
}

TEST(BoundaryImage, TypeDCloses) {
  const auto d = boundary_image(type_d(), HalfPlane::Upper);
  ASSERT_TRUE(d.w_infinity_finite);
  EXPECT_LT(d.closure_gap, 1e-8);
}

TEST(BoundaryImage, InfiniteVertexFlagged) {
  const auto img = boundary_image(SCSpec(1.0, 0.0, {{-1.0, 1.0}, {1.0, 0.5}}), HalfPlane::Upper);
  EXPECT_TRUE(img.vertex_at_infinity[0]);
  EXPECT_FALSE(img.vertex_at_infinity[1]);
}

TEST(BoundaryImage, PropertyReflectionAndTurnNegation) {
  proptest::Gen g(33);
  for (int i = 0; i < 20; ++i) {
    const ScMap m(g.spec(), QuadratureOptions{1e-11});
    const auto up = boundary_image(m, HalfPlane::Upper);
    const auto lo = boundary_image(m, HalfPlane::Lower);
    const double angle = principal_angle(m.spec().c()).radians();
    const Complex wn = up.vertices.back();
    for (std::size_t v = 0; v < up.vertices.size(); ++v) {
      expect_close(lo.vertices[v], reflect_across_line(up.vertices[v], wn, angle), 1e-8);
      EXPECT_EQ(lo.turns[v], -up.turns[v]);
    }
    EXPECT_EQ(lo.segment_lengths, up.segment_lengths);
  }
}

TEST(Orientations, PropertyTelescoping) {
  proptest::Gen g(37);
  for (int i = 0; i < 200; ++i) {
    const SCSpec s = g.spec(6);
    for (HalfPlane h : {HalfPlane::Upper, HalfPlane::Lower}) {
      const Orientations o = orientations(s, h);
      double total = o.alpha0;
      for (double t : turn_angles(s, h))
        total += t;
      EXPECT_NEAR(wrap_principal(total - o.alphaN), 0.0, 1e-12);
    }
  }
}

TEST(BoundaryImage, PropertyTelescopingSegmentLengths) {
  proptest::Gen g(34);
  for (int i = 0; i < 20; ++i) {
    const auto img = boundary_image(g.spec(), HalfPlane::Upper, QuadratureOptions{1e-11});
    for (std::size_t s = 0; s < img.segment_lengths.size(); ++s)
      EXPECT_NEAR(img.segment_lengths[s], std::abs(img.vertices[s + 1] - img.vertices[s]), 1e-8);
  }
}

TEST(ScMap, PropertyOffAxisValuesMatchVertexChain) {
  // Approaching a vertex from above reproduces the vertex image.
  proptest::Gen g(35);
  for (int i = 0; i < 20; ++i) {
    const ScMap m(g.spec(), QuadratureOptions{1e-11});
    const auto up = boundary_image(m, HalfPlane::Upper);
    const auto pv = m.spec().prevertices();
    for (std::size_t v = 0; v < pv.size(); ++v) {
      const double eps = 1e-5;
      const Complex z(pv[v].x, eps);
      // |w(x + i eps) - w(x)| ~ |C| |prod_{j!=v}|^-1 eps^(1-k) / (1-k).
      const double tol = 1e-8 + 20.0 * std::abs(m.spec().c()) * std::pow(eps, 1.0 - std::max(pv[v].k, 0.0)) /
                                    (1.0 - std::max(pv[v].k, 0.0));
      expect_close(m.value(z), up.vertices[v], tol);
    }
  }
}

TEST(ReflectAcrossLine, IsAnInvolution) {
  proptest::Gen g(36);
  for (int i = 0; i < 200; ++i) {
    const Complex w = g.complex_in(-5, 5, -5, 5), p = g.complex_in(-5, 5, -5, 5);
    const double t = g.uniform(-3, 3);
    expect_close(reflect_across_line(reflect_across_line(w, p, t), p, t), w, 1e-12);
  }
}

TEST(HalfPlaneOf, RealAxisThrows) {
  EXPECT_EQ(half_plane_of({0.0, 1.0}), HalfPlane::Upper);
  EXPECT_EQ(half_plane_of({0.0, -1.0}), HalfPlane::Lower);
  EXPECT_THROW(half_plane_of({1.0, 0.0}), DomainError);
}
