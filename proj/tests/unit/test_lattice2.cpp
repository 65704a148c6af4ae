#include "latdyn/lattice2.hpp"
#include "latdyn/rng.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace latdyn;

namespace {

const double kSqrt3Half = std::sqrt(3.0) / 2;

Vec3<Rational> random_rational_vec(Xoshiro256& rng, int bound) {
  auto draw = [&] {
    return Rational(static_cast<long>(uniform_index(rng, 2 * bound + 1)) - bound,
                    static_cast<long>(uniform_index(rng, 5) + 1));
  };
  Vec3<Rational> v{draw(), draw(), draw()};
  for (auto& x : v.c) x.canonicalize();
  return v;
}

Lattice2<Rational> random_lattice(Xoshiro256& rng, int bound) {
  for (;;) {
    Vec3<Rational> u = random_rational_vec(rng, bound), w = random_rational_vec(rng, bound);
    if (!is_zero(wedge2(u, w))) return {u, w};
  }
}

// Rotation from a unit quaternion with rational entries scaled to |q|²:
// the matrix is rational and orthogonal.
Mat3<double> random_rotation(Xoshiro256& rng) {
  double q[4];
  double n = 0;
  for (double& x : q) {
    x = standard_normal(rng);
    n += x * x;
  }
  n = std::sqrt(n);
  for (double& x : q) x /= n;
  const double a = q[0], b = q[1], c = q[2], d = q[3];
  return {a * a + b * b - c * c - d * d, 2 * (b * c - a * d), 2 * (b * d + a * c),
          2 * (b * c + a * d), a * a - b * b + c * c - d * d, 2 * (c * d - a * b),
          2 * (b * d - a * c), 2 * (c * d + a * b), a * a - b * b - c * c + d * d};
}

double dist(Complex a, Complex b) { return std::abs(a - b); }

}  // namespace

TEST(Wedge, Examples) {
  EXPECT_EQ(wedge2(Vec3<Integer>{1, 0, 0}, Vec3<Integer>{0, 1, 0}), (Vec3<Integer>{0, 0, 1}));
  EXPECT_EQ(wedge2(Vec3<Integer>{1, 1, -1}, Vec3<Integer>{4, -1, -1}), (Vec3<Integer>{-2, -3, -5}));
  const Vec3<Integer> u{3, -2, 7};
  EXPECT_TRUE(is_zero(wedge2(u, u)));
}

TEST(Wedge, AntisymmetryAndEquivariance) {
  Xoshiro256 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec3<Rational> u = random_rational_vec(rng, 9), w = random_rational_vec(rng, 9);
    EXPECT_EQ(wedge2(u, w), -wedge2(w, u));
    // A det-1 rational matrix: product of two shears and a diagonal.
    Rational a(static_cast<long>(uniform_index(rng, 5) + 1), 3);
    a.canonicalize();
    Mat3<Rational> g = Mat3<Rational>::diagonal(a, Rational(1), Rational(1 / a));
    g(0, 1) = Rational(static_cast<long>(uniform_index(rng, 7)) - 3, 2);
    g(0, 1).canonicalize();
    g(2, 0) = Rational(static_cast<long>(uniform_index(rng, 7)) - 3);
    ASSERT_EQ(det(g), 1);
    EXPECT_EQ(wedge2(g * u, g * w), transpose(inverse(g)) * wedge2(u, w));
  }
}

TEST(Shape, Fixtures) {
  EXPECT_LT(dist(shape(Lattice2<Integer>({1, 0, 0}, {0, 1, 0})).z, {0, 1}), 1e-15);
  EXPECT_LT(dist(shape(Lattice2<Integer>({0, 1, 0}, {0, 0, 2})).z, {0, 2}), 1e-15);
  EXPECT_LT(dist(shape(Lattice2<Integer>({1, -1, 0}, {0, 1, -1})).z, {0.5, kSqrt3Half}), 1e-15);
}

TEST(Shape, ExactAndFloatFlavorsAgree) {
  Xoshiro256 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const Lattice2<Rational> l = random_lattice(rng, 30);
    EXPECT_LT(dist(shape(l).z, shape(cast<double>(l)).z), 1e-9);
  }
}

TEST(ReduceFundamental, Examples) {
  EXPECT_EQ(reduce_fundamental({2, 2}).z, Complex(0, 2));
  const Reduction i = reduce_fundamental({0, 1});
  EXPECT_EQ(i.z, Complex(0, 1));
  EXPECT_TRUE(i.word.empty());
  const Complex z0(0.1, 0.1);
  const Reduction r = reduce_fundamental(z0);
  EXPECT_LT(dist(apply_word(r.word, r.z), z0), 1e-9);
  EXPECT_GE(std::norm(r.z), 1.0);
  EXPECT_LE(std::abs(r.z.real()), 0.5);
}

TEST(ReduceFundamental, BoundaryConvention) {
  EXPECT_EQ(reduce_fundamental({0.5, 2}).z.real(), -0.5);
  const Complex corner(-0.5, kSqrt3Half);
  // In binary64 |corner|² rounds below 1, so either corner representative
  // may come back; both lie in the domain.
  const Complex rc = reduce_fundamental(corner).z;
  EXPECT_NEAR(std::abs(rc.real()), 0.5, 1e-15);
  EXPECT_LT(rc.real(), 0.5);
  EXPECT_NEAR(rc.imag(), kSqrt3Half, 1e-15);
  // Left half of the unit arc moves to the right half.
  const double th = 2.0;
  const Reduction arc = reduce_fundamental({std::cos(th), std::sin(th)});
  EXPECT_GT(arc.z.real(), 0);
  EXPECT_THROW(reduce_fundamental({1, 0}), ValidationError);
  EXPECT_THROW(reduce_fundamental({1, -1}), ValidationError);
  EXPECT_THROW(reduce_fundamental({NAN, 1}), ValidationError);
}

TEST(ReduceFundamental, WordRoundTripAndMatrix) {
  Xoshiro256 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const Complex z0(20 * uniform01(rng) - 10, 1e-3 + 3 * uniform01(rng));
    const Reduction r = reduce_fundamental(z0);
    ASSERT_LT(std::abs(apply_word(r.word, r.z) - z0), 1e-9 * std::max(1.0, std::abs(z0)));
    const Mat2<Integer> m = word_matrix(r.word);
    EXPECT_EQ(det(m), 1);
    const Complex mz = (m(0, 0).get_d() * r.z + m(0, 1).get_d()) / (m(1, 0).get_d() * r.z + m(1, 1).get_d());
    EXPECT_LT(std::abs(mz - z0), 1e-9 * std::max(1.0, std::abs(z0)));
    EXPECT_GE(r.z.real(), -0.5);
    EXPECT_LT(r.z.real(), 0.5);
    EXPECT_GE(std::norm(r.z), 1.0 - 1e-15);
  }
}

TEST(CanonicalShape, ReflectsLeftHalf) {
  const ShapePoint s = canonical_shape({-0.3, 1.2});
  EXPECT_TRUE(s.reflected);
  EXPECT_DOUBLE_EQ(s.z.real(), 0.3);
  EXPECT_FALSE(canonical_shape({0.3, 1.2}).reflected);
}

TEST(Shape, InvariantUnderUnimodularScalingRotation) {
  Xoshiro256 rng(24);
  for (int trial = 0; trial < 500; ++trial) {
    const Lattice2<Rational> l = random_lattice(rng, 20);
    const Complex z = shape(l).z;
    Mat2<Integer> m(1, 0, 0, 1);
    for (int k = 0; k < 3; ++k) {
      const long s = static_cast<long>(uniform_index(rng, 9)) - 4;
      m = m * (k % 2 ? Mat2<Integer>(1, s, 0, 1) : Mat2<Integer>(1, 0, s, 1));
    }
    if (uniform_index(rng, 2)) m = m * Mat2<Integer>(0, 1, 1, 0);
    Rational c(static_cast<long>(uniform_index(rng, 50) + 1), static_cast<long>(uniform_index(rng, 50) + 1));
    c.canonicalize();
    EXPECT_LT(dist(shape(rebased(l, cast<Rational>(m))).z, z), 1e-9);
    EXPECT_LT(dist(shape(scaled(Rational(c), l)).z, z), 1e-9);
    EXPECT_LT(dist(shape(random_rotation(rng) * cast<double>(l)).z, z), 1e-9);
  }
}

TEST(Height, Examples) {
  EXPECT_DOUBLE_EQ(height(Lattice2<Integer>({1, 0, 0}, {0, 1, 0})), 1.0);
  EXPECT_NEAR(height(Lattice2<Integer>({0, 1, 0}, {0, 0, 2})), std::sqrt(2.0), 1e-15);
  EXPECT_EQ(shortest_vector(Lattice2<Integer>({0, 1, 0}, {0, 0, 2})), (Vec3<Integer>{0, 1, 0}));
  EXPECT_NEAR(height(Lattice2<Rational>({1, 0, 0}, {0, Rational(1, 10), 0})), std::sqrt(10.0), 1e-14);
  EXPECT_NEAR(height(Lattice2<Rational>({1, 0, 0}, {0, Rational(1, 100), 0})), 10.0, 1e-13);
}

TEST(Height, HermiteBoundAndScaleInvariance) {
  Xoshiro256 rng(25);
  const double floor = std::sqrt(kSqrt3Half);
  for (int trial = 0; trial < 500; ++trial) {
    const Lattice2<Rational> l = random_lattice(rng, 20);
    const double h = height(l);
    EXPECT_GE(h, floor - 1e-12);
    EXPECT_DOUBLE_EQ(height(scaled(Rational(7, 3), l)), h);
  }
}

TEST(ShortestVector, MatchesBruteForce) {
  Xoshiro256 rng(26);
  for (int trial = 0; trial < 500; ++trial) {
    const Lattice2<Rational> l = random_lattice(rng, 12);
    const Rational best = norm2(shortest_vector(l));
    Rational brute = norm2(l.u);
    for (long a = -25; a <= 25; ++a)
      for (long b = -25; b <= 25; ++b) {
        if (a == 0 && b == 0) continue;
        const Rational n = norm2(Vec3<Rational>(Rational(a) * l.u + Rational(b) * l.w));
        if (n < brute) brute = n;
      }
    ASSERT_EQ(best, brute);
  }
}

TEST(Cocycle, Examples) {
  const Lattice2<Rational> z2({1, 0, 0}, {0, 1, 0});
  const Vec3<Rational> e1{1, 0, 0};
  EXPECT_DOUBLE_EQ(expansion_cocycle(Mat3<Rational>::identity(), z2, e1), 1.0);
  const Mat3<Rational> g = Mat3<Rational>::diagonal(2, 1, Rational(1, 2));
  EXPECT_NEAR(expansion_cocycle(g, z2, e1), std::sqrt(2.0), 1e-15);
  EXPECT_THROW(expansion_cocycle(g, z2, Vec3<Rational>{0, 0, 1}), ValidationError);
  EXPECT_THROW(expansion_cocycle(g, z2, Vec3<Rational>{Rational(1, 2), 0, 0}), ValidationError);
}

TEST(Cocycle, ChainRule) {
  Xoshiro256 rng(27);
  auto random_g = [&] {
    Mat3<double> m;
    for (auto& x : m.a) x = standard_normal(rng);
    const double d = det(m);
    const double s = std::cbrt(std::abs(d));
    for (auto& x : m.a) x /= s;
    if (d < 0) for (std::size_t j = 0; j < 3; ++j) m(0, j) = -m(0, j);
    return m;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const Mat3<double> g = random_g(), h = random_g();
    const Lattice2<double> l({standard_normal(rng), standard_normal(rng), standard_normal(rng)},
                             {standard_normal(rng), standard_normal(rng), standard_normal(rng)});
    const Vec3<double> v = 2.0 * l.u - 3.0 * l.w;
    const double lhs = expansion_cocycle(Mat3<double>(g * h), l, v);
    const double rhs = expansion_cocycle(g, h * l, h * v) * expansion_cocycle(h, l, v);
    EXPECT_NEAR(lhs / rhs, 1.0, 1e-9);
  }
}

TEST(RhoLine, Examples) {
  EXPECT_NEAR(rho_line(Lattice2<Rational>({0, 1, 0}, {0, 0, 2}), {0, 1, 0}), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(rho_line(Lattice2<Rational>({1, 0, 0}, {0, 1, 0}), {1, 1, 0}), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(rho_line(Lattice2<Rational>({1, 0, 0}, {0, 1, 0}), {3, 3, 0}), std::sqrt(2.0), 1e-15);
  EXPECT_THROW(rho_line(Lattice2<Rational>({1, 0, 0}, {0, 1, 0}), {0, 0, 1}), ValidationError);
}

TEST(Lattice2Type, RejectsDependentBasis) {
  EXPECT_THROW(Lattice2<Integer>({1, 2, 3}, {2, 4, 6}), ValidationError);
}
