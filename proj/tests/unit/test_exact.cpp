#include "latdyn/exact.hpp"
#include "latdyn/lattice2.hpp"
#include "latdyn/rng.hpp"

#include <gtest/gtest.h>

using namespace latdyn;

namespace {

Vec3<Integer> random_vec(Xoshiro256& rng, int bound) {
  auto draw = [&] { return Integer(static_cast<long>(uniform_index(rng, 2 * bound + 1)) - bound); };
  return {draw(), draw(), draw()};
}

// B == c·A·M, checked entrywise.
bool witness_holds(const Lattice2<Rational>& a, const Lattice2<Rational>& b, const HomothetyWitness& w) {
  return scaled(w.scale, rebased(a, cast<Rational>(w.change))) == b;
}

// Brute force over M with |entries| <= bound: does some c > 0, det M = ±1
// give B = c·A·M?
bool brute_force_homothetic(const Lattice2<Rational>& a, const Lattice2<Rational>& b, int bound) {
  for (int m00 = -bound; m00 <= bound; ++m00)
    for (int m01 = -bound; m01 <= bound; ++m01)
      for (int m10 = -bound; m10 <= bound; ++m10)
        for (int m11 = -bound; m11 <= bound; ++m11) {
          const int d = m00 * m11 - m01 * m10;
          if (d != 1 && d != -1) continue;
          const Lattice2<Rational> am = rebased(a, Mat2<Rational>(m00, m01, m10, m11));
          // c is fixed by any nonzero coordinate of b.u.
          std::size_t k = 0;
          while (is_zero(am.u[k])) ++k;
          const Rational c = b.u[k] / am.u[k];
          if (sgn(c) > 0 && scaled(c, am) == b) return true;
        }
  return false;
}

}  // namespace

TEST(Content, GcdAndPrimitivePart) {
  EXPECT_EQ(content({6, -9, 15}), 3);
  EXPECT_EQ(content({0, 0, 0}), 0);
  EXPECT_EQ(primitive_part({-6, 9, 0}), (Vec3<Integer>{-2, 3, 0}));
}

TEST(RowHermite, UnimodularAndClearsTail) {
  Xoshiro256 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    Vec3<Integer> v = random_vec(rng, 1000);
    if (is_zero(v)) continue;
    const Mat3<Integer> u = row_hermite_transform(v);
    EXPECT_EQ(det(u), 1);
    // v·U as a row vector is Uᵀv.
    const Vec3<Integer> r = transpose(u) * v;
    EXPECT_EQ(r, (Vec3<Integer>{content(v), 0, 0}));
  }
}

TEST(KernelBasis, CrossProductIsPrimitiveNormal) {
  const auto [a, b] = integer_kernel_basis({5, 3, 1});
  const Vec3<Integer> c = wedge2(a, b);
  EXPECT_TRUE(c == (Vec3<Integer>{5, 3, 1}) || c == (Vec3<Integer>{-5, -3, -1}));
}

TEST(KernelBasis, GeneratesEveryKernelPointInABox) {
  Xoshiro256 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    Vec3<Integer> v = random_vec(rng, 6);
    if (is_zero(v)) continue;
    const auto [a, b] = integer_kernel_basis(v);
    ASSERT_EQ(dot(a, v), 0);
    ASSERT_EQ(dot(b, v), 0);
    const Lattice2<Rational> l(cast<Rational>(a), cast<Rational>(b));
    for (int x = -6; x <= 6; ++x)
      for (int y = -6; y <= 6; ++y)
        for (int z = -6; z <= 6; ++z) {
          const Vec3<Integer> p{x, y, z};
          if (dot(p, v) != 0) continue;
          const auto [s, t] = plane_coordinates(l, cast<Rational>(p));
          ASSERT_TRUE(is_integral(s) && is_integral(t)) << "v=" << v << " p=" << p;
        }
  }
}

TEST(KernelBasis, RejectsZero) { EXPECT_THROW(integer_kernel_basis({0, 0, 0}), ValidationError); }

TEST(UnimodularCompletion, FirstColumnAndDeterminant) {
  Xoshiro256 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    Vec3<Integer> c = primitive_part(random_vec(rng, 10000));
    if (is_zero(c)) continue;
    const Mat3<Integer> m = unimodular_completion(c);
    EXPECT_EQ(det(m), 1);
    EXPECT_EQ(m.column(0), c);
  }
  EXPECT_THROW(unimodular_completion({2, 4, 6}), ValidationError);
}

TEST(Homothety, RecoversKnownWitness) {
  Xoshiro256 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const Vec3<Integer> u = random_vec(rng, 20), w = random_vec(rng, 20);
    if (is_zero(wedge2(u, w))) continue;
    const Lattice2<Rational> a(cast<Rational>(u), cast<Rational>(w));
    Mat2<Integer> m(1, 0, 0, 1);
    for (int k = 0; k < 4; ++k) {
      const long s = static_cast<long>(uniform_index(rng, 7)) - 3;
      m = m * (uniform_index(rng, 2) ? Mat2<Integer>(1, s, 0, 1) : Mat2<Integer>(1, 0, s, 1));
    }
    if (uniform_index(rng, 2)) m = m * Mat2<Integer>(0, 1, 1, 0);
    Rational c(static_cast<long>(uniform_index(rng, 9) + 1), static_cast<long>(uniform_index(rng, 9) + 1));
    c.canonicalize();
    const Lattice2<Rational> b = scaled(Rational(c), rebased(a, cast<Rational>(m)));
    const auto w_opt = lattice2_eq_homothety(a, b);
    ASSERT_TRUE(w_opt.has_value());
    EXPECT_TRUE(witness_holds(a, b, *w_opt));
  }
}

TEST(Homothety, AgreesWithBruteForceOnSmallLattices) {
  Xoshiro256 rng(15);
  int positives = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const Vec3<Integer> u = random_vec(rng, 3), w = random_vec(rng, 3);
    if (is_zero(wedge2(u, w))) continue;
    const Lattice2<Rational> a(cast<Rational>(u), cast<Rational>(w));
    // Half the time, a b that is homothetic by construction with small M.
    Lattice2<Rational> b;
    if (trial % 2 == 0) {
      const long s = static_cast<long>(uniform_index(rng, 5)) - 2;
      b = scaled(Rational(2), rebased(a, Mat2<Rational>(1, s, 0, -1)));
    } else {
      const Vec3<Integer> x = random_vec(rng, 3), y = random_vec(rng, 3);
      if (is_zero(wedge2(x, y))) continue;
      b = Lattice2<Rational>(cast<Rational>(x), cast<Rational>(y));
    }
    const bool brute = brute_force_homothetic(a, b, 10);
    const auto fast = lattice2_eq_homothety(a, b);
    if (brute) {
      ++positives;
      ASSERT_TRUE(fast.has_value());
    }
    if (fast) {
      EXPECT_TRUE(witness_holds(a, b, *fast));
    }
  }
  EXPECT_GT(positives, 20);
}

TEST(Homothety, DifferentPlanesAndShapesAreRejected) {
  const Lattice2<Rational> z2({1, 0, 0}, {0, 1, 0});
  EXPECT_FALSE(lattice2_eq_homothety(z2, Lattice2<Rational>({1, 0, 0}, {0, 0, 1})));
  EXPECT_FALSE(lattice2_eq_homothety(z2, Lattice2<Rational>({1, 0, 0}, {0, 2, 0})));
  // Non-square wedge ratio: scale would be irrational.
  EXPECT_FALSE(lattice2_eq_homothety(z2, Lattice2<Rational>({1, 1, 0}, {1, -1, 0})));
}

TEST(Homothety, OrientationReversalAllowed) {
  const Lattice2<Rational> a({1, 0, 0}, {0, 1, 0});
  const auto w = lattice2_eq_homothety(a, Lattice2<Rational>({0, 3, 0}, {3, 0, 0}));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->scale, 3);
  EXPECT_EQ(det(w->change), -1);
}
