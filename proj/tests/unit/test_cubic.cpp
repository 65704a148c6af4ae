#include "latdyn/cubic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace latdyn;

namespace {

// det by Gaussian elimination over Q.
Rational det_q(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      d = -d;
    }
    d *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational r = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= r * m[k][j];
    }
  }
  return d;
}

// Sylvester resultant of two coefficient lists (leading first).
Integer sylvester(const std::vector<Integer>& f, const std::vector<Integer>& g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1, s = m + n;
  std::vector<std::vector<Rational>> a(s, std::vector<Rational>(s, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) a[i][i + j] = f[j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) a[n + i][i + j] = g[j];
  const Rational d = det_q(a);
  return d.get_num();
}

// disc(f) = −Res(f, f') for monic cubics.
Integer disc_oracle(const CubicPolynomial& f) {
  return -sylvester({1, f.a, f.b, f.c}, {3, Integer(2 * f.a), f.b});
}

bool has_integer_root(const CubicPolynomial& f) {
  if (f.c == 0) return true;
  const long c = std::labs(f.c.get_si());
  for (long d = 1; d <= c; ++d)
    if (c % d == 0 && (f(d) == 0 || f(-d) == 0)) return true;
  return false;
}

long nearest(const BigFloat& x) { return std::lround(to_double(x)); }

}  // namespace

TEST(Cubic, Parsing) {
  const CubicPolynomial f = parse_cubic("x^3 - 3x - 1");
  EXPECT_EQ(f.a, 0);
  EXPECT_EQ(f.b, -3);
  EXPECT_EQ(f.c, -1);
  EXPECT_EQ(f.to_string(), "x^3-3x-1");
  const CubicPolynomial g = parse_cubic("x^3-x^2-2x+1");
  EXPECT_EQ(g.a, -1);
  EXPECT_EQ(g.b, -2);
  EXPECT_EQ(g.c, 1);
  const CubicPolynomial h = parse_cubic("0 -3 -1");
  EXPECT_EQ(h.b, -3);
  for (const char* bad : {"x^2+1", "x^3+x+x", "x^3+2y", "3x^3+1", ""}) EXPECT_THROW(parse_cubic(bad), ValidationError) << bad;
}

TEST(Cubic, DiscriminantAndIrreducibilityOracles) {
  EXPECT_EQ(parse_cubic("x^3-x^2-2x+1").discriminant(), 49);
  EXPECT_EQ(parse_cubic("x^3-3x-1").discriminant(), 81);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coef(-20, 20);
  for (int i = 0; i < 2000; ++i) {
    const CubicPolynomial f{coef(rng), coef(rng), coef(rng)};
    EXPECT_EQ(f.discriminant(), disc_oracle(f)) << f.to_string();
    EXPECT_EQ(f.irreducible(), !has_integer_root(f)) << f.to_string();
  }
}

TEST(Cubic, FieldExamples) {
  const CubicFieldSpec k = cubic_field(parse_cubic("x^3-3x-1"));
  const double expect[] = {1.87939, -0.34730, -1.53209};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(to_double(k.roots[i]), expect[i], 1e-5);
    const BigFloat r = k.roots[i];
    EXPECT_LT(abs(BigFloat(r * r * r - 3 * r - 1)), BigFloat(1e-45));
  }
  EXPECT_LT(abs(BigFloat(k.roots[0] * k.roots[1] * k.roots[2] - 1)), BigFloat(1e-45));
  // Columns of L are φ(1), φ(α), φ(α²).
  EXPECT_EQ(k.lattice.basis(1, 0), 1);
  EXPECT_EQ(k.lattice.basis(2, 1), k.roots[2]);

  EXPECT_NO_THROW(cubic_field(parse_cubic("x^3-x^2-2x+1")));
  try {
    cubic_field(parse_cubic("x^3-2"));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("not totally real"), std::string::npos);
  }
  try {
    cubic_field(parse_cubic("x^3-7x+6"));  // (x−1)(x−2)(x+3)
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("reducible"), std::string::npos);
  }
}

TEST(Cubic, RootsOfRandomTotallyRealCubics) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> coef(-60, 60);
  int done = 0;
  while (done < 200) {
    const CubicPolynomial f{coef(rng), coef(rng), coef(rng)};
    if (f.discriminant() <= 0 || !f.irreducible()) continue;
    const CubicFieldSpec k = cubic_field(f);
    EXPECT_GT(k.roots[0], k.roots[1]);
    EXPECT_GT(k.roots[1], k.roots[2]);
    // Vieta: e1 = −a, e2 = b, e3 = −c.
    const auto& r = k.roots;
    const BigFloat tol(1e-35);
    EXPECT_LT(abs(BigFloat(r[0] + r[1] + r[2] + convert<BigFloat>(f.a))), tol);
    EXPECT_LT(abs(BigFloat(r[0] * r[1] + r[0] * r[2] + r[1] * r[2] - convert<BigFloat>(f.b))), tol);
    ++done;
  }
}

TEST(Cubic, NormIsTheResultant) {
  const CubicFieldSpec k = cubic_field(parse_cubic("x^3-3x-1"));
  EXPECT_EQ(element_norm(k.f, FieldElement(0, 1, 0)), 1);
  EXPECT_EQ(element_norm(k.f, FieldElement(1, 1, 0)), -1);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int i = 0; i < 300; ++i) {
    const FieldElement x(c(rng), c(rng), c(rng));
    const Integer n = element_norm(k.f, x);
    EXPECT_EQ(n, resultant(k.f, x));
    EXPECT_EQ(n, sylvester({1, k.f.a, k.f.b, k.f.c}, {x[2], x[1], x[0]})) << x;
    const Vec3<BigFloat> e = k.embed(x);
    EXPECT_EQ(n, nearest(BigFloat(e[0] * e[1] * e[2])));
  }
  // Multiplication is the field product.
  const FieldElement x(2, -1, 3), y(-1, 4, 1);
  const Vec3<BigFloat> ex = k.embed(x), ey = k.embed(y), exy = k.embed(multiply(k.f, x, y));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_LT(abs(BigFloat(exy[i] - ex[i] * ey[i])), BigFloat(1e-40));
  const FieldElement inv = unit_power(k.f, FieldElement(1, 1, 0), -1);
  EXPECT_EQ(multiply(k.f, inv, FieldElement(1, 1, 0)), FieldElement(1, 0, 0));
  EXPECT_THROW(unit_power(k.f, FieldElement(2, 0, 0), 2), ValidationError);
}

TEST(Cubic, UnitSearch) {
  const CubicFieldSpec k = cubic_field(parse_cubic("x^3-3x-1"));
  auto contains = [](const std::vector<UnitElement>& us, const FieldElement& x) {
    return std::any_of(us.begin(), us.end(), [&](const UnitElement& u) { return u.coords == x; });
  };
  EXPECT_TRUE(contains(unit_search(k, 1), FieldElement(0, 1, 0)));
  EXPECT_TRUE(contains(unit_search(k, 2), FieldElement(1, 1, 0)));
  const auto us = unit_search(k, 5);
  EXPECT_EQ(log_embedding_rank(us), 2);
  for (const auto& u : us) {
    EXPECT_EQ(abs(resultant(k.f, u.coords)), 1);
    EXPECT_EQ(u.norm, sgn(element_norm(k.f, u.coords)));
    EXPECT_LT(std::abs(u.log_embedding[0] + u.log_embedding[1] + u.log_embedding[2]), 1e-12);
  }
  EXPECT_EQ(log_embedding_rank({unit_search(k, 1).front()}), 1);
  const auto [e1, e2] = independent_pair(us);
  EXPECT_EQ(log_embedding_rank({e1, e2}), 2);
  EXPECT_THROW(unit_search(k, 0), ValidationError);
}

TEST(Cubic, ConditionedShapesDualRoute) {
  const CubicFieldSpec k = cubic_field(parse_cubic("x^3-3x-1"));
  const ConditionedReport r = conditioned_shapes(k, FieldElement(0, 1, 0), FieldElement(1, 1, 0), 6);
  EXPECT_EQ(r.rows.size(), 169u);
  EXPECT_FALSE(r.truncated);
  EXPECT_LT(r.max_route_gap, 1e-6);
  for (const auto& row : r.rows) {
    EXPECT_LT(row.route_gap, 1e-6);
    EXPECT_EQ(row.unit, multiply(k.f, unit_power(k.f, FieldElement(0, 1, 0), row.m),
                                 unit_power(k.f, FieldElement(1, 1, 0), row.n)));
  }
  // ε = 1 gives π^{(1,1,1)}(L).
  const auto one = std::find_if(r.rows.begin(), r.rows.end(), [](const auto& x) { return x.m == 0 && x.n == 0; });
  ASSERT_NE(one, r.rows.end());
  // Oracle: project φ(α), φ(α²) onto 𝟙^⊥ by hand.
  const Vec3<BigFloat> ones(1, 1, 1);
  auto proj = [&](const FieldElement& x) {
    const Vec3<BigFloat> v = k.embed(x);
    return v - BigFloat(dot(v, ones) / 3) * ones;
  };
  const Lattice2<BigFloat> p(proj(FieldElement(0, 1, 0)), proj(FieldElement(0, 0, 1)));
  EXPECT_LT(std::abs(shape(p).z - one->shape.z), 1e-12);
  // ε = α directly.
  const auto alpha = std::find_if(r.rows.begin(), r.rows.end(), [](const auto& x) { return x.m == 1 && x.n == 0; });
  EXPECT_LT(std::abs(alpha->shape.z - alpha->dual_shape.z), 1e-6);

  // A tight log cap truncates with a flag.
  const ConditionedReport t = conditioned_shapes(k, FieldElement(0, 1, 0), FieldElement(1, 1, 0), 6, 3.0);
  EXPECT_TRUE(t.truncated);
  EXPECT_EQ(t.rows.size() + t.skipped, 169u);
  EXPECT_THROW(conditioned_shapes(k, FieldElement(0, 1, 0), FieldElement(0, -1, 0), 1), ValidationError);
  EXPECT_THROW(conditioned_shapes(k, FieldElement(2, 1, 0), FieldElement(1, 1, 0), 1), ValidationError);
}

TEST(Cubic, UserIntegralBasis) {
  // β = 2α is a root of x³ − 12x − 8; Z[β] has index 8 in Z[α].  The basis
  // 1, β/2, β²/4 recovers φ(Z[α]).
  const Mat3<Rational> t = Mat3<Rational>::diagonal(1, Rational(1, 2), Rational(1, 4));
  const CubicFieldSpec big = cubic_field(parse_cubic("x^3-12x-8"), t);
  const CubicFieldSpec ref = cubic_field(parse_cubic("x^3-3x-1"));
  for (std::size_t i = 0; i < 9; ++i) EXPECT_LT(abs(BigFloat(big.lattice.basis.a[i] - ref.lattice.basis.a[i])), BigFloat(1e-40));
  EXPECT_EQ(big.order_coordinates(FieldElement(0, 2, 0)), Vec3<Integer>(0, 4, 0));
  // β = 2α is not a unit; 1 = β⁰ is, and the conditioned lattice for it
  // matches the one over Z[α].
  EXPECT_THROW(conditioned_shapes(big, FieldElement(0, 1, 0), FieldElement(1, 1, 0), 0), ValidationError);
  EXPECT_THROW(cubic_field(parse_cubic("x^3-12x-8"), Mat3<Rational>::diagonal(1, Rational(1, 3), 1)), ValidationError);
  EXPECT_THROW(cubic_field(parse_cubic("x^3-12x-8"), Mat3<Rational>::diagonal(1, Rational(1, 2), 1)), ValidationError);
}
