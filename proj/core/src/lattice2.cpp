#include "latdyn/lattice2.hpp"

#include "latdyn/exact.hpp"

#include <cmath>

namespace latdyn {

namespace {

Complex apply_letter(const ModularLetter& l, Complex z) {
  if (l.kind == ModularLetter::Kind::Shift) return z + static_cast<double>(l.shift);
  return -1.0 / z;
}

}  // namespace

Complex apply_word(const ModularWord& word, Complex z) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) z = apply_letter(*it, z);
  return z;
}

Mat2<Integer> word_matrix(const ModularWord& word) {
  Mat2<Integer> m = Mat2<Integer>::identity();
  for (const auto& l : word) {
    if (l.kind == ModularLetter::Kind::Shift)
      m = m * Mat2<Integer>(1, Integer(static_cast<long>(l.shift)), 0, 1);
    else
      m = m * Mat2<Integer>(0, -1, 1, 0);
  }
  return m;
}

Reduction reduce_fundamental(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw ValidationError("reduce_fundamental: non-finite input");
  if (!(z.imag() > 0)) throw ValidationError("reduce_fundamental: Im z must be positive");

  Reduction r;
  for (int iter = 0;; ++iter) {
    if (iter >= kReductionCap) throw NumericalError("reduce_fundamental: iteration cap reached");
    const double n = std::floor(z.real() + 0.5);
    if (n != 0) {
      z -= n;
      r.word.push_back({ModularLetter::Kind::Shift, static_cast<std::int64_t>(n)});
    }
    if (std::norm(z) < 1.0) {
      z = -1.0 / z;
      r.word.push_back({ModularLetter::Kind::Invert, 0});
      continue;
    }
    break;
  }
  // On the unit arc -1/z = -conj(z); keep the Re ≥ 0 half.  The corner
  // -1/2 + i√3/2 stays put.
  if (std::norm(z) == 1.0 && z.real() < 0 && z.real() > -0.5) {
    z = -1.0 / z;
    r.word.push_back({ModularLetter::Kind::Invert, 0});
  }
  if (!(z.imag() > 0)) throw NumericalError("reduce_fundamental: lost the upper half-plane");
  r.z = z;
  return r;
}

ShapePoint canonical_shape(Complex z0) {
  Reduction r = reduce_fundamental(z0);
  ShapePoint s;
  s.z = r.z;
  s.reduced = true;
  s.word = std::move(r.word);
  if (s.z.real() < 0) {
    s.z = Complex(-s.z.real(), s.z.imag());
    s.reflected = true;
  }
  return s;
}

namespace {

template <class T>
double cocycle_impl(const Mat3<T>& g, const Lattice2<T>& l, const Vec3<T>& v) {
  if (is_zero(v)) throw ValidationError("expansion_cocycle: zero vector");
  const double stretch = std::sqrt(to_double(norm2(g * v)) / to_double(norm2(v)));
  const double area = std::sqrt(to_double(norm2(wedge2(g * l.u, g * l.w))) / to_double(norm2(l.wedge())));
  return stretch / std::sqrt(area);
}

}  // namespace

double expansion_cocycle(const Mat3<double>& g, const Lattice2<double>& l, const Vec3<double>& v) {
  return cocycle_impl(g, l, v);
}

double expansion_cocycle(const Mat3<Rational>& g, const Lattice2<Rational>& l, const Vec3<Rational>& v) {
  const auto [a, b] = plane_coordinates(l, v);
  if (!is_integral(a) || !is_integral(b)) throw ValidationError("expansion_cocycle: vector not in lattice");
  return cocycle_impl(g, l, v);
}

std::pair<Rational, Rational> plane_coordinates(const Lattice2<Rational>& l, const Vec3<Rational>& v) {
  const Vec3<Rational> n = l.wedge();
  if (!is_zero(dot(n, v))) throw ValidationError("vector is not in the plane of the lattice");
  // Cramer on a coordinate pair with a nonzero minor.
  std::size_t k = 0;
  while (is_zero(n[k])) ++k;
  const std::size_t i = (k + 1) % 3, j = (k + 2) % 3;
  const Rational minor = l.u[i] * l.w[j] - l.w[i] * l.u[j];
  Rational a = (v[i] * l.w[j] - l.w[i] * v[j]) / minor;
  Rational b = (l.u[i] * v[j] - v[i] * l.u[j]) / minor;
  return {a, b};
}

Vec3<Rational> primitive_on_line(const Lattice2<Rational>& l, const Vec3<Rational>& direction) {
  if (is_zero(direction)) throw ValidationError("rho_line: zero direction");
  const auto [a, b] = plane_coordinates(l, direction);
  // Scale (a, b) to the coprime integer pair with the same signs.
  Integer den;
  mpz_lcm(den.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  const Rational pa = a * den, qb = b * den;
  Integer p = pa.get_num(), q = qb.get_num();
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  p /= g;
  q /= g;
  return Rational(p) * l.u + Rational(q) * l.w;
}

double rho_line(const Lattice2<Rational>& l, const Vec3<Rational>& direction) {
  const Vec3<Rational> v = primitive_on_line(l, direction);
  return std::sqrt(to_double(norm2(v))) / std::sqrt(covolume(l));
}

}  // namespace latdyn
