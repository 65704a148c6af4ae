#include "latdyn/exact.hpp"

#include "latdyn/reduction.hpp"

#include <cstdlib>

namespace latdyn {

Integer content(const Vec3<Integer>& v) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), v[0].get_mpz_t(), v[1].get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[2].get_mpz_t());
  return g;
}

Vec3<Integer> primitive_part(const Vec3<Integer>& v) {
  const Integer g = content(v);
  if (g == 0) throw ValidationError("zero vector has no primitive part");
  return {Integer(v[0] / g), Integer(v[1] / g), Integer(v[2] / g)};
}

namespace {

// Column operation on U mixing columns i and j so that row entries
// (r_i, r_j) become (gcd, 0).
void combine_columns(Mat3<Integer>& u, Vec3<Integer>& r, std::size_t i, std::size_t j) {
  if (r[j] == 0) return;
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), r[i].get_mpz_t(), r[j].get_mpz_t());
  const Integer a = r[i] / g;
  const Integer b = r[j] / g;
  for (std::size_t k = 0; k < 3; ++k) {
    const Integer ci = u(k, i), cj = u(k, j);
    u(k, i) = s * ci + t * cj;
    u(k, j) = -b * ci + a * cj;
  }
  r[i] = g;
  r[j] = 0;
}

}  // namespace

Mat3<Integer> row_hermite_transform(const Vec3<Integer>& v) {
  if (is_zero(v)) throw ValidationError("row_hermite_transform: zero vector");
  Mat3<Integer> u = Mat3<Integer>::identity();
  Vec3<Integer> r = v;
  if (r[0] == 0) {
    // Bring a nonzero entry to the front.
    const std::size_t k = r[1] != 0 ? 1 : 2;
    std::swap(r[0], r[k]);
    for (std::size_t i = 0; i < 3; ++i) std::swap(u(i, 0), u(i, k));
    // Swapping two columns flips det; restore it on the other column.
    const std::size_t other = k == 1 ? 2 : 1;
    for (std::size_t i = 0; i < 3; ++i) u(i, other) = -u(i, other);
    r[other] = -r[other];
  }
  combine_columns(u, r, 0, 1);
  combine_columns(u, r, 0, 2);
  if (r[0] < 0) {
    for (std::size_t i = 0; i < 3; ++i) {
      u(i, 0) = -u(i, 0);
      u(i, 1) = -u(i, 1);
    }
    r[0] = -r[0];
  }
  return u;
}

std::pair<Vec3<Integer>, Vec3<Integer>> integer_kernel_basis(const Vec3<Integer>& v) {
  if (is_zero(v)) throw ValidationError("integer_kernel_basis: zero vector");
  const Mat3<Integer> u = row_hermite_transform(v);
  Lattice2<Integer> k(u.column(1), u.column(2));
  k = gauss_reduce(k);
  return {k.u, k.w};
}

Mat3<Integer> unimodular_completion(const Vec3<Integer>& c) {
  if (content(c) != 1) throw ValidationError("unimodular_completion: vector is not primitive");
  const Mat3<Integer> u = row_hermite_transform(c);
  // c·U = e1ᵀ, so c is the first column of U^{-T} = cof(U) / det(U).
  Mat3<Integer> w = cofactor(u);
  if (det(u) < 0)
    for (auto& x : w.a) x = -x;
  if (det(w) < 0) {
    // Keep the first column; flip a complementary one.
    for (std::size_t i = 0; i < 3; ++i) w(i, 2) = -w(i, 2);
  }
  return w;
}

std::optional<HomothetyWitness> lattice2_eq_homothety(const Lattice2<Rational>& a,
                                                      const Lattice2<Rational>& b) {
  const Vec3<Rational> wa = a.wedge();
  const Vec3<Rational> wb = b.wedge();
  if (!is_zero(wedge2(wa, wb))) return std::nullopt;  // different planes

  std::size_t k = 0;
  while (is_zero(wa[k])) ++k;
  const Rational ratio = wb[k] / wa[k];  // c² · det M
  const Rational mag = abs(ratio);
  if (!mpz_perfect_square_p(mag.get_num_mpz_t()) || !mpz_perfect_square_p(mag.get_den_mpz_t()))
    return std::nullopt;
  Integer num, den;
  mpz_sqrt(num.get_mpz_t(), mag.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), mag.get_den_mpz_t());
  const Rational c(num, den);

  // Solve A·M = B / c on two rows where A has an invertible minor.  Row pair
  // (i, j) has minor equal to the wedge coordinate on the remaining index.
  const std::size_t i = (k + 1) % 3, j = (k + 2) % 3;
  const Rational minor = a.u[i] * a.w[j] - a.w[i] * a.u[j];
  const Rational b_ui = b.u[i] / c, b_uj = b.u[j] / c, b_wi = b.w[i] / c, b_wj = b.w[j] / c;
  // [a.u[i] a.w[i]; a.u[j] a.w[j]]^{-1} = [a.w[j] -a.w[i]; -a.u[j] a.u[i]] / minor
  Mat2<Rational> m(Rational((a.w[j] * b_ui - a.w[i] * b_uj) / minor),
                   Rational((a.w[j] * b_wi - a.w[i] * b_wj) / minor),
                   Rational((a.u[i] * b_uj - a.u[j] * b_ui) / minor),
                   Rational((a.u[i] * b_wj - a.u[j] * b_wi) / minor));
  for (const auto& x : m.a)
    if (!is_integral(x)) return std::nullopt;
  const Rational d = det(m);
  if (d != 1 && d != -1) return std::nullopt;
  const Rational inv_c = 1 / c;
  if (!(rebased(a, m) == Lattice2<Rational>(inv_c * b.u, inv_c * b.w)))
    return std::nullopt;
  return HomothetyWitness{c, cast<Integer>(m)};
}

}  // namespace latdyn
