#pragma once

// The Γ₀-equivariant section over the circle of isotropic planes:
//   Λ_t = span_Z{e₁ + t·e₂, e₂ + 2t·e₃},  Λ_∞ = span_Z{e₂, 2e₃},
// with u⁺(2)·[Λ_t] = [Λ_{g₁t}] and u⁻(2)·[Λ_t] = [Λ_{g₂t}] for
// g₁ = [[1,0],[2,1]], g₂ = [[1,1],[0,1]] acting by Möbius maps.

#include "latdyn/exact.hpp"
#include "latdyn/groups.hpp"
#include "latdyn/lattice2.hpp"

#include <vector>

namespace latdyn {

template <class T>
Lattice2<T> lambda_t(const ProjPoint<T>& t) {
  if (t.infinite) return {Vec3<T>(0, 1, 0), Vec3<T>(0, 0, 2)};
  return {Vec3<T>(1, t.value, 0), Vec3<T>(0, 1, T(2 * t.value))};
}

Mat2<Rational> section_g1();
Mat2<Rational> section_g2();

enum class Side { Plus, Minus };

// One letter of a Γ₀ word: u⁺(2)^{±1} or u⁻(2)^{±1}.
struct SectionLetter {
  Side side;
  bool inverse = false;
};

Mat3<Rational> section_group_element(const SectionLetter& l);
Mat2<Rational> section_moebius_element(const SectionLetter& l);

struct EquivarianceWitness {
  ProjPoint<Rational> t;
  ProjPoint<Rational> image;  // g·t
  HomothetyWitness witness;   // Λ_{g·t} = c · (u·Λ_t) · M
};

// Verifies u·Λ_t ≗ Λ_{g·t} exactly for one side.  Throws
// VerificationFailure if the classes differ.
EquivarianceWitness equivariance_check(const ProjPoint<Rational>& t, Side side);

// Same for a word w = l₁ l₂ ⋯ l_m (acting as the product l₁·l₂⋯l_m):
// w·Λ_t ≗ Λ_{M(w)·t}.
EquivarianceWitness equivariance_check(const ProjPoint<Rational>& t, const std::vector<SectionLetter>& word);

// A plane given by a Euclidean normal, up to scale.
template <class T>
struct IsotropicPlane {
  Vec3<T> normal;
};

// Determinant of the Gram matrix of Q restricted to normal^⊥, in the basis
// (n_k e_i − n_i e_k, n_k e_j − n_j e_k) with n_k ≠ 0.  Equals n_k²·Q(n).
template <class T>
T restricted_form_det(const Vec3<T>& n) {
  std::size_t k = 0;
  if constexpr (is_exact_v<T>) {
    while (k < 3 && is_zero(n[k])) ++k;
  } else {
    for (std::size_t i = 1; i < 3; ++i)
      if (std::abs(to_double(n[i])) > std::abs(to_double(n[k]))) k = i;
  }
  if (k == 3 || is_zero(n[k])) throw ValidationError("restricted_form_det: zero normal");
  const std::size_t i = (k + 1) % 3, j = (k + 2) % 3;
  Vec3<T> b1, b2;
  b1[i] = n[k];
  b1[k] = T(-n[i]);
  b2[j] = n[k];
  b2[k] = T(-n[j]);
  const Mat3<T> s = quad_form_gram<T>();
  const T g11 = dot(b1, s * b1), g12 = dot(b1, s * b2), g22 = dot(b2, s * b2);
  return T(g11 * g22 - g12 * g12);
}

// Membership in the circle 𝒞: exact for exact flavors; for floats the
// determinant is normalized by n_k²‖n‖² and compared against `tol`.
template <class T>
bool is_isotropic(const IsotropicPlane<T>& p, double tol = 1e-9) {
  const T d = restricted_form_det(p.normal);
  if constexpr (is_exact_v<T>) {
    (void)tol;
    return is_zero(d);
  } else {
    double nk = 0;
    for (std::size_t i = 0; i < 3; ++i) nk = std::max(nk, std::abs(to_double(p.normal[i])));
    const double scale = nk * nk * to_double(norm2(p.normal));
    return std::abs(to_double(d)) <= tol * scale;
  }
}

template <class T>
struct SectionPoint {
  ProjPoint<T> t;
  Lattice2<T> lattice;
};

// ζ(p): the unique Λ_t whose plane is p, from n ∝ (2t², −2t, 1):
// t = −n₂/(2n₃), and t = ∞ when n₃ = 0.  ValidationError when p ∉ 𝒞.
template <class T>
SectionPoint<T> zeta(const IsotropicPlane<T>& p, double tol = 1e-9) {
  if (!is_isotropic(p, tol)) throw ValidationError("zeta: plane is not isotropic");
  const Vec3<T>& n = p.normal;
  if (is_zero(n[2])) {
    // Isotropy forces n₂ = 0: the normal is the e₁ direction.
    const auto t = ProjPoint<T>::at_infinity();
    return {t, lambda_t(t)};
  }
  const T tv = T(-n[1] / (2 * n[2]));
  const T expected_n1 = T(2 * tv * tv * n[2]);
  if constexpr (is_exact_v<T>) {
    if (expected_n1 != n[0]) throw VerificationFailure("zeta: inconsistent isotropic normal");
  } else {
    if (std::abs(to_double(expected_n1) - to_double(n[0])) > 1e-6 * std::sqrt(to_double(norm2(n))))
      throw VerificationFailure("zeta: inconsistent isotropic normal");
  }
  const auto t = ProjPoint<T>::finite(tv);
  return {t, lambda_t(t)};
}

struct CurvePoint {
  ProjPoint<double> t;
  ShapePoint shape;
};

std::vector<CurvePoint> curve_sample(const std::vector<ProjPoint<double>>& grid);

// n points t = tan θ with θ at the midpoints of n equal cells of
// (−π/2, π/2), followed by ∞.
std::vector<ProjPoint<double>> tan_grid(std::size_t n);

}  // namespace latdyn
