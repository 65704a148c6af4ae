#pragma once

// Exact integer/rational kernels: contents, integer kernels of a linear form,
// unimodular completion, and the homothety decision for rational 2-lattices.

#include "latdyn/lattice_types.hpp"

#include <optional>
#include <utility>

namespace latdyn {

// gcd of the entries (non-negative); zero for the zero vector.
Integer content(const Vec3<Integer>& v);

// v / content(v) with the sign kept.
Vec3<Integer> primitive_part(const Vec3<Integer>& v);

// Unimodular U with v·U = (g, 0, 0), g = content(v) > 0 (row-vector Hermite
// normal form of the 1×3 map x ↦ ⟨x, v⟩).
Mat3<Integer> row_hermite_transform(const Vec3<Integer>& v);

// A basis of Z³ ∩ v^⊥, Lagrange–Gauss reduced.  For primitive v the cross
// product of the pair is ±v.  Throws ValidationError on v = 0.
std::pair<Vec3<Integer>, Vec3<Integer>> integer_kernel_basis(const Vec3<Integer>& v);

// An integer matrix with determinant 1 whose first column is c.  Requires c
// primitive.
Mat3<Integer> unimodular_completion(const Vec3<Integer>& c);

// Lattices are related by B = c · A · M (see `rebased`).
struct HomothetyWitness {
  Rational scale;
  Mat2<Integer> change;
};

// Decides [A] = [B] exactly.  The scale is recovered from the ratio of the
// wedges (which equals c²·det M), then M is solved linearly and checked for
// integrality and det M = ±1.
std::optional<HomothetyWitness> lattice2_eq_homothety(const Lattice2<Rational>& a,
                                                      const Lattice2<Rational>& b);

inline std::optional<HomothetyWitness> lattice2_eq_homothety(const Lattice2<Integer>& a,
                                                             const Lattice2<Integer>& b) {
  return lattice2_eq_homothety(cast<Rational>(a), cast<Rational>(b));
}

}  // namespace latdyn
