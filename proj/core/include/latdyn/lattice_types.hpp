#pragma once

#include "latdyn/errors.hpp"
#include "latdyn/linalg.hpp"

namespace latdyn {

// An ordered basis (u, w) of a rank-2 discrete subgroup of R³.  The value
// represents the lattice itself; operations that only depend on the
// homothety class [Λ] say so.
template <class T>
struct Lattice2 {
  Vec3<T> u, w;

  Lattice2() : u(Vec3<T>::unit(0)), w(Vec3<T>::unit(1)) {}
  Lattice2(Vec3<T> u_, Vec3<T> w_) : u(std::move(u_)), w(std::move(w_)) {
    if (is_zero(wedge2(u, w))) throw ValidationError("lattice basis is rank-deficient");
  }

  // Coordinates of u∧w; its line is the plane's normal.
  Vec3<T> wedge() const { return wedge2(u, w); }

  friend bool operator==(const Lattice2& a, const Lattice2& b) { return a.u == b.u && a.w == b.w; }
};

template <class T>
Lattice2<T> operator*(const Mat3<T>& g, const Lattice2<T>& l) {
  return {g * l.u, g * l.w};
}

template <class T>
Lattice2<T> scaled(const T& c, const Lattice2<T>& l) {
  return {c * l.u, c * l.w};
}

// Basis change Λ·M: (u, w) ↦ (m00·u + m10·w, m01·u + m11·w), i.e. the basis
// read as the columns of a 3×2 matrix times M.
template <class T>
Lattice2<T> rebased(const Lattice2<T>& l, const Mat2<T>& m) {
  return {m(0, 0) * l.u + m(1, 0) * l.w, m(0, 1) * l.u + m(1, 1) * l.w};
}

template <class U, class T>
Lattice2<U> cast(const Lattice2<T>& l) {
  return {cast<U>(l.u), cast<U>(l.w)};
}

// A full-rank lattice in R³ given by the columns of `basis`.
template <class T>
struct Lattice3 {
  Mat3<T> basis;

  Lattice3() : basis(Mat3<T>::identity()) {}
  explicit Lattice3(Mat3<T> b) : basis(std::move(b)) {
    if (is_zero(det(basis))) throw ValidationError("lattice basis is singular");
  }
};

}  // namespace latdyn
