#pragma once

// Lagrange–Gauss reduction of a 2-lattice basis, for every scalar flavor.

#include "latdyn/lattice_types.hpp"

#include <utility>

namespace latdyn {

inline double nearest_quotient(double n, double d) { return round_nearest(n / d); }
inline BigFloat nearest_quotient(const BigFloat& n, const BigFloat& d) { return round_nearest(BigFloat(n / d)); }
inline Rational nearest_quotient(const Rational& n, const Rational& d) {
  return Rational(round_nearest(Rational(n / d)));
}
inline Integer nearest_quotient(const Integer& n, const Integer& d) {
  Rational q(n, d);
  q.canonicalize();
  return round_nearest(q);
}

// num/den as a double, exact until the final rounding for exact flavors.
inline double ratio_to_double(double n, double d) { return n / d; }
inline double ratio_to_double(const BigFloat& n, const BigFloat& d) { return to_double(BigFloat(n / d)); }
inline double ratio_to_double(const Rational& n, const Rational& d) { return Rational(n / d).get_d(); }
inline double ratio_to_double(const Integer& n, const Integer& d) {
  Rational q(n, d);
  q.canonicalize();
  return q.get_d();
}

// Returns a basis (u, w) of the same lattice with ‖u‖ ≤ ‖w‖ and
// |⟨u,w⟩| ≤ ‖u‖²/2; u is then a shortest nonzero vector.  The iteration
// count is capped for floating flavors.
template <class T>
Lattice2<T> gauss_reduce(Lattice2<T> l) {
  T nu = norm2(l.u), nw = norm2(l.w);
  if (nw < nu) {
    std::swap(l.u, l.w);
    std::swap(nu, nw);
  }
  for (int iter = 0;; ++iter) {
    if (iter > 100000) throw NumericalError("gauss_reduce: iteration cap exceeded");
    const auto m = nearest_quotient(dot(l.u, l.w), nu);
    if (!is_zero(m)) {
      l.w = l.w - T(m) * l.u;
      nw = norm2(l.w);
    }
    if (!(nw < nu)) break;
    std::swap(l.u, l.w);
    std::swap(nu, nw);
  }
  return l;
}

}  // namespace latdyn
