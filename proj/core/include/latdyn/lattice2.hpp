#pragma once

// The space X of 2-lattices in R³ up to scaling: shapes in the modular
// fundamental domain, covolumes, shortest vectors, the height u_X and the
// normalized-length cocycle.

#include "latdyn/lattice_types.hpp"
#include "latdyn/reduction.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace latdyn {

using Complex = std::complex<double>;

// One PSL₂(Z) generator: Shift(n) is z ↦ z + n, Invert is z ↦ -1/z.
struct ModularLetter {
  enum class Kind : std::uint8_t { Shift, Invert };
  Kind kind = Kind::Shift;
  std::int64_t shift = 0;

  friend bool operator==(const ModularLetter&, const ModularLetter&) = default;
};

using ModularWord = std::vector<ModularLetter>;

// z = apply_word(word, reduced) with letters composed left to right, i.e.
// the first letter is applied last.
Complex apply_word(const ModularWord& word, Complex z);

// The word as an integer matrix acting by fractional linear transformation.
Mat2<Integer> word_matrix(const ModularWord& word);

struct Reduction {
  Complex z;
  ModularWord word;
};

inline constexpr int kReductionCap = 10000;

// Reduces z (Im z > 0) into the closed fundamental domain with the boundary
// convention -1/2 ≤ Re z < 1/2, |z| ≥ 1, and Re z ≥ 0 on the unit arc.
// Throws ValidationError for Im z ≤ 0 or non-finite input, NumericalError if
// the iteration cap is reached.
Reduction reduce_fundamental(Complex z);

struct ShapePoint {
  Complex z;
  bool reduced = false;
  // z ↦ -conj(z) applied after reduction (O₂ quotient).
  bool reflected = false;
  ModularWord word;
};

// Reduces and then picks the Re z ≥ 0 sheet of the O₂ double cover.
ShapePoint canonical_shape(Complex z0);

// (⟨u,w⟩ + i‖u∧w‖)/‖u‖² for a Gauss-reduced basis; the Gram entries are
// formed in the lattice's own flavor and only converted at the end.
template <class T>
Complex raw_shape(const Lattice2<T>& reduced) {
  const T a = norm2(reduced.u);
  const T b = dot(reduced.u, reduced.w);
  const T d = norm2(reduced.wedge());
  const double re = ratio_to_double(b, a);
  // Im = sqrt(d)/a = sqrt(d/a²)
  const double im = std::sqrt(ratio_to_double(d, T(a * a)));
  return {re, im};
}

template <class T>
ShapePoint shape(const Lattice2<T>& l) {
  return canonical_shape(raw_shape(gauss_reduce(l)));
}

template <class T>
double covolume(const Lattice2<T>& l) {
  return std::sqrt(to_double(norm2(l.wedge())));
}

template <class T>
Vec3<T> shortest_vector(const Lattice2<T>& l) {
  return gauss_reduce(l).u;
}

// u_X([Λ]) = |Λ|^{1/2} / min ‖v‖ = (‖u∧w‖² / ‖v_min‖⁴)^{1/4}.
template <class T>
double height(const Lattice2<T>& l) {
  const Lattice2<T> r = gauss_reduce(l);
  const T a = norm2(r.u);
  const T d = norm2(r.wedge());
  return std::pow(ratio_to_double(d, T(a * a)), 0.25);
}

// N_Λ(v) = ‖v‖ / |Λ|^{1/2}.
template <class T>
double normalized_length(const Lattice2<T>& l, const Vec3<T>& v) {
  return std::sqrt(to_double(norm2(v))) / std::sqrt(covolume(l));
}

// f_{Λ,v}(g) = N_{gΛ}(gv) / N_Λ(v)
//            = (‖gv‖/‖v‖) / (‖g(u∧w)‖/‖u∧w‖)^{1/2}.
// Throws ValidationError for v = 0 and, in exact flavors, for v ∉ Λ.
double expansion_cocycle(const Mat3<double>& g, const Lattice2<double>& l, const Vec3<double>& v);
double expansion_cocycle(const Mat3<Rational>& g, const Lattice2<Rational>& l, const Vec3<Rational>& v);

// Coordinates (a, b) with v = a·u + b·w, or ValidationError if v is not in
// the plane of l.
std::pair<Rational, Rational> plane_coordinates(const Lattice2<Rational>& l, const Vec3<Rational>& v);

// ρ = |Λ ∩ ℓ| / |Λ|^{1/2} for the line ℓ = R·direction.  Decided exactly:
// ValidationError if ℓ is not in the plane of Λ.
double rho_line(const Lattice2<Rational>& l, const Vec3<Rational>& direction);

// The primitive vector of Λ on ℓ (sign following `direction`).
Vec3<Rational> primitive_on_line(const Lattice2<Rational>& l, const Vec3<Rational>& direction);

}  // namespace latdyn
