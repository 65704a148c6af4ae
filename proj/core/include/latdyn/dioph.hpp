#pragma once

// Full-rank lattices in R³, directional 2-lattices π^v(L), the diagonal
// flow a(t₁,t₂) = diag(e^{t₁}, e^{t₂}, e^{−t₁−t₂}) on X, and the
// approximability-vs-boundedness report for Λ = span{(r₁,r₂,r₃), (1,1,1)}.

#include "latdyn/cf.hpp"
#include "latdyn/exact.hpp"
#include "latdyn/lattice2.hpp"

#include <array>
#include <string>
#include <vector>

namespace latdyn {

template <class T>
Vec3<T> project_orthogonal(const Vec3<T>& x, const Vec3<T>& v) {
  const T c = dot(x, v) / norm2(v);
  return x - c * v;
}

// π^v(L) for v = B·c, given the integer coordinates c of v in the basis B of
// L.  ValidationError unless gcd(c) = 1.
template <class T>
Lattice2<T> directional_coords(const Lattice3<T>& l, const Vec3<Integer>& c) {
  if (content(c) != 1) throw ValidationError("directional: vector is not primitive in L");
  const Mat3<Integer> u = unimodular_completion(c);
  const Mat3<T> b = l.basis * cast<T>(u);
  const Vec3<T> v = b.column(0);
  return {project_orthogonal(b.column(1), v), project_orthogonal(b.column(2), v)};
}

// Integer coordinates of v in the basis of L.  Exact for Rational; for
// floating flavors the coordinates are rounded and accepted when B·c
// reproduces v to 1e-9 relative.
Vec3<Integer> lattice_coordinates(const Lattice3<Rational>& l, const Vec3<Rational>& v);
Vec3<Integer> lattice_coordinates(const Lattice3<double>& l, const Vec3<double>& v);

// π^v(L): orthogonal projection of L onto v^⊥ for a primitive v ∈ L.
template <class T>
Lattice2<T> directional(const Lattice3<T>& l, const Vec3<T>& v) {
  return directional_coords(l, lattice_coordinates(l, v));
}

template <class T>
double covolume(const Lattice3<T>& l) {
  return std::abs(to_double(det(l.basis)));
}

// a(t₁,t₂)·Λ
template <class T>
Lattice2<T> a_flow(const Lattice2<T>& l, double t1, double t2) {
  const Mat3<T> a = Mat3<T>::diagonal(T(std::exp(t1)), T(std::exp(t2)), T(std::exp(-t1 - t2)));
  return a * l;
}

struct HeightField {
  double t1_max = 0, t2_max = 0;
  std::size_t n1 = 1, n2 = 1;
  std::vector<double> heights;  // row-major, t₁ index outer
  double max = 0;
  double argmax_t1 = 0, argmax_t2 = 0;

  // Grid coordinate i of [−T, T] with n points (0 when n = 1).
  static double grid_point(double t_max, std::size_t n, std::size_t i);
  double t1(std::size_t i) const { return grid_point(t1_max, n1, i); }
  double t2(std::size_t j) const { return grid_point(t2_max, n2, j); }
  double at(std::size_t i, std::size_t j) const { return heights[i * n2 + j]; }
};

// u_X(a(t)·Λ) on the n₁×n₂ grid of [−T₁,T₁]×[−T₂,T₂].  Rows run in
// parallel.  ValidationError for an empty grid or negative box.
HeightField a_orbit_scan(const Lattice2<double>& l, double t1_max, double t2_max, std::size_t n1, std::size_t n2,
                         unsigned threads = 0);
HeightField a_orbit_scan(const Lattice2<BigFloat>& l, double t1_max, double t2_max, std::size_t n1, std::size_t n2,
                         unsigned threads = 0);

// span{(r₁,r₂,r₃), (1,1,1)}
Lattice2<double> furstenberg_lattice(const std::array<RealSource, 3>& ratios);
Lattice2<BigFloat> furstenberg_lattice_big(const std::array<RealSource, 3>& ratios);

struct RatioReport {
  std::string descriptor;
  double value = 0;
  CFExpansion cf;
};

struct PlaneCheck {
  bool violated = false;
  std::size_t plane = 0;  // coordinate that vanishes
  long m = 0, n = 0;      // m·u + n·w
};

struct FurstenbergOptions {
  double t_max = 8.0;
  std::size_t grid = 161;
  std::size_t cf_terms = 30;
  long plane_search = 1000;  // |m| bound in the coordinate-plane search
  bool bigfloat_scan = true;  // double heights carry ~1e-6 relative error here
  unsigned threads = 0;
};

struct FurstenbergReport {
  std::array<RatioReport, 3> ratios;
  Integer max_partial_quotient = 0;
  bool precision_exhausted = false;
  std::vector<PlaneCheck> plane_violations;
  HeightField scan;
};

// Searches m·u + n·w with 1 ≤ m ≤ bound for a vanishing coordinate
// (|·| ≤ 1e-12·scale).  Hits are reported, never thrown.
std::vector<PlaneCheck> coordinate_plane_search(const Lattice2<double>& l, long bound);

FurstenbergReport furstenberg_report(const std::array<std::string, 3>& ratio_descriptors,
                                     const FurstenbergOptions& opts = {});

// For an arbitrary float basis the ratios u_i/w_i are expanded from a
// two-ulp enclosure; the digits are certified for that enclosure only.
FurstenbergReport furstenberg_report(const Lattice2<double>& l, const FurstenbergOptions& opts = {});

struct NamedRatios {
  std::string name;
  std::array<std::string, 3> ratios;
};

// The three lattices of the ordering experiment: bounded partial quotients,
// aₙ = n, and a Liouville prefix, sharing the two surd coordinates.
std::vector<NamedRatios> furstenberg_presets();

}  // namespace latdyn
