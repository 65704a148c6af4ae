#pragma once

// Acting groups: the form Q(v) = 2v₁v₃ − v₂² and SO(Q), the unipotent
// generators u±(t) and the involution k, elementary generators of SL₃(Z),
// finitely supported measures μ and word sampling, and the Möbius action of
// 2×2 matrices on R ∪ {∞}.

#include "latdyn/errors.hpp"
#include "latdyn/linalg.hpp"
#include "latdyn/rng.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace latdyn {

// Gram matrix S of Q; S is symmetric, S² = I.
template <class T>
Mat3<T> quad_form_gram() {
  return {0, 0, 1, 0, -1, 0, 1, 0, 0};
}

template <class T>
T quad_form(const Vec3<T>& v) {
  return T(2 * v[0] * v[2] - v[1] * v[1]);
}

//   u⁺(t) = [[1, t, t²/2], [0, 1, t], [0, 0, 1]]
template <class T>
Mat3<T> make_u_plus(const T& t) {
  return {1, t, T(t * t / 2), 0, 1, t, 0, 0, 1};
}

//   u⁻(t) = [[1, 0, 0], [t, 1, 0], [t²/2, t, 1]]
template <class T>
Mat3<T> make_u_minus(const T& t) {
  return {1, 0, 0, t, 1, 0, T(t * t / 2), t, 1};
}

template <class T>
Mat3<T> make_k() {
  return {0, 0, 1, 0, -1, 0, 1, 0, 0};
}

// I ± E_ij for i ≠ j: 12 matrices generating SL₃(Z), ordered by (i, j, sign).
std::vector<Mat3<Rational>> make_sl3_elementary_set();

template <class T>
bool check_SL3(const Mat3<T>& g) {
  return det(g) == T(1);
}

// gᵀSg = S and det g = 1.
template <class T>
bool check_SOQ(const Mat3<T>& g) {
  const Mat3<T> s = quad_form_gram<T>();
  return check_SL3(g) && transpose(g) * s * g == s;
}

bool check_SL3(const Mat3<double>& g, double tol);
bool check_SOQ(const Mat3<double>& g, double tol);

// ---------------------------------------------------------------------------

struct MeasureAtom {
  Mat3<double> g;
  double weight = 0;
  // Present for measures of the rational flavor.
  std::optional<Mat3<Rational>> exact;
  std::optional<Rational> exact_weight;
  std::string label;
};

// A finitely supported probability measure on SL₃(R).  Immutable once built.
class MeasureSpec {
 public:
  struct RationalAtom {
    Mat3<Rational> g;
    Rational weight;
    std::string label;
  };
  struct FloatAtom {
    Mat3<double> g;
    double weight;
    std::string label;
  };

  // Weights are normalized exactly.  With `symmetrize`, the inverse of every
  // atom is added (same weight) unless already present.  Every atom must
  // have determinant exactly 1.
  static MeasureSpec rational(std::string name, std::vector<RationalAtom> atoms, bool symmetrize);

  // Determinants within 1e-9 of 1; weights are normalized and must then sum
  // to 1 within 1e-12 (they always do after normalization).
  static MeasureSpec floating(std::string name, std::vector<FloatAtom> atoms, bool symmetrize);

  const std::string& name() const { return name_; }
  const std::vector<MeasureAtom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool is_rational() const { return rational_; }
  // Closed under inverses (with matching weights).
  bool is_symmetric() const { return symmetric_; }

  // "I", "II" or "" - a user-declared Zariski-closure label, not computed.
  const std::string& case_label() const { return case_label_; }
  MeasureSpec& with_case_label(std::string label) {
    case_label_ = std::move(label);
    return *this;
  }

  // Index of an atom drawn from μ: one uniform01 draw against the
  // cumulative weights.
  std::size_t sample(Xoshiro256& rng) const;

  // k μ k⁻¹ (float flavor unless k and μ are both rational).
  MeasureSpec conjugated(const Mat3<double>& k) const;

 private:
  MeasureSpec() = default;
  void finalize();

  std::string name_;
  std::string case_label_;
  std::vector<MeasureAtom> atoms_;
  std::vector<double> cumulative_;
  bool rational_ = false;
  bool symmetric_ = false;
};

struct WordSample {
  Mat3<Rational> product;            // g_n ⋯ g_1
  std::vector<std::size_t> letters;  // atom indices g_1, …, g_n
};

// n letters from μ; n = 0 gives the identity.  Requires a rational measure.
WordSample sample_word(const MeasureSpec& mu, Xoshiro256& rng, std::size_t n);

// Built-in measures, all uniform and symmetric:
//   "I"     the 12 elementary SL₃(Z) generators                  (Case I)
//   "II-a"  ⟨u⁺(2), u⁻(1)⟩        "II-b"  ⟨u⁺(1), u⁻(2)⟩
//   "II-c"  ⟨u⁺(2), u⁻(1), k⟩     "II-d"  ⟨u⁺(1), u⁻(1)⟩         (Case II)
//   "gamma0" ⟨u⁺(2), u⁻(2)⟩, "gamma0k" ⟨u⁺(2), u⁻(2), k⟩,
//   "rotations" four rational rotations and their inverses.
MeasureSpec builtin_measure(const std::string& name);
std::vector<std::string> builtin_measure_names();
// The four Case II generator sets II-a, II-b, II-c, II-d.
std::vector<std::string> case_two_measures();

// ---------------------------------------------------------------------------

// A point of R ∪ {∞}.
template <class T>
struct ProjPoint {
  bool infinite = false;
  T value{};

  static ProjPoint at_infinity() { return {true, T(0)}; }
  static ProjPoint finite(T v) { return {false, std::move(v)}; }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

// t ↦ (at + b)/(ct + d); ∞ ↦ a/c; a pole maps to ∞.  Requires det = ±1
// (exactly for exact flavors, within 1e-9 for double).
template <class T>
ProjPoint<T> moebius_act(const Mat2<T>& m, const ProjPoint<T>& t) {
  const T d = det(m);
  if constexpr (is_exact_v<T>) {
    if (d != T(1) && d != T(-1)) throw std::invalid_argument("moebius_act: det must be ±1");
  } else {
    if (std::abs(std::abs(to_double(d)) - 1.0) > 1e-9) throw std::invalid_argument("moebius_act: det must be ±1");
  }
  if (t.infinite) {
    if (is_zero(m(1, 0))) return ProjPoint<T>::at_infinity();
    return ProjPoint<T>::finite(T(m(0, 0) / m(1, 0)));
  }
  const T num = m(0, 0) * t.value + m(0, 1);
  const T den = m(1, 0) * t.value + m(1, 1);
  if (is_zero(den)) return ProjPoint<T>::at_infinity();
  return ProjPoint<T>::finite(T(num / den));
}

}  // namespace latdyn
