#pragma once

// Totally real cubic fields K = Q(α), f = x³ + a x² + b x + c, their
// geometric embedding φ = (σ₁, σ₂, σ₃), brute-force unit search and the
// conditioned directional lattices π^{φ(ε)}(L) for units ε.
//
// L is φ of the order Z[α] unless an integral basis (as rational
// coordinates in 1, α, α²) is supplied.

#include "latdyn/dioph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latdyn {

struct CubicPolynomial {
  Integer a, b, c;

  Integer discriminant() const;
  // Rational roots of a monic integer cubic are integer divisors of c.
  bool irreducible() const;
  Integer operator()(const Integer& x) const { return Integer(((x + a) * x + b) * x + c); }
  std::string to_string() const;
};

// "x^3-3x-1" style or three coefficients "a b c".
CubicPolynomial parse_cubic(const std::string& text);

// Integer coordinates (p, q, r) of p + qα + rα².
using FieldElement = Vec3<Integer>;

struct CubicFieldSpec {
  CubicPolynomial f;
  std::array<BigFloat, 3> roots;      // σ₁(α) > σ₂(α) > σ₃(α), BigFloat precision
  Mat3<Rational> order_basis;         // columns: integral basis in 1, α, α²
  Lattice3<BigFloat> lattice;         // columns φ(order basis)

  // σ_i(x) for x in the 1, α, α² coordinates.
  Vec3<BigFloat> embed(const FieldElement& x) const;
  // Coordinates of x in the order basis (ValidationError if x ∉ order).
  Vec3<Integer> order_coordinates(const FieldElement& x) const;
};

// ValidationError when f is reducible or has a non-real root.
// The integral basis must contain Z[α] and be closed under multiplication.
CubicFieldSpec cubic_field(const CubicPolynomial& f,
                           const std::optional<Mat3<Rational>>& integral_basis = std::nullopt);

// Real roots in descending order, isolated between the critical points and
// bisected with exact sign evaluation.
std::vector<BigFloat> real_roots(const CubicPolynomial& f);

// Multiplication by α in the 1, α, α² coordinates.
Mat3<Integer> companion(const CubicPolynomial& f);
// Multiplication by x.
Mat3<Integer> multiplication_matrix(const CubicPolynomial& f, const FieldElement& x);
FieldElement multiply(const CubicPolynomial& f, const FieldElement& x, const FieldElement& y);
// x^k for a unit x (k may be negative).
FieldElement unit_power(const CubicPolynomial& f, const FieldElement& x, long k);

// N(p + qα + rα²) = det(pI + qM + rM²) = Res(f, p + q x + r x²).
Integer element_norm(const CubicPolynomial& f, const FieldElement& x);

// Res(f, g) by the Sylvester determinant, g = p + q x + r x².
Integer resultant(const CubicPolynomial& f, const FieldElement& g);

struct UnitElement {
  FieldElement coords;
  int norm = 1;
  std::array<double, 3> log_embedding{};
};

// Every (p,q,r) in the box |·| ≤ bound with |N| = 1.
std::vector<UnitElement> unit_search(const CubicFieldSpec& spec, long bound);

// Numerical rank of the log-embedding vectors (singular values > 1e-6).
int log_embedding_rank(const std::vector<UnitElement>& units);

// Two units with independent log-embeddings, preferring small logs.
std::pair<UnitElement, UnitElement> independent_pair(const std::vector<UnitElement>& units);

struct ConditionedShape {
  long m = 0, n = 0;               // ε = ε₁^m ε₂^n
  FieldElement unit;
  ShapePoint shape;                // π^{φ(ε)}(L)
  ShapePoint dual_shape;           // second route
  double height = 0;
  double route_gap = 0;            // |z − z'|
};

struct ConditionedReport {
  std::vector<ConditionedShape> rows;
  bool truncated = false;          // some words skipped (coefficient growth)
  std::size_t skipped = 0;
  double max_route_gap = 0;
};

// ε₁^m ε₂^n for m, n in [−range, range].  Route 1 projects L along φ(ε);
// route 2 transports the dual plane lattice L* ∩ 𝟙^⊥ by diag(σ(ε))^{-1}.
// Words with max |log σ_i(ε)| above max_log are skipped and flagged.
// ValidationError unless e1, e2 are units with independent log-embeddings;
// VerificationFailure if the two routes disagree by more than 1e-6.
ConditionedReport conditioned_shapes(const CubicFieldSpec& spec, const FieldElement& e1, const FieldElement& e2,
                                     long range, double max_log = 25.0);

}  // namespace latdyn
