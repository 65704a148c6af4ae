#pragma once

// Continued fractions with certified partial quotients.
//
//   rationals        exact Euclid, terminates
//   quadratic surds  (P + √D)/Q by the exact periodic recurrence
//   real intervals   [lo, hi] with MPFR outward rounding; a term is emitted
//                    only when floor(lo) = floor(hi), otherwise the
//                    expansion stops with precision_exhausted set
//
// Descriptors accepted by parse_real / cf_expand(string):
//   "p" or "p/q"                     rational
//   "sqrt(D)", "-sqrt(D)", "P+sqrt(D)", "P-sqrt(D)",
//   "(P+sqrt(D))/Q", "(P-sqrt(D))/Q" quadratic surd (D not a square)
//   "liouville(K)"                   Σ_{k=1}^K 10^{-k!}, exact rational
//   "cfn(N)"                         [0; 1, 2, …, N], exact rational
//   "cf[a0;a1,a2,...]"               finite continued fraction
//   "pi", "e"                        MPFR enclosures

#include "latdyn/scalar.hpp"

#include <string>
#include <variant>
#include <vector>

namespace latdyn {

struct QuadraticSurd {
  Integer p, d, q;  // (p + √d)/q, d > 0 not a perfect square, q ≠ 0
};

// Closed interval [lo, hi]; endpoints are rounded outward when stored.
struct RealInterval {
  BigFloat lo, hi;
};

using RealSource = std::variant<Rational, QuadraticSurd, RealInterval>;

struct CFExpansion {
  std::string descriptor;
  std::vector<Integer> terms;  // a₀; a₁, a₂, …
  bool terminated = false;     // the input is rational and the expansion ended
  bool precision_exhausted = false;

  std::size_t certified() const { return terms.size(); }
  // max over a₁, a₂, … (0 when there are none)
  Integer max_partial_quotient() const;
};

struct Convergent {
  Integer p, q;
};

// p_n/q_n for every prefix of `terms`.
std::vector<Convergent> convergents(const std::vector<Integer>& terms);

CFExpansion cf_expand(const Rational& x, std::size_t n);
CFExpansion cf_expand(const QuadraticSurd& x, std::size_t n);
CFExpansion cf_expand(const RealInterval& x, std::size_t n);
CFExpansion cf_expand(const RealSource& x, std::size_t n);
CFExpansion cf_expand(const std::string& descriptor, std::size_t n);

// ValidationError on malformed descriptors.  pi and e are enclosed at
// BigFloat precision.
RealSource parse_real(const std::string& descriptor);

// Round-to-nearest value of the source (midpoint for intervals).
double to_double(const RealSource& x);
BigFloat to_bigfloat(const RealSource& x);

// Exact sign of (x − r).
int compare(const QuadraticSurd& x, const Rational& r);

Rational liouville_prefix(unsigned k);
Rational from_terms(const std::vector<Integer>& terms);

}  // namespace latdyn
