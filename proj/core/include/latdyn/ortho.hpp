#pragma once

// Orthogonal shapes s(Z³ ∩ v^⊥) for v on Q(v) = 1, sampled through the
// orbit of v₁ = (1,1,1) under words in {u⁺(2)^{±1}, u⁻(2)^{±1}, k}.  By
// duality Z³ ∩ (gv)^⊥ = g^{-T}(Z³ ∩ v^⊥), and for g ∈ SO(Q), g^{-T} = SgS⁻¹.
// The sampler records the shape of g^{-T}·Λ_{v₁} = cof(g)·Λ_{v₁}, which is
// the lattice of the row's own v = g·v₁.  Since g ↦ g^{-T} permutes the
// generators (u⁺(2) ↦ u⁻(2)⁻¹, u⁻(2) ↦ u⁺(2)⁻¹, k ↦ k), the sampled
// collection has the same law as {s(gΛ_{v₁})}.

#include "latdyn/exact.hpp"
#include "latdyn/groups.hpp"
#include "latdyn/lattice2.hpp"

#include <cstdint>
#include <vector>

namespace latdyn {

// Basis of Z³ ∩ v^⊥.  ValidationError for v = 0.
Lattice2<Integer> ortho_lattice(const Vec3<Integer>& v);

// Shape of an integer 2-lattice after exact Gauss reduction.
ShapePoint exact_shape(const Lattice2<Integer>& l);

struct OrthoSample {
  std::size_t index = 0;
  std::vector<std::size_t> letters;  // atom indices of builtin_measure("gamma0k")
  Mat3<Integer> g;
  Vec3<Integer> v;                   // g·(1,1,1)
  ShapePoint shape;                  // shape of Z³ ∩ v^⊥ = g^{-T}·Λ_{v₁}
};

// Words of length `word_len`, letters uniform over the five generators of
// builtin_measure("gamma0k").  Word i uses Xoshiro256::stream(seed, i); output
// is ordered by word index regardless of `threads` (0 = hardware).
std::vector<OrthoSample> conj1_sample(std::size_t n_words, std::size_t word_len, std::uint64_t seed,
                                      unsigned threads = 0);

// Exact witness that ortho_lattice(g·v) and g^{-T}·ortho_lattice(v) are the
// same lattice (scale 1).  Requires det g = 1; VerificationFailure if not.
HomothetyWitness duality_check(const Mat3<Integer>& g, const Vec3<Integer>& v);

}  // namespace latdyn
