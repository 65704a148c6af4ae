#include "latdyn/ortho.hpp"

#include "latdyn/parallel.hpp"

namespace latdyn {

Lattice2<Integer> ortho_lattice(const Vec3<Integer>& v) {
  auto [a, b] = integer_kernel_basis(v);
  return {std::move(a), std::move(b)};
}

ShapePoint exact_shape(const Lattice2<Integer>& l) { return shape(l); }

std::vector<OrthoSample> conj1_sample(std::size_t n_words, std::size_t word_len, std::uint64_t seed,
                                      unsigned threads) {
  if (n_words == 0 || word_len == 0) throw ValidationError("conj1_sample: n_words and word_len must be >= 1");
  const MeasureSpec mu = builtin_measure("gamma0k");
  std::vector<Mat3<Integer>> gens;
  for (const auto& a : mu.atoms()) gens.push_back(cast<Integer>(*a.exact));

  const Vec3<Integer> v1(1, 1, 1);
  const Lattice2<Integer> base = ortho_lattice(v1);

  std::vector<OrthoSample> out(n_words);
  parallel_for(n_words, threads, [&](std::size_t i) {
    Xoshiro256 rng = Xoshiro256::stream(seed, i);
    OrthoSample s;
    s.index = i;
    s.g = Mat3<Integer>::identity();
    for (std::size_t k = 0; k < word_len; ++k) {
      const std::size_t letter = mu.sample(rng);
      s.letters.push_back(letter);
      s.g = gens[letter] * s.g;
    }
    s.v = s.g * v1;
    s.shape = exact_shape(cofactor(s.g) * base);
    out[i] = std::move(s);
  });
  return out;
}

HomothetyWitness duality_check(const Mat3<Integer>& g, const Vec3<Integer>& v) {
  if (det(g) != 1) throw ValidationError("duality_check: det g must be 1");
  const Lattice2<Integer> lhs = ortho_lattice(g * v);
  // g^{-T} = cof(g) for det g = 1.
  const Lattice2<Integer> rhs = cofactor(g) * ortho_lattice(v);
  const auto w = lattice2_eq_homothety(rhs, lhs);
  if (!w || w->scale != 1) throw VerificationFailure("duality identity fails");
  return *w;
}

}  // namespace latdyn
