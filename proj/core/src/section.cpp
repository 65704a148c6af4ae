#include "latdyn/section.hpp"

#include <cmath>
#include <numbers>

namespace latdyn {

Mat2<Rational> section_g1() { return {1, 0, 2, 1}; }
Mat2<Rational> section_g2() { return {1, 1, 0, 1}; }

Mat3<Rational> section_group_element(const SectionLetter& l) {
  const Rational t = l.inverse ? -2 : 2;
  return l.side == Side::Plus ? make_u_plus(t) : make_u_minus(t);
}

Mat2<Rational> section_moebius_element(const SectionLetter& l) {
  const Mat2<Rational> g = l.side == Side::Plus ? section_g1() : section_g2();
  return l.inverse ? unimodular_inverse(g) : g;
}

namespace {

std::string describe(const ProjPoint<Rational>& t) { return t.infinite ? "inf" : t.value.get_str(); }

}  // namespace

EquivarianceWitness equivariance_check(const ProjPoint<Rational>& t, const std::vector<SectionLetter>& word) {
  Mat3<Rational> g = Mat3<Rational>::identity();
  Mat2<Rational> m = Mat2<Rational>::identity();
  for (const auto& l : word) {
    g = g * section_group_element(l);
    m = m * section_moebius_element(l);
  }
  const ProjPoint<Rational> image = moebius_act(m, t);
  const auto w = lattice2_eq_homothety(g * lambda_t(t), lambda_t(image));
  if (!w) throw VerificationFailure("section equivariance fails at t = " + describe(t));
  return {t, image, *w};
}

EquivarianceWitness equivariance_check(const ProjPoint<Rational>& t, Side side) {
  return equivariance_check(t, std::vector<SectionLetter>{{side, false}});
}

std::vector<CurvePoint> curve_sample(const std::vector<ProjPoint<double>>& grid) {
  std::vector<CurvePoint> out;
  out.reserve(grid.size());
  for (const auto& t : grid) out.push_back({t, shape(lambda_t(t))});
  return out;
}

std::vector<ProjPoint<double>> tan_grid(std::size_t n) {
  std::vector<ProjPoint<double>> g;
  g.reserve(n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = -std::numbers::pi / 2 + std::numbers::pi * (static_cast<double>(k) + 0.5) / static_cast<double>(n);
    g.push_back(ProjPoint<double>::finite(std::tan(theta)));
  }
  g.push_back(ProjPoint<double>::at_infinity());
  return g;
}

}  // namespace latdyn
