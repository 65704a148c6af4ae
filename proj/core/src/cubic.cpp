#include "latdyn/cubic.hpp"

#include "mpfr_raii.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <regex>
#include <sstream>

namespace latdyn {

using detail::Mpfr;

Integer CubicPolynomial::discriminant() const {
  return Integer(18 * a * b * c - 4 * a * a * a * c + a * a * b * b - 4 * b * b * b - 27 * c * c);
}

bool CubicPolynomial::irreducible() const {
  if (c == 0) return false;
  // Any rational root is an integer root, and so within one of a real root.
  for (const BigFloat& r : real_roots(*this)) {
    Integer k;
    mpfr_get_z(k.get_mpz_t(), r.backend().data(), MPFR_RNDD);
    for (int d = -1; d <= 2; ++d)
      if ((*this)(Integer(k + d)) == 0) return false;
  }
  return true;
}

std::string CubicPolynomial::to_string() const {
  std::ostringstream os;
  os << "x^3";
  auto term = [&os](const Integer& k, const char* x) {
    if (k == 0) return;
    os << (k > 0 ? "+" : "-");
    const Integer m = abs(k);
    if (m != 1 || *x == '\0') os << m;
    os << x;
  };
  term(a, "x^2");
  term(b, "x");
  term(c, "");
  return os.str();
}

CubicPolynomial parse_cubic(const std::string& text) {
  static const std::regex coeffs_re(R"(\s*([+-]?\d+)[\s,]+([+-]?\d+)[\s,]+([+-]?\d+)\s*)");
  std::smatch m;
  auto integer = [](std::string t) { return Integer(t.front() == '+' ? t.substr(1) : t); };
  if (std::regex_match(text, m, coeffs_re)) return {integer(m[1]), integer(m[2]), integer(m[3])};

  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.rfind("x^3", 0) != 0) throw ValidationError("cubic '" + text + "': expected a monic polynomial x^3...");
  CubicPolynomial f{0, 0, 0};
  static const std::regex term_re(R"(([+-])(\d*)(x\^2|x)?)");
  std::string rest = s.substr(3);
  int seen = 0;
  while (!rest.empty()) {
    if (!std::regex_search(rest, m, term_re, std::regex_constants::match_continuous) || m.length(0) == 0 ||
        (m[2].length() == 0 && !m[3].matched))
      throw ValidationError("cubic '" + text + "': cannot parse near '" + rest + "'");
    Integer k = m[2].length() ? Integer(m[2].str()) : Integer(1);
    if (m[1] == "-") k = -k;
    const int slot = !m[3].matched ? 4 : (m[3] == "x" ? 2 : 1);
    if (seen & slot) throw ValidationError("cubic '" + text + "': repeated term");
    seen |= slot;
    (slot == 1 ? f.a : slot == 2 ? f.b : f.c) = k;
    rest = rest.substr(static_cast<std::size_t>(m.length(0)));
  }
  return f;
}

// ---------------------------------------------------------------------------

namespace {

mpfr_prec_t working_bits() {
  return static_cast<mpfr_prec_t>(mpfr_get_prec(BigFloat().backend().data()));
}

std::size_t bitlen(const Integer& x) { return mpz_sizeinbase(x.get_mpz_t(), 2); }

// Sign of f(x), exact: the evaluation precision covers x³ and the
// coefficient products.
int sign_at(const CubicPolynomial& f, mpfr_srcptr x) {
  const mpfr_prec_t px = mpfr_get_prec(x);
  const std::size_t cb = std::max({bitlen(f.a), bitlen(f.b), bitlen(f.c)});
  Mpfr acc(3 * px + static_cast<mpfr_prec_t>(cb) + 16);
  mpfr_set(acc.get(), x, MPFR_RNDN);
  mpfr_add_z(acc.get(), acc.get(), f.a.get_mpz_t(), MPFR_RNDN);
  mpfr_mul(acc.get(), acc.get(), x, MPFR_RNDN);
  mpfr_add_z(acc.get(), acc.get(), f.b.get_mpz_t(), MPFR_RNDN);
  mpfr_mul(acc.get(), acc.get(), x, MPFR_RNDN);
  mpfr_add_z(acc.get(), acc.get(), f.c.get_mpz_t(), MPFR_RNDN);
  return mpfr_sgn(acc.get());
}

BigFloat to_bigfloat(mpfr_srcptr x) {
  BigFloat r;
  mpfr_set(r.backend().data(), x, MPFR_RNDN);
  return r;
}

}  // namespace

std::vector<BigFloat> real_roots(const CubicPolynomial& f) {
  const Integer big = std::max({abs(f.a), abs(f.b), abs(f.c)});
  const mpfr_prec_t target = working_bits() + 8;
  const mpfr_prec_t p = target + static_cast<mpfr_prec_t>(bitlen(big)) + 8;

  // Breakpoints −R < x₋ < x₊ < R with R = 1 + max|coef| (Cauchy).
  std::vector<std::unique_ptr<Mpfr>> cuts;
  auto push = [&](auto&& set) {
    cuts.push_back(std::make_unique<Mpfr>(p));
    set(cuts.back()->get());
  };
  const Integer r = big + 1;
  push([&](mpfr_ptr x) { mpfr_set_z(x, Integer(-r).get_mpz_t(), MPFR_RNDN); });
  const Integer dprime = Integer(f.a * f.a - 3 * f.b);
  if (dprime > 0) {
    for (int s : {-1, 1}) {
      push([&](mpfr_ptr x) {
        mpfr_set_z(x, dprime.get_mpz_t(), MPFR_RNDN);
        mpfr_sqrt(x, x, MPFR_RNDN);
        if (s < 0) mpfr_neg(x, x, MPFR_RNDN);
        mpfr_sub_z(x, x, f.a.get_mpz_t(), MPFR_RNDN);
        mpfr_div_ui(x, x, 3, MPFR_RNDN);
      });
    }
  }
  push([&](mpfr_ptr x) { mpfr_set_z(x, r.get_mpz_t(), MPFR_RNDN); });

  std::vector<BigFloat> roots;
  Mpfr lo(p), hi(p), mid(p), width(p);
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    mpfr_set(lo.get(), cuts[k]->get(), MPFR_RNDN);
    mpfr_set(hi.get(), cuts[k + 1]->get(), MPFR_RNDN);
    int slo = sign_at(f, lo.get());
    const int shi = sign_at(f, hi.get());
    if (slo == 0) {
      if (k == 0 || roots.empty() || to_bigfloat(lo.get()) != roots.back()) roots.push_back(to_bigfloat(lo.get()));
      continue;
    }
    if (shi == 0 || slo == shi) continue;
    for (int iter = 0; iter < 4 * p; ++iter) {
      mpfr_add(mid.get(), lo.get(), hi.get(), MPFR_RNDN);
      mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
      if (mpfr_equal_p(mid.get(), lo.get()) || mpfr_equal_p(mid.get(), hi.get())) break;
      const int sm = sign_at(f, mid.get());
      if (sm == 0) {
        mpfr_set(lo.get(), mid.get(), MPFR_RNDN);
        mpfr_set(hi.get(), mid.get(), MPFR_RNDN);
        break;
      }
      if (sm == slo) mpfr_set(lo.get(), mid.get(), MPFR_RNDN);
      else mpfr_set(hi.get(), mid.get(), MPFR_RNDN);
      mpfr_sub(width.get(), hi.get(), lo.get(), MPFR_RNDU);
      // Stop once the bracket is below 2^{-target} relative (absolute near 0).
      if (mpfr_get_exp(width.get()) + target < std::max<mpfr_exp_t>(mpfr_get_exp(lo.get()), 1)) break;
    }
    roots.push_back(to_bigfloat(lo.get()));
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

// ---------------------------------------------------------------------------

Mat3<Integer> companion(const CubicPolynomial& f) {
  return Mat3<Integer>{0, 0, Integer(-f.c), 1, 0, Integer(-f.b), 0, 1, Integer(-f.a)};
}

Mat3<Integer> multiplication_matrix(const CubicPolynomial& f, const FieldElement& x) {
  const Mat3<Integer> m = companion(f);
  const Mat3<Integer> m2 = m * m;
  Mat3<Integer> r;
  for (std::size_t i = 0; i < 9; ++i) r.a[i] = x[1] * m.a[i] + x[2] * m2.a[i];
  for (std::size_t i = 0; i < 3; ++i) r(i, i) += x[0];
  return r;
}

FieldElement multiply(const CubicPolynomial& f, const FieldElement& x, const FieldElement& y) {
  return multiplication_matrix(f, x) * y;
}

Integer element_norm(const CubicPolynomial& f, const FieldElement& x) { return det(multiplication_matrix(f, x)); }

FieldElement unit_power(const CubicPolynomial& f, const FieldElement& x, long k) {
  const Mat3<Integer> m = multiplication_matrix(f, x);
  const Integer n = det(m);
  if (abs(n) != 1) throw ValidationError("unit_power: element is not a unit");
  Mat3<Integer> step = m;
  if (k < 0) {
    step = transpose(cofactor(m));
    if (n < 0)
      for (auto& e : step.a) e = -e;
  }
  FieldElement r(1, 0, 0);
  for (long i = 0; i < std::labs(k); ++i) r = step * r;
  return r;
}

Integer resultant(const CubicPolynomial& f, const FieldElement& g) {
  // Sylvester matrix of f = x³+ax²+bx+c (2 rows) and g = r x² + q x + p (3 rows).
  std::array<std::array<Integer, 5>, 5> s{};
  const std::array<Integer, 4> fc{1, f.a, f.b, f.c};
  const std::array<Integer, 3> gc{g[2], g[1], g[0]};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 4; ++j) s[i][i + j] = fc[j];
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) s[2 + i][i + j] = gc[j];
  // Bareiss fraction-free elimination.
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < 4; ++k) {
    if (s[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < 5 && s[piv][k] == 0) ++piv;
      if (piv == 5) return 0;
      std::swap(s[k], s[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < 5; ++i)
      for (std::size_t j = k + 1; j < 5; ++j) {
        s[i][j] = (s[i][j] * s[k][k] - s[i][k] * s[k][j]);
        mpz_divexact(s[i][j].get_mpz_t(), s[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = s[k][k];
  }
  return sign * s[4][4];
}

// ---------------------------------------------------------------------------

namespace {

Vec3<Rational> multiply_rational(const CubicPolynomial& f, const Vec3<Rational>& x, const Vec3<Rational>& y) {
  const Mat3<Rational> m = cast<Rational>(companion(f));
  const Mat3<Rational> m2 = m * m;
  Mat3<Rational> mx;
  for (std::size_t i = 0; i < 9; ++i) mx.a[i] = x[1] * m.a[i] + x[2] * m2.a[i];
  for (std::size_t i = 0; i < 3; ++i) mx(i, i) += x[0];
  return mx * y;
}

bool integral_vec(const Vec3<Rational>& v) { return is_integral(v[0]) && is_integral(v[1]) && is_integral(v[2]); }

}  // namespace

CubicFieldSpec cubic_field(const CubicPolynomial& f, const std::optional<Mat3<Rational>>& integral_basis) {
  if (!f.irreducible()) throw ValidationError("cubic " + f.to_string() + " is reducible over Q");
  if (f.discriminant() <= 0)
    throw ValidationError("cubic " + f.to_string() + " is not totally real (discriminant " +
                          f.discriminant().get_str() + ")");
  CubicFieldSpec spec;
  spec.f = f;
  const std::vector<BigFloat> r = real_roots(f);
  if (r.size() != 3) throw NumericalError("cubic_field: root isolation found " + std::to_string(r.size()) + " roots");
  for (std::size_t i = 0; i < 3; ++i) spec.roots[i] = r[i];

  const BigFloat prod = r[0] * r[1] * r[2];
  const BigFloat scale = 1 + abs(r[0]) * abs(r[1]) * abs(r[2]);
  if (abs(BigFloat(prod + convert<BigFloat>(f.c))) > scale * BigFloat(1e-30))
    throw VerificationFailure("cubic_field: product of roots differs from -f(0)");

  spec.order_basis = Mat3<Rational>::identity();
  if (integral_basis) {
    const Mat3<Rational>& t = *integral_basis;
    if (is_zero(det(t))) throw ValidationError("integral basis is singular");
    const Mat3<Rational> ti = inverse(t);
    for (std::size_t j = 0; j < 3; ++j)
      if (!integral_vec(ti * Vec3<Rational>::unit(j)))
        throw ValidationError("integral basis does not contain Z[alpha]");
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j)
        if (!integral_vec(ti * multiply_rational(f, t.column(i), t.column(j))))
          throw ValidationError("integral basis is not closed under multiplication");
    spec.order_basis = t;
  }
  Mat3<BigFloat> v;
  for (std::size_t i = 0; i < 3; ++i) {
    v(i, 0) = 1;
    v(i, 1) = r[i];
    v(i, 2) = r[i] * r[i];
  }
  spec.lattice = Lattice3<BigFloat>(v * cast<BigFloat>(spec.order_basis));
  return spec;
}

Vec3<BigFloat> CubicFieldSpec::embed(const FieldElement& x) const {
  Vec3<BigFloat> out;
  const BigFloat p = convert<BigFloat>(x[0]), q = convert<BigFloat>(x[1]), s = convert<BigFloat>(x[2]);
  for (std::size_t i = 0; i < 3; ++i) out[i] = p + roots[i] * (q + roots[i] * s);
  return out;
}

Vec3<Integer> CubicFieldSpec::order_coordinates(const FieldElement& x) const {
  const Vec3<Rational> c = inverse(order_basis) * cast<Rational>(x);
  if (!integral_vec(c)) throw ValidationError("element is not in the order");
  return {c[0].get_num(), c[1].get_num(), c[2].get_num()};
}

// ---------------------------------------------------------------------------

namespace {

std::array<double, 3> log_embedding(const CubicFieldSpec& spec, const FieldElement& x) {
  const Vec3<BigFloat> e = spec.embed(x);
  std::array<double, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) out[i] = to_double(BigFloat(log(abs(e[i]))));
  return out;
}

double log_size(const UnitElement& u) {
  return std::hypot(u.log_embedding[0], u.log_embedding[1], u.log_embedding[2]);
}

}  // namespace

std::vector<UnitElement> unit_search(const CubicFieldSpec& spec, long bound) {
  if (bound < 1) throw ValidationError("unit_search: bound must be >= 1");
  std::vector<UnitElement> out;
  for (long p = -bound; p <= bound; ++p)
    for (long q = -bound; q <= bound; ++q)
      for (long r = -bound; r <= bound; ++r) {
        const FieldElement x(p, q, r);
        const Integer n = element_norm(spec.f, x);
        if (abs(n) != 1) continue;
        out.push_back({x, n > 0 ? 1 : -1, log_embedding(spec, x)});
      }
  return out;
}

int log_embedding_rank(const std::vector<UnitElement>& units) {
  if (units.empty()) return 0;
  Eigen::MatrixXd m(static_cast<Eigen::Index>(units.size()), 3);
  for (std::size_t i = 0; i < units.size(); ++i)
    for (std::size_t j = 0; j < 3; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = units[i].log_embedding[j];
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 1e-6) ++rank;
  return rank;
}

std::pair<UnitElement, UnitElement> independent_pair(const std::vector<UnitElement>& units) {
  std::vector<UnitElement> sorted;
  for (const auto& u : units)
    if (log_size(u) > 1e-6) sorted.push_back(u);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const UnitElement& x, const UnitElement& y) { return log_size(x) < log_size(y); });
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (log_embedding_rank({sorted[i], sorted[j]}) == 2) return {sorted[i], sorted[j]};
  throw ValidationError("no multiplicatively independent pair of units found");
}

ConditionedReport conditioned_shapes(const CubicFieldSpec& spec, const FieldElement& e1, const FieldElement& e2,
                                     long range, double max_log) {
  if (range < 0) throw ValidationError("conditioned_shapes: range must be >= 0");
  for (const auto* e : {&e1, &e2})
    if (abs(element_norm(spec.f, *e)) != 1) throw ValidationError("conditioned_shapes: element is not a unit");
  if (log_embedding_rank({UnitElement{e1, 1, log_embedding(spec, e1)}, UnitElement{e2, 1, log_embedding(spec, e2)}}) != 2)
    throw ValidationError("conditioned_shapes: units are not multiplicatively independent");

  // L* ∩ 𝟙^⊥: dual vectors B^{-T}k with k ⟂ (coordinates of φ(1)).
  const Mat3<BigFloat> dual = transpose(inverse(spec.lattice.basis));
  const auto [k1, k2] = integer_kernel_basis(spec.order_coordinates(FieldElement(1, 0, 0)));
  const Lattice2<BigFloat> dual_plane(dual * cast<BigFloat>(k1), dual * cast<BigFloat>(k2));

  ConditionedReport rep;
  for (long m = -range; m <= range; ++m) {
    const FieldElement a = unit_power(spec.f, e1, m);
    for (long n = -range; n <= range; ++n) {
      const FieldElement eps = multiply(spec.f, a, unit_power(spec.f, e2, n));
      const Vec3<BigFloat> s = spec.embed(eps);
      const auto logs = log_embedding(spec, eps);
      if (std::max({std::abs(logs[0]), std::abs(logs[1]), std::abs(logs[2])}) > max_log) {
        rep.truncated = true;
        ++rep.skipped;
        continue;
      }
      ConditionedShape row;
      row.m = m;
      row.n = n;
      row.unit = eps;
      const Lattice2<BigFloat> direct = directional_coords(spec.lattice, spec.order_coordinates(eps));
      row.shape = shape(direct);
      row.height = height(direct);
      const Mat3<BigFloat> ainv = Mat3<BigFloat>::diagonal(BigFloat(1 / s[0]), BigFloat(1 / s[1]), BigFloat(1 / s[2]));
      row.dual_shape = shape(ainv * dual_plane);
      row.route_gap = std::abs(row.shape.z - row.dual_shape.z);
      rep.max_route_gap = std::max(rep.max_route_gap, row.route_gap);
      if (!(row.route_gap <= 1e-6))
        throw VerificationFailure("conditioned_shapes: routes disagree by " + std::to_string(row.route_gap) +
                                  " at (m, n) = (" + std::to_string(m) + ", " + std::to_string(n) + ")");
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

}  // namespace latdyn
