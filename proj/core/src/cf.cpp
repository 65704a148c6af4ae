#include "latdyn/cf.hpp"

#include "latdyn/errors.hpp"
#include "mpfr_raii.hpp"

#include <algorithm>
#include <regex>

namespace latdyn {

namespace {

using detail::Mpfr;

Integer isqrt(const Integer& d) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), d.get_mpz_t());
  return r;
}

bool is_square(const Integer& d) { return sgn(d) >= 0 && mpz_perfect_square_p(d.get_mpz_t()) != 0; }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

Integer CFExpansion::max_partial_quotient() const {
  Integer m = 0;
  for (std::size_t i = 1; i < terms.size(); ++i) m = std::max(m, terms[i]);
  return m;
}

std::vector<Convergent> convergents(const std::vector<Integer>& terms) {
  std::vector<Convergent> out;
  Integer p_prev = 1, q_prev = 0, p = 0, q = 1;
  for (const auto& a : terms) {
    Integer pn = a * p_prev + p, qn = a * q_prev + q;
    p = p_prev;
    q = q_prev;
    p_prev = pn;
    q_prev = qn;
    out.push_back({pn, qn});
  }
  return out;
}

CFExpansion cf_expand(const Rational& x, std::size_t n) {
  CFExpansion e;
  e.descriptor = x.get_str();
  Integer num = x.get_num(), den = x.get_den();
  while (e.terms.size() < n) {
    const Integer a = floor_div(num, den);
    e.terms.push_back(a);
    const Integer r = num - a * den;
    if (r == 0) {
      e.terminated = true;
      break;
    }
    num = den;
    den = r;
  }
  return e;
}

CFExpansion cf_expand(const QuadraticSurd& x, std::size_t n) {
  if (x.q == 0) throw ValidationError("quadratic surd: zero denominator");
  if (sgn(x.d) <= 0 || is_square(x.d)) throw ValidationError("quadratic surd: D must be a positive non-square");
  CFExpansion e;
  e.descriptor = "(" + x.p.get_str() + "+sqrt(" + x.d.get_str() + "))/" + x.q.get_str();
  // Normalize so that Q | D − P².
  Integer p = x.p, d = x.d, q = x.q;
  if ((d - p * p) % q != 0) {
    const Integer aq = abs(q);
    p *= aq;
    d *= aq * aq;
    q *= aq;
  }
  const Integer r = isqrt(d);
  while (e.terms.size() < n) {
    const Integer a = sgn(q) > 0 ? floor_div(p + r, q) : floor_div(p + r + 1, q);
    e.terms.push_back(a);
    p = a * q - p;
    q = (d - p * p) / q;
  }
  return e;
}

CFExpansion cf_expand(const RealInterval& x, std::size_t n) {
  CFExpansion e;
  e.descriptor = "[interval]";
  const auto bits = mpfr_get_prec(x.lo.backend().data());
  Mpfr lo(bits), hi(bits), t(bits);
  mpfr_set(lo.get(), x.lo.backend().data(), MPFR_RNDD);
  mpfr_set(hi.get(), x.hi.backend().data(), MPFR_RNDU);
  if (mpfr_cmp(lo.get(), hi.get()) > 0) throw ValidationError("interval: lo > hi");
  Integer a_lo, a_hi;
  while (e.terms.size() < n) {
    mpfr_get_z(a_lo.get_mpz_t(), lo.get(), MPFR_RNDD);
    mpfr_get_z(a_hi.get_mpz_t(), hi.get(), MPFR_RNDD);
    if (a_lo != a_hi) {
      e.precision_exhausted = true;
      break;
    }
    e.terms.push_back(a_lo);
    // Fractional parts, outward: [lo − a, hi − a] ⊂ [0, 1).
    mpfr_sub_z(lo.get(), lo.get(), a_lo.get_mpz_t(), MPFR_RNDD);
    mpfr_sub_z(hi.get(), hi.get(), a_lo.get_mpz_t(), MPFR_RNDU);
    if (mpfr_zero_p(lo.get()) || mpfr_sgn(lo.get()) < 0) {
      // The interval contains the integer a itself.
      if (mpfr_zero_p(hi.get())) e.terminated = true;
      else e.precision_exhausted = true;
      break;
    }
    // x ↦ 1/x reverses the order.
    mpfr_ui_div(t.get(), 1, hi.get(), MPFR_RNDD);
    mpfr_ui_div(hi.get(), 1, lo.get(), MPFR_RNDU);
    mpfr_swap(lo.get(), t.get());
  }
  return e;
}

CFExpansion cf_expand(const RealSource& x, std::size_t n) {
  return std::visit([n](const auto& v) { return cf_expand(v, n); }, x);
}

CFExpansion cf_expand(const std::string& descriptor, std::size_t n) {
  CFExpansion e = cf_expand(parse_real(descriptor), n);
  e.descriptor = descriptor;
  return e;
}

Rational liouville_prefix(unsigned k) {
  Rational s = 0;
  unsigned long f = 1;
  for (unsigned i = 1; i <= k; ++i) {
    f *= i;
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, f);
    s += Rational(Integer(1), den);
  }
  return s;
}

Rational from_terms(const std::vector<Integer>& terms) {
  if (terms.empty()) throw ValidationError("empty continued fraction");
  const Convergent c = convergents(terms).back();
  Rational r(c.p, c.q);
  r.canonicalize();
  return r;
}

namespace {

RealSource enclose(mpfr_prec_t bits, int (*fn)(mpfr_ptr, mpfr_rnd_t)) {
  RealInterval iv;
  Mpfr lo(bits), hi(bits);
  fn(lo.get(), MPFR_RNDD);
  fn(hi.get(), MPFR_RNDU);
  mpfr_set(iv.lo.backend().data(), lo.get(), MPFR_RNDD);
  mpfr_set(iv.hi.backend().data(), hi.get(), MPFR_RNDU);
  return iv;
}

int const_pi(mpfr_ptr x, mpfr_rnd_t r) { return mpfr_const_pi(x, r); }
int const_e(mpfr_ptr x, mpfr_rnd_t r) {
  mpfr_set_ui(x, 1, MPFR_RNDN);
  return mpfr_exp(x, x, r);
}

}  // namespace

RealSource parse_real(const std::string& text) {
  const auto bits = mpfr_get_prec(BigFloat().backend().data());
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::smatch m;
  static const std::regex rational_re(R"(([+-]?\d+)(?:/(\d+))?)");
  static const std::regex surd_re(R"((\()?([+-]?\d+)?([+-])?sqrt\((\d+)\)(\))?(?:/([+-]?\d+))?)");
  static const std::regex liouville_re(R"(liouville\((\d+)\))");
  static const std::regex cfn_re(R"(cfn\((\d+)\))");
  static const std::regex cf_re(R"(cf\[([+-]?\d+)(?:;(\d+(?:,\d+)*))?\])");
  if (std::regex_match(s, m, rational_re)) return parse_rational(s);
  if (std::regex_match(s, m, liouville_re)) {
    const unsigned long k = std::stoul(m[1]);
    if (k < 1 || k > 6) throw ValidationError("liouville(K): K must be between 1 and 6");
    return liouville_prefix(static_cast<unsigned>(k));
  }
  if (std::regex_match(s, m, cfn_re)) {
    const unsigned long n = std::stoul(m[1]);
    if (n > 100000) throw ValidationError("cfn(N): N too large");
    std::vector<Integer> t{0};
    for (unsigned long i = 1; i <= n; ++i) t.emplace_back(i);
    return from_terms(t);
  }
  if (std::regex_match(s, m, cf_re)) {
    std::vector<Integer> t{Integer(m[1].str())};
    if (m[2].matched) {
      std::string rest = m[2];
      std::size_t pos = 0;
      while (pos <= rest.size()) {
        const std::size_t comma = rest.find(',', pos);
        const std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        Integer a(tok);
        if (a < 1) throw ValidationError("cf[...]: partial quotients after a0 must be >= 1");
        t.push_back(a);
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
    return from_terms(t);
  }
  if (std::regex_match(s, m, surd_re)) {
    const bool open = m[1].matched, close = m[5].matched;
    if (open != close || (m[2].matched && !m[3].matched) || (m[2].matched && m[6].matched && !open))
      throw ValidationError("malformed surd '" + text + "'");
    auto integer = [](std::string t) { return Integer(t.front() == '+' ? t.substr(1) : t); };
    QuadraticSurd x{m[2].matched ? integer(m[2]) : Integer(0), Integer(m[4].str()),
                    m[6].matched ? integer(m[6]) : Integer(1)};
    const bool minus = m[3].matched && m[3].str() == "-";
    if (x.q == 0) throw ValidationError("surd with zero denominator");
    if (is_square(x.d)) {
      const Integer root = minus ? Integer(-isqrt(x.d)) : isqrt(x.d);
      Rational r(Integer(x.p + root), x.q);
      r.canonicalize();
      return r;
    }
    // (P − √D)/Q = (−P + √D)/(−Q)
    if (minus) {
      x.p = -x.p;
      x.q = -x.q;
    }
    return x;
  }
  if (s.empty()) throw ValidationError("empty real descriptor");
  if (s == "pi") return enclose(bits, const_pi);
  if (s == "e") return enclose(bits, const_e);
  throw ValidationError("unrecognized real descriptor '" + text + "'");
}

BigFloat to_bigfloat(const RealSource& x) {
  if (const auto* r = std::get_if<Rational>(&x)) return convert<BigFloat>(*r);
  BigFloat out;
  mpfr_ptr o = out.backend().data();
  if (const auto* q = std::get_if<QuadraticSurd>(&x)) {
    Mpfr t(mpfr_get_prec(o) + 32);
    mpfr_set_z(t.get(), q->d.get_mpz_t(), MPFR_RNDN);
    mpfr_sqrt(t.get(), t.get(), MPFR_RNDN);
    mpfr_add_z(t.get(), t.get(), q->p.get_mpz_t(), MPFR_RNDN);
    mpfr_div_z(o, t.get(), q->q.get_mpz_t(), MPFR_RNDN);
    return out;
  }
  const auto& iv = std::get<RealInterval>(x);
  Mpfr t(mpfr_get_prec(iv.lo.backend().data()) + 1);
  mpfr_add(t.get(), iv.lo.backend().data(), iv.hi.backend().data(), MPFR_RNDN);
  mpfr_div_2ui(t.get(), t.get(), 1, MPFR_RNDN);
  mpfr_set(o, t.get(), MPFR_RNDN);
  return out;
}

double to_double(const RealSource& x) {
  if (const auto* r = std::get_if<Rational>(&x)) return r->get_d();
  return to_double(to_bigfloat(x));
}

int compare(const QuadraticSurd& x, const Rational& r) {
  // sign((p + √d)/q − r) = sign(q)·sign(√d − (rq − p)).
  const Rational s = r * Rational(x.q) - Rational(x.p);
  int root_minus_s;
  if (sgn(s) < 0) {
    root_minus_s = 1;
  } else {
    const Rational s2 = s * s;
    root_minus_s = cmp(Rational(x.d), s2);
    root_minus_s = root_minus_s > 0 ? 1 : (root_minus_s < 0 ? -1 : 0);
  }
  return sgn(x.q) * root_minus_s;
}

}  // namespace latdyn
