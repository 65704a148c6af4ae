#include "latdyn/dioph.hpp"

#include "latdyn/parallel.hpp"

#include <cmath>
#include <limits>

namespace latdyn {

Vec3<Integer> lattice_coordinates(const Lattice3<Rational>& l, const Vec3<Rational>& v) {
  const Vec3<Rational> c = inverse(l.basis) * v;
  Vec3<Integer> out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!is_integral(c[i])) throw ValidationError("directional: vector is not in L");
    out[i] = c[i].get_num();
  }
  return out;
}

Vec3<Integer> lattice_coordinates(const Lattice3<double>& l, const Vec3<double>& v) {
  const Vec3<double> c = inverse(l.basis) * v;
  Vec3<Integer> out;
  Vec3<double> back;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!std::isfinite(c[i]) || std::abs(c[i]) > 1e15) throw ValidationError("directional: coordinates out of range");
    back[i] = std::round(c[i]);
    out[i] = Integer(back[i]);
  }
  const Vec3<double> r = l.basis * back - v;
  if (std::sqrt(norm2(r)) > 1e-9 * std::max(1.0, std::sqrt(norm2(v))))
    throw ValidationError("directional: vector is not in L");
  return out;
}

double HeightField::grid_point(double t_max, std::size_t n, std::size_t i) {
  if (n == 1) return 0.0;
  return -t_max + 2.0 * t_max * static_cast<double>(i) / static_cast<double>(n - 1);
}

namespace {

template <class T>
HeightField scan_impl(const Lattice2<T>& l, double t1_max, double t2_max, std::size_t n1, std::size_t n2,
                      unsigned threads) {
  if (n1 == 0 || n2 == 0) throw ValidationError("a_orbit_scan: empty grid");
  if (!(t1_max >= 0) || !(t2_max >= 0)) throw ValidationError("a_orbit_scan: box must be non-negative");
  HeightField f;
  f.t1_max = t1_max;
  f.t2_max = t2_max;
  f.n1 = n1;
  f.n2 = n2;
  f.heights.assign(n1 * n2, 0.0);
  parallel_for(n1, threads, [&](std::size_t i) {
    const double t1 = f.t1(i);
    for (std::size_t j = 0; j < n2; ++j) {
      const double h = height(a_flow(l, t1, f.t2(j)));
      if (!std::isfinite(h)) throw NumericalError("a_orbit_scan: non-finite height");
      f.heights[i * n2 + j] = h;
    }
  });
  std::size_t best = 0;
  for (std::size_t k = 1; k < f.heights.size(); ++k)
    if (f.heights[k] > f.heights[best]) best = k;
  f.max = f.heights[best];
  f.argmax_t1 = f.t1(best / n2);
  f.argmax_t2 = f.t2(best % n2);
  return f;
}

}  // namespace

HeightField a_orbit_scan(const Lattice2<double>& l, double t1_max, double t2_max, std::size_t n1, std::size_t n2,
                         unsigned threads) {
  return scan_impl(l, t1_max, t2_max, n1, n2, threads);
}

HeightField a_orbit_scan(const Lattice2<BigFloat>& l, double t1_max, double t2_max, std::size_t n1, std::size_t n2,
                         unsigned threads) {
  return scan_impl(l, t1_max, t2_max, n1, n2, threads);
}

Lattice2<double> furstenberg_lattice(const std::array<RealSource, 3>& ratios) {
  return {Vec3<double>(to_double(ratios[0]), to_double(ratios[1]), to_double(ratios[2])), Vec3<double>(1, 1, 1)};
}

Lattice2<BigFloat> furstenberg_lattice_big(const std::array<RealSource, 3>& ratios) {
  return {Vec3<BigFloat>(to_bigfloat(ratios[0]), to_bigfloat(ratios[1]), to_bigfloat(ratios[2])),
          Vec3<BigFloat>(1, 1, 1)};
}

std::vector<PlaneCheck> coordinate_plane_search(const Lattice2<double>& l, long bound) {
  std::vector<PlaneCheck> hits;
  for (std::size_t i = 0; i < 3; ++i) {
    const double a = l.u[i], b = l.w[i];
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0) {
      hits.push_back({true, i, 1, 0});
      continue;
    }
    // m·a + n·b = 0 with m ≥ 1, n the nearest integer (roles swapped when b = 0).
    for (long m = 1; m <= bound; ++m) {
      if (b == 0) {
        hits.push_back({true, i, 0, 1});
        break;
      }
      const double n = std::round(-static_cast<double>(m) * a / b);
      if (std::abs(static_cast<double>(m) * a + n * b) <= 1e-12 * scale * static_cast<double>(m)) {
        hits.push_back({true, i, m, static_cast<long>(n)});
        break;
      }
    }
  }
  return hits;
}

namespace {

void fill_cf_summary(FurstenbergReport& r) {
  for (const auto& x : r.ratios) {
    r.max_partial_quotient = std::max(r.max_partial_quotient, x.cf.max_partial_quotient());
    r.precision_exhausted = r.precision_exhausted || x.cf.precision_exhausted;
  }
}

RealInterval ulp_enclosure(double x) {
  RealInterval iv;
  const double inf = std::numeric_limits<double>::infinity();
  iv.lo = BigFloat(std::nextafter(std::nextafter(x, -inf), -inf));
  iv.hi = BigFloat(std::nextafter(std::nextafter(x, inf), inf));
  return iv;
}

}  // namespace

FurstenbergReport furstenberg_report(const std::array<std::string, 3>& descriptors, const FurstenbergOptions& opts) {
  FurstenbergReport r;
  std::array<RealSource, 3> src;
  for (std::size_t i = 0; i < 3; ++i) {
    src[i] = parse_real(descriptors[i]);
    r.ratios[i].descriptor = descriptors[i];
    r.ratios[i].value = to_double(src[i]);
    r.ratios[i].cf = cf_expand(src[i], opts.cf_terms);
    r.ratios[i].cf.descriptor = descriptors[i];
  }
  fill_cf_summary(r);
  const Lattice2<double> l = furstenberg_lattice(src);
  r.plane_violations = coordinate_plane_search(l, opts.plane_search);
  r.scan = opts.bigfloat_scan
               ? a_orbit_scan(furstenberg_lattice_big(src), opts.t_max, opts.t_max, opts.grid, opts.grid, opts.threads)
               : a_orbit_scan(l, opts.t_max, opts.t_max, opts.grid, opts.grid, opts.threads);
  return r;
}

FurstenbergReport furstenberg_report(const Lattice2<double>& l, const FurstenbergOptions& opts) {
  FurstenbergReport r;
  for (std::size_t i = 0; i < 3; ++i) {
    auto& x = r.ratios[i];
    x.descriptor = "u" + std::to_string(i + 1) + "/w" + std::to_string(i + 1);
    if (l.w[i] == 0) {
      x.value = std::numeric_limits<double>::infinity();
      x.cf.descriptor = x.descriptor;
      x.cf.precision_exhausted = true;
      continue;
    }
    x.value = l.u[i] / l.w[i];
    x.cf = cf_expand(ulp_enclosure(x.value), opts.cf_terms);
    x.cf.descriptor = x.descriptor;
  }
  fill_cf_summary(r);
  r.plane_violations = coordinate_plane_search(l, opts.plane_search);
  r.scan = opts.bigfloat_scan
               ? a_orbit_scan(cast<BigFloat>(l), opts.t_max, opts.t_max, opts.grid, opts.grid, opts.threads)
               : a_orbit_scan(l, opts.t_max, opts.t_max, opts.grid, opts.grid, opts.threads);
  return r;
}

std::vector<NamedRatios> furstenberg_presets() {
  return {
      {"bounded", {"1+sqrt(2)", "1-sqrt(2)", "sqrt(2)"}},
      {"an=n", {"cfn(40)", "1-sqrt(2)", "sqrt(2)"}},
      {"liouville", {"liouville(4)", "1-sqrt(2)", "sqrt(2)"}},
  };
}

}  // namespace latdyn
