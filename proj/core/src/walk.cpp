#include "latdyn/walk.hpp"

#include "latdyn/parallel.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace latdyn {

namespace {

bool finite(const Vec3<double>& v) { return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]); }

// Rescale to covolume 1 and Gauss-reduce.
Lattice2<double> normalize(const Lattice2<double>& l) {
  const double c = 1.0 / std::sqrt(covolume(l));
  return gauss_reduce(Lattice2<double>(c * l.u, c * l.w));
}

double reduced_height(const Lattice2<double>& r) {
  const double a = norm2(r.u);
  return std::pow(norm2(r.wedge()) / (a * a), 0.25);
}

}  // namespace

double WalkReport::fraction_below(double m) const {
  for (const auto& [threshold, count] : time_below)
    if (threshold == m) return static_cast<double>(count) / static_cast<double>(steps + 1);
  if (samples.empty()) return 0;
  std::size_t k = 0;
  for (const auto& s : samples) k += s.height <= m;
  return static_cast<double>(k) / static_cast<double>(samples.size());
}

WalkReport run_walk(const MeasureSpec& mu, const Lattice2<double>& x0, std::uint64_t steps, std::uint64_t seed,
                    const WalkOptions& options) {
  if (options.stride == 0) throw ValidationError("run_walk: stride must be >= 1");
  WalkReport rep;
  rep.measure = mu.name();
  rep.steps = steps;
  rep.seed = seed;
  rep.stride = options.stride;
  rep.samples.reserve(steps / options.stride + 1);
  for (double m : options.height_thresholds) rep.time_below.emplace_back(m, 0);

  Xoshiro256 rng(seed);
  Lattice2<double> x = normalize(x0);
  for (std::uint64_t n = 0;; ++n) {
    const double h = reduced_height(x);
    if (!std::isfinite(h)) throw WalkAborted(n, "run_walk: non-finite height");
    for (auto& [m, count] : rep.time_below) count += h <= m;
    if (n % options.stride == 0) rep.samples.push_back({n, canonical_shape(raw_shape(x)).z, h});
    if (n == steps) break;
    const Mat3<double>& g = mu.atoms()[mu.sample(rng)].g;
    const Vec3<double> u = g * x.u, w = g * x.w;
    if (!finite(u) || !finite(w)) throw WalkAborted(n + 1, "run_walk: non-finite basis");
    try {
      x = normalize(Lattice2<double>(u, w));
    } catch (const std::exception& e) {
      throw WalkAborted(n + 1, std::string("run_walk: ") + e.what());
    }
  }
  return rep;
}

// --- reference ------------------------------------------------------------------

namespace {

// (6/π) ∫_{x0}^{x1} max(0, min(s1, 1/√(1−x²)) − s0) dx, split at the kinks.
double cell_mass(double x0, double x1, double s0, double s1) {
  auto bound = [](double x) { return 1.0 / std::sqrt(1.0 - x * x); };
  auto integrand = [&](double x) { return std::max(0.0, std::min(s1, bound(x)) - s0); };
  std::vector<double> cuts{x0, x1};
  for (double s : {s0, s1})
    if (s > 1) {
      const double k = std::sqrt(1.0 - 1.0 / (s * s));
      if (k > x0 && k < x1) cuts.push_back(k);
    }
  std::sort(cuts.begin(), cuts.end());
  double total = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, cuts[i], cuts[i + 1], 10, 1e-14);
  return 6.0 / std::numbers::pi * total;
}

const double kSMax = 2.0 / std::sqrt(3.0);

}  // namespace

BinnedReference BinnedReference::hyperbolic(double y_max, std::size_t nx, std::size_t ns) {
  if (!(y_max > kSMax) || nx == 0 || ns == 0) throw ValidationError("BinnedReference: need Y > 2/sqrt(3) and a nonempty grid");
  BinnedReference r;
  r.y_max_ = y_max;
  r.nx_ = nx;
  r.ns_ = ns;
  const double s_lo = 1.0 / y_max, ds = (kSMax - s_lo) / static_cast<double>(ns), dx = 0.5 / static_cast<double>(nx);
  r.mass_.reserve(nx * ns + 1);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ns; ++j)
      r.mass_.push_back(cell_mass(dx * static_cast<double>(i), dx * static_cast<double>(i + 1),
                                  s_lo + ds * static_cast<double>(j), s_lo + ds * static_cast<double>(j + 1)));
  r.mass_.push_back(3.0 / (std::numbers::pi * y_max));
  return r;
}

std::size_t BinnedReference::bin_of(Complex z) const {
  const double s = 1.0 / z.imag();
  const double s_lo = 1.0 / y_max_;
  if (s < s_lo) return tail_index();
  const double x = std::clamp(z.real(), 0.0, 0.5);
  const auto ix = std::min(nx_ - 1, static_cast<std::size_t>(x / (0.5 / static_cast<double>(nx_))));
  const auto is = std::min(ns_ - 1, static_cast<std::size_t>((s - s_lo) / ((kSMax - s_lo) / static_cast<double>(ns_))));
  return ix * ns_ + is;
}

std::vector<double> histogram(const std::vector<ShapeSample>& samples, const BinnedReference& ref) {
  std::vector<double> counts(ref.size(), 0.0);
  for (const auto& s : samples) counts[ref.bin_of(s.z)] += 1;
  return counts;
}

GofResult gof_counts(const std::vector<double>& counts, const BinnedReference& ref) {
  if (counts.size() != ref.size()) throw ValidationError("gof: bin count mismatch");
  GofResult g;
  for (double c : counts) g.samples += c;
  if (g.samples < 100.0 * static_cast<double>(ref.size()))
    throw ValidationError("gof: undersampled report (" + std::to_string(static_cast<long long>(g.samples)) +
                          " samples, need " + std::to_string(100 * ref.size()) + ")");
  double tv = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double p = ref.masses()[i];
    tv += std::abs(counts[i] / g.samples - p);
    if (p <= 0) continue;
    const double e = g.samples * p;
    g.chi_square += (counts[i] - e) * (counts[i] - e) / e;
    ++g.bins_used;
  }
  g.total_variation = tv / 2;
  g.dof = g.bins_used - 1;
  g.p_value = boost::math::gamma_q(static_cast<double>(g.dof) / 2, g.chi_square / 2);
  return g;
}

GofResult gof_hyperbolic(const WalkReport& report, double y_max, std::size_t nx, std::size_t ns) {
  const BinnedReference ref = BinnedReference::hyperbolic(y_max, nx, ns);
  return gof_counts(histogram(report.samples, ref), ref);
}

// --- Lyapunov -----------------------------------------------------------------------

bool within_sigma(double x, double se, double k) { return std::abs(x) <= k * se + 1e-12; }
bool positive_at_sigma(double x, double se, double k) { return x > k * se; }

namespace {

Vec3<double> random_unit(Xoshiro256& rng) {
  for (;;) {
    const Vec3<double> v{standard_normal(rng), standard_normal(rng), standard_normal(rng)};
    const double n = std::sqrt(norm2(v));
    if (n > 1e-6) return (1.0 / n) * v;
  }
}

struct Stat {
  double mean = 0, se = 0;
};

Stat summarize(const std::vector<double>& xs) {
  Stat s;
  const double n = static_cast<double>(xs.size());
  for (double x : xs) s.mean += x;
  s.mean /= n;
  if (xs.size() > 1) {
    double v = 0;
    for (double x : xs) v += (x - s.mean) * (x - s.mean);
    s.se = std::sqrt(v / (n - 1) / n);
  }
  return s;
}

}  // namespace

LyapunovEstimate estimate_lyapunov(const MeasureSpec& mu, std::size_t steps, std::size_t replicas,
                                   std::uint64_t seed, unsigned threads, std::size_t burn_in) {
  if (steps < 1000) throw ValidationError("estimate_lyapunov: need at least 1000 steps");
  if (replicas < 2) throw ValidationError("estimate_lyapunov: need at least 2 replicas");
  if (burn_in == SIZE_MAX) burn_in = steps / 10;
  if (burn_in >= steps) throw ValidationError("estimate_lyapunov: burn-in must be shorter than the run");

  std::vector<Mat3<double>> gs, cofs;
  for (const auto& a : mu.atoms()) {
    gs.push_back(a.g);
    cofs.push_back(cofactor(a.g));
  }

  std::vector<double> l1(replicas), l12(replicas);
  parallel_for(replicas, threads, [&](std::size_t r) {
    Xoshiro256 rng = Xoshiro256::stream(seed, r);
    Vec3<double> v = random_unit(rng), b = random_unit(rng);
    double sv = 0, sb = 0;
    for (std::size_t n = 0; n < steps; ++n) {
      const std::size_t k = mu.sample(rng);
      v = gs[k] * v;
      b = cofs[k] * b;
      const double nv = std::sqrt(norm2(v)), nb = std::sqrt(norm2(b));
      if (!(nv > 0) || !(nb > 0) || !std::isfinite(nv) || !std::isfinite(nb))
        throw NumericalError("estimate_lyapunov: degenerate iterate in replica " + std::to_string(r));
      if (n >= burn_in) {
        sv += std::log(nv);
        sb += std::log(nb);
      }
      v = (1.0 / nv) * v;
      b = (1.0 / nb) * b;
    }
    const double len = static_cast<double>(steps - burn_in);
    l1[r] = sv / len;
    l12[r] = sb / len;
  });

  // Every derived quantity is linear in (λ₁, λ₁+λ₂), so per-replica values
  // give paired standard errors.
  auto derived = [&](auto f) {
    std::vector<double> xs(replicas);
    for (std::size_t r = 0; r < replicas; ++r) xs[r] = f(l1[r], l12[r]);
    return summarize(xs);
  };
  LyapunovEstimate e;
  e.steps = steps;
  e.replicas = replicas;
  e.burn_in = burn_in;
  auto set = [&](double& m, double& se, auto f) {
    const Stat s = derived(f);
    m = s.mean;
    se = s.se;
  };
  set(e.lambda1, e.se_lambda1, [](double a, double) { return a; });
  set(e.lambda12, e.se_lambda12, [](double, double b) { return b; });
  set(e.t1, e.se_t1, [](double a, double) { return a; });
  set(e.t2, e.se_t2, [](double a, double b) { return b - a; });
  set(e.t3, e.se_t3, [](double, double b) { return -b; });
  set(e.w_r3, e.se_w_r3, [](double a, double) { return a; });
  set(e.w_wedge, e.se_w_wedge, [](double, double b) { return b; });
  // t₁ − t₃ = λ₁ + (λ₁+λ₂); t₁ + t₂ − 2t₃ = 3(λ₁+λ₂); t₁ − t₂ = 2λ₁ − (λ₁+λ₂).
  set(e.w_l0, e.se_w_l0, [](double a, double b) { return 2 * (a + b); });
  set(e.w_r0, e.se_w_r0, [](double, double b) { return 3 * b; });
  set(e.w_l0_r0, e.se_w_l0_r0, [](double a, double b) { return 2 * a - b; });
  set(e.fundamental, e.se_fundamental, [](double a, double b) { return a - b / 2; });
  e.degenerate = within_sigma(e.lambda1, e.se_lambda1);
  return e;
}

// --- contraction probe ---------------------------------------------------------------

std::vector<Lattice2<double>> cusp_probe_points(const MeasureSpec& mu, std::size_t count, double min_height,
                                                std::uint64_t seed) {
  Xoshiro256 rng(seed);
  std::vector<Lattice2<double>> out;
  for (std::size_t attempt = 0; out.size() < count; ++attempt) {
    if (attempt > 1000 * (count + 1)) throw NumericalError("cusp_probe_points: could not reach the requested height");
    const double h = std::pow(10.0, 2 + 2 * uniform01(rng));
    Lattice2<double> x({1, 0, 0}, {0, 1 / h, 0});
    const std::size_t len = uniform_index(rng, 4);
    for (std::size_t k = 0; k < len; ++k) x = mu.atoms()[mu.sample(rng)].g * x;
    if (height(x) >= min_height) out.push_back(x);
  }
  return out;
}

ContractionReport contraction_probe(const MeasureSpec& mu, double delta, const std::vector<Lattice2<double>>& points,
                                    std::size_t inner_samples, std::uint64_t seed, unsigned threads) {
  if (!(delta > 0)) throw ValidationError("contraction_probe: delta must be positive");
  if (points.empty()) throw ValidationError("contraction_probe: no probe points");
  if (inner_samples < 2) throw ValidationError("contraction_probe: need at least 2 inner samples");

  ContractionReport rep;
  rep.delta = delta;
  rep.rows.resize(points.size());
  const std::size_t na = mu.size();
  parallel_for(points.size(), threads, [&](std::size_t i) {
    const Lattice2<double>& x = points[i];
    // f(a·x) for every atom, then Monte Carlo over atom draws.
    std::vector<double> fa(na);
    double exact = 0;
    for (std::size_t a = 0; a < na; ++a) {
      fa[a] = std::pow(height(mu.atoms()[a].g * x), delta);
      exact += mu.atoms()[a].weight * fa[a];
    }
    Xoshiro256 rng = Xoshiro256::stream(seed, i);
    std::vector<double> draws(inner_samples);
    for (auto& d : draws) d = fa[mu.sample(rng)];
    const Stat s = summarize(draws);
    ContractionRow& row = rep.rows[i];
    row.height = height(x);
    row.f = std::pow(row.height, delta);
    row.mean = s.mean;
    row.se = s.se;
    row.exact = exact;
  });

  // Ordinary least squares for mean ≈ c·f + b.
  const double n = static_cast<double>(rep.rows.size());
  double sf = 0, sm = 0, sff = 0, sfm = 0;
  for (const auto& r : rep.rows) {
    sf += r.f;
    sm += r.mean;
    sff += r.f * r.f;
    sfm += r.f * r.mean;
  }
  const double den = n * sff - sf * sf;
  if (std::abs(den) > 1e-300) {
    rep.c = (n * sfm - sf * sm) / den;
    rep.b = (sm - rep.c * sf) / n;
  } else {
    // A single abscissa: fit through the origin.
    rep.c = sfm / sff;
    rep.b = 0;
  }
  rep.c_below_one = rep.c < 1;
  return rep;
}

}  // namespace latdyn
