#pragma once

// Random walks (g_n ⋯ g_1)·x on X, the binned hyperbolic reference measure,
// goodness of fit, Lyapunov vectors and the contraction probe for u_X.

#include "latdyn/groups.hpp"
#include "latdyn/lattice2.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace latdyn {

struct ShapeSample {
  std::uint64_t step = 0;
  Complex z;      // reduced, O₂-canonical
  double height = 0;
};

struct WalkOptions {
  std::uint64_t stride = 10;
  // Thresholds M for which the fraction of steps with u_X ≤ M is counted
  // exactly over every step (not only recorded samples).
  std::vector<double> height_thresholds{10.0};
};

struct WalkReport {
  std::string measure;
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;
  std::uint64_t stride = 1;
  std::vector<ShapeSample> samples;
  // (M, number of steps 0..steps with u_X ≤ M)
  std::vector<std::pair<double, std::uint64_t>> time_below;

  // Fraction of the steps + 1 visited points with u_X ≤ M.  Exact when M
  // was one of the tracked thresholds, otherwise taken from the samples.
  double fraction_below(double m) const;
};

// Step 0 is always recorded, then every `stride` steps.  Each step applies
// the sampled g to the basis, rescales to covolume 1 and Gauss-reduces.
// Throws WalkAborted with the step index on non-finite entries.
WalkReport run_walk(const MeasureSpec& mu, const Lattice2<double>& x0, std::uint64_t steps, std::uint64_t seed,
                    const WalkOptions& options = {});

// --- reference measure ------------------------------------------------------

// Bins over the O₂-canonical half-domain in coordinates (x, s) = (Re z,
// 1/Im z): an nx × ns grid on [0, 1/2] × [1/Y, 2/√3] followed by one tail
// bin {Im z > Y}.  In these coordinates dx dy/y² is Lebesgue measure and the
// normalized hyperbolic measure has density 6/π on {s ≤ 1/√(1 − x²)}; the
// tail mass is exactly 3/(πY).
class BinnedReference {
 public:
  static BinnedReference hyperbolic(double y_max = 6.0, std::size_t nx = 12, std::size_t ns = 12);

  double y_max() const { return y_max_; }
  std::size_t nx() const { return nx_; }
  std::size_t ns() const { return ns_; }
  std::size_t size() const { return mass_.size(); }
  const std::vector<double>& masses() const { return mass_; }
  std::size_t tail_index() const { return mass_.size() - 1; }

  std::size_t bin_of(Complex z) const;

 private:
  double y_max_ = 6;
  std::size_t nx_ = 12, ns_ = 12;
  std::vector<double> mass_;
};

std::vector<double> histogram(const std::vector<ShapeSample>& samples, const BinnedReference& ref);

struct GofResult {
  double chi_square = 0;
  std::size_t dof = 0;
  double p_value = 1;
  double total_variation = 0;
  double samples = 0;
  std::size_t bins_used = 0;  // bins with positive reference mass
};

// Pearson χ² over bins with positive mass (dof = bins_used − 1, no
// autocorrelation correction) and total variation ½Σ|p̂ − p|.  Counts may be
// fractional.  ValidationError when the total is below 100 per bin.
GofResult gof_counts(const std::vector<double>& counts, const BinnedReference& ref);
GofResult gof_hyperbolic(const WalkReport& report, double y_max = 6.0, std::size_t nx = 12, std::size_t ns = 12);

// --- Lyapunov vector ----------------------------------------------------------

struct LyapunovEstimate {
  std::size_t steps = 0, replicas = 0, burn_in = 0;
  double lambda1 = 0, lambda12 = 0;  // top exponents on R³ and ∧²R³
  double t1 = 0, t2 = 0, t3 = 0;
  double w_r3 = 0, w_wedge = 0, w_l0 = 0, w_r0 = 0, w_l0_r0 = 0;
  // Standard errors across replicas.
  double se_lambda1 = 0, se_lambda12 = 0, se_t1 = 0, se_t2 = 0, se_t3 = 0;
  double se_w_r3 = 0, se_w_wedge = 0, se_w_l0 = 0, se_w_r0 = 0, se_w_l0_r0 = 0;
  // ω_{R³} − ½ω_{∧²R³} = (t₁ − t₂)/2, with its own paired standard error.
  double fundamental = 0, se_fundamental = 0;
  // λ₁ is statistically zero (all atoms orthogonal, for instance).
  bool degenerate = false;
};

// |x| ≤ k·se + 1e-12; the absolute floor absorbs rounding when se ≈ 0.
bool within_sigma(double x, double se, double k = 3.0);
// x > k·se.
bool positive_at_sigma(double x, double se, double k = 3.0);

// Each replica r uses Xoshiro256::stream(seed, r): a random unit vector is
// pushed by g and a random unit bivector by cof(g), both renormalized every
// step; exponents are averaged log-growth after discarding the first
// `burn_in` steps (default steps/10).  Replicas run on `threads` workers.
LyapunovEstimate estimate_lyapunov(const MeasureSpec& mu, std::size_t steps, std::size_t replicas,
                                   std::uint64_t seed, unsigned threads = 0, std::size_t burn_in = SIZE_MAX);

// --- contraction hypothesis -----------------------------------------------------

struct ContractionRow {
  double height = 0;     // u_X(x)
  double f = 0;          // u_X(x)^δ
  double mean = 0;       // Monte Carlo A_μ f(x)
  double se = 0;
  double exact = 0;      // Σ_a μ(a)·f(a·x) over the finite support
};

struct ContractionReport {
  double delta = 0;
  std::vector<ContractionRow> rows;
  double c = 0, b = 0;   // least squares A_μ f ≈ c·f + b
  bool c_below_one = false;
};

// Points deep in the cusp: span{e₁, e₂/h} with log₁₀ h uniform on [2, 4],
// pushed by 0 to 3 atoms of μ, kept when u_X ≥ min_height.
std::vector<Lattice2<double>> cusp_probe_points(const MeasureSpec& mu, std::size_t count, double min_height,
                                                std::uint64_t seed);

// Point i draws `inner_samples` atoms from Xoshiro256::stream(seed, i).
ContractionReport contraction_probe(const MeasureSpec& mu, double delta, const std::vector<Lattice2<double>>& points,
                                    std::size_t inner_samples, std::uint64_t seed, unsigned threads = 0);

}  // namespace latdyn
