#include "commands.hpp"

#include "latdyn/measure_io.hpp"
#include "latdyn/walk.hpp"

#include <fstream>
#include <sstream>

namespace latdyn::cli {

namespace {

// "std" is span{e1, e2}; otherwise "u1,u2,u3;w1,w2,w3".
Lattice2<double> parse_x0(const std::string& text) {
  if (text == "std") return Lattice2<double>();
  std::vector<double> v;
  std::string tok;
  std::istringstream is(text);
  for (char c; is.get(c);) {
    if (c == ',' || c == ';') {
      v.push_back(std::stod(tok));
      tok.clear();
    } else {
      tok += c;
    }
  }
  if (!tok.empty()) v.push_back(std::stod(tok));
  if (v.size() != 6) throw ValidationError("--x0 expects 'std' or six numbers 'u1,u2,u3;w1,w2,w3'");
  return {Vec3<double>(v[0], v[1], v[2]), Vec3<double>(v[3], v[4], v[5])};
}

Lattice2<double> x0_or_throw(const std::string& text) {
  try {
    return parse_x0(text);
  } catch (const std::invalid_argument&) {
    throw ValidationError("--x0: cannot parse '" + text + "'");
  } catch (const std::out_of_range&) {
    throw ValidationError("--x0: value out of range in '" + text + "'");
  }
}

json gof_json(const GofResult& g) {
  json j;
  j["samples"] = g.samples;
  j["bins_used"] = g.bins_used;
  j["chi_square"] = g.chi_square;
  j["dof"] = g.dof;
  j["p_value"] = g.p_value;
  j["total_variation"] = g.total_variation;
  return j;
}

struct WalkArgs {
  CommonOptions common;
  std::string measure;
  std::uint64_t steps = 0;
  std::size_t stride = 10;
  std::string x0 = "std";
  std::vector<double> thresholds{10.0};
};

void add_walk_options(CLI::App* sub, WalkArgs& a, bool steps_required) {
  sub->add_option("--case,--measure", a.measure, "built-in measure name or measure file")->required(steps_required);
  auto* steps = sub->add_option("--steps", a.steps, "number of steps");
  if (steps_required) steps->required();
  sub->add_option("--stride", a.stride, "record every stride-th step")->capture_default_str();
  sub->add_option("--x0", a.x0, "start: 'std' or 'u1,u2,u3;w1,w2,w3'")->capture_default_str();
  sub->add_option("--height-threshold", a.thresholds, "track time with u_X <= M")->capture_default_str();
}

WalkReport do_walk(const WalkArgs& a) {
  WalkOptions opt;
  opt.stride = a.stride;
  opt.height_thresholds = a.thresholds;
  return run_walk(resolve_measure(a.measure), x0_or_throw(a.x0), a.steps, a.common.seed, opt);
}

json walk_summary(const WalkReport& r, const WalkArgs& a) {
  json j;
  j["measure"] = r.measure;
  j["steps"] = r.steps;
  j["stride"] = r.stride;
  j["recorded"] = r.samples.size();
  json below = json::array();
  for (double m : a.thresholds) below.push_back({{"threshold", m}, {"fraction", r.fraction_below(m)}});
  j["time_below"] = below;
  return j;
}

std::vector<ShapeSample> read_walk_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open '" + path + "'");
  std::vector<ShapeSample> out;
  std::string line;
  bool header_seen = false;
  std::size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "step,x,y,height") throw ValidationError(path + ":" + std::to_string(lineno) + ": not a walk CSV");
      header_seen = true;
      continue;
    }
    ShapeSample s;
    double x = 0, y = 0;
    unsigned long long step = 0;
    if (std::sscanf(line.c_str(), "%llu,%lf,%lf,%lf", &step, &x, &y, &s.height) != 4)
      throw ValidationError(path + ":" + std::to_string(lineno) + ": malformed row");
    s.step = step;
    s.z = Complex(x, y);
    out.push_back(s);
  }
  if (!header_seen) throw ValidationError(path + ": no header row");
  return out;
}

}  // namespace

void register_walk_commands(CLI::App& app, Registry& reg) {
  {
    auto a = std::make_shared<WalkArgs>();
    auto* sub = app.add_subcommand("walk", "random walk on shapes; CSV step,x,y,height");
    add_walk_options(sub, *a, true);
    add_common(sub, a->common, kSeed | kSummary);
    reg[sub] = [a](Context& ctx) {
      const WalkReport r = do_walk(*a);
      CsvWriter csv(make_header(ctx, "walk/1", a->common.seed), {"step", "x", "y", "height"});
      for (const auto& s : r.samples) csv.row(s.step, s.z.real(), s.z.imag(), s.height);
      write_output(a->common.out, csv.str(), ctx.out);
      if (!a->common.summary.empty()) {
        json j;
        j["header"] = json_header(make_header(ctx, "walk-summary/1", a->common.seed));
        j["walk"] = walk_summary(r, *a);
        write_output(a->common.summary, dump(j), ctx.out);
      }
    };
  }
  {
    struct GofArgs {
      WalkArgs walk;
      std::string input;
      double y_max = 6;
      std::size_t nx = 12, ns = 12;
    };
    auto a = std::make_shared<GofArgs>();
    auto* sub = app.add_subcommand("gof", "goodness of fit of walk shapes against the hyperbolic reference; JSON");
    add_walk_options(sub, a->walk, false);
    sub->add_option("--input", a->input, "walk CSV to test instead of running a walk");
    sub->add_option("--y-max", a->y_max, "cusp cut-off Y")->capture_default_str();
    sub->add_option("--nx", a->nx, "bins in x")->capture_default_str();
    sub->add_option("--ns", a->ns, "bins in s = 1/y")->capture_default_str();
    add_common(sub, a->walk.common, kSeed);
    reg[sub] = [a](Context& ctx) {
      json j;
      j["header"] = json_header(make_header(ctx, "gof/1", a->input.empty() ? std::optional(a->walk.common.seed) : std::nullopt));
      const BinnedReference ref = BinnedReference::hyperbolic(a->y_max, a->nx, a->ns);
      if (!a->input.empty()) {
        if (!a->walk.measure.empty()) throw ValidationError("gof: give either --input or --case, not both");
        const auto samples = read_walk_csv(a->input);
        j["source"] = a->input;
        j["gof"] = gof_json(gof_counts(histogram(samples, ref), ref));
        json below = json::array();
        for (double m : a->walk.thresholds) {
          std::size_t k = 0;
          for (const auto& s : samples) k += s.height <= m;
          below.push_back({{"threshold", m}, {"fraction", samples.empty() ? 0.0 : double(k) / double(samples.size())}});
        }
        j["time_below_recorded"] = below;
      } else {
        if (a->walk.measure.empty() || a->walk.steps == 0) throw ValidationError("gof: --case and --steps are required without --input");
        const WalkReport r = do_walk(a->walk);
        j["walk"] = walk_summary(r, a->walk);
        j["gof"] = gof_json(gof_counts(histogram(r.samples, ref), ref));
      }
      j["reference"] = {{"y_max", a->y_max}, {"nx", a->nx}, {"ns", a->ns}, {"tail_mass", ref.masses()[ref.tail_index()]}};
      write_output(a->walk.common.out, dump(j), ctx.out);
    };
  }
  {
    struct LyapArgs {
      CommonOptions common;
      std::string measure;
      std::size_t steps = 100000, replicas = 16;
      std::optional<std::size_t> burn_in;
    };
    auto a = std::make_shared<LyapArgs>();
    auto* sub = app.add_subcommand("lyapunov", "top Lyapunov exponents, Lyapunov vector and weights; JSON");
    sub->add_option("--case,--measure", a->measure, "built-in measure name or measure file")->required();
    sub->add_option("--steps", a->steps, "steps per replica")->capture_default_str();
    sub->add_option("--replicas", a->replicas, "independent replicas")->capture_default_str();
    sub->add_option("--burn-in", a->burn_in, "discarded steps (default steps/10)");
    add_common(sub, a->common, kSeed | kThreads);
    reg[sub] = [a](Context& ctx) {
      const MeasureSpec mu = resolve_measure(a->measure);
      const LyapunovEstimate e = estimate_lyapunov(mu, a->steps, a->replicas, a->common.seed, a->common.threads,
                                                   a->burn_in.value_or(SIZE_MAX));
      json j;
      j["header"] = json_header(make_header(ctx, "lyapunov/1", a->common.seed));
      j["measure"] = mu.name();
      j["case"] = mu.case_label();
      j["steps"] = a->steps;
      j["replicas"] = a->replicas;
      auto pair = [](double x, double se) { return json{{"value", x}, {"se", se}}; };
      j["lambda1"] = pair(e.lambda1, e.se_lambda1);
      j["lambda12"] = pair(e.lambda12, e.se_lambda12);
      j["t"] = {pair(e.t1, e.se_t1), pair(e.t2, e.se_t2), pair(e.t3, e.se_t3)};
      j["weights"] = {{"w_r3", pair(e.w_r3, e.se_w_r3)},     {"w_wedge", pair(e.w_wedge, e.se_w_wedge)},
                      {"w_l0", pair(e.w_l0, e.se_w_l0)},     {"w_r0", pair(e.w_r0, e.se_w_r0)},
                      {"w_l0_r0", pair(e.w_l0_r0, e.se_w_l0_r0)}};
      j["fundamental"] = pair(e.fundamental, e.se_fundamental);
      j["degenerate"] = e.degenerate;
      j["checks"] = {{"fundamental_positive_3se", positive_at_sigma(e.fundamental, e.se_fundamental)},
                     {"t2_within_3se", within_sigma(e.t2, e.se_t2)}};
      write_output(a->common.out, dump(j), ctx.out);
    };
  }
  {
    struct ContractionArgs {
      CommonOptions common;
      std::string measure = "I";
      std::vector<double> deltas{0.05, 0.1, 0.2};
      std::size_t points = 20, inner = 10000;
      double min_height = 10;
    };
    auto a = std::make_shared<ContractionArgs>();
    auto* sub = app.add_subcommand("contraction", "probe A_mu u^delta < u^delta in the cusp; CSV per (delta, point)");
    sub->add_option("--case,--measure", a->measure, "built-in measure name or measure file")->capture_default_str();
    sub->add_option("--delta", a->deltas, "exponents delta")->capture_default_str();
    sub->add_option("--points", a->points, "probe points")->capture_default_str();
    sub->add_option("--min-height", a->min_height, "keep probe points with u_X >= this")->capture_default_str();
    sub->add_option("--inner", a->inner, "Monte Carlo draws per point")->capture_default_str();
    add_common(sub, a->common, kSeed | kSummary | kThreads);
    reg[sub] = [a](Context& ctx) {
      const MeasureSpec mu = resolve_measure(a->measure);
      const auto pts = cusp_probe_points(mu, a->points, a->min_height, a->common.seed);
      CsvWriter csv(make_header(ctx, "contraction/1", a->common.seed),
                    {"delta", "point", "height", "f", "mean", "se", "exact", "contracts_3se"});
      json summary = json::array();
      for (std::size_t d = 0; d < a->deltas.size(); ++d) {
        // Each δ reuses the same points and draws, so rows are comparable.
        const ContractionReport r = contraction_probe(mu, a->deltas[d], pts, a->inner, a->common.seed, a->common.threads);
        std::size_t contracted = 0;
        for (std::size_t i = 0; i < r.rows.size(); ++i) {
          const auto& row = r.rows[i];
          const bool ok = row.mean + 3 * row.se < row.f;
          contracted += ok;
          csv.row(r.delta, i, row.height, row.f, row.mean, row.se, row.exact, ok ? 1 : 0);
        }
        summary.push_back({{"delta", r.delta}, {"c", r.c}, {"b", r.b}, {"c_below_one", r.c_below_one},
                           {"points", r.rows.size()}, {"contracted_3se", contracted}});
      }
      write_output(a->common.out, csv.str(), ctx.out);
      if (!a->common.summary.empty()) {
        json j;
        j["header"] = json_header(make_header(ctx, "contraction-summary/1", a->common.seed));
        j["measure"] = mu.name();
        j["deltas"] = summary;
        write_output(a->common.summary, dump(j), ctx.out);
      }
    };
  }
}

}  // namespace latdyn::cli
