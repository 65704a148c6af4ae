#include "commands.hpp"

#include "latdyn/cubic.hpp"
#include "latdyn/dioph.hpp"

namespace latdyn::cli {

namespace {

json cf_json(const CFExpansion& e) {
  json terms = json::array();
  for (const auto& a : e.terms) terms.push_back(integer_json(a));
  return {{"input", e.descriptor},
          {"terms", terms},
          {"certified", e.certified()},
          {"terminated", e.terminated},
          {"precision_exhausted", e.precision_exhausted},
          {"max_partial_quotient", integer_json(e.max_partial_quotient())}};
}

FieldElement parse_element(const std::string& text) {
  long p = 0, q = 0, r = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), " %ld , %ld , %ld %c", &p, &q, &r, &tail) != 3)
    throw ValidationError("unit '" + text + "': expected 'p,q,r' for p + q*alpha + r*alpha^2");
  return FieldElement(p, q, r);
}

json element_json(const FieldElement& x) {
  return json::array({integer_json(x[0]), integer_json(x[1]), integer_json(x[2])});
}

CubicFieldSpec field_from(const std::string& poly) { return cubic_field(parse_cubic(poly)); }

}  // namespace

void register_dioph_commands(CLI::App& app, Registry& reg) {
  {
    struct AorbitArgs {
      CommonOptions common;
      std::string preset;
      std::vector<std::string> ratios;
      double t_max = 8;
      std::size_t grid = 161;
      std::size_t cf_terms = 30;
      bool use_double = false;
    };
    auto a = std::make_shared<AorbitArgs>();
    auto* sub = app.add_subcommand(
        "aorbit", "heights along the diagonal orbit of span{(r1,r2,r3),(1,1,1)}; CSV t1,t2,height");
    auto* preset = sub->add_option("--preset", a->preset, "bounded | an=n | liouville");
    sub->add_option("--ratios", a->ratios, "three real descriptors r1 r2 r3")->expected(3)->excludes(preset);
    sub->add_option("--t-max", a->t_max, "box [-T,T]^2")->capture_default_str();
    sub->add_option("--grid", a->grid, "grid points per axis")->capture_default_str();
    sub->add_option("--cf-terms", a->cf_terms, "continued-fraction terms per ratio")->capture_default_str();
    sub->add_flag("--double", a->use_double, "scan in double precision");
    add_common(sub, a->common, kSummary | kThreads);
    reg[sub] = [a](Context& ctx) {
      std::array<std::string, 3> ratios;
      if (!a->preset.empty()) {
        bool found = false;
        for (const auto& p : furstenberg_presets())
          if (p.name == a->preset) {
            ratios = p.ratios;
            found = true;
          }
        if (!found) throw ValidationError("unknown preset '" + a->preset + "' (bounded, an=n, liouville)");
      } else if (a->ratios.size() == 3) {
        std::copy(a->ratios.begin(), a->ratios.end(), ratios.begin());
      } else {
        throw ValidationError("aorbit: give --preset or --ratios r1 r2 r3");
      }
      FurstenbergOptions opt;
      opt.t_max = a->t_max;
      opt.grid = a->grid;
      opt.cf_terms = a->cf_terms;
      opt.bigfloat_scan = !a->use_double;
      opt.threads = a->common.threads;
      const FurstenbergReport r = furstenberg_report(ratios, opt);
      CsvWriter csv(make_header(ctx, "aorbit/1", std::nullopt), {"t1", "t2", "height"});
      for (std::size_t i = 0; i < r.scan.n1; ++i)
        for (std::size_t j = 0; j < r.scan.n2; ++j) csv.row(r.scan.t1(i), r.scan.t2(j), r.scan.at(i, j));
      write_output(a->common.out, csv.str(), ctx.out);
      if (!a->common.summary.empty()) {
        json j;
        j["header"] = json_header(make_header(ctx, "aorbit-summary/1", std::nullopt));
        json rs = json::array();
        for (const auto& x : r.ratios) rs.push_back({{"value", x.value}, {"cf", cf_json(x.cf)}});
        j["ratios"] = rs;
        j["max_partial_quotient"] = integer_json(r.max_partial_quotient);
        j["precision_exhausted"] = r.precision_exhausted;
        json pv = json::array();
        for (const auto& p : r.plane_violations) pv.push_back({{"coordinate", p.plane + 1}, {"m", p.m}, {"n", p.n}});
        j["coordinate_plane_hits"] = pv;
        j["max_height"] = r.scan.max;
        j["argmax"] = {r.scan.argmax_t1, r.scan.argmax_t2};
        write_output(a->common.summary, dump(j), ctx.out);
      }
    };
  }
  {
    struct CfArgs {
      CommonOptions common;
      std::vector<std::string> inputs;
      std::size_t terms = 30;
    };
    auto a = std::make_shared<CfArgs>();
    auto* sub = app.add_subcommand("cf", "certified continued-fraction expansions; JSON");
    sub->add_option("--x", a->inputs, "p/q, sqrt(D), (P+sqrt(D))/Q, liouville(K), cfn(N), cf[a0;a1,...], pi, e")
        ->required();
    sub->add_option("--terms", a->terms, "maximum number of terms")->capture_default_str();
    add_common(sub, a->common, 0);
    reg[sub] = [a](Context& ctx) {
      json j;
      j["header"] = json_header(make_header(ctx, "cf/1", std::nullopt));
      json xs = json::array();
      for (const auto& x : a->inputs) xs.push_back(cf_json(cf_expand(x, a->terms)));
      j["expansions"] = xs;
      write_output(a->common.out, dump(j), ctx.out);
    };
  }
  {
    struct UnitArgs {
      CommonOptions common;
      std::string poly = "x^3-3x-1";
      long bound = 5;
    };
    auto a = std::make_shared<UnitArgs>();
    auto* sub = app.add_subcommand("cubic-units", "units of Z[alpha] in a box, with log-embeddings; JSON");
    sub->add_option("--poly", a->poly, "monic cubic, e.g. x^3-3x-1 or 'a b c'")->capture_default_str();
    sub->add_option("--bound", a->bound, "box bound on coordinates")->capture_default_str();
    add_common(sub, a->common, 0);
    reg[sub] = [a](Context& ctx) {
      const CubicFieldSpec k = field_from(a->poly);
      const auto units = unit_search(k, a->bound);
      json j;
      j["header"] = json_header(make_header(ctx, "cubic-units/1", std::nullopt));
      j["polynomial"] = k.f.to_string();
      j["discriminant"] = integer_json(k.f.discriminant());
      j["roots"] = {to_double(k.roots[0]), to_double(k.roots[1]), to_double(k.roots[2])};
      j["bound"] = a->bound;
      json us = json::array();
      for (const auto& u : units)
        us.push_back({{"coords", element_json(u.coords)}, {"norm", u.norm}, {"log_embedding", u.log_embedding}});
      j["units"] = us;
      j["log_embedding_rank"] = log_embedding_rank(units);
      write_output(a->common.out, dump(j), ctx.out);
    };
  }
  {
    struct CondArgs {
      CommonOptions common;
      std::string poly = "x^3-3x-1";
      std::vector<std::string> units;
      long range = 6;
      long search_bound = 5;
      double max_log = 25;
    };
    auto a = std::make_shared<CondArgs>();
    auto* sub = app.add_subcommand("conditioned", "shapes of projections of phi(Z[alpha]) along unit directions; CSV");
    sub->add_option("--poly", a->poly, "monic cubic")->capture_default_str();
    sub->add_option("--units", a->units, "two units 'p,q,r' (default: smallest independent pair found)")->expected(2);
    sub->add_option("--range", a->range, "exponents m, n in [-range, range]")->capture_default_str();
    sub->add_option("--search-bound", a->search_bound, "unit search box when --units is absent")->capture_default_str();
    sub->add_option("--max-log", a->max_log, "skip words with max |log sigma_i| above this")->capture_default_str();
    add_common(sub, a->common, kSummary);
    reg[sub] = [a](Context& ctx) {
      const CubicFieldSpec k = field_from(a->poly);
      FieldElement e1, e2;
      if (a->units.size() == 2) {
        e1 = parse_element(a->units[0]);
        e2 = parse_element(a->units[1]);
      } else {
        const auto pair = independent_pair(unit_search(k, a->search_bound));
        e1 = pair.first.coords;
        e2 = pair.second.coords;
      }
      const ConditionedReport r = conditioned_shapes(k, e1, e2, a->range, a->max_log);
      CsvWriter csv(make_header(ctx, "conditioned/1", std::nullopt),
                    {"m", "n", "p", "q", "r", "x", "y", "height", "dual_x", "dual_y", "route_gap"});
      for (const auto& row : r.rows)
        csv.row(row.m, row.n, row.unit[0], row.unit[1], row.unit[2], row.shape.z.real(), row.shape.z.imag(),
                row.height, row.dual_shape.z.real(), row.dual_shape.z.imag(), row.route_gap);
      write_output(a->common.out, csv.str(), ctx.out);
      if (!a->common.summary.empty()) {
        json j;
        j["header"] = json_header(make_header(ctx, "conditioned-summary/1", std::nullopt));
        j["polynomial"] = k.f.to_string();
        j["units"] = {element_json(e1), element_json(e2)};
        j["rows"] = r.rows.size();
        j["truncated"] = r.truncated;
        j["skipped"] = r.skipped;
        j["max_route_gap"] = r.max_route_gap;
        double hmax = 0;
        for (const auto& row : r.rows) hmax = std::max(hmax, row.height);
        j["max_height"] = hmax;
        write_output(a->common.summary, dump(j), ctx.out);
      }
    };
  }
}

}  // namespace latdyn::cli
