#include "commands.hpp"

#include "latdyn/ortho.hpp"
#include "latdyn/rng.hpp"
#include "latdyn/section.hpp"

namespace latdyn::cli {

namespace {

std::string t_string(const ProjPoint<double>& t) { return t.infinite ? "inf" : num(t.value); }

double endpoint_gap(long t) {
  const ShapePoint s = shape(lambda_t(ProjPoint<Rational>::finite(Rational(t))));
  return std::abs(s.z - Complex(0, 2));
}

}  // namespace

void register_section_commands(CLI::App& app, Registry& reg) {
  {
    struct CurveArgs {
      CommonOptions common;
      std::size_t points = 2000;
    };
    auto a = std::make_shared<CurveArgs>();
    auto* sub = app.add_subcommand("section-curve", "shapes of the section over the isotropic circle; CSV index,t,x,y,height");
    sub->add_option("--points", a->points, "finite sample points (then t = inf)")->capture_default_str();
    add_common(sub, a->common, kSummary);
    reg[sub] = [a](Context& ctx) {
      if (a->points == 0) throw ValidationError("section-curve: --points must be positive");
      const auto curve = curve_sample(tan_grid(a->points));
      CsvWriter csv(make_header(ctx, "section-curve/1", std::nullopt), {"index", "t", "x", "y", "height"});
      for (std::size_t i = 0; i < curve.size(); ++i) {
        const auto& p = curve[i];
        csv.row(i, t_string(p.t), p.shape.z.real(), p.shape.z.imag(),
                height(lambda_t(p.t)));
      }
      write_output(a->common.out, csv.str(), ctx.out);
      if (!a->common.summary.empty()) {
        json j;
        j["header"] = json_header(make_header(ctx, "section-curve-summary/1", std::nullopt));
        j["points"] = curve.size();
        j["endpoint_gap_plus"] = endpoint_gap(1000000);
        j["endpoint_gap_minus"] = endpoint_gap(-1000000);
        write_output(a->common.summary, dump(j), ctx.out);
      }
    };
  }
  {
    struct VerifyArgs {
      CommonOptions common;
      std::size_t count = 1000;
      long max = 1000000;
    };
    auto a = std::make_shared<VerifyArgs>();
    auto* sub = app.add_subcommand("section-verify", "exact equivariance of the section at t = inf and random rationals");
    sub->add_option("--t-count", a->count, "random rationals to check")->capture_default_str();
    sub->add_option("--max", a->max, "bound on |numerator| and denominator")->capture_default_str()->check(CLI::Range(1L, 1000000000000L));
    add_common(sub, a->common, kSeed);
    reg[sub] = [a](Context& ctx) {
      std::string report = comment_header(make_header(ctx, "section-verify/1", a->common.seed));
      auto both_sides = [](const ProjPoint<Rational>& t) {
        for (Side s : {Side::Plus, Side::Minus}) {
          try {
            equivariance_check(t, s);
          } catch (const VerificationFailure&) {
            return false;
          }
        }
        return true;
      };
      const bool inf_ok = both_sides(ProjPoint<Rational>::at_infinity());
      report += std::string("t=inf: ") + (inf_ok ? "exact" : "FAILED") + " (both sides)\n";
      Xoshiro256 rng(a->common.seed);
      const auto m = static_cast<std::uint64_t>(a->max);
      std::size_t passed = 0;
      std::string failures;
      for (std::size_t i = 0; i < a->count; ++i) {
        const long num = static_cast<long>(uniform_index(rng, 2 * m + 1)) - a->max;
        const long den = static_cast<long>(uniform_index(rng, m)) + 1;
        Rational t(num, den);
        t.canonicalize();
        if (both_sides(ProjPoint<Rational>::finite(t))) ++passed;
        else failures += "failed at t=" + t.get_str() + "\n";
      }
      report += failures;
      report += std::to_string(passed) + "/" + std::to_string(a->count) + " exact\n";
      write_output(a->common.out, report, ctx.out);
      if (!inf_ok || passed != a->count) throw VerificationFailure("section-verify: equivariance failed");
    };
  }
  {
    struct OrthoArgs {
      CommonOptions common;
      std::size_t words = 15000, len = 25;
    };
    auto a = std::make_shared<OrthoArgs>();
    auto* sub = app.add_subcommand("ortho-shapes", "shapes of Z^3 cap (g v)^perp over random words; CSV");
    sub->add_option("--words", a->words, "number of words")->capture_default_str();
    sub->add_option("--len", a->len, "letters per word")->capture_default_str();
    add_common(sub, a->common, kSeed | kThreads);
    reg[sub] = [a](Context& ctx) {
      const auto samples = conj1_sample(a->words, a->len, a->common.seed, a->common.threads);
      const MeasureSpec mu = builtin_measure("gamma0k");
      CsvWriter csv(make_header(ctx, "ortho-shapes/1", a->common.seed), {"index", "x", "y", "v1", "v2", "v3", "word"});
      for (const auto& s : samples) {
        std::string word;
        for (std::size_t k = 0; k < s.letters.size(); ++k) word += (k ? " " : "") + mu.atoms()[s.letters[k]].label;
        csv.row(s.index, s.shape.z.real(), s.shape.z.imag(), s.v[0], s.v[1], s.v[2], word);
      }
      write_output(a->common.out, csv.str(), ctx.out);
    };
  }
}

}  // namespace latdyn::cli
