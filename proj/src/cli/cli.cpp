#include "waring/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "waring/apolarity.hpp"
#include "waring/certificates.hpp"
#include "waring/errors.hpp"
#include "waring/fiber.hpp"
#include "waring/parse.hpp"
#include "waring/rank_series.hpp"
#include "waring/sextic.hpp"
#include "waring/structured.hpp"

namespace waring::cli {

namespace {

// Raised after a heuristic result has been printed.
struct BudgetExhausted {};

std::string residual_text(double r, bool exact) {
  if (exact) return r == 0 ? "0 (exact)" : "nonzero (exact mismatch)";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", r);
  return buf;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("WARING_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("WARING_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("expected a comma separated list of integers, got \"" + text + "\"");
    }
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

void print_decomposition(std::ostream& out, const Decomposition& dec, const MultiForm& input) {
  out << "method: " << dec.method << (dec.heuristic ? " (heuristic)" : "") << "\n";
  out << "terms: " << dec.size() << "\n";
  out << input.str() << " = " << dec.str() << "\n";
  out << "residual: " << residual_text(dec.residual(input), dec.is_exact() && input.is_exact()) << "\n";
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::function<int()> action;
};

void add_rank(CLI::App& app, Context& ctx) {
  auto* rank = app.add_subcommand("rank", "Generic k-ranks and Froberg series");
  rank->require_subcommand(1);

  struct GenericArgs {
    int n = 2, k = 2, d = 1;
    bool json = false;
  };
  auto ga = std::make_shared<GenericArgs>();
  auto* gen = rank->add_subcommand("generic", "Generic k-rank of forms of degree k*d in n variables");
  gen->add_option("--n", ga->n, "Number of variables")->required()->check(CLI::Range(1, 64));
  gen->add_option("--k", ga->k, "Power")->required()->check(CLI::Range(1, 64));
  gen->add_option("--d", ga->d, "Degree of the summands")->required()->check(CLI::Range(1, 64));
  gen->add_flag("--json", ga->json, "JSON output");
  gen->callback([&ctx, ga] {
    ctx.action = [&ctx, ga] {
      RankAnswer r = generic_k_rank(ga->n, ga->k, ga->d);
      if (ga->json) {
        Json j{{"schema", kSchemaVersion}, {"kind", "generic-rank"},   {"n", ga->n},
               {"k", ga->k},               {"d", ga->d},               {"value", r.value},
               {"status", to_string(r.status)}, {"exceptional", r.exceptional}, {"path", to_string(r.path)},
               {"seriesValue", r.series_value}, {"crossChecked", r.cross_checked}};
        ctx.out << j.dump(2) << "\n";
      } else {
        ctx.out << r.value << " (" << to_string(r.status) << (r.exceptional ? ", exceptional" : "") << ")\n";
      }
      return kOk;
    };
  });

  struct SeriesArgs {
    int n = 2, cutoff = 10;
    std::string degrees;
    bool json = false;
  };
  auto sa = std::make_shared<SeriesArgs>();
  auto* ser = rank->add_subcommand("series", "Froberg series [(1-t^d1)...(1-t^dm)/(1-t)^n]_+");
  ser->add_option("--n", sa->n, "Number of variables")->required()->check(CLI::Range(1, 64));
  ser->add_option("--degrees", sa->degrees, "Generator degrees, comma separated")->required();
  ser->add_option("--cutoff", sa->cutoff, "Highest degree kept")->check(CLI::Range(0, 10000));
  ser->add_flag("--json", sa->json, "JSON output");
  ser->callback([&ctx, sa] {
    ctx.action = [&ctx, sa] {
      auto degs = parse_int_list(sa->degrees);
      TruncatedSeries s = froeberg_series(sa->n, degs, sa->cutoff);
      if (sa->json) {
        Json coeffs = Json::array();
        for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
        ctx.out << Json{{"schema", kSchemaVersion}, {"kind", "froeberg-series"}, {"n", sa->n},
                        {"degrees", degs}, {"coefficients", coeffs}}
                       .dump(2)
                << "\n";
      } else {
        ctx.out << s.str() << "\n";
      }
      return kOk;
    };
  });

  struct CodimArgs {
    int n = 2, k = 2, d = 1;
    long s = 1;
  };
  auto ca = std::make_shared<CodimArgs>();
  auto* cod = rank->add_subcommand("codim", "Expected codimension of the s-th secant variety");
  cod->add_option("--n", ca->n)->required()->check(CLI::Range(1, 64));
  cod->add_option("--k", ca->k)->required()->check(CLI::Range(1, 64));
  cod->add_option("--d", ca->d)->required()->check(CLI::Range(1, 64));
  cod->add_option("--s", ca->s)->required()->check(CLI::Range(1L, 1000000L));
  cod->callback([&ctx, ca] {
    ctx.action = [&ctx, ca] {
      ctx.out << secant_codim(ca->n, ca->k, ca->d, ca->s).get_str() << "\n";
      return kOk;
    };
  });
}

void add_decompose(CLI::App& app, Context& ctx) {
  auto* dec = app.add_subcommand("decompose", "Power-sum decompositions of binary forms");
  dec->require_subcommand(1);

  struct Args {
    std::string poly;
    bool json = false;
    bool fold = false;
    bool relaxed = false;
    int k = 0, d = 0;
    double tol = kDefaultRankTol;
  };

  auto sy = std::make_shared<Args>();
  auto* syl = dec->add_subcommand("sylvester", "Waring decomposition by Sylvester's algorithm");
  syl->add_option("--poly", sy->poly, "Binary form in x, y")->required();
  syl->add_option("--tol", sy->tol, "Relative numerical-rank tolerance");
  syl->add_flag("--json", sy->json);
  syl->callback([&ctx, sy] {
    ctx.action = [&ctx, sy] {
      BinaryForm f = parse_binary(sy->poly);
      SylvesterOptions opt;
      opt.tol = sy->tol;
      Decomposition d = sylvester_decompose(f, opt);
      if (sy->json)
        ctx.out << power_sum_json(d, f.to_multi()).dump(2) << "\n";
      else
        print_decomposition(ctx.out, d, f.to_multi());
      return kOk;
    };
  });

  auto ts = std::make_shared<Args>();
  auto* two = dec->add_subcommand("two-squares", "Even-degree form as g1^2 + g2^2");
  two->add_option("--poly", ts->poly)->required();
  two->add_flag("--json", ts->json);
  two->callback([&ctx, ts] {
    ctx.action = [&ctx, ts] {
      BinaryForm f = parse_binary(ts->poly);
      TwoSquares sq = two_squares(f);
      Decomposition d;
      d.method = "two-squares";
      const Scalar one = Scalar::one(sq.g1.mode());
      d.terms.push_back({one, sq.g1.to_multi(), 2});
      d.terms.push_back({Scalar::one(sq.g2.mode()), sq.g2.to_multi(), 2});
      if (ts->json)
        ctx.out << power_sum_json(d, f.to_multi()).dump(2) << "\n";
      else
        print_decomposition(ctx.out, d, f.to_multi());
      return kOk;
    };
  });

  auto sc = std::make_shared<Args>();
  auto* cubes = dec->add_subcommand("sextic-cubes", "Binary sextic as a sum of at most three cubes of quadrics");
  cubes->add_option("--poly", sc->poly)->required();
  cubes->add_flag("--fold", sc->fold, "Fold the multipliers into the quadrics");
  cubes->add_flag("--json", sc->json);
  cubes->callback([&ctx, sc] {
    ctx.action = [&ctx, sc] {
      BinaryForm p = parse_binary(sc->poly);
      CubesCertificate cert = three_cubes(p);
      if (sc->fold) cert = cert.folded();
      if (sc->json) {
        ctx.out << sextic_cubes_json(cert, p).dump(2) << "\n";
        return kOk;
      }
      ctx.out << "branch: " << to_string(cert.branch);
      if (cert.shear) ctx.out << " (shear T = " << *cert.shear << ")";
      ctx.out << "\n";
      for (std::size_t i = 0; i < cert.substitutions.size(); ++i)
        ctx.out << "substitution " << i + 1 << ": " << cert.substitutions[i].str() << "\n";
      ctx.out << "terms: " << cert.terms.size() << "\n";
      ctx.out << p.str() << " =";
      for (std::size_t i = 0; i < cert.terms.size(); ++i) {
        const auto& t = cert.terms[i];
        ctx.out << (i ? " + " : " ") << (t.mu.is_one() ? "" : t.mu.factor_str() + "*") << "(" << t.q.str() << ")^3";
      }
      if (cert.terms.empty()) ctx.out << " 0";
      ctx.out << "\nresidual: " << residual_text(cert.residual(p), cert.is_exact() && p.is_exact()) << "\n";
      return kOk;
    };
  });

  auto cn = std::make_shared<Args>();
  auto* can = dec->add_subcommand("canonical", "p = p0^k + y^d p1^(k-1) + ... + y^((k-1)d) p_(k-1)");
  can->add_option("--poly", cn->poly)->required();
  can->add_option("--k", cn->k)->required()->check(CLI::Range(1, 64));
  can->add_option("--d", cn->d)->required()->check(CLI::Range(1, 64));
  can->add_flag("--relaxed", cn->relaxed, "Allow y^d terms when a leading coefficient vanishes");
  can->add_flag("--json", cn->json);
  can->callback([&ctx, cn] {
    ctx.action = [&ctx, cn] {
      BinaryForm p = parse_binary(cn->poly);
      CanonicalForm cf =
          canonical_form(p, cn->k, cn->d, cn->relaxed ? CanonicalVariant::relaxed : CanonicalVariant::unique);
      if (cn->json) {
        ctx.out << canonical_json(cf, p).dump(2) << "\n";
        return kOk;
      }
      ctx.out << "variant: " << to_string(cf.variant) << ", parameters: " << cf.parameter_count() << "\n";
      for (std::size_t j = 0; j < cf.parts.size(); ++j)
        ctx.out << "p" << j << " = " << cf.parts[j].str() << "   (power " << cf.k - static_cast<int>(j) << ")\n";
      BinaryForm rhs = cf.reconstruct();
      const bool exact = rhs.is_exact() && p.is_exact();
      const double r = exact ? (rhs == p ? 0.0 : 1.0) : MultiForm::relative_distance(rhs.to_multi(), p.to_multi());
      ctx.out << "residual: " << residual_text(r, exact) << "\n";
      return kOk;
    };
  });
}

void add_krank(CLI::App& app, Context& ctx) {
  auto* kr = app.add_subcommand("krank", "k-rank bounds for binary forms");
  kr->require_subcommand(1);
  struct Args {
    std::string poly;
    int k = 2;
    int budget = 500;
    long samples = 2000;
    std::optional<std::uint64_t> seed;
    bool json = false;
    bool no_numeric = false;
  };
  auto a = std::make_shared<Args>();
  auto* bound = kr->add_subcommand("bound", "Upper bound with certificate and catalecticant lower bound");
  bound->add_option("--poly", a->poly)->required();
  bound->add_option("--k", a->k)->required()->check(CLI::Range(1, 64));
  bound->add_option("--budget", a->budget, "Fiber points to try")->check(CLI::Range(1, 10000000));
  bound->add_option("--samples", a->samples, "Fiber samples for the lower bound")->check(CLI::Range(1L, 100000000L));
  bound->add_option("--seed", a->seed, "Random seed (default: WARING_SEED or 0)");
  bound->add_flag("--no-numeric", a->no_numeric, "Skip the floating-point search stage");
  bound->add_flag("--json", a->json);
  bound->callback([&ctx, a] {
    ctx.action = [&ctx, a] {
      BinaryForm f = parse_binary(a->poly);
      const std::uint64_t seed = a->seed ? *a->seed : default_seed();
      KrankOptions kopt;
      kopt.budget = a->budget;
      kopt.seed = seed;
      kopt.numeric_search = !a->no_numeric;
      KrankUpper up = krank_upper(f, a->k, kopt);
      ProbeOptions popt;
      popt.samples = a->samples;
      popt.seed = seed;
      popt.extra_points = {up.fiber_form};
      KrankLower lo = krank_lower_probe(f, a->k, popt);
      if (a->json) {
        ctx.out << krank_json(f, a->k, up, lo).dump(2) << "\n";
      } else {
        ctx.out << "upper: " << up.bound << " (" << up.source << (up.heuristic ? ", heuristic" : "") << ", "
                << up.points_tried << " fiber points)\n";
        ctx.out << "  " << f.str() << " = " << up.certificate.str() << "\n";
        ctx.out << "  residual: "
                << residual_text(up.certificate.residual(f.to_multi()), up.certificate.is_exact() && f.is_exact())
                << "\n";
        ctx.out << "lower: " << lo.bound << " (" << to_string(lo.confidence) << ")\n";
        for (const auto& s : lo.strata)
          ctx.out << "  stratum " << s.name << ": " << s.samples << " samples, min catalecticant rank "
                  << s.min_cat_rank << ", waring lower bound " << s.waring_lower << "\n";
        if (!lo.note.empty()) ctx.out << "  " << lo.note << "\n";
      }
      if (up.heuristic) throw BudgetExhausted{};
      return kOk;
    };
  });
}

void add_monomial(CLI::App& app, Context& ctx) {
  auto* mo = app.add_subcommand("monomial", "Monomial k-rank upper bounds");
  mo->require_subcommand(1);
  struct Args {
    std::string exponents;
    int k = 2;
    bool json = false;
  };
  auto a = std::make_shared<Args>();
  auto* fac = mo->add_subcommand("factor", "x^a = m1 * m2^(k-1) and at most k k-th powers");
  fac->add_option("--exponents", a->exponents, "Exponent vector, comma separated")->required();
  fac->add_option("--k", a->k)->required()->check(CLI::Range(1, 64));
  fac->add_flag("--json", a->json);
  fac->callback([&ctx, a] {
    ctx.action = [&ctx, a] {
      Exponent e = parse_int_list(a->exponents);
      for (int v : e)
        if (v < 0) throw ParseError("exponents must be non-negative");
      MonomialFactorization f = monomial_k_factor(e, a->k);
      Decomposition d = monomial_krank_upper(e, a->k);
      if (a->json) {
        ctx.out << monomial_json(f, d).dump(2) << "\n";
        return kOk;
      }
      const auto names = default_variable_names(static_cast<int>(e.size()));
      ctx.out << "d = " << f.d << ", b = " << f.b << "\n";
      ctx.out << "m1 = " << MultiForm::monomial(f.m1).str(names) << "\n";
      ctx.out << "m2 = " << MultiForm::monomial(f.m2).str(names) << "\n";
      print_decomposition(ctx.out, d, MultiForm::monomial(e));
      return kOk;
    };
  });
}

void add_verify(CLI::App& app, Context& ctx) {
  auto* ve = app.add_subcommand("verify", "Certificate checks and the worked-example suite");
  ve->require_subcommand(1);
  struct Args {
    std::string file;
    double tol = 1e-8;
    int jobs = 1;
    bool json = false;
  };
  auto a = std::make_shared<Args>();
  auto* cert = ve->add_subcommand("cert", "Re-verify a JSON certificate ('-' reads stdin)");
  cert->add_option("file", a->file)->required();
  cert->add_option("--tol", a->tol, "Relative residual tolerance for floating certificates");
  cert->callback([&ctx, a] {
    ctx.action = [&ctx, a] {
      Json doc;
      try {
        if (a->file == "-") {
          doc = Json::parse(std::cin);
        } else {
          std::ifstream in(a->file);
          if (!in) throw ParseError("cannot open " + a->file);
          doc = Json::parse(in);
        }
      } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
      }
      CertificateCheck c = check_certificate(doc, a->tol);
      ctx.out << c.kind << ": " << (c.ok ? "ok" : "FAILED") << " (residual " << residual_text(c.residual, c.exact)
              << ")\n";
      if (!c.ok) ctx.err << c.message << "\n";
      return c.ok ? kOk : kFailure;
    };
  });

  auto b = std::make_shared<Args>();
  auto* ex = ve->add_subcommand("paper-examples", "Run the worked-example reproduction suite");
  ex->alias("examples");
  ex->add_option("--jobs", b->jobs, "Cases run concurrently")->check(CLI::Range(1, 64));
  ex->add_flag("--json", b->json);
  ex->callback([&ctx, b] {
    ctx.action = [&ctx, b] {
      auto results = run_worked_examples(b->jobs);
      bool all = true;
      Json arr = Json::array();
      for (const auto& r : results) {
        all = all && r.ok;
        if (b->json)
          arr.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
        else
          ctx.out << (r.ok ? "PASS " : "FAIL ") << r.name << (r.ok ? "" : ": " + r.detail) << "\n";
      }
      if (b->json)
        ctx.out << Json{{"schema", kSchemaVersion}, {"kind", "examples"}, {"ok", all}, {"cases", arr}}.dump(2) << "\n";
      else
        ctx.out << (all ? "all " : "some ") << results.size() << " cases " << (all ? "passed" : "did not pass")
                << "\n";
      return all ? kOk : kFailure;
    };
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power-sum decompositions and k-ranks of forms", "waring"};
  app.require_subcommand(1);
  Context ctx{out, err, {}};
  add_rank(app, ctx);
  add_decompose(app, ctx);
  add_krank(app, ctx);
  add_monomial(app, ctx);
  add_verify(app, ctx);

  std::vector<std::string> storage{"waring"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }
  if (!ctx.action) return kParseError;
  try {
    return ctx.action();
  } catch (const BudgetExhausted&) {
    err << "search budget exhausted; the printed upper bound is heuristic\n";
    return kBudget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace waring::cli
