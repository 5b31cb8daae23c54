// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "lowest_order.hpp"
#include "oracles.hpp"
#include "waring/apolarity.hpp"
#include "waring/errors.hpp"
#include "waring/fiber.hpp"
#include "waring/parse.hpp"
#include "waring/rank_series.hpp"
#include "waring/sextic.hpp"
#include "waring/structured.hpp"

using namespace waring;
using namespace waring::testing;

namespace {

using cd = std::complex<double>;

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  std::vector<std::string> failures;

  void expect(bool cond, const std::string& what) {
    if (!cond && failures.size() < 5) failures.push_back(what);
    ok = ok && cond;
  }
};

mpz_class binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

long ceil_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q.get_si();
}

mpq_class q_of(const Scalar& s) { return s.real(); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Independent discriminant of c0 x^3 + c1 x^2 y + c2 x y^2 + c3 y^3.
mpq_class cubic_disc(const BinaryForm& c) {
  const mpq_class a = q_of(c[0]), b = q_of(c[1]), cc = q_of(c[2]), d = q_of(c[3]);
  return b * b * cc * cc - 4 * a * cc * cc * cc - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * cc * d;
}

// Rank of the Hankel catalecticant of the binomial view with the given row count.
int hankel_rank(const BinaryForm& f, int rows) {
  const auto a = f.binomial_view();
  const int cols = f.degree() - rows + 2;
  std::vector<std::vector<mpq_class>> m(static_cast<std::size_t>(rows), std::vector<mpq_class>(static_cast<std::size_t>(cols)));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = q_of(a[static_cast<std::size_t>(i + j)]);
  return rational_rank(m);
}

double cube_error(const std::vector<std::pair<cd, std::vector<cd>>>& terms, const BinaryForm& target) {
  std::vector<cd> sum(static_cast<std::size_t>(target.degree()) + 1, 0.0);
  for (const auto& [mu, base] : terms) {
    std::vector<cd> acc{mu};
    for (int t = 0; t < 3; ++t) {
      std::vector<cd> next(acc.size() + base.size() - 1, 0.0);
      for (std::size_t i = 0; i < acc.size(); ++i)
        for (std::size_t j = 0; j < base.size(); ++j) next[i + j] += acc[i] * base[j];
      acc = std::move(next);
    }
    for (std::size_t i = 0; i < acc.size(); ++i) sum[i] += acc[i];
  }
  double num = 0, den = 0;
  for (int i = 0; i <= target.degree(); ++i) {
    num += std::norm(sum[static_cast<std::size_t>(i)] - target[i].to_complex());
    den += std::norm(target[i].to_complex());
  }
  return std::sqrt(num / den);
}

// Span membership of quadrics in Y0, Y1, Y2 by exact rank.
bool in_span(const std::vector<MultiForm>& basis, const MultiForm& q) {
  auto row = [](const MultiForm& f) {
    std::vector<mpq_class> r;
    for (const auto& e : monomials(3, 2)) r.push_back(q_of(f.coeff(e)));
    return r;
  };
  std::vector<std::vector<mpq_class>> m;
  for (const auto& b : basis) m.push_back(row(b));
  const int base = rational_rank(m);
  m.push_back(row(q));
  return rational_rank(m) == base;
}

// ---------------------------------------------------------------- criteria

void c1(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  int cases = 0;
  for (int k = 2; k <= 6; ++k)
    for (int d = 1; d <= 10; ++d) {
      const long want = ceil_div(k * d + 1, d + 1);
      RankAnswer r = generic_k_rank(2, k, d);
      o.expect(r.value == want, "closed form k=" + std::to_string(k) + " d=" + std::to_string(d));
      o.expect(generic_k_rank_series(2, k, d) == want, "series k=" + std::to_string(k) + " d=" + std::to_string(d));
      o.expect(r.status == RankStatus::proven, "binary case not proven");
      ++cases;
    }
  const double t = seconds_since(t0);
  o.expect(t < 1.0, "took more than 1 s");
  o.note << cases << " (k,d) pairs, both paths, " << t << " s";
}

void c2(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2002);
  long odd = 0, even = 0, even_s = 0, even_s1 = 0;
  for (int s = 1; s <= 6; ++s) {
    for (int t = 0; t < 500; ++t) {
      BinaryForm f = random_binary(rng, 2 * s - 1, 1000);
      Decomposition d = sylvester_decompose(f);
      const int oracle = s == 1 ? 1 : hankel_rank(f, s);  // generic cat_(s-1) rank is s
      o.expect(static_cast<int>(d.size()) == s && oracle == s, "odd degree " + std::to_string(2 * s - 1));
      o.expect(d.verify(f.to_multi()), "odd reconstruction");
      ++odd;
    }
  }
  for (int s = 1; s <= 5; ++s) {
    for (int t = 0; t < 500; ++t) {
      BinaryForm f = random_binary(rng, 2 * s, 1000);
      Decomposition d = sylvester_decompose(f);
      const int len = static_cast<int>(d.size());
      // cat_s is square of size s+1; full rank forces length s+1.
      const int oracle = hankel_rank(f, s + 1);
      o.expect(len == s || len == s + 1, "even length outside {s, s+1}");
      o.expect(len == (oracle == s + 1 ? s + 1 : s), "even length disagrees with the Hankel oracle");
      if (len == s + 1) {
        int pure_x = 0;
        for (const auto& term : d.terms) pure_x += BinaryForm::from_multi(term.base)[1].is_zero() ? 1 : 0;
        o.expect(pure_x == 1, "even length s+1 without the lambda x^k term");
        ++even_s1;
      } else {
        ++even_s;
      }
      o.expect(d.verify(f.to_multi()), "even reconstruction");
      ++even;
    }
  }
  // Random forms of even degree have length s+1; sums of s powers exercise length s.
  long built = 0;
  for (int s = 1; s <= 5; ++s)
    for (int t = 0; t < 50; ++t) {
      BinaryForm f = BinaryForm::zero(2 * s);
      for (int i = 0; i < s; ++i)
        f = f + Scalar(random_nonzero(rng, 9)) * parse_binary("x + " + std::to_string(3 * i + t % 3 + 1) + "*y").pow(2 * s);
      if (f.is_zero() || hankel_rank(f, s + 1) != s) continue;
      Decomposition d = sylvester_decompose(f);
      o.expect(static_cast<int>(d.size()) == s && d.verify(f.to_multi()), "sum of s powers");
      ++built;
    }
  const double t = seconds_since(t0);
  o.expect(t < 10.0, "took more than 10 s");
  o.note << built << " sums of s powers of even degree give length s; " << odd << " odd, " << even << " even (" << even_s1 << " of length s+1 as lambda x^k + s powers, " << even_s
         << " of length s), " << t << " s";
}

void c3(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(3003);
  std::map<CubesBranch, int> seen;
  int exact = 0, total = 0;
  double worst = 0;
  auto run = [&](const BinaryForm& p) {
    CubesCertificate c = three_cubes(p);
    ++seen[c.branch];
    o.expect(c.terms.size() <= 3, "more than three cubes");
    const double r = c.residual(p);
    worst = std::max(worst, r);
    o.expect(r <= 1e-8, "residual above 1e-8");
    if (c.is_exact()) {
      ++exact;
      o.expect(c.expand() == p, "exact certificate does not expand exactly");
    }
    ++total;
  };
  for (int i = 0; i < 1000; ++i) run(random_binary(rng, 6, 10, i % 10 != 0));
  for (int i = 0; i < 200; ++i) run(adversarial_sextic(rng, i));
  run(BinaryForm::zero(6));
  for (auto b : {CubesBranch::zero, CubesBranch::generic, CubesBranch::cube_residual, CubesBranch::p1, CubesBranch::p2,
                 CubesBranch::y_divisible})
    o.expect(seen[b] > 0, "branch " + to_string(b) + " never taken");
  const double t = seconds_since(t0);
  o.expect(t < 60.0, "took more than 60 s");
  o.note << total << " sextics, " << exact << " exact, worst residual " << worst << ", branches";
  for (const auto& [b, n] : seen) o.note << " " << to_string(b) << "=" << n;
  o.note << ", " << t << " s";
}

void c4(Outcome& o) {
  const BinaryForm y3 = BinaryForm::monomial(0, 3);
  // Specially cooked sextic.
  BinaryForm p = parse_binary("x^6 + 3*x^5*y - 3*x^4*y^2 - 11*x^3*y^3 + 9*x^2*y^4 + 21*x*y^5 - y^6");
  o.expect(parse_binary("x^2 + x*y - 2*y^2").pow(3) + y3 * parse_binary("x + 2*y").pow(3) -
                   y3 * parse_binary("x + y").pow(3) ==
               p,
           "three-cube identity");
  CubesCertificate c = three_cubes(p);
  o.expect(c.is_exact() && c.expand() == p, "library certificate for the cooked sextic");

  // All-ones sextic.
  BinaryForm p1 = parse_binary("x^6 + x^5*y + x^4*y^2 + x^3*y^3 + x^2*y^4 + x*y^5 + y^6");
  BinaryForm cub = parse_binary("54*x^3 + 81*x^2*y + 99*x*y^2 + 103*y^3");
  o.expect(p1 - parse_binary("x^2 + 1/3*x*y + 2/9*y^2").pow(3) == Scalar::rational(7, 729) * y3 * cub,
           "residual 7/729 y^3 (...)");
  auto rc = residual_cubic(SexticView::from_form(p1));
  o.expect(rc.c == Scalar::rational(7, 729) * cub, "library residual cubic");
  const double r1 = std::sqrt(20153.0);
  const double e1 = cube_error({{(20153 + 134 * r1) / 354209128, {78.0, 173 - r1}},
                                {(20153 - 134 * r1) / 354209128, {78.0, 173 + r1}}},
                               cub);
  o.expect(e1 <= 1e-8, "sqrt(20153) certificate");
  o.expect(three_cubes(p1).residual(p1) <= 1e-8, "library certificate for the all-ones sextic");

  // Shear path.
  BinaryForm p2 = parse_binary("x^6 + 3*x*y^5 + y^6");
  BinaryForm pm = p2.shear(Scalar(-1));
  o.expect(pm == parse_binary("-x^6 + 9*x^5*y - 15*x^4*y^2 + 10*x^3*y^3 - 3*x*y^5 + y^6"), "p_-1 expansion");
  o.expect(pm + parse_binary("x^2 - 3*x*y - 4*y^2").pow(3) ==
               y3 * parse_binary("55*x^3 - 60*x^2*y - 147*x*y^2 - 63*y^3"),
           "sheared residual");
  ThreeCubesOptions opt;
  opt.direct_shear = true;
  opt.forced_shear = -1;
  CubesCertificate cs = three_cubes(p2, opt);
  o.expect(cs.shear && *cs.shear == -1 && cs.residual(p2) <= 1e-8, "library T = -1 path");
  bool rational_cube = false;
  for (const auto& t : cs.terms)
    if (t.q.is_exact() && t.mu.is_exact() &&
        ((t.mu == Scalar(1) && t.q == parse_binary("6*x^2 + 11*x*y + 4*y^2")) ||
         (t.mu == Scalar(-1) && t.q == parse_binary("-6*x^2 - 11*x*y - 4*y^2"))))
      rational_cube = true;
  o.expect(rational_cube, "rational cube (6x^2 + 11xy + 4y^2)^3");
  const double r2 = std::sqrt(5632445.0);
  std::vector<std::pair<cd, std::vector<cd>>> fixed{{1.0, {6.0, 11.0, 4.0}}}, printed{{1.0, {6.0, 11.0, 4.0}}};
  for (double sg : {1.0, -1.0}) {
    const cd alpha = (6727 + sg * r2) / 2282;
    fixed.push_back({-63.0 / 2 + sg * 24031 * r2 / 1609270, {alpha, (9009 + sg * r2) / 2282, 1.0}});
    printed.push_back({(4445 + sg * r2) / 2282, {alpha, (9009 + sg * r2) / 326, 1.0}});
  }
  const double e2 = cube_error(fixed, p2), e2p = cube_error(printed, p2);
  o.expect(e2 <= 1e-8, "sqrt(5632445) certificate");
  o.note << "exact identities hold; sqrt(20153) residual " << e1 << ", sqrt(5632445) residual " << e2
         << " with beta = (9009 +- r)/2282 and lambda = -63/2 +- 24031 r/1609270 (the printed constants give " << e2p
         << ")";
}

void c5(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(5005);
  int relation = 0;
  for (int i = 0; i < 1000; ++i) {
    BinaryForm p = random_binary(rng, 6, 10);
    SexticView v = SexticView::from_form(p);
    ResidualCubic rc = residual_cubic(v);
    // Check the reduction identity p = a0 q^3 + a0^-5 y^3 c before trusting c.
    const bool identity =
        rc.a0 * rc.q.pow(3) + (Scalar(1) / rc.a0.pow(5)) * (BinaryForm::monomial(0, 3) * rc.c) == p;
    const mpq_class a0 = q_of(v.a[0]);
    mpq_class a06 = a0 * a0 * a0 * a0 * a0 * a0;
    const bool rel = cubic_disc(rc.c) == -540 * a06 * q_of(discriminant_D(v));
    o.expect(identity && rel, "discriminant relation");
    relation += identity && rel;
  }
  const BinaryForm x = BinaryForm::monomial(1, 0), y = BinaryForm::monomial(0, 1);
  auto quad = [&](long a, long b, long c) {
    return Scalar(a) * x.pow(2) + Scalar(2 * b) * x * y + Scalar(c) * y.pow(2);
  };
  auto pw = [](long a, unsigned e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), mpz_class(a).get_mpz_t(), e);
    return mpq_class(r);
  };
  int matched = 0, printed_last = 0;
  auto check = [&](const BinaryForm& p, int order, const mpq_class& want, const char* what) {
    auto poly = shear_D_polynomial(p);
    bool ok = true;
    for (std::size_t i = 109; i < poly.size(); ++i) ok = ok && poly[i] == 0;
    auto [ord, coeff] = lowest_term(poly);
    ok = ok && ord == order && coeff == want;
    o.expect(ok, what);
    matched += ok;
    return std::pair{ord, coeff};
  };
  for (int i = 0; i < 50; ++i) {
    long a = random_nonzero(rng, 4);
    if (i % 2 == 0 && std::abs(a) == 1) a *= 2;  // keep a^6 != a^36 visible
    const long b = random_nonzero(rng, 4), c = random_nonzero(rng, 4), t = random_nonzero(rng, 4);
    const BinaryForm q = quad(a, b, c), q0 = quad(a, b, 0);
    const BinaryForm tail = x.pow(2) * y.pow(3) * (Scalar(t) * x + y);
    check(q.pow(3) + x * y.pow(5), 2, pw(a, 42) / 36, "a^42/36 T^2");
    check(q.pow(3) + tail, 1, -pw(a, 40) * c * c * t / 45, "-a^40 c^2 t/45 T");
    check(q.pow(3) + x.pow(2) * y.pow(4), 2, -2 * pw(a, 40) * c * c / 45, "-2 a^40 c^2/45 T^2");
    check(q0.pow(3) + tail, 3, -pw(a, 36) * t * t * t / 135, "-a^36 t^3/135 T^3");
    auto [ord, coeff] = check(q0.pow(3) + x.pow(2) * y.pow(4), 6, -8 * pw(a, 36) / 135, "-8 a^36/135 T^6");
    printed_last += ord == 6 && coeff == -8 * pw(a, 6) / 135;
  }
  const double t = seconds_since(t0);
  o.note << relation << "/1000 exact relations, " << matched << "/250 lowest-order terms; the T^6 coefficient is -8 a^36/135 "
         << "(homogeneity), the form -8 a^6/135 matched only " << printed_last << "/50 (a = +-1); " << t << " s";
}

void c6(Outcome& o) {
  BinaryForm f = parse_binary("x^6*y^2 - x^3*y^5 + x^2*y^6 - x*y^7");
  auto b4 = [](const char* q) { return parse_binary(q).pow(4); };
  o.expect(Scalar(8) * f == b4("x*y - y^2") - b4("x^2 - y^2") + b4("x^2 + y^2") - b4("x*y + y^2"),
           "static identity 8f");
  KrankUpper up = krank_upper(f, 4);
  o.expect(up.bound == 4, "bound " + std::to_string(up.bound));
  o.expect(up.certificate.is_exact() && up.certificate.expand(2, 8) == f.to_multi(), "exact expansion");
  o.expect(static_cast<int>(up.certificate.size()) == up.bound, "certificate length");
  o.note << "upper bound " << up.bound << " from " << up.source << ": " << up.certificate.str();
}

void c7(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  BinaryForm m = parse_binary("x*y^7");
  ProbeOptions opt;
  opt.samples = 10000;
  KrankLower lo = krank_lower_probe(m, 4, opt);
  o.expect(lo.bound == 4 && lo.confidence == Confidence::certified, "certified lower bound 4");
  o.expect(lo.strata.size() == 3, "three strata");
  if (lo.strata.size() == 3) {
    o.expect(lo.strata[0].samples >= 10000 && lo.strata[0].min_cat_rank >= 4, "generic stratum");
    o.expect(lo.strata[1].min_cat_rank == 3, "c5 stratum rank 3");
  }
  // The c5 stratum directly: rank 3 and its kernel.
  PowerFiber fib = PowerFiber::build(m, 4);
  std::vector<Scalar> c(6, Scalar(0));
  c[5] = Scalar(1);
  auto cat = catalecticant(fib.point(c), 2);
  auto ker = cat.kernel_forms();
  const std::vector<std::string> Y{"Y0", "Y1", "Y2"};
  o.expect(cat.rank() == 3 && ker.size() == 3, "c5 catalecticant rank");
  const bool k1 = in_span(ker, parse_form("Y0^2", Y)), k2 = in_span(ker, parse_form("Y0*Y1", Y));
  const bool k3 = in_span(ker, parse_form("2*Y0*Y2 + 3*Y1^2", Y));
  const bool printed = in_span(ker, parse_form("2*Y1*Y2 + 3*Y1^2", Y));
  o.expect(k1 && k2 && k3, "kernel span");
  KrankUpper up = krank_upper(m, 4);
  o.expect(up.bound == 4 && up.certificate.verify(m.to_multi()), "upper bound 4");
  const double t = seconds_since(t0);
  o.note << (lo.bound == 4 && up.bound == 4 ? "rk_4(xy^7) = 4" : "rk_4(xy^7) not pinned") << "; "
         << (lo.strata.empty() ? 0 : lo.strata[0].samples) << " samples with min cat_2 rank "
         << (lo.strata.empty() ? 0 : lo.strata[0].min_cat_rank)
         << "; c5 kernel spanned by Y0^2, Y0*Y1, 2*Y0*Y2 + 3*Y1^2 (with y20 = Y0, y11 = Y1, y02 = Y2; "
         << "2*Y1*Y2 + 3*Y1^2 " << (printed ? "is" : "is not") << " in it); " << t << " s";
}

void c8(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(8008);
  int cases = 0, values = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = i % 2 == 0 ? 2 : 3;
    std::uniform_int_distribution<int> count(1, n == 2 ? 4 : 5), deg(1, 5), power(1, 3);
    const int s = count(rng);
    std::vector<int> degs, pw, eff;
    for (int j = 0; j < s; ++j) {
      const int d = deg(rng);
      int e = n == 2 ? power(rng) : 1;
      while (d * e > 10) --e;
      degs.push_back(d);
      pw.push_back(e);
      eff.push_back(d * e);
    }
    TruncatedSeries fs = froeberg_series(n, eff, 10);
    for (int j = 0; j <= 10; ++j) {
      const long got = macaulay_hilbert_oracle(n, degs, j, 1000u + static_cast<unsigned>(i), n == 2 ? pw : std::vector<int>{});
      o.expect(got == fs[j].get_si(), "case " + std::to_string(i) + " degree " + std::to_string(j));
      ++values;
    }
    ++cases;
  }
  const double t = seconds_since(t0);
  o.expect(t < 120.0, "took more than 120 s");
  o.note << cases << " ideals (binary powered generators and ternary), " << values << " Hilbert function values, " << t
         << " s";
}

void c9(Outcome& o) {
  std::ostringstream table;
  for (int n : {3, 4}) {
    const std::set<int> exc = n == 3 ? std::set<int>{1, 3, 4} : std::set<int>{1, 2};
    for (int d = 1; d <= 8; ++d) {
      const long base = ceil_div(binom(2 * d + n - 1, n - 1), binom(d + n - 1, n - 1));
      const long want = base + (exc.count(d) ? 1 : 0);
      RankAnswer r = generic_k_rank(n, 2, d);
      o.expect(r.value == want, "n=" + std::to_string(n) + " d=" + std::to_string(d));
      o.expect(r.exceptional == (exc.count(d) > 0), "exceptional flag n=" + std::to_string(n) + " d=" + std::to_string(d));
      if (n == 3) table << (d > 1 ? "," : "") << r.value;
    }
  }
  o.note << "n=3: " << table.str() << " (+1 at d=1,3,4); n=4 exceptions at d=1,2";
}

void c10(Outcome& o) {
  MonomialFactorization f = monomial_k_factor({3, 10, 11}, 4);
  o.expect(f.m1 == Exponent{0, 4, 2} && f.m2 == Exponent{1, 2, 3}, "example factorization");
  Decomposition d = monomial_krank_upper({3, 10, 11}, 4);
  o.expect(d.size() == 4 && d.is_exact() && d.expand(3, 24) == MultiForm::monomial({3, 10, 11}), "example certificate");

  long checked = 0, exact = 0;
  double worst = 0;
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 5; ++k)
      for (int kd = k; kd <= 24; kd += k) {
        const int deg = kd / k;
        if (k >= 2 && (k - 2) * n > deg) continue;
        // All exponent vectors of length n summing to kd.
        std::vector<Exponent> all;
        std::function<void(Exponent&, int)> rec = [&](Exponent& cur, int left) {
          if (static_cast<int>(cur.size()) == n - 1) {
            cur.push_back(left);
            all.push_back(cur);
            cur.pop_back();
            return;
          }
          for (int v = 0; v <= left; ++v) {
            cur.push_back(v);
            rec(cur, left - v);
            cur.pop_back();
          }
        };
        Exponent cur;
        rec(cur, kd);
        for (const auto& a : all) {
          MonomialFactorization g = monomial_k_factor(a, k);
          int s1 = 0, s2 = 0;
          bool ok = true;
          for (int i = 0; i < n; ++i) {
            const auto u = static_cast<std::size_t>(i);
            ok = ok && g.m1[u] >= 0 && g.m2[u] >= 0 && g.m1[u] + (k - 1) * g.m2[u] == a[u];
            s1 += g.m1[u];
            s2 += g.m2[u];
          }
          o.expect(ok && s1 == deg && s2 == deg, "identity");
          Decomposition dk = monomial_krank_upper(a, k);
          o.expect(static_cast<int>(dk.size()) <= k, "more than k terms");
          const MultiForm target = MultiForm::monomial(a);
          if (dk.is_exact()) {
            o.expect(dk.expand(n, kd) == target, "exact expansion");
            ++exact;
          } else {
            const double r = dk.residual(target);
            worst = std::max(worst, r);
            o.expect(r <= 1e-10, "float expansion");
          }
          ++checked;
        }
      }
  // The root-of-unity filter behind the certificate, in exact arithmetic over
  // Q[z]/(1 + z + ... + z^(p-1)) for the primes 3 and 5: sum_j z^(j(i-1)) is p
  // when p | i-1 and 0 otherwise, so only u v^(k-1) survives.
  bool filter = true;
  for (int p : {3, 5})
    for (int i = 0; i <= p; ++i) {
      std::vector<mpq_class> acc(static_cast<std::size_t>(p), mpq_class(0));  // coefficients of z^0..z^(p-1)
      for (int j = 0; j < p; ++j) acc[static_cast<std::size_t>(((j * (i - 1)) % p + p) % p)] += 1;
      // reduce z^(p-1) = -(1 + ... + z^(p-2))
      const mpq_class top = acc.back();
      for (int e = 0; e < p - 1; ++e) acc[static_cast<std::size_t>(e)] -= top;
      acc.back() = 0;
      const bool want_p = (i - 1) % p == 0;
      filter = filter && acc[0] == (want_p ? p : 0);
      for (int e = 1; e < p; ++e) filter = filter && acc[static_cast<std::size_t>(e)] == 0;
    }
  o.expect(filter, "root-of-unity filter");
  o.note << checked << " monomials (n <= 3, kd <= 24, k <= 5), " << exact << " exact certificates, worst float residual "
         << worst << "; filter identity exact for k = 3, 5";
}

void c11(Outcome& o) {
  std::mt19937_64 rng(1111);
  int done = 0, exact = 0, skipped = 0;
  double worst = 0;
  bool scalar_k = true, scalar_d_fails = true;
  for (int k = 2; k <= 4; ++k)
    for (int d = 1; d <= 3; ++d) {
      int here = 0;
      while (here < 56) {
        BinaryForm p = random_binary(rng, k * d, 9);
        CanonicalForm cf;
        try {
          cf = canonical_form(p, k, d);
        } catch (const PreconditionError&) {
          ++skipped;
          continue;
        }
        ++here;
        ++done;
        o.expect(cf.parameter_count() == k * d + 1, "parameter count");
        // Independent reconstruction with the y^(jd) p_j^(k-j) pattern.
        const Scalar::Mode m = cf.is_exact() ? Scalar::Mode::exact : Scalar::Mode::floating;
        BinaryForm rhs = BinaryForm::zero(k * d, m);
        for (int j = 0; j < k; ++j)
          rhs = rhs + BinaryForm::monomial(0, j * d).promoted_if(m) * cf.parts[static_cast<std::size_t>(j)].promoted_if(m).pow(k - j);
        if (cf.is_exact()) {
          o.expect(rhs == p, "exact reconstruction");
          ++exact;
        } else {
          const double r = MultiForm::relative_distance(rhs.to_multi(), p.to_multi());
          worst = std::max(worst, r);
          o.expect(r <= 1e-8, "reconstruction residual");
        }
        // The leading coefficient of p0 is a0^(1/k): (p0[0])^k = a0.
        const cd lead = cf.parts[0][0].to_complex(), a0 = p[0].to_complex();
        scalar_k = scalar_k && std::abs(std::pow(lead, k) - a0) <= 1e-9 * std::abs(a0);
        // With a0^(1/d) instead, p0^k would start with a0^(k/d) != a0 whenever |a0| != 1 and k != d.
        if (k != d && std::abs(std::abs(a0) - 1) > 0.5)
          scalar_d_fails = scalar_d_fails && std::abs(std::pow(std::abs(a0), static_cast<double>(k) / d) - std::abs(a0)) > 1e-6;
      }
    }
  o.expect(done >= 500, "fewer than 500 inputs");
  o.expect(scalar_k && scalar_d_fails, "leading scalar");
  // Last term exponent: y^((k-2)d) p_(k-1) has degree (k-1)d, so only y^((k-1)d) is homogeneous of degree kd.
  bool last = true;
  for (int k = 2; k <= 4; ++k)
    for (int d = 1; d <= 3; ++d) last = last && (k - 1) * d + d == k * d && (k - 2) * d + d != k * d;
  o.expect(last, "last exponent");
  o.note << done << " generic inputs (" << exact << " exact, worst residual " << worst << ", " << skipped
         << " non-generic draws skipped); parameters kd+1; scalar a0^(1/k) validates, a0^(1/d) does not; last term "
         << "y^((k-1)d) p_(k-1)";
}

void c12(Outcome& o) {
  int grids = 0;
  for (int n = 2; n <= 8; ++n)
    for (int k = 2; k <= 8; ++k)
      for (int d = 2; d <= 8; ++d) {
        std::vector<long> s;
        try {
          s = si_thresholds(n, k, d);
        } catch (const InternalConsistencyError& e) {
          o.expect(false, e.what());
          continue;
        }
        o.expect(static_cast<int>(s.size()) == d + 1, "window length");
        for (std::size_t j = 1; j < s.size(); ++j) o.expect(s[j] <= s[j - 1], "increase");
        ++grids;
      }
  o.note << grids << " (n,k,d) triples, all non-increasing";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"generic k-rank closed form and series agree for n=2", c1},
      {"Sylvester length statistics", c2},
      {"three-cubes totality", c3},
      {"worked sextic examples", c4},
      {"discriminant relation and lowest-order terms", c5},
      {"octic upper bound example", c6},
      {"x*y^7 lower bound example", c7},
      {"Froberg agreement", c8},
      {"ternary and quaternary exceptions", c9},
      {"monomial factorization", c10},
      {"canonical form", c11},
      {"s_i monotonicity", c12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.failures.push_back(std::string("threw: ") + e.what());
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " -- "
              << o.note.str();
    if (!o.ok) {
      std::cout << " [";
      for (std::size_t j = 0; j < o.failures.size(); ++j) std::cout << (j ? "; " : "") << o.failures[j];
      std::cout << "]";
    }
    std::cout << std::endl;
    failed += o.ok ? 0 : 1;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - static_cast<std::size_t>(failed) << "/"
            << criteria.size() << std::endl;
  return failed ? 1 : 0;
}
