#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <set>

#include "lowest_order.hpp"
#include "oracles.hpp"
#include "waring/errors.hpp"
#include "waring/parse.hpp"
#include "waring/sextic.hpp"

using namespace waring;
using waring::testing::adversarial_sextic;
using waring::testing::random_binary;
using waring::testing::random_nonzero;
using waring::testing::lowest_term;
using waring::testing::shear_D_polynomial;

namespace {

using cd = std::complex<double>;

// Evaluates sum mu_i q_i^3 with complex doubles; q given by coefficients.
std::vector<cd> cube_sum(const std::vector<std::pair<cd, std::array<cd, 3>>>& terms) {
  std::vector<cd> out(7, 0.0);
  for (const auto& [mu, q] : terms) {
    std::vector<cd> sq(5, 0.0), cu(7, 0.0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) sq[i + j] += q[i] * q[j];
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 3; ++j) cu[i + j] += sq[i] * q[j];
    for (int k = 0; k < 7; ++k) out[k] += mu * cu[k];
  }
  return out;
}

double rel_err(const std::vector<cd>& got, const BinaryForm& want) {
  double num = 0, den = 0;
  for (int k = 0; k <= want.degree(); ++k) {
    num += std::norm(got[k] - want[k].to_complex());
    den += std::norm(want[k].to_complex());
  }
  return std::sqrt(num / den);
}

bool has_cube(const CubesCertificate& c, const Scalar& mu, const BinaryForm& q) {
  for (const auto& t : c.terms)
    if (t.mu == mu && t.q == q) return true;
  return false;
}

}  // namespace

TEST_CASE("sextic view round trip") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    BinaryForm p = random_binary(rng, 6);
    CHECK(SexticView::from_form(p).form() == p);
  }
  CHECK_THROWS_AS(SexticView::from_form(parse_binary("x^5")), PreconditionError);
}

TEST_CASE("residual cubic") {
  SUBCASE("identity on random sextics") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 100; ++i) {
      BinaryForm p = random_binary(rng, 6);
      auto rc = residual_cubic(SexticView::from_form(p));
      BinaryForm rebuilt = rc.a0 * rc.q.pow(3) + (Scalar(1) / rc.a0.pow(5)) * (BinaryForm::monomial(0, 3) * rc.c);
      CHECK(rebuilt == p);
    }
  }
  SUBCASE("worked examples") {
    auto a = residual_cubic(SexticView::from_form(
        parse_binary("x^6 + 3*x^5*y - 3*x^4*y^2 - 11*x^3*y^3 + 9*x^2*y^4 + 21*x*y^5 - y^6")));
    CHECK(a.q == parse_binary("x^2 + x*y - 2*y^2"));
    CHECK(a.c == parse_binary("3*x^2*y + 9*x*y^2 + 7*y^3"));

    auto b = residual_cubic(
        SexticView::from_form(parse_binary("x^6 + x^5*y + x^4*y^2 + x^3*y^3 + x^2*y^4 + x*y^5 + y^6")));
    CHECK(b.q == parse_binary("x^2 + 1/3*x*y + 2/9*y^2"));
    CHECK(b.c == Scalar::rational(7, 729) * parse_binary("54*x^3 + 81*x^2*y + 99*x*y^2 + 103*y^3"));

    auto c = residual_cubic(SexticView::from_form(parse_binary("x^6 + 3*x^5*y + y^6")));
    CHECK(c.q == parse_binary("x^2 + x*y - y^2"));
    CHECK(c.c == parse_binary("5*x^3 - 3*x*y^2 + 2*y^3"));

    auto d = residual_cubic(SexticView::from_form(parse_binary("x^6 + 3*x*y^5 + y^6")));
    CHECK(d.c == parse_binary("3*x*y^2 + y^3"));

    auto e = residual_cubic(SexticView::from_form(parse_binary("x^6")));
    CHECK(e.q == parse_binary("x^2"));
    CHECK(e.c.is_zero());
  }
  CHECK_THROWS_AS(residual_cubic(SexticView::from_form(parse_binary("x^5*y + y^6"))), PreconditionError);
}

TEST_CASE("discriminant D") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    SexticView v = SexticView::from_form(random_binary(rng, 6));
    auto rc = residual_cubic(v);
    CHECK(cubic_discriminant(rc.c) == Scalar(-540) * v.a[0].pow(6) * discriminant_D(v));
  }
  CHECK_FALSE(discriminant_D(SexticView::from_form(parse_binary(
                                 "x^6 + 3*x^5*y - 3*x^4*y^2 - 11*x^3*y^3 + 9*x^2*y^4 + 21*x*y^5 - y^6")))
                  .is_zero());
  CHECK(discriminant_D(SexticView::from_form(parse_binary("x^6 + 3*x*y^5 + y^6"))).is_zero());
  CHECK(discriminant_D(SexticView::from_form(parse_binary("x^2 + y^2").pow(3))).is_zero());
  // Floating evaluation agrees with the exact one.
  SexticView v = SexticView::from_form(parse_binary("2*x^6 - x^5*y + 3*x^3*y^3 - y^6"));
  SexticView vf = SexticView::from_form(parse_binary("2*x^6 - x^5*y + 3*x^3*y^3 - y^6").promoted());
  CHECK(std::abs(discriminant_D(vf).to_complex() - discriminant_D(v).to_complex()) <=
        1e-9 * std::abs(discriminant_D(v).to_complex()));
}

TEST_CASE("lowest order terms of D along the shear") {
  std::mt19937_64 rng(11);
  const BinaryForm x = BinaryForm::monomial(1, 0), y = BinaryForm::monomial(0, 1);
  auto quad = [&](long a, long b, long c) { return Scalar(a) * x.pow(2) + Scalar(2 * b) * x * y + Scalar(c) * y.pow(2); };
  auto check = [](const BinaryForm& p, int order, const mpq_class& want) {
    auto poly = shear_D_polynomial(p);
    for (std::size_t i = 109; i < poly.size(); ++i) CHECK(poly[i] == 0);
    auto [o, coeff] = lowest_term(poly);
    CHECK(o == order);
    CHECK(coeff == want);
  };
  auto pw = [](long a, unsigned e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), mpz_class(a).get_mpz_t(), e);
    return mpq_class(r);
  };
  for (int i = 0; i < 6; ++i) {
    const long a = random_nonzero(rng, 4), b = random_nonzero(rng, 4), c = random_nonzero(rng, 4);
    const long t = random_nonzero(rng, 4);
    const BinaryForm q = quad(a, b, c);
    check(q.pow(3) + x * y.pow(5), 2, pw(a, 42) / 36);
    check(q.pow(3) + x.pow(2) * y.pow(3) * (Scalar(t) * x + y), 1, -pw(a, 40) * c * c * t / 45);
    check(q.pow(3) + x.pow(2) * y.pow(4), 2, -2 * pw(a, 40) * c * c / 45);
    check(quad(a, b, 0).pow(3) + x.pow(2) * y.pow(3) * (Scalar(t) * x + y), 3, -pw(a, 36) * t * t * t / 135);
    check(quad(a, b, 0).pow(3) + x.pow(2) * y.pow(4), 6, -8 * pw(a, 36) / 135);
  }
}

TEST_CASE("shear coefficients") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    BinaryForm p = random_binary(rng, 6);
    Scalar t = Scalar::rational(random_nonzero(rng, 9), 1 + i % 4);
    CHECK(shear_coefficients(SexticView::from_form(p), t).form() == p.shear(t));
    CHECK(shear_coefficients(SexticView::from_form(p), Scalar(0)).form() == p);
  }
  BinaryForm p = parse_binary("x^6 + 3*x*y^5 + y^6");
  CHECK(shear_coefficients(SexticView::from_form(p), Scalar(-1)).form() ==
        parse_binary("-x^6 + 9*x^5*y - 15*x^4*y^2 + 10*x^3*y^3 - 3*x*y^5 + y^6"));
}

TEST_CASE("three cubes on the worked examples") {
  BinaryForm p = parse_binary("x^6 + 3*x^5*y - 3*x^4*y^2 - 11*x^3*y^3 + 9*x^2*y^4 + 21*x*y^5 - y^6");
  auto c = three_cubes(p);
  CHECK(c.branch == CubesBranch::generic);
  REQUIRE(c.terms.size() == 3);
  CHECK(c.is_exact());
  CHECK(c.verify(p));
  CHECK(has_cube(c, Scalar(1), parse_binary("x^2 + x*y - 2*y^2")));
  CHECK(has_cube(c, Scalar(1), parse_binary("x*y + 2*y^2")));
  CHECK(has_cube(c, Scalar(-1), parse_binary("x*y + y^2")));

  BinaryForm p3 = parse_binary("x^6 + x^5*y + x^4*y^2 + x^3*y^3 + x^2*y^4 + x*y^5 + y^6");
  auto c3 = three_cubes(p3);
  CHECK(c3.terms.size() == 3);
  CHECK(c3.residual(p3) <= 1e-10);

  BinaryForm p4 = parse_binary("x^6 + 3*x*y^5 + y^6");
  auto c4 = three_cubes(p4);
  CHECK(c4.branch == CubesBranch::p1);
  CHECK(c4.terms.size() == 3);
  CHECK(c4.residual(p4) <= 1e-10);

  ThreeCubesOptions opt;
  opt.direct_shear = true;
  opt.forced_shear = -1;
  auto c5 = three_cubes(p4, opt);
  REQUIRE(c5.shear);
  CHECK(*c5.shear == -1);
  CHECK(c5.residual(p4) <= 1e-10);
  bool found = false;
  for (const auto& t : c5.terms) {
    if (!t.q.is_exact()) continue;
    if (t.q == parse_binary("6*x^2 + 11*x*y + 4*y^2") && t.mu == Scalar(1)) found = true;
    if (t.q == parse_binary("-6*x^2 - 11*x*y - 4*y^2") && t.mu == Scalar(-1)) found = true;
  }
  CHECK(found);
  // The sheared sextic and its residual.
  BinaryForm pm = p4.shear(Scalar(-1));
  auto rm = residual_cubic(SexticView::from_form(pm));
  CHECK(rm.a0 == Scalar(-1));
  CHECK(rm.q == parse_binary("x^2 - 3*x*y - 4*y^2"));
  CHECK(-rm.c == parse_binary("55*x^3 - 60*x^2*y - 147*x*y^2 - 63*y^3"));

  opt.forced_shear = 0;
  CHECK_THROWS_AS(three_cubes(p4, opt), PreconditionError);
}

TEST_CASE("irrational certificates printed with the examples") {
  const double r1 = std::sqrt(20153.0);
  // 54x^3 + 81x^2y + 99xy^2 + 103y^3 = m1 (78x + (173 - r)y)^3 + m2 (78x + (173 + r)y)^3
  {
    const double m1 = (20153 + 134 * r1) / 354209128, m2 = (20153 - 134 * r1) / 354209128;
    std::vector<cd> got(4, 0.0);
    for (auto [m, b] : {std::pair{m1, 173 - r1}, std::pair{m2, 173 + r1}}) {
      got[0] += m * 78.0 * 78 * 78;
      got[1] += m * 3 * 78.0 * 78 * b;
      got[2] += m * 3 * 78.0 * b * b;
      got[3] += m * b * b * b;
    }
    CHECK(rel_err(got, parse_binary("54*x^3 + 81*x^2*y + 99*x*y^2 + 103*y^3")) <= 1e-8);
  }
  // p = sum_pm (9 pm sqrt(-3))/18 (x^2 + (1 pm sqrt(-3))/2 xy + y^2)^3
  {
    const cd s(0, std::sqrt(3.0));
    std::vector<std::pair<cd, std::array<cd, 3>>> terms;
    for (double sg : {1.0, -1.0})
      terms.push_back({(9.0 + sg * s) / 18.0, {1.0, (1.0 + sg * s) / 2.0, 1.0}});
    CHECK(rel_err(cube_sum(terms), parse_binary("x^6 + x^5*y + x^4*y^2 + x^3*y^3 + x^2*y^4 + x*y^5 + y^6")) <=
          1e-12);
  }
  // 5x^3 - 3xy^2 + 2y^3 with sqrt 5
  {
    const double s5 = std::sqrt(5.0);
    std::vector<cd> got(4, 0.0);
    for (double sg : {1.0, -1.0}) {
      const double lam = (20 - sg * 9 * s5) / 20, a = -5 - sg * 2 * s5;
      got[0] += lam * a * a * a;
      got[1] += lam * 3 * a * a;
      got[2] += lam * 3 * a;
      got[3] += lam;
    }
    CHECK(rel_err(got, parse_binary("5*x^3 - 3*x*y^2 + 2*y^3")) <= 1e-12);
  }
  // x^6 + 3xy^5 + y^6 with sqrt 5632445. The alpha values print correctly; the
  // reconstructing beta is alpha + 1 = (9009 +- r)/2282 and the multipliers are
  // -63/2 +- 24031 r / 1609270. The printed beta (denominator 326) and lambda
  // (4445 +- r)/2282 do not reconstruct.
  {
    const double r = std::sqrt(5632445.0);
    BinaryForm target = parse_binary("x^6 + 3*x*y^5 + y^6");
    std::vector<std::pair<cd, std::array<cd, 3>>> fixed{{1.0, {6.0, 11.0, 4.0}}};
    std::vector<std::pair<cd, std::array<cd, 3>>> printed{{1.0, {6.0, 11.0, 4.0}}};
    for (double sg : {1.0, -1.0}) {
      const double alpha = (6727 + sg * r) / 2282;
      fixed.push_back({-63.0 / 2 + sg * 24031 * r / 1609270, {alpha, (9009 + sg * r) / 2282, 1.0}});
      printed.push_back({(4445 + sg * r) / 2282, {alpha, (9009 + sg * r) / 326, 1.0}});
    }
    CHECK(rel_err(cube_sum(fixed), target) <= 1e-8);
    CHECK(rel_err(cube_sum(printed), target) > 1e-2);
  }
}

TEST_CASE("three cubes branch coverage") {
  auto z = three_cubes(BinaryForm::zero(6));
  CHECK(z.branch == CubesBranch::zero);
  CHECK(z.terms.empty());

  BinaryForm cube = parse_binary("x^2 + 3*y^2").pow(3);
  auto a = three_cubes(cube);
  CHECK(a.branch == CubesBranch::cube_residual);
  CHECK(a.terms.size() == 1);
  CHECK(a.verify(cube));

  BinaryForm two = parse_binary("x^2 + y^2").pow(3) + BinaryForm::monomial(0, 3) * parse_binary("x + y").pow(3);
  auto b = three_cubes(two);
  CHECK(b.branch == CubesBranch::cube_residual);
  CHECK(b.terms.size() == 2);
  CHECK(b.verify(two));

  BinaryForm p2 =
      parse_binary("x^2 + x*y + y^2").pow(3) + BinaryForm::monomial(0, 3) * parse_binary("x + y").pow(2) * parse_binary("2*x + y");
  auto c = three_cubes(p2);
  CHECK(c.branch == CubesBranch::p2);
  CHECK(c.terms.size() <= 3);
  CHECK(c.verify(p2));

  BinaryForm yd = BinaryForm::monomial(0, 3) * parse_binary("x^2*y");
  auto d = three_cubes(yd);
  CHECK(d.branch == CubesBranch::y_divisible);
  CHECK(d.terms.size() == 3);
  CHECK(d.is_exact());
  CHECK(d.verify(yd));

  // Needs the swap normalization first.
  BinaryForm sw = parse_binary("x^5*y + x*y^5");
  auto e = three_cubes(sw);
  CHECK(e.terms.size() <= 3);
  CHECK(e.verify(sw));
}

TEST_CASE("three cubes totality") {
  std::mt19937_64 rng(6);
  std::set<CubesBranch> seen;
  for (int i = 0; i < 300; ++i) {
    BinaryForm p = i % 3 ? random_binary(rng, 6, 10, false) : adversarial_sextic(rng, i / 3);
    auto c = three_cubes(p);
    seen.insert(c.branch);
    CHECK(c.terms.size() <= 3);
    CHECK(c.verify(p));
    if (c.is_exact()) CHECK(c.expand() == p);
  }
  CHECK(seen.count(CubesBranch::generic));
  CHECK(seen.count(CubesBranch::cube_residual));
  CHECK(seen.count(CubesBranch::p1));
  CHECK(seen.count(CubesBranch::p2));
  CHECK(seen.count(CubesBranch::y_divisible));
}

TEST_CASE("three cubes on floating input") {
  BinaryForm p = parse_binary("1.5*x^6 - 0.25*x^5*y + 2.0*x^3*y^3 + 0.5*x*y^5 - 1.0*y^6");
  auto c = three_cubes(p);
  CHECK(c.terms.size() <= 3);
  CHECK(c.residual(p) <= 1e-8);
  BinaryForm d = parse_binary("1.0*x^6 + 3.0*x*y^5 + 1.0*y^6");
  auto e = three_cubes(d);
  CHECK(e.terms.size() <= 3);
  CHECK(e.residual(d) <= 1e-8);
}

TEST_CASE("folding multipliers") {
  BinaryForm p = parse_binary("8*x^6 + y^6");
  auto c = three_cubes(p).folded();
  for (const auto& t : c.terms) CHECK(t.mu.is_one());
  CHECK(c.residual(p) <= 1e-10);
}
