// Reproduction suite for the worked examples that ship with the tool.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <future>
#include <map>
#include <sstream>

#include "waring/apolarity.hpp"
#include "waring/cli.hpp"
#include "waring/errors.hpp"
#include "waring/fiber.hpp"
#include "waring/parse.hpp"
#include "waring/rank_series.hpp"
#include "waring/sextic.hpp"
#include "waring/structured.hpp"

namespace waring::cli {

namespace {

using cd = std::complex<double>;

class Checks {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond) failures_.push_back(what);
  }
  ExampleOutcome done(std::string name) const {
    ExampleOutcome o{std::move(name), failures_.empty(), {}};
    std::ostringstream s;
    for (std::size_t i = 0; i < failures_.size(); ++i) s << (i ? "; " : "") << failures_[i];
    o.detail = failures_.empty() ? "ok" : s.str();
    return o;
  }

 private:
  std::vector<std::string> failures_;
};

BinaryForm B(const char* s) { return parse_binary(s); }

bool has_cube(const CubesCertificate& c, const Scalar& mu, const BinaryForm& q) {
  for (const auto& t : c.terms)
    if (t.mu.is_exact() && t.q.is_exact() && t.mu == mu && t.q == q) return true;
  return false;
}

// Relative error of sum mu_i (a_i x^2 + b_i xy + c_i y^2)^3 (or linear cubes) against a target.
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
    const cd want = target[i].to_complex();
    num += std::norm(sum[static_cast<std::size_t>(i)] - want);
    den += std::norm(want);
  }
  return std::sqrt(num / den);
}

ExampleOutcome binary_generic_rank() {
  Checks c;
  RankAnswer r = generic_k_rank(2, 3, 2);
  c.expect(r.value == 3, "generic 3-rank of binary sextics is not 3");
  c.expect(r.status == RankStatus::proven, "binary case not marked proven");
  c.expect(generic_k_rank_series(2, 3, 2) == 3, "series path disagrees");
  return c.done("binary-generic-rank");
}

ExampleOutcome cubic_sylvester() {
  Checks c;
  BinaryForm h = B("3*x^2*y + 9*x*y^2 + 7*y^3");
  auto cat = catalecticant(h, 1);
  c.expect(cat.rank() == 2, "catalecticant rank");
  Decomposition d = sylvester_decompose(h);
  c.expect(d.size() == 2 && d.is_exact(), "two exact terms expected");
  c.expect(d.verify(h.to_multi()), "decomposition does not expand to h");
  c.expect(B("x + 2*y").pow(3) - B("x + y").pow(3) == h, "h = (x+2y)^3 - (x+y)^3");
  return c.done("cubic-sylvester");
}

ExampleOutcome sextic_three_cubes() {
  Checks c;
  BinaryForm p = B("x^6 + 3*x^5*y - 3*x^4*y^2 - 11*x^3*y^3 + 9*x^2*y^4 + 21*x*y^5 - y^6");
  BinaryForm y3 = BinaryForm::monomial(0, 3);
  c.expect(B("x^2 + x*y - 2*y^2").pow(3) + y3 * B("3*x^2*y + 9*x*y^2 + 7*y^3") == p, "residual step");
  c.expect(B("x^2 + x*y - 2*y^2").pow(3) + y3 * B("x + 2*y").pow(3) - y3 * B("x + y").pow(3) == p,
           "three-cube identity");
  CubesCertificate cert = three_cubes(p);
  c.expect(cert.is_exact() && cert.verify(p), "three_cubes certificate");
  c.expect(has_cube(cert, Scalar(1), B("x^2 + x*y - 2*y^2")), "first cube");
  c.expect(has_cube(cert, Scalar(1), B("x*y + 2*y^2")), "second cube");
  c.expect(has_cube(cert, Scalar(-1), B("x*y + y^2")), "third cube");
  return c.done("sextic-three-cubes");
}

ExampleOutcome sextic_all_ones() {
  Checks c;
  BinaryForm p = B("x^6 + x^5*y + x^4*y^2 + x^3*y^3 + x^2*y^4 + x*y^5 + y^6");
  BinaryForm cubic = B("54*x^3 + 81*x^2*y + 99*x*y^2 + 103*y^3");
  c.expect(p - B("x^2 + 1/3*x*y + 2/9*y^2").pow(3) == Scalar::rational(7, 729) * BinaryForm::monomial(0, 3) * cubic,
           "residual 7/729 y^3 (...)");
  auto rc = residual_cubic(SexticView::from_form(p));
  c.expect(rc.c == Scalar::rational(7, 729) * cubic, "residual_cubic");
  const double r = std::sqrt(20153.0);
  const double m1 = (20153 + 134 * r) / 354209128, m2 = (20153 - 134 * r) / 354209128;
  c.expect(cube_error({{m1, {78.0, 173 - r}}, {m2, {78.0, 173 + r}}}, cubic) <= 1e-8, "sqrt(20153) certificate");
  const cd s(0, std::sqrt(3.0));
  c.expect(cube_error({{(9.0 + s) / 18.0, {1.0, (1.0 + s) / 2.0, 1.0}}, {(9.0 - s) / 18.0, {1.0, (1.0 - s) / 2.0, 1.0}}},
                      p) <= 1e-8,
           "two-cube formula with sqrt(-3)");
  CubesCertificate cert = three_cubes(p);
  c.expect(cert.terms.size() <= 3 && cert.verify(p), "three_cubes certificate");
  return c.done("sextic-all-ones");
}

ExampleOutcome sextic_sqrt5() {
  Checks c;
  BinaryForm p = B("x^6 + 3*x^5*y + y^6");
  BinaryForm cubic = B("5*x^3 - 3*x*y^2 + 2*y^3");
  c.expect(p - B("x^2 + x*y - y^2").pow(3) == BinaryForm::monomial(0, 3) * cubic, "residual y^3 (...)");
  const double s5 = std::sqrt(5.0);
  c.expect(cube_error({{(20 - 9 * s5) / 20, {-5 - 2 * s5, 1.0}}, {(20 + 9 * s5) / 20, {-5 + 2 * s5, 1.0}}}, cubic) <= 1e-8,
           "sqrt(5) certificate");
  c.expect(three_cubes(p).verify(p), "three_cubes certificate");
  return c.done("sextic-sqrt5");
}

ExampleOutcome sextic_shear() {
  Checks c;
  BinaryForm p = B("x^6 + 3*x*y^5 + y^6");
  auto rc = residual_cubic(SexticView::from_form(p));
  c.expect(rc.c == B("3*x*y^2 + y^3"), "first residual y^2 (3x + y)");
  BinaryForm pm = p.shear(Scalar(-1));
  c.expect(pm == B("-x^6 + 9*x^5*y - 15*x^4*y^2 + 10*x^3*y^3 - 3*x*y^5 + y^6"), "sheared sextic");
  c.expect(pm + B("x^2 - 3*x*y - 4*y^2").pow(3) ==
               BinaryForm::monomial(0, 3) * B("55*x^3 - 60*x^2*y - 147*x*y^2 - 63*y^3"),
           "sheared residual");
  ThreeCubesOptions opt;
  opt.direct_shear = true;
  opt.forced_shear = -1;
  CubesCertificate cert = three_cubes(p, opt);
  c.expect(cert.shear && *cert.shear == -1, "shear T = -1");
  c.expect(cert.verify(p), "certificate after shear");
  c.expect(has_cube(cert, Scalar(1), B("6*x^2 + 11*x*y + 4*y^2")) ||
               has_cube(cert, Scalar(-1), B("-6*x^2 - 11*x*y - 4*y^2")),
           "rational cube (6x^2 + 11xy + 4y^2)^3");
  // Irrational pair: beta = alpha + 1, lambda = -63/2 +- 24031 r / 1609270.
  const double r = std::sqrt(5632445.0);
  std::vector<std::pair<cd, std::vector<cd>>> terms{{1.0, {6.0, 11.0, 4.0}}};
  for (double sg : {1.0, -1.0})
    terms.push_back({-63.0 / 2 + sg * 24031 * r / 1609270, {(6727 + sg * r) / 2282, (9009 + sg * r) / 2282, 1.0}});
  c.expect(cube_error(terms, p) <= 1e-8, "sqrt(5632445) certificate");
  c.expect(three_cubes(p).verify(p), "default three_cubes");
  return c.done("sextic-shear");
}

ExampleOutcome octic_upper() {
  Checks c;
  BinaryForm f = B("x^6*y^2 - x^3*y^5 + x^2*y^6 - x*y^7");
  auto b4 = [](const char* q) { return parse_binary(q).pow(4); };
  c.expect(Scalar(8) * f == b4("x*y - y^2") - b4("x^2 - y^2") + b4("x^2 + y^2") - b4("x*y + y^2"), "static identity");
  KrankUpper up = krank_upper(f, 4);
  c.expect(up.bound == 4, "upper bound " + std::to_string(up.bound));
  c.expect(up.certificate.is_exact() && up.certificate.verify(f.to_multi()), "exact certificate");
  return c.done("octic-fourth-powers-upper");
}

ExampleOutcome octic_lower() {
  Checks c;
  BinaryForm m = B("x*y^7");
  KrankLower lo = krank_lower_probe(m, 4);
  c.expect(lo.bound == 4 && lo.confidence == Confidence::certified, "certified lower bound 4");
  KrankUpper up = krank_upper(m, 4);
  c.expect(up.bound == 4 && up.certificate.verify(m.to_multi()), "upper bound 4");
  return c.done("octic-fourth-powers-lower");
}

ExampleOutcome monomial_factor() {
  Checks c;
  MonomialFactorization f = monomial_k_factor({3, 10, 11}, 4);
  c.expect(f.m1 == Exponent{0, 4, 2}, "m1 = x2^4 x3^2");
  c.expect(f.m2 == Exponent{1, 2, 3}, "m2 = x1 x2^2 x3^3");
  c.expect(f.b == 1, "b = 1");
  Decomposition d = monomial_krank_upper({3, 10, 11}, 4);
  c.expect(d.size() == 4 && d.is_exact() && d.verify(MultiForm::monomial({3, 10, 11})), "four exact fourth powers");
  return c.done("monomial-factor");
}

ExampleOutcome canonical() {
  Checks c;
  BinaryForm p = B("8*x^6 + 12*x^5*y + x^4*y^2 - 3*x^3*y^3 + 2*x^2*y^4 + x*y^5 + 7*y^6");
  CanonicalForm cf = canonical_form(p, 3, 2);
  c.expect(cf.parameter_count() == 7, "kd + 1 parameters");
  c.expect(MultiForm::relative_distance(cf.reconstruct().to_multi(), p.to_multi()) <= 1e-10, "reconstruction");
  c.expect(cf.parts[0][0] == Scalar(2), "p0 starts with a0^(1/k)");
  BinaryForm q = B("x^6 + x*y^5");
  CanonicalForm rx = canonical_form(q, 3, 2, CanonicalVariant::relaxed);
  c.expect(MultiForm::relative_distance(rx.reconstruct().to_multi(), q.to_multi()) <= 1e-10, "relaxed variant");
  return c.done("canonical-form");
}

using Case = std::function<ExampleOutcome()>;

const std::map<std::string, Case>& cases() {
  static const std::map<std::string, Case> all{
      {"binary-generic-rank", binary_generic_rank},
      {"canonical-form", canonical},
      {"cubic-sylvester", cubic_sylvester},
      {"monomial-factor", monomial_factor},
      {"octic-fourth-powers-lower", octic_lower},
      {"octic-fourth-powers-upper", octic_upper},
      {"sextic-all-ones", sextic_all_ones},
      {"sextic-shear", sextic_shear},
      {"sextic-sqrt5", sextic_sqrt5},
      {"sextic-three-cubes", sextic_three_cubes},
  };
  return all;
}

ExampleOutcome guarded(const std::string& name, const Case& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {name, false, std::string("threw: ") + e.what()};
  }
}

}  // namespace

std::vector<std::string> worked_example_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : cases()) names.push_back(name);
  return names;
}

std::vector<ExampleOutcome> run_worked_examples(int jobs) {
  std::vector<ExampleOutcome> out;
  if (jobs <= 1) {
    for (const auto& [name, fn] : cases()) out.push_back(guarded(name, fn));
    return out;
  }
  std::vector<std::pair<std::string, std::future<ExampleOutcome>>> pending;
  for (const auto& [name, fn] : cases()) {
    if (static_cast<int>(pending.size()) >= jobs) {
      out.push_back(pending.front().second.get());
      pending.erase(pending.begin());
    }
    pending.emplace_back(name, std::async(std::launch::async, [n = name, f = fn] { return guarded(n, f); }));
  }
  for (auto& [name, fut] : pending) out.push_back(fut.get());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

}  // namespace waring::cli
