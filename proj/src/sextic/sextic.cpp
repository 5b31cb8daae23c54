#include "waring/sextic.hpp"

#include <cmath>

#include "waring/apolarity.hpp"
#include "waring/errors.hpp"
#include "waring/roots.hpp"

namespace waring {

namespace {

struct DTerm {
  int e[7];
  long c;
};

const DTerm kDTerms[] = {
#include "discriminant_terms.inc"
};

Scalar sc(long v, Scalar::Mode m) { return Scalar(v).promoted_if(m); }

BinaryForm y_form(Scalar::Mode m) { return BinaryForm::monomial(0, 1).promoted_if(m); }

long shear_candidate(int index) {
  // 0, 1, -1, 2, -2, ...
  return index % 2 ? (index + 1) / 2 : -(index / 2);
}

bool coefficient_vanishes(const Scalar& v, double scale) {
  return v.is_exact() ? v.is_zero() : v.abs() <= 1e-12 * std::max(scale, 1e-300);
}

// Square-freeness that never throws: float gray-zone answers count as "no".
bool clearly_square_free(const BinaryForm& c) {
  if (c.is_zero()) return false;
  try {
    return is_square_free(c);
  } catch (const AmbiguityError&) {
    return false;
  }
}

std::vector<CubeTerm> generic_terms(const ResidualCubic& rc) {
  Decomposition d = sylvester_decompose(rc.c);
  // a0 q^3 stays exact even when the residual cubes need irrational points.
  const Scalar::Mode m = d.is_exact() && rc.q.is_exact() ? Scalar::Mode::exact : Scalar::Mode::floating;
  std::vector<CubeTerm> out{{rc.a0, rc.q}};
  const Scalar a05 = rc.a0.promoted_if(m).pow(5);
  for (const auto& t : d.terms)
    out.push_back({t.lambda.promoted_if(m) / a05, y_form(m) * BinaryForm::from_multi(t.base).promoted_if(m)});
  return out;
}

// Pulls terms computed for p.substitute(total) back to p.
std::vector<CubeTerm> pull_back(std::vector<CubeTerm> terms, const LinearSubstitution& total) {
  const LinearSubstitution inv = total.inverse();
  for (auto& t : terms) t.q = t.q.substitute(t.q.is_exact() ? inv : inv.promoted());
  return terms;
}

}  // namespace

SexticView SexticView::from_form(const BinaryForm& p) {
  if (p.degree() != 6) throw PreconditionError("a sextic is required");
  SexticView v;
  for (int k = 0; k <= 6; ++k) v.a[static_cast<std::size_t>(k)] = p.binomial_coeff(k);
  return v;
}

BinaryForm SexticView::form() const { return BinaryForm::from_binomial({a.begin(), a.end()}); }

bool SexticView::is_exact() const {
  for (const auto& s : a)
    if (!s.is_exact()) return false;
  return true;
}

ResidualCubic residual_cubic(const SexticView& p) {
  const auto& [a0, a1, a2, a3, a4, a5, a6] = p.a;
  if (a0.is_zero()) throw PreconditionError("residual cubic needs a0 != 0");
  const Scalar::Mode m = a0.mode();
  auto k = [m](long v) { return sc(v, m); };
  BinaryForm q({Scalar::one(m), k(2) * a1 / a0, (k(5) * a0 * a2 - k(4) * a1 * a1) / (a0 * a0)});
  const Scalar c0 = k(20) * a0.pow(3) * (a0 * a0 * a3 - k(3) * a0 * a1 * a2 + k(2) * a1.pow(3));
  const Scalar c1 = k(5) * a0.pow(3) * (a0 * a0 * a4 - k(5) * a0 * a2 * a2 + k(4) * a1 * a1 * a2);
  const Scalar c2 = k(2) * a0 *
                    (a0.pow(4) * a5 - k(25) * a0 * a0 * a1 * a2 * a2 + k(40) * a0 * a1.pow(3) * a2 - k(16) * a1.pow(5));
  const Scalar c3 = a0.pow(5) * a6 - k(125) * a0.pow(3) * a2.pow(3) + k(300) * a0 * a0 * a1 * a1 * a2 * a2 -
                    k(240) * a0 * a1.pow(4) * a2 + k(64) * a1.pow(6);
  return {a0, q, BinaryForm({c0, k(3) * c1, k(3) * c2, c3})};
}

Scalar cubic_discriminant(const BinaryForm& c) {
  if (c.degree() != 3) throw PreconditionError("cubic_discriminant needs a cubic");
  const Scalar &A = c[0], &B = c[1], &C = c[2], &D = c[3];
  const Scalar::Mode m = c.mode();
  return B * B * C * C - sc(4, m) * A * C.pow(3) - sc(4, m) * B.pow(3) * D - sc(27, m) * A * A * D * D +
         sc(18, m) * A * B * C * D;
}

Scalar discriminant_D(const SexticView& p) {
  if (p.a[0].is_zero()) throw PreconditionError("D(p) needs a0 != 0");
  const Scalar::Mode m = p.a[0].mode();
  // powers[k][e] = a_k^e
  std::array<std::vector<Scalar>, 7> powers;
  for (std::size_t k = 0; k < 7; ++k) {
    powers[k].push_back(Scalar::one(m));
    for (int e = 1; e <= 18; ++e) powers[k].push_back(powers[k].back() * p.a[k]);
  }
  Scalar sum = Scalar::zero(m);
  for (const auto& t : kDTerms) {
    Scalar term = sc(t.c, m);
    for (std::size_t k = 0; k < 7; ++k)
      if (t.e[k]) term *= powers[k][static_cast<std::size_t>(t.e[k])];
    sum += term;
  }
  return sum;
}

SexticView shear_coefficients(const SexticView& p, const Scalar& t) {
  // a_i(T) = sum_{k >= i} C(6-i, k-i) a_k T^(k-i)
  SexticView out;
  const Scalar::Mode m = p.a[0].mode();
  for (int i = 0; i <= 6; ++i) {
    Scalar s = Scalar::zero(m);
    Scalar tp = Scalar::one(m);
    for (int k = i; k <= 6; ++k) {
      s += binomial_scalar(6 - i, k - i).promoted_if(m) * p.a[static_cast<std::size_t>(k)] * tp;
      tp *= t;
    }
    out.a[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

std::string to_string(CubesBranch b) {
  switch (b) {
    case CubesBranch::zero: return "zero";
    case CubesBranch::generic: return "generic";
    case CubesBranch::cube_residual: return "cube-residual";
    case CubesBranch::p1: return "p1-branch";
    case CubesBranch::p2: return "p2-branch";
    case CubesBranch::y_divisible: return "y-divisible";
  }
  return "?";
}

BinaryForm CubesCertificate::expand() const {
  const Scalar::Mode m = is_exact() ? Scalar::Mode::exact : Scalar::Mode::floating;
  BinaryForm sum = BinaryForm::zero(6, m);
  for (const auto& t : terms) sum = sum + t.mu.promoted_if(m) * t.q.promoted_if(m).pow(3);
  return sum;
}

bool CubesCertificate::is_exact() const {
  for (const auto& t : terms)
    if (!t.mu.is_exact() || !t.q.is_exact()) return false;
  return true;
}

double CubesCertificate::residual(const BinaryForm& target) const {
  return MultiForm::relative_distance(expand().to_multi(), target.to_multi());
}

bool CubesCertificate::verify(const BinaryForm& target, double tol) const {
  if (is_exact() && target.is_exact()) return expand() == target;
  return residual(target) <= tol;
}

CubesCertificate CubesCertificate::folded() const {
  CubesCertificate out = *this;
  for (auto& t : out.terms) {
    Scalar root = principal_root(t.mu, 3);
    t.q = root * t.q.promoted_if(root.mode());
    t.mu = Scalar::one(root.mode());
  }
  return out;
}

Decomposition CubesCertificate::to_decomposition() const {
  Decomposition d;
  d.method = "three-cubes/" + to_string(branch);
  for (const auto& t : terms) d.terms.push_back({t.mu, t.q.to_multi(), 3});
  return d;
}

CubesCertificate three_cubes(const BinaryForm& p, const ThreeCubesOptions& opt) {
  if (p.degree() != 6) throw PreconditionError("three_cubes needs a sextic");
  CubesCertificate cert;
  if (p.is_zero()) {
    cert.branch = CubesBranch::zero;
    return cert;
  }
  const bool exact = p.is_exact();
  const Scalar::Mode mode = p.mode();
  const double scale = p.norm();

  auto finish = [&](CubesCertificate& c) -> CubesCertificate& {
    if (!c.verify(p)) throw InternalConsistencyError("three-cubes certificate does not reconstruct the sextic");
    return c;
  };

  // y^3 divides p: p = y^3 h and h is a sum of at most three cubes.
  if (p.y_multiplicity() >= 3) {
    Decomposition d = cubic_three_cubes(p.divide_by_y_power(3));
    for (const auto& t : d.terms)
      cert.terms.push_back({t.lambda, y_form(t.base.mode()) * BinaryForm::from_multi(t.base)});
    cert.branch = CubesBranch::y_divisible;
    return finish(cert);
  }

  // Make a0 != 0.
  std::vector<LinearSubstitution> normalizers{LinearSubstitution::identity(2), LinearSubstitution::swap()};
  for (int j = 1; j <= 8; ++j) normalizers.push_back(LinearSubstitution::shear(Scalar(shear_candidate(j))));
  LinearSubstitution norm = LinearSubstitution::identity(2);
  BinaryForm pw = p;
  for (const auto& s : normalizers) {
    BinaryForm cand = p.substitute(exact ? s : s.promoted());
    if (!coefficient_vanishes(cand[0], scale)) {
      norm = s;
      pw = cand;
      break;
    }
  }
  if (coefficient_vanishes(pw[0], scale)) throw InternalConsistencyError("no normalization with a0 != 0 found");
  if (!(norm.rows() == LinearSubstitution::identity(2).rows())) cert.substitutions.push_back(norm);

  ResidualCubic rc = residual_cubic(SexticView::from_form(pw));
  const bool c_zero = exact ? rc.c.is_zero() : (rc.c.norm() / std::pow(rc.a0.abs(), 5) <= 1e-12 * scale);
  if (c_zero) {
    cert.terms = pull_back({{rc.a0, rc.q}}, norm.promoted_if(mode));
    cert.branch = CubesBranch::cube_residual;
    return finish(cert);
  }

  const bool generic = exact ? !discriminant_D(SexticView::from_form(pw)).is_zero() : clearly_square_free(rc.c);
  if (generic) {
    cert.terms = pull_back(generic_terms(rc), norm.promoted_if(mode));
    cert.branch = CubesBranch::generic;
    return finish(cert);
  }

  // c is a cube of a linear form.
  {
    bool cube = false;
    if (exact) {
      cube = square_free_part(rc.c).degree() == 1;
    } else {
      try {
        cube = sylvester_decompose(rc.c).size() == 1;
      } catch (const AmbiguityError&) {
        cube = false;
      }
    }
    if (cube) {
      cert.terms = pull_back(generic_terms(rc), norm.promoted_if(mode));
      cert.branch = CubesBranch::cube_residual;
      return finish(cert);
    }
  }

  // Square factor: y^3 c / a0^5 = y^3 (r x + s y)^2 (t x + u y).
  LinearSubstitution reduce = LinearSubstitution::identity(2, mode);
  if (exact) {
    BinaryForm l1 = form_gcd(rc.c.derivative_x(), rc.c.derivative_y());
    BinaryForm l2 = Scalar(1) / rc.a0.pow(5) * exact_divide(rc.c, l1 * l1);
    const Scalar &r = l1[0], &s = l1[1], &t = l2[0], &u = l2[1];
    if (r.is_zero()) {
      // y^5 (t x + u y): x -> t x + u y gives sigma x y^5.
      cert.branch = CubesBranch::p1;
      reduce = LinearSubstitution({{Scalar(1) / t, -u / t}, {Scalar(0), Scalar(1)}});
    } else {
      // x -> r x + s y gives x^2 y^3 (t' x + u' y).
      cert.branch = CubesBranch::p2;
      reduce = LinearSubstitution({{Scalar(1) / r, -s / r}, {Scalar(0), Scalar(1)}});
    }
  } else {
    cert.branch = CubesBranch::generic;
  }
  if (opt.direct_shear) reduce = LinearSubstitution::identity(2, mode);
  BinaryForm pr = pw.substitute(reduce);

  std::vector<long> candidates;
  if (opt.forced_shear) {
    candidates.push_back(*opt.forced_shear);
  } else {
    for (int i = 0; i < opt.max_shear_candidates; ++i) candidates.push_back(shear_candidate(i));
  }
  for (long T : candidates) {
    const LinearSubstitution sh = LinearSubstitution::shear(Scalar(T).promoted_if(mode));
    BinaryForm pt = pr.substitute(sh);
    if (coefficient_vanishes(pt[0], scale)) continue;
    SexticView v = SexticView::from_form(pt);
    ResidualCubic rt = residual_cubic(v);
    const bool ok = exact ? !discriminant_D(v).is_zero() : clearly_square_free(rt.c);
    if (!ok) continue;
    LinearSubstitution total = norm.promoted_if(mode).then(reduce).then(sh);
    cert.terms = pull_back(generic_terms(rt), total);
    if (!opt.direct_shear) cert.substitutions.push_back(reduce);
    cert.substitutions.push_back(sh);
    cert.shear = T;
    return finish(cert);
  }
  if (opt.forced_shear)
    throw PreconditionError("shear T = " + std::to_string(*opt.forced_shear) + " is not admissible for this sextic");
  throw InternalConsistencyError("no admissible shear within " + std::to_string(opt.max_shear_candidates) +
                                 " candidates");
}

}  // namespace waring
