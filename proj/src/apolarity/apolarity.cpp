#include "waring/apolarity.hpp"

#include <algorithm>
#include <cmath>

#include "waring/errors.hpp"
#include "waring/roots.hpp"

namespace waring {

namespace {

std::vector<Scalar> binary_to_vector(const BinaryForm& g) { return {g.coeffs().begin(), g.coeffs().end()}; }

// Lowest-terms representative of an exact linear form: integer coefficients
// with no common factor and a positive leading entry.
BinaryForm normalize_linear(const BinaryForm& l) {
  if (!l.is_exact()) {
    // Unit length keeps the power columns of the lambda system comparable.
    const double n = l.norm();
    return n > 0 ? Scalar::floating(1.0 / n) * l : l;
  }
  mpz_class den = 1;
  for (const auto& c : l.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.real().get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.imag().get_den_mpz_t());
  }
  mpz_class g = 0;
  for (const auto& c : l.coeffs()) {
    mpz_class re = mpz_class(c.real() * den);
    mpz_class im = mpz_class(c.imag() * den);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), re.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), im.get_mpz_t());
  }
  if (g == 0) return l;
  Scalar scale(mpq_class(den, g));
  for (const auto& c : l.coeffs()) {
    if (c.is_zero()) continue;
    if (c.real() < 0 || (c.real() == 0 && c.imag() < 0)) scale = -scale;
    break;
  }
  return scale * l;
}

// The linear form whose D-th power a root of an apolar form contributes.
BinaryForm power_base(const ProjectiveRoot& r) { return normalize_linear(BinaryForm::linear(r.x, r.y)); }

// g(d/dx, d/dy) f
MultiForm apply_dual(const MultiForm& g, const MultiForm& f) {
  Scalar::Mode mode = (g.is_exact() && f.is_exact()) ? Scalar::Mode::exact : Scalar::Mode::floating;
  MultiForm out(f.num_vars(), std::max(0, f.degree() - g.degree()), mode);
  if (g.degree() > f.degree()) return out;
  MultiForm fm = mode == Scalar::Mode::exact ? f : f.promoted();
  for (const auto& [e, c] : g.terms()) {
    Scalar cc = mode == Scalar::Mode::exact ? c : c.promoted();
    out += fm.derivative(e).scaled(cc);
  }
  return out;
}

bool square_free_or_skip(const BinaryForm& g, bool propagate) {
  if (g.is_zero()) return false;
  try {
    return is_square_free(g);
  } catch (const AmbiguityError&) {
    if (propagate) throw;
    return false;
  }
}

// Digits 0, 1, -1, 2, -2, 3 for deterministic integer combinations.
long digit_value(long d) {
  static const long table[] = {0, 1, -1, 2, -2, 3};
  return table[d];
}

std::vector<long> combination(long counter, std::size_t len) {
  std::vector<long> c(len, 0);
  for (std::size_t j = 0; j < len && counter > 0; ++j) {
    c[j] = digit_value(counter % 6);
    counter /= 6;
  }
  return c;
}

BinaryForm combine(const std::vector<BinaryForm>& basis, const std::vector<long>& c) {
  BinaryForm out = BinaryForm::zero(basis.front().degree(), basis.front().mode());
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (c[j] != 0) out = out + Scalar(c[j]).promoted_if(basis[j].mode()) * basis[j];
  return out;
}

}  // namespace

int Catalecticant::rank(double tol) const { return num_rank(matrix, tol); }

std::vector<MultiForm> Catalecticant::kernel_forms(double tol) const {
  std::vector<MultiForm> out;
  for (const auto& v : kernel(matrix.transposed(), tol)) {
    MultiForm g(source.num_vars(), order, matrix.mode());
    for (std::size_t a = 0; a < v.size(); ++a)
      if (!v[a].is_zero()) g.add_term(row_monomials[a], v[a]);
    out.push_back(std::move(g));
  }
  return out;
}

Catalecticant catalecticant(const MultiForm& f, int i) {
  if (i < 0) throw PreconditionError("catalecticant order must be non-negative");
  Catalecticant c{f, i, monomials(f.num_vars(), i), {}, {}};
  const int rest = f.degree() - i;
  if (rest >= 0) c.col_monomials = monomials(f.num_vars(), rest);
  c.matrix = ScalarMatrix(static_cast<int>(c.row_monomials.size()), static_cast<int>(c.col_monomials.size()), f.mode());
  if (rest < 0) return c;
  for (std::size_t a = 0; a < c.row_monomials.size(); ++a) {
    MultiForm d = f.derivative(c.row_monomials[a]);
    for (const auto& [e, v] : d.terms()) c.matrix.set(static_cast<int>(a), static_cast<int>(monomial_index(e)), v);
  }
  return c;
}

Catalecticant catalecticant(const BinaryForm& f, int i) { return catalecticant(f.to_multi(), i); }

int catalecticant_lower_bound(const MultiForm& f, double tol) {
  int best = 0;
  for (int i = 0; i <= f.degree(); ++i) best = std::max(best, catalecticant(f, i).rank(tol));
  return best;
}

Decomposition decompose_on_apolar(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero()) throw PreconditionError("cannot decompose the zero form");
  if (!is_square_free(g)) throw PreconditionError("apolar form is not square-free");
  const int D = f.degree();
  MultiForm annihilated = apply_dual(g.to_multi(), f.to_multi());
  if (annihilated.is_exact() ? !annihilated.is_zero()
                             : annihilated.norm() > 1e-8 * std::max(1.0, f.norm()) * std::max(1.0, g.norm()))
    throw PreconditionError("form is not apolar to the target");

  RootSet rs = roots(g);
  const bool exact = rs.exact && f.is_exact();
  std::vector<BinaryForm> bases;
  for (const auto& r : rs.roots) bases.push_back(exact ? power_base(r) : normalize_linear(power_base(r).promoted()));
  BinaryForm target = exact ? f : f.promoted();

  const int r = static_cast<int>(bases.size());
  ScalarMatrix m(D + 1, r, target.mode());
  for (int j = 0; j < r; ++j) {
    BinaryForm p = bases[static_cast<std::size_t>(j)].pow(D);
    for (int i = 0; i <= D; ++i) m.set(i, j, p[i]);
  }
  std::vector<Scalar> lambda = solve(m, binary_to_vector(target));

  Decomposition dec;
  dec.method = "sylvester";
  for (int j = 0; j < r; ++j)
    dec.terms.push_back({lambda[static_cast<std::size_t>(j)], bases[static_cast<std::size_t>(j)].to_multi(), D});
  if (!exact && dec.residual(target.to_multi()) > 1e-8)
    throw AmbiguityError("floating Sylvester decomposition does not reconstruct the form (residual " +
                         std::to_string(dec.residual(target.to_multi())) + ")");
  return dec;
}

Decomposition sylvester_decompose(const BinaryForm& f, const SylvesterOptions& opt) {
  if (f.is_zero()) throw PreconditionError("cannot decompose the zero form");
  const int D = f.degree();

  int r = 1;
  std::vector<BinaryForm> slice;
  for (;; ++r) {
    for (const auto& g : catalecticant(f, r).kernel_forms(opt.tol)) slice.push_back(BinaryForm::from_multi(g));
    if (!slice.empty()) break;
  }

  if (slice.size() == 1) {
    if (square_free_or_skip(slice.front(), true)) return decompose_on_apolar(f, slice.front());
  } else {
    // Pencil of generators in one degree.
    int tried = 0;
    if (opt.prefer_x_power && slice.size() == 2) {
      const BinaryForm& a = slice[0];
      const BinaryForm& b = slice[1];
      BinaryForm w = b[0] * a - a[0] * b;
      if (!w.is_zero()) {
        ++tried;
        if (square_free_or_skip(w, false)) return decompose_on_apolar(f, w);
      }
    }
    for (long n = 1; tried < opt.max_candidates; ++n, ++tried) {
      BinaryForm g = combine(slice, combination(n, slice.size()));
      if (square_free_or_skip(g, false)) return decompose_on_apolar(f, g);
    }
    throw InternalConsistencyError("no square-free member found in the apolar pencil");
  }

  // g1 has a repeated root: the rank is D + 2 - r.
  const BinaryForm g1 = slice.front();
  const int e = D + 2 - r;
  std::vector<BinaryForm> multiples;
  for (const auto& m : monomials(2, e - r)) multiples.push_back(g1 * BinaryForm::monomial(m[0], m[1]).promoted_if(g1.mode()));

  std::vector<BinaryForm> upper;
  if (e > D) {
    for (const auto& m : monomials(2, e)) upper.push_back(BinaryForm::monomial(m[0], m[1]).promoted_if(f.mode()));
  } else {
    for (const auto& g : catalecticant(f, e).kernel_forms(opt.tol)) upper.push_back(BinaryForm::from_multi(g));
  }
  std::vector<std::vector<Scalar>> rows;
  for (const auto& m : multiples) rows.push_back(binary_to_vector(m));
  const int base_rank = num_rank(ScalarMatrix::from_rows(rows), opt.tol);
  BinaryForm g2;
  bool found = false;
  for (const auto& u : upper) {
    auto trial = rows;
    trial.push_back(binary_to_vector(u.promoted_if(g1.mode())));
    if (num_rank(ScalarMatrix::from_rows(trial), opt.tol) > base_rank) {
      g2 = u.promoted_if(g1.mode());
      found = true;
      break;
    }
  }
  if (!found) throw InternalConsistencyError("apolar ideal has no second generator in the expected degree");

  for (long n = 0; n < opt.max_candidates; ++n) {
    BinaryForm g = g2 + (n == 0 ? BinaryForm::zero(e, g2.mode()) : combine(multiples, combination(n, multiples.size())));
    if (square_free_or_skip(g, false)) return decompose_on_apolar(f, g);
  }
  throw InternalConsistencyError("no square-free apolar form found in degree " + std::to_string(e));
}

Decomposition cubic_three_cubes(const BinaryForm& h) {
  if (h.degree() != 3) throw PreconditionError("cubic_three_cubes needs a cubic");
  if (h.is_zero()) throw PreconditionError("cannot decompose the zero form");
  if (!h.is_exact() || is_square_free(h) || square_free_part(h).degree() == 1) return sylvester_decompose(h);

  // h = l1^2 * l2 with l1 the repeated factor and the scalar kept in l2.
  BinaryForm l1 = form_gcd(h.derivative_x(), h.derivative_y());
  BinaryForm l2 = exact_divide(h, l1 * l1);
  Decomposition dec;
  dec.method = "cubic-identity";
  dec.terms.push_back({Scalar::rational(1, 6), (l2 - l1).to_multi(), 3});
  dec.terms.push_back({Scalar::rational(-1, 3), l2.to_multi(), 3});
  dec.terms.push_back({Scalar::rational(1, 6), (l1 + l2).to_multi(), 3});
  return dec;
}

Decomposition cubic_omega_cubes(const BinaryForm& h) {
  if (h.degree() != 3) throw PreconditionError("cubic_omega_cubes needs a cubic");
  if (h.is_zero()) throw PreconditionError("cannot decompose the zero form");
  if (!is_square_free(h)) throw PreconditionError("cubic_omega_cubes needs a square-free cubic");
  RootSet rs = roots(h);
  std::vector<BinaryForm> l;
  for (const auto& r : rs.roots) l.push_back(r.linear_factor().promoted());
  // l3 = alpha l1 + beta l2
  ScalarMatrix m(2, 2, Scalar::Mode::floating);
  for (int i = 0; i < 2; ++i) {
    m.set(i, 0, l[0][i]);
    m.set(i, 1, l[1][i]);
  }
  auto ab = solve(m, {l[2][0], l[2][1]});
  const Scalar alpha = ab[0], beta = ab[1];
  BinaryForm prod = l[0] * l[1] * l[2];
  BinaryForm hf = h.promoted();
  // c = <h, prod> / <prod, prod>
  Scalar num = Scalar::floating(0.0), den = Scalar::floating(0.0);
  for (int i = 0; i <= 3; ++i) {
    num += prod[i].conj() * hf[i];
    den += prod[i].conj() * prod[i];
  }
  const Scalar c = num / den;
  const Scalar w = root_of_unity(3, 1).promoted();
  const Scalar w2 = w * w;
  const Scalar scale = c / (Scalar::floating(3.0) * alpha * beta * (w - w2));
  Decomposition dec;
  dec.method = "omega";
  dec.terms.push_back({scale, (w2 * alpha * l[0] - w * beta * l[1]).to_multi(), 3});
  dec.terms.push_back({-scale, (w * alpha * l[0] - w2 * beta * l[1]).to_multi(), 3});
  return dec;
}

TwoSquares two_squares(const BinaryForm& f) {
  if (f.is_zero()) throw PreconditionError("cannot split the zero form");
  if (f.degree() % 2) throw PreconditionError("two_squares needs an even degree");
  RootSet rs = f.degree() == 0 ? RootSet{{}, true} : roots(f);
  const bool exact = rs.exact && f.is_exact();
  const Scalar::Mode mode = exact ? Scalar::Mode::exact : Scalar::Mode::floating;
  BinaryForm a({Scalar::one(mode)});
  BinaryForm b = a;
  int count = 0;
  for (const auto& r : rs.roots) {
    BinaryForm l = exact ? r.linear_factor() : r.linear_factor().promoted();
    for (int k = 0; k < r.multiplicity; ++k, ++count) (count % 2 ? b : a) = (count % 2 ? b : a) * l;
  }
  BinaryForm target = exact ? f : f.promoted();
  BinaryForm ab = a * b;
  int lead = 0;
  while (ab[lead].is_zero()) ++lead;
  b = (target[lead] / ab[lead]) * b;
  const Scalar half = exact ? Scalar::rational(1, 2) : Scalar::floating(0.5);
  const Scalar ihalf = half * Scalar::imag_unit(mode);
  return {half * (a + b), ihalf * (a - b)};
}

}  // namespace waring
