#include "waring/structured.hpp"

#include <algorithm>
#include <numeric>

#include "waring/errors.hpp"

namespace waring {

MonomialFactorization monomial_k_factor(const Exponent& a, int k) {
  if (a.empty()) throw PreconditionError("empty exponent vector");
  if (k < 1) throw PreconditionError("k must be positive");
  for (int v : a)
    if (v < 0) throw PreconditionError("negative exponent");
  const int n = static_cast<int>(a.size());
  const int total = std::accumulate(a.begin(), a.end(), 0);
  if (total == 0 || total % k != 0) throw PreconditionError("k must divide the degree of the monomial");
  MonomialFactorization out;
  out.a = a;
  out.k = k;
  out.d = total / k;
  const int d = out.d;
  if (k == 1) {
    out.m1 = out.m2 = a;
    out.q.assign(a.size(), 0);
    out.r = a;
    out.b_i.assign(a.size(), 0);
    return out;
  }
  if ((k - 2) * n > d)
    throw PreconditionError("needs (k-2) n <= d, got (k-2) n = " + std::to_string((k - 2) * n) +
                            " > d = " + std::to_string(d));
  for (int v : a) {
    out.q.push_back(v / (k - 1));
    out.r.push_back(v % (k - 1));
  }
  const int rsum = std::accumulate(out.r.begin(), out.r.end(), 0);
  out.b = (d - rsum) / (k - 1);
  // Largest q first, lower index on ties.
  std::vector<int> order(a.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return out.q[i] > out.q[j]; });
  out.b_i.assign(a.size(), 0);
  int left = out.b;
  for (int i : order) {
    const int take = std::min(left, out.q[static_cast<std::size_t>(i)]);
    out.b_i[static_cast<std::size_t>(i)] = take;
    left -= take;
  }
  if (left != 0) throw InternalConsistencyError("monomial factorization ran out of room");
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.m1.push_back(out.r[i] + out.b_i[i] * (k - 1));
    out.m2.push_back(out.q[i] - out.b_i[i]);
  }
  return out;
}

Decomposition monomial_krank_upper(const Exponent& a, int k) {
  const MonomialFactorization fac = monomial_k_factor(a, k);
  Decomposition dec;
  dec.method = "monomial";
  const MultiForm u = MultiForm::monomial(fac.m1);
  const MultiForm v = MultiForm::monomial(fac.m2);
  if (fac.m1 == fac.m2) {
    dec.terms.push_back({Scalar(1), u, k});
    return dec;
  }
  const Scalar k2(static_cast<long>(k) * k);
  for (int j = 0; j < k; ++j) {
    const Scalar z = root_of_unity(k, j);
    const Scalar zinv = root_of_unity(k, -j);
    const Scalar::Mode m = z.mode();
    MultiForm base = u.promoted_if(m).scaled(z) + v.promoted_if(m);
    dec.terms.push_back({zinv / k2.promoted_if(m), base, k});
  }
  return dec;
}

std::string to_string(CanonicalVariant v) { return v == CanonicalVariant::unique ? "unique" : "relaxed"; }

BinaryForm CanonicalForm::reconstruct() const {
  Scalar::Mode mode = is_exact() ? Scalar::Mode::exact : Scalar::Mode::floating;
  BinaryForm out = BinaryForm::zero(k * d, mode);
  for (int j = 0; j < static_cast<int>(parts.size()); ++j) {
    BinaryForm term = BinaryForm::monomial(0, j * d).promoted_if(mode) *
                      parts[static_cast<std::size_t>(j)].promoted_if(mode).pow(k - j);
    out = out + term;
  }
  return out;
}

bool CanonicalForm::is_exact() const {
  return std::all_of(parts.begin(), parts.end(), [](const BinaryForm& p) { return p.is_exact(); });
}

int CanonicalForm::parameter_count() const {
  int total = 0;
  for (std::size_t j = 0; j < parts.size(); ++j) total += has_yd_term[j] ? d + 1 : d;
  return total;
}

namespace {

bool negligible(const Scalar& v, double scale) {
  return v.is_exact() ? v.is_zero() : v.abs() <= 1e-12 * std::max(scale, 1e-300);
}

// Coefficients of h^e mod u^len for a truncated series h.
std::vector<Scalar> series_pow(const std::vector<Scalar>& h, int e, std::size_t len) {
  std::vector<Scalar> out(len, Scalar::zero(h.front().mode()));
  out[0] = Scalar::one(h.front().mode());
  for (int t = 0; t < e; ++t) {
    std::vector<Scalar> next(len, Scalar::zero(h.front().mode()));
    for (std::size_t i = 0; i < len; ++i) {
      if (out[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < len && j < h.size(); ++j) next[i + j] += out[i] * h[j];
    }
    out = std::move(next);
  }
  return out;
}

// p_j with zero y^d term such that p_j^e agrees with r in its first d coefficients.
BinaryForm leading_part(const BinaryForm& r, int e, int d) {
  const Scalar a0 = r[0];
  // Normalized series h = 1 + b_1 u + ... + b_(d-1) u^(d-1), solved one
  // coefficient at a time: [u^m] h^e = e b_m + (terms in b_1..b_(m-1)).
  std::vector<Scalar> h(static_cast<std::size_t>(d), Scalar::zero(r.mode()));
  h[0] = Scalar::one(r.mode());
  for (int m = 1; m < d; ++m) {
    const Scalar current = series_pow(h, e, static_cast<std::size_t>(m) + 1)[static_cast<std::size_t>(m)];
    h[static_cast<std::size_t>(m)] = (r[m] / a0 - current) / Scalar(e).promoted_if(r.mode());
  }
  // The scalar is the principal e-th root of a0: p_j^e must start with a0 x^(ed).
  const Scalar s = principal_root(a0, e);
  const Scalar::Mode mode = (s.is_exact() && r.is_exact()) ? Scalar::Mode::exact : Scalar::Mode::floating;
  std::vector<Scalar> coeffs;
  for (int m = 0; m < d; ++m) coeffs.push_back(s.promoted_if(mode) * h[static_cast<std::size_t>(m)].promoted_if(mode));
  coeffs.push_back(Scalar::zero(mode));
  return BinaryForm(coeffs);
}

// (r - p^e) / y^d, with the cancelled leading coefficients dropped.
BinaryForm next_remainder(const BinaryForm& r, const BinaryForm& p, int e, int d) {
  const Scalar::Mode mode = (r.is_exact() && p.is_exact()) ? Scalar::Mode::exact : Scalar::Mode::floating;
  BinaryForm diff = r.promoted_if(mode) - p.promoted_if(mode).pow(e);
  if (mode == Scalar::Mode::exact) return diff.divide_by_y_power(d);
  std::vector<Scalar> rest(diff.coeffs().begin() + d, diff.coeffs().end());
  return BinaryForm(rest);
}

}  // namespace

CanonicalForm canonical_form(const BinaryForm& p, int k, int d, CanonicalVariant variant) {
  if (k < 1 || d < 1) throw PreconditionError("canonical form needs k >= 1 and d >= 1");
  if (p.degree() != k * d)
    throw PreconditionError("canonical form needs degree k*d = " + std::to_string(k * d) + ", got " +
                            std::to_string(p.degree()));
  CanonicalForm out;
  out.k = k;
  out.d = d;
  out.variant = variant;
  const double scale = std::max(p.norm(), 1e-300);
  BinaryForm r = p;
  for (int j = 0; j < k; ++j) {
    const int e = k - j;
    if (e == 1) {
      out.parts.push_back(r);
      out.has_yd_term.push_back(true);
      break;
    }
    if (r.is_exact() ? r.is_zero() : r.norm() <= 1e-13 * scale) {
      // Nothing left: the remaining parts vanish.
      for (int t = j; t < k; ++t) {
        out.parts.push_back(BinaryForm::zero(d, r.mode()));
        out.has_yd_term.push_back(t == k - 1);
      }
      break;
    }
    if (negligible(r[0], scale)) {
      if (variant == CanonicalVariant::unique || j == 0)
        throw PreconditionError("canonical form: leading coefficient vanishes at level " + std::to_string(j) +
                                (j == 0 ? " (the x^kd coefficient is zero)" : ""));
      throw InternalConsistencyError("relaxed canonical form missed a repair at level " + std::to_string(j));
    }
    BinaryForm pj = leading_part(r, e, d);
    BinaryForm next = next_remainder(r, pj, e, d);
    bool yd = false;
    if (variant == CanonicalVariant::relaxed && e - 1 >= 2 && negligible(next[0], scale) &&
        !(next.is_exact() ? next.is_zero() : next.norm() <= 1e-13 * scale)) {
      // Adding t y^d to p_j moves the next leading coefficient by -e t s^(e-1).
      std::vector<Scalar> c(pj.coeffs().begin(), pj.coeffs().end());
      c.back() = Scalar::one(pj.mode());
      pj = BinaryForm(c);
      next = next_remainder(r, pj, e, d);
      yd = true;
    }
    out.parts.push_back(pj);
    out.has_yd_term.push_back(yd);
    r = next;
  }
  return out;
}

std::vector<Scalar> UnivariateCanonical::reconstruct() const {
  bool exact = lambda.is_exact();
  for (const auto& part : parts)
    for (const auto& c : part) exact = exact && c.is_exact();
  const Scalar::Mode mode = exact ? Scalar::Mode::exact : Scalar::Mode::floating;
  const int n = k * d;
  std::vector<Scalar> out(static_cast<std::size_t>(n) + 1, Scalar::zero(mode));
  out[static_cast<std::size_t>(n)] += lambda.promoted_if(mode);
  for (int j = 0; j < static_cast<int>(parts.size()); ++j) {
    std::vector<Scalar> acc{Scalar::one(mode)};
    for (int t = 0; t < k - j; ++t) {
      std::vector<Scalar> next(acc.size() + parts[static_cast<std::size_t>(j)].size() - 1, Scalar::zero(mode));
      for (std::size_t a = 0; a < acc.size(); ++a)
        for (std::size_t b = 0; b < parts[static_cast<std::size_t>(j)].size(); ++b)
          next[a + b] += acc[a] * parts[static_cast<std::size_t>(j)][b].promoted_if(mode);
      acc = std::move(next);
    }
    for (std::size_t i = 0; i < acc.size() && i < out.size(); ++i) out[i] += acc[i];
  }
  return out;
}

UnivariateCanonical univariate_canonical(const std::vector<Scalar>& coeffs, int k, int d) {
  if (k < 1 || d < 1) throw PreconditionError("canonical form needs k >= 1 and d >= 1");
  const int n = k * d;
  if (static_cast<int>(coeffs.size()) > n + 1) {
    for (std::size_t i = static_cast<std::size_t>(n) + 1; i < coeffs.size(); ++i)
      if (!coeffs[i].is_zero()) throw PreconditionError("polynomial degree exceeds k*d");
  }
  bool exact = true;
  for (const auto& c : coeffs) exact = exact && c.is_exact();
  const Scalar::Mode mode = exact ? Scalar::Mode::exact : Scalar::Mode::floating;
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1, Scalar::zero(mode));
  for (std::size_t i = 0; i < coeffs.size() && i <= static_cast<std::size_t>(n); ++i) c[i] = coeffs[i].promoted_if(mode);

  UnivariateCanonical out;
  out.k = k;
  out.d = d;
  out.lambda = Scalar::zero(mode);
  out.parts.assign(static_cast<std::size_t>(k), std::vector<Scalar>(static_cast<std::size_t>(d) + 1, Scalar::zero(mode)));
  int top = -1;
  for (int i = n; i >= 0; --i)
    if (!c[static_cast<std::size_t>(i)].is_zero()) {
      top = i;
      break;
    }
  if (top < 0) return out;
  if (top == n && std::all_of(c.begin(), c.end() - 1, [](const Scalar& v) { return v.is_zero(); })) {
    out.lambda = c.back();
    return out;
  }
  if (top <= d) {
    for (int i = 0; i <= top; ++i) out.parts.back()[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
    return out;
  }
  // Homogenize: x^i -> x^i y^(n-i), so coeffs[j] of the binary form is c[n-j].
  if (c.back().is_zero()) {
    out.lambda = Scalar(-1).promoted_if(mode);
    c.back() = Scalar::one(mode);
  }
  std::vector<Scalar> bin(c.rbegin(), c.rend());
  CanonicalForm cf = canonical_form(BinaryForm(bin), k, d, CanonicalVariant::relaxed);
  const Scalar::Mode out_mode = cf.is_exact() && mode == Scalar::Mode::exact ? Scalar::Mode::exact : Scalar::Mode::floating;
  out.lambda = out.lambda.promoted_if(out_mode);
  for (int j = 0; j < k; ++j) {
    const BinaryForm& pj = cf.parts[static_cast<std::size_t>(j)];
    for (int i = 0; i <= d; ++i) out.parts[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = pj[d - i].promoted_if(out_mode);
  }
  return out;
}

}  // namespace waring
