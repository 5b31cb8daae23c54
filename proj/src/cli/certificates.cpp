#include "waring/certificates.hpp"

#include "waring/errors.hpp"
#include "waring/parse.hpp"

namespace waring {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("certificate is missing \"") + key + "\"");
  return j.at(key);
}

std::string text_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

Json residual_json(double r, bool exact) {
  if (exact) return r == 0 ? Json("0") : Json(r);
  return Json(r);
}

CertificateCheck finish(std::string kind, double residual, bool exact, double tol) {
  CertificateCheck c;
  c.kind = std::move(kind);
  c.exact = exact;
  c.residual = residual;
  c.ok = exact ? residual == 0 : residual <= tol;
  c.message = c.ok ? "ok" : "right-hand side does not reproduce the input";
  return c;
}

CertificateCheck check_power_sum(const Json& doc, double tol) {
  const auto names = doc.contains("variables") ? doc.at("variables").get<std::vector<std::string>>()
                                               : std::vector<std::string>{"x", "y"};
  MultiForm input = parse_form(text_field(doc, "input"), names);
  Decomposition dec;
  for (const auto& t : field(doc, "terms")) {
    PowerTerm term{scalar_from_json(field(t, "lambda")), parse_form(text_field(t, "base"), names),
                   int_field(t, "exponent")};
    if (term.exponent < 1 || term.base.degree() * term.exponent != input.degree())
      throw ParseError("term degree does not match the input degree");
    dec.terms.push_back(std::move(term));
  }
  const bool exact = dec.is_exact() && input.is_exact();
  return finish("power-sum", dec.residual(input), exact, tol);
}

CertificateCheck check_sextic(const Json& doc, double tol) {
  BinaryForm input = parse_binary(text_field(doc, "input"));
  CubesCertificate cert;
  for (const auto& t : field(doc, "terms")) {
    std::vector<Scalar> q;
    for (const auto& c : field(t, "q")) q.push_back(scalar_from_json(c));
    if (q.size() != 3) throw ParseError("sextic-cubes terms need three q coefficients");
    cert.terms.push_back({scalar_from_json(field(t, "mu")), BinaryForm(q)});
  }
  const bool exact = cert.is_exact() && input.is_exact();
  return finish("sextic-cubes", cert.residual(input), exact, tol);
}

CertificateCheck check_canonical(const Json& doc, double tol) {
  BinaryForm input = parse_binary(text_field(doc, "input"));
  CanonicalForm cf;
  cf.k = int_field(doc, "k");
  cf.d = int_field(doc, "d");
  for (const auto& p : field(doc, "parts")) {
    BinaryForm part = parse_binary(p.get<std::string>());
    if (part.degree() != cf.d) {
      // A zero part parses with degree 0.
      if (!part.is_zero()) throw ParseError("canonical part of the wrong degree");
      part = BinaryForm::zero(cf.d, part.mode());
    }
    cf.parts.push_back(part);
    cf.has_yd_term.push_back(true);
  }
  if (static_cast<int>(cf.parts.size()) != cf.k) throw ParseError("canonical form needs k parts");
  BinaryForm rhs = cf.reconstruct();
  const bool exact = rhs.is_exact() && input.is_exact();
  const double r = exact ? (rhs == input ? 0.0 : 1.0) : MultiForm::relative_distance(rhs.to_multi(), input.to_multi());
  return finish("canonical", r, exact, tol);
}

}  // namespace

Json scalar_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_number()) return Scalar::floating(j.get<double>());
  throw ParseError("expected a number or a number string");
}

Json power_sum_json(const Decomposition& dec, const MultiForm& input) {
  const auto names = default_variable_names(input.num_vars());
  Json terms = Json::array();
  for (const auto& t : dec.terms)
    terms.push_back({{"lambda", scalar_json(t.lambda)}, {"base", t.base.str(names)}, {"exponent", t.exponent}});
  const bool exact = dec.is_exact() && input.is_exact();
  return {{"schema", kSchemaVersion},
          {"kind", "power-sum"},
          {"input", input.str(names)},
          {"variables", names},
          {"method", dec.method},
          {"heuristic", dec.heuristic},
          {"exact", exact},
          {"length", dec.size()},
          {"terms", terms},
          {"residual", residual_json(dec.residual(input), exact)}};
}

Json sextic_cubes_json(const CubesCertificate& cert, const BinaryForm& input) {
  Json subs = Json::array();
  for (const auto& s : cert.substitutions) {
    Json rows = Json::array();
    for (const auto& row : s.rows()) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(scalar_json(v));
      rows.push_back(r);
    }
    subs.push_back(rows);
  }
  Json terms = Json::array();
  for (const auto& t : cert.terms) {
    Json q = Json::array();
    for (const auto& c : t.q.coeffs()) q.push_back(scalar_json(c));
    terms.push_back({{"mu", scalar_json(t.mu)}, {"q", q}});
  }
  const bool exact = cert.is_exact() && input.is_exact();
  return {{"schema", kSchemaVersion},
          {"kind", "sextic-cubes"},
          {"input", input.str()},
          {"branch", to_string(cert.branch)},
          {"shear", cert.shear ? Json(*cert.shear) : Json(nullptr)},
          {"substitutions", subs},
          {"exact", exact},
          {"terms", terms},
          {"residual", residual_json(cert.residual(input), exact)}};
}

Json canonical_json(const CanonicalForm& cf, const BinaryForm& input) {
  Json parts = Json::array();
  for (const auto& p : cf.parts) parts.push_back(p.str());
  BinaryForm rhs = cf.reconstruct();
  const bool exact = rhs.is_exact() && input.is_exact();
  const double r = exact ? (rhs == input ? 0.0 : 1.0) : MultiForm::relative_distance(rhs.to_multi(), input.to_multi());
  return {{"schema", kSchemaVersion},
          {"kind", "canonical"},
          {"input", input.str()},
          {"k", cf.k},
          {"d", cf.d},
          {"variant", to_string(cf.variant)},
          {"parameters", cf.parameter_count()},
          {"exact", exact},
          {"parts", parts},
          {"residual", residual_json(r, exact)}};
}

Json krank_json(const BinaryForm& input, int k, const KrankUpper& up, const KrankLower& lo) {
  Json strata = Json::array();
  for (const auto& s : lo.strata)
    strata.push_back({{"name", s.name},
                      {"samples", s.samples},
                      {"minCatRank", s.min_cat_rank},
                      {"waringLower", s.waring_lower}});
  return {{"schema", kSchemaVersion},
          {"kind", "krank"},
          {"input", input.str()},
          {"k", k},
          {"d", input.degree() / k},
          {"upper", up.bound},
          {"upperSource", up.source},
          {"heuristic", up.heuristic},
          {"pointsTried", up.points_tried},
          {"upperCertificate", power_sum_json(up.certificate, input.to_multi())},
          {"lower", lo.bound},
          {"lowerConfidence", to_string(lo.confidence)},
          {"strata", strata},
          {"note", lo.note}};
}

Json monomial_json(const MonomialFactorization& fac, const Decomposition& dec) {
  return {{"schema", kSchemaVersion},
          {"kind", "monomial-factor"},
          {"exponents", fac.a},
          {"k", fac.k},
          {"d", fac.d},
          {"q", fac.q},
          {"r", fac.r},
          {"b", fac.b},
          {"bi", fac.b_i},
          {"m1", fac.m1},
          {"m2", fac.m2},
          {"certificate", power_sum_json(dec, MultiForm::monomial(fac.a))}};
}

CertificateCheck check_certificate(const Json& doc, double tol) {
  if (!doc.is_object()) throw ParseError("certificate must be a JSON object");
  if (doc.contains("schema") && doc.at("schema") != kSchemaVersion)
    throw ParseError("unsupported certificate schema " + doc.at("schema").dump());
  const std::string kind = text_field(doc, "kind");
  if (kind == "power-sum") return check_power_sum(doc, tol);
  if (kind == "sextic-cubes") return check_sextic(doc, tol);
  if (kind == "canonical") return check_canonical(doc, tol);
  if (kind == "krank") {
    auto c = check_power_sum(field(doc, "upperCertificate"), tol);
    c.kind = kind;
    if (c.ok && static_cast<int>(field(doc, "upperCertificate").at("terms").size()) > int_field(doc, "upper")) {
      c.ok = false;
      c.message = "certificate has more terms than the claimed upper bound";
    }
    return c;
  }
  if (kind == "monomial-factor") {
    auto c = check_power_sum(field(doc, "certificate"), tol);
    c.kind = kind;
    return c;
  }
  throw ParseError("unknown certificate kind \"" + kind + "\"");
}

}  // namespace waring
