#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "waring/decomposition.hpp"
#include "waring/fiber.hpp"
#include "waring/sextic.hpp"
#include "waring/structured.hpp"

namespace waring {

/// Version stamped into every JSON document as "schema".
inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

// Scalars are written as strings: "3/7", "1+2i" when exact, decimals otherwise.
Json scalar_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json power_sum_json(const Decomposition& dec, const MultiForm& input);
Json sextic_cubes_json(const CubesCertificate& cert, const BinaryForm& input);
Json canonical_json(const CanonicalForm& cf, const BinaryForm& input);
Json krank_json(const BinaryForm& input, int k, const KrankUpper& up, const KrankLower& lo);
Json monomial_json(const MonomialFactorization& fac, const Decomposition& dec);

struct CertificateCheck {
  bool ok = false;
  bool exact = false;
  double residual = 0;
  std::string kind;
  std::string message;
};

/// Rebuilds the right-hand side of any certificate written above and compares
/// it with the recorded input. Malformed documents throw ParseError.
CertificateCheck check_certificate(const Json& doc, double tol = 1e-8);

}  // namespace waring
