#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "waring/decomposition.hpp"
#include "waring/forms.hpp"

namespace waring {

/// Binomial coefficients a_0..a_6 of p = sum C(6,k) a_k x^(6-k) y^k.
struct SexticView {
  std::array<Scalar, 7> a;

  static SexticView from_form(const BinaryForm& p);
  BinaryForm form() const;
  bool is_exact() const;
};

/// p = a0 * q^3 + y^3 * c / a0^5 with q monic in x and
/// c = c0 x^3 + 3 c1 x^2 y + 3 c2 x y^2 + c3 y^3.
struct ResidualCubic {
  Scalar a0;
  BinaryForm q;
  BinaryForm c;
};

/// Throws PreconditionError when a0 = 0.
ResidualCubic residual_cubic(const SexticView& p);

/// Discriminant B^2C^2 - 4AC^3 - 4B^3D - 27A^2D^2 + 18ABCD of
/// A x^3 + B x^2 y + C x y^2 + D y^3.
Scalar cubic_discriminant(const BinaryForm& c);

/// D(p) = disc(c) / (-540 a0^6), evaluated from its 128-term expansion.
/// Throws PreconditionError when a0 = 0.
Scalar discriminant_D(const SexticView& p);

/// Binomial coefficients of p(x, T x + y).
SexticView shear_coefficients(const SexticView& p, const Scalar& t);

enum class CubesBranch { zero, generic, cube_residual, p1, p2, y_divisible };
std::string to_string(CubesBranch b);

struct CubeTerm {
  Scalar mu;
  BinaryForm q;
};

/// p = sum mu_i q_i^3, with the q_i already in the input coordinates.
struct CubesCertificate {
  std::vector<CubeTerm> terms;
  /// Changes of variables applied to the input, in order. The working sextic
  /// is p.substitute(s_1).substitute(s_2)...; the terms have been pulled back
  /// through the inverse of the composite.
  std::vector<LinearSubstitution> substitutions;
  CubesBranch branch = CubesBranch::generic;
  /// Shear parameter T when the shear stage ran.
  std::optional<long> shear;

  BinaryForm expand() const;
  bool is_exact() const;
  double residual(const BinaryForm& target) const;
  /// Exact equality for exact certificates, relative residual <= tol otherwise.
  bool verify(const BinaryForm& target, double tol = 1e-8) const;
  /// mu folded into q by the principal cube root (exact when mu is a rational cube).
  CubesCertificate folded() const;
  Decomposition to_decomposition() const;
};

struct ThreeCubesOptions {
  /// Shear the normalized sextic itself instead of the reduced normal form.
  bool direct_shear = false;
  /// Use only this T in the shear stage; PreconditionError if it is not admissible.
  std::optional<long> forced_shear;
  /// Cap on shear candidates 0, 1, -1, 2, -2, ...
  int max_shear_candidates = 200;
};

/// Every binary sextic as a sum of at most three cubes of quadratic forms.
CubesCertificate three_cubes(const BinaryForm& p, const ThreeCubesOptions& opt = {});

}  // namespace waring
