#pragma once

#include <vector>

#include "waring/forms.hpp"

namespace waring {

/// A projective point (x : y) with f(x, y) = 0. Finite roots are normalized to
/// y = 1; the root at infinity is (1 : 0). The matching linear factor of f is
/// y*X - x*Y.
struct ProjectiveRoot {
  Scalar x;
  Scalar y;
  int multiplicity = 1;

  /// The linear form y*X - x*Y vanishing at this point.
  BinaryForm linear_factor() const;
};

struct RootSet {
  std::vector<ProjectiveRoot> roots;
  /// True when every root is an exact Gaussian rational.
  bool exact = false;

  int total_multiplicity() const;
};

/// Projective roots of a nonzero binary form, counted with multiplicity.
/// Exact input returns exact roots when all of them are Gaussian rationals and
/// floating roots otherwise. Deterministic.
RootSet roots(const BinaryForm& f);

/// True iff f has no repeated linear factor. Exact input uses exact gcds; float
/// input uses the normalized resultant of the two partial derivatives with a
/// gray zone that raises AmbiguityError.
bool is_square_free(const BinaryForm& f);

/// Normalized |Res(f_x, f_y)| for a float decision; exposed for diagnostics.
double normalized_discriminant(const BinaryForm& f);

/// Exact gcd of two binary forms over Gaussian rationals, normalized to have
/// leading nonzero coefficient 1.
BinaryForm form_gcd(const BinaryForm& a, const BinaryForm& b);

/// Exact division; throws PreconditionError when b does not divide a.
BinaryForm exact_divide(const BinaryForm& a, const BinaryForm& b);

/// Product of the distinct linear factors of an exact form (up to scalar).
BinaryForm square_free_part(const BinaryForm& f);

/// Residual |f(r)| / ||f|| with the root scaled to unit length.
double root_residual(const BinaryForm& f, const ProjectiveRoot& r);

}  // namespace waring
