#pragma once

#include <string>
#include <vector>

#include "waring/forms.hpp"

namespace waring {

/// lambda * base^exponent
struct PowerTerm {
  Scalar lambda;
  MultiForm base;
  int exponent;

  MultiForm expand() const;
};

/// A sum of scaled powers together with where it came from.
struct Decomposition {
  std::vector<PowerTerm> terms;
  /// Short tag of the producing algorithm ("sylvester", "monomial", ...).
  std::string method;
  /// True when the result is only a heuristic upper bound.
  bool heuristic = false;

  std::size_t size() const noexcept { return terms.size(); }
  /// Sum of the terms; floating if any term is floating. An empty sum is the
  /// zero form with the given shape.
  MultiForm expand(int num_vars, int degree) const;
  /// Relative coefficient distance to the target (0 for an exact match).
  double residual(const MultiForm& target) const;
  /// Exact equality in exact mode, residual <= tol otherwise.
  bool verify(const MultiForm& target, double tol = 1e-8) const;
  bool is_exact() const;
  std::string str(const std::vector<std::string>& names = {}) const;
};

using WaringDecomposition = Decomposition;

}  // namespace waring
