#pragma once

#include <vector>

#include "waring/decomposition.hpp"
#include "waring/forms.hpp"
#include "waring/matrix.hpp"

namespace waring {

/// i-th catalecticant of f. Rows are indexed by the degree-i monomials y^a of
/// the dual ring, columns by the degree D-i monomials x^b; the entry is the
/// coefficient of x^b in d^a f (raw derivatives, no factorial scaling).
struct Catalecticant {
  MultiForm source;
  int order = 0;
  std::vector<Exponent> row_monomials;
  std::vector<Exponent> col_monomials;
  ScalarMatrix matrix;

  int rank(double tol = kDefaultRankTol) const;
  /// Basis of the degree-i part of the apolar ideal, as forms in the dual
  /// variables (same variable count as the source).
  std::vector<MultiForm> kernel_forms(double tol = kDefaultRankTol) const;
};

Catalecticant catalecticant(const MultiForm& f, int i);
Catalecticant catalecticant(const BinaryForm& f, int i);

/// max_i rank cat_i(f), a lower bound for the Waring rank.
int catalecticant_lower_bound(const MultiForm& f, double tol = kDefaultRankTol);

struct SylvesterOptions {
  double tol = kDefaultRankTol;
  /// Cap on square-free candidates tried in a degenerate slice.
  int max_candidates = 512;
  /// In a two-dimensional slice, try first the member vanishing at (1:0), so
  /// that even degree forms come out as lambda*x^D plus D/2 other powers.
  bool prefer_x_power = true;
};

/// Minimal-length decomposition of a binary form into D-th powers of linear
/// forms. Exact input stays exact when all points are Gaussian rational.
Decomposition sylvester_decompose(const BinaryForm& f, const SylvesterOptions& opt = {});

/// Decomposition supported on the roots of a square-free apolar form g.
/// Throws PreconditionError if g is not square-free or not apolar to f.
Decomposition decompose_on_apolar(const BinaryForm& f, const BinaryForm& g);

/// A binary cubic as at most three cubes of linear forms. Square-free cubics
/// and cubes go through Sylvester; l1^2 l2 uses 6x^2y = (-x+y)^3 - 2y^3 + (x+y)^3
/// after the change of variables x -> l1, y -> l2.
Decomposition cubic_three_cubes(const BinaryForm& h);

/// Two cubes for a square-free cubic c*l1*l2*l3 through the root-of-unity
/// identity 3ab(w - w^2) xy(ax + by) = (w^2 a x - w b y)^3 - (w a x - w^2 b y)^3.
/// Always floating (w is irrational).
Decomposition cubic_omega_cubes(const BinaryForm& h);

struct TwoSquares {
  BinaryForm g1;
  BinaryForm g2;

  BinaryForm expand() const { return g1 * g1 + g2 * g2; }
};

/// f = g1^2 + g2^2 for an even degree form. The linear factors are dealt
/// alternately into A and B (repeated factors split evenly), f = A*B, and
/// g1 = (A + B)/2, g2 = i(A - B)/2. Exact when the roots are Gaussian rational.
TwoSquares two_squares(const BinaryForm& f);

}  // namespace waring
