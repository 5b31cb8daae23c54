#!/usr/bin/env python3
"""Regenerate src/sextic/discriminant_terms.inc.

Expands the discriminant of the residual cubic c(x, y) of a binary sextic in
the binomial coefficients a0..a6 and divides out the factor -540*a0^6.  The
quotient D(p) is written as a table of (exponent vector, coefficient) rows.

Requires sympy.  Usage: python3 tools/gen_sextic_discriminant.py > out.inc
"""
import sympy as sp

a = sp.symbols("a0:7")
a0, a1, a2, a3, a4, a5, a6 = a

c0 = 20 * a0**3 * (a0**2 * a3 - 3 * a0 * a1 * a2 + 2 * a1**3)
c1 = 5 * a0**3 * (a0**2 * a4 - 5 * a0 * a2**2 + 4 * a1**2 * a2)
c2 = 2 * a0 * (a0**4 * a5 - 25 * a0**2 * a1 * a2**2 + 40 * a0 * a1**3 * a2 - 16 * a1**5)
c3 = a0**5 * a6 - 125 * a0**3 * a2**3 + 300 * a0**2 * a1**2 * a2**2 - 240 * a0 * a1**4 * a2 + 64 * a1**6

A, B, C, D = c0, 3 * c1, 3 * c2, c3
disc = sp.expand(B**2 * C**2 - 4 * A * C**3 - 4 * B**3 * D - 27 * A**2 * D**2 + 18 * A * B * C * D)
quot, rem = sp.div(sp.Poly(disc, *a), sp.Poly(-540 * a0**6, *a))
assert rem.is_zero

terms = sorted(quot.terms(), reverse=True)
print("// Generated by tools/gen_sextic_discriminant.py. Do not edit.")
print("// {exponents of a0..a6}, integer coefficient")
for mono, coeff in terms:
    print("{{%s}, %d}," % (", ".join(map(str, mono)), int(coeff)))
