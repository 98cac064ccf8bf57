"""Formal verification of the parametric families.

Instead of scanning a concrete carrier, a family is substituted into its
equation as a template over commuting indeterminates; the generators are
rewritten at xy (m multiplies, l adds, d obeys the product rule), both
sides expand into canonical rational polynomials, and the coefficients of
each indeterminate monomial become parameter constraints.
"""
from fractions import Fraction

from fnq.eqdsl import parse_equation
from fnq.symbolic import (check_identity, degree2_ansatz_family,
                          derive_constraints, family_substitute,
                          mixed_family, prop4_family, sofy_shift_family,
                          thm5_family)
from fnq.theorems import pexider_equation

print("rank-3 family (one multiplicative and one logarithmic generator):")
fam = thm5_family()
constraints = derive_constraints(fam, pexider_equation())
print(f"  constraints: {sorted(c.render() for c in constraints)}")
print(f"  side conditions (annotations): {fam.side_conditions}")
good = {"b2": 1, "b3": 1, "g1": 1, "g2": 0, "g3": -1}
bad = dict(good, g3=0)
print(f"  identity at g3 = -b2*b3: {check_identity(fam, pexider_equation(), good)}")
print(f"  identity at g3 = 0:      {check_identity(fam, pexider_equation(), bad)}")

print("\nthe linear-plus-Leibniz family is unconditional:")
fam4 = prop4_family()
ast4 = parse_equation(fam4.equation_text)
print(f"  constraints: {sorted(c.render() for c in derive_constraints(fam4, ast4))}")

print("\nthe shift family h = m - id reproduces the equation exactly:")
fam_s = sofy_shift_family()
ast_s = parse_equation(fam_s.equation_text)
lhs, rhs = family_substitute(fam_s, ast_s)
print(f"  lhs == rhs after expansion: {lhs == rhs}")
print(f"  both sides: {lhs.render()}")

print("\ntwo-logarithm ansatz: the comparison forces the l-coefficients of")
print("h to vanish and ties f to h and k:")
fam2 = degree2_ansatz_family()
ast2 = parse_equation(fam2.equation_text)
for c in sorted(derive_constraints(fam2, ast2), key=lambda c: c.render()):
    print(f"  {c.render()} = 0")

print("\nthe dependent-pair family uses u for the inverse square of the")
print("ratio; its constraint set is exactly that reparameterization:")
fam_m = mixed_family()
ast_m = parse_equation(fam_m.equation_text)
for c in sorted(derive_constraints(fam_m, ast_m), key=lambda c: c.render()):
    print(f"  {c.render()} = 0")
print(f"  u = 1/lam^2 satisfies them: "
      f"{check_identity(fam_m, ast_m, {'lam': 2, 'u': Fraction(1, 4), 'gam': 3})}")
