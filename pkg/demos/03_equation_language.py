"""The equation DSL: parsing, evaluation, and the y=1 pivot.

Equations are plain text over x, y, integer literals, scalar parameters
and unary unknown functions.  Multiplication is never assumed commutative:
evaluation follows the textual operand order, so the same AST is sound
over matrix carriers.
"""
import json

import fnq
from fnq.eqdsl import (Binding, ast_to_json, eval_side, expr_to_text,
                       parse_equation, pivot_reduce)

ast = parse_equation("f(x*y)=h(x)*h(y)+x*k(y)+k(x)*y")
print(f"equation:       {fnq.equation_to_text(ast)}")
print(f"free functions: {ast.free_functions}")

shifted = parse_equation("h(x*y)=h(x)*y+x*h(y)+e*h(x)*h(y)")
print(f"parameters:     {shifted.free_params} (bound to ring elements later)")

print("\nAST dump (lhs):")
print(json.dumps(ast_to_json(ast)["lhs"], indent=2))

# evaluation is table arithmetic, inside out
z6 = fnq.zn(6)
binding = Binding(functions={"f": fnq.identity_map(z6),
                             "h": fnq.identity_map(z6),
                             "k": fnq.zero_map(z6)}, params={})
print(f"\nrhs at (x, y) = (2, 3) over Z_6 with h = id, k = 0: "
      f"{eval_side(ast.rhs, binding, 2, 3, z6)}  (2*3 = 6 = 0)")

# operand order matters on a noncommutative carrier
ut2 = fnq.ut2(2)
left = parse_equation("g(x*y)=f(x)*y").rhs
right = parse_equation("g(x*y)=y*f(x)").rhs
b = Binding(functions={"f": fnq.identity_map(ut2)}, params={})
x, y = 2, 1
print(f"\non UT2(2) with f = id, at x={ut2.names[x]}, y={ut2.names[y]}:")
print(f"  f(x)*y = {ut2.names[eval_side(left, b, x, y, ut2)]}")
print(f"  y*f(x) = {ut2.names[eval_side(right, b, x, y, ut2)]}")

# the pivot substitutes y = 1 and tries to isolate the outer unknown
print("\npivot reduction at y = 1:")
for text, fn in [("f(x*y)=h(x)*h(y)+x*k(y)+k(x)*y", "f"),
                 ("h(x*y)=h(x)*y+x*h(y)+h(x)*h(y)", "h"),
                 ("f(x*y)=f(x)*y+x*f(y)", "f")]:
    result = pivot_reduce(parse_equation(text), fn)
    kind = type(result).__name__
    print(f"  {text}")
    print(f"    -> {kind}: {expr_to_text(result.expr)}"
          + (" = 0" if kind == "Constraint" else ""))
