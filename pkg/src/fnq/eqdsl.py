"""A small DSL for two-variable functional equations.

Grammar (whitespace insignificant, offsets in errors are 1-based bytes)::

    equation := expr "=" expr ;
    expr     := term (("+"|"-") term)* ;
    term     := unary ("*" unary)* ;
    unary    := "-" unary | atom ;
    atom     := "x" | "y" | integer | ident "(" expr ")" | ident | "(" expr ")" ;

A bare identifier (other than ``x``/``y``) is a scalar parameter; an applied
identifier is an unknown function of arity one.  Multiplication is
left-associative and never assumed commutative: evaluation respects the
textual operand order, so the DSL is sound over noncommutative rings.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .algebra import Ring
from .errors import ArityError, EquationSyntaxError, UnboundName

# --------------------------------------------------------------------- AST


@dataclass(frozen=True)
class Var:
    name: str  # "x" or "y"


@dataclass(frozen=True)
class Param:
    name: str


@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class FnApp:
    name: str
    arg: "Expr"


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


Expr = Union[Var, Param, IntLit, FnApp, Add, Sub, Mul, Neg]


@dataclass(frozen=True)
class EquationAst:
    lhs: Expr
    rhs: Expr
    free_functions: tuple[str, ...]
    free_params: tuple[str, ...]


@dataclass
class Binding:
    """Concrete tables and parameter elements for an equation's free names."""

    functions: dict
    params: dict


# ------------------------------------------------------------------ parser

_SYMBOLS = set("+-*()=")


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in _SYMBOLS:
            tokens.append((c, c, i + 1))
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i + 1))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("ident", text[i:j], i + 1))
            i = j
            continue
        raise EquationSyntaxError(f"unexpected character {c!r}", i + 1)
    tokens.append(("end", "", n + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.peek()
        if tok[0] != kind:
            raise EquationSyntaxError(
                f"expected {kind!r}, found {tok[1] or 'end of input'!r}", tok[2])
        return self.advance()

    def parse_equation(self) -> tuple[Expr, Expr]:
        lhs = self.parse_expr()
        self.expect("=")
        rhs = self.parse_expr()
        tok = self.peek()
        if tok[0] != "end":
            raise EquationSyntaxError(f"unexpected trailing {tok[1]!r}", tok[2])
        return lhs, rhs

    def parse_expr(self) -> Expr:
        node = self.parse_term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.parse_term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def parse_term(self) -> Expr:
        node = self.parse_unary()
        while self.peek()[0] == "*":
            self.advance()
            node = Mul(node, self.parse_unary())
        return node

    def parse_unary(self) -> Expr:
        if self.peek()[0] == "-":
            self.advance()
            return Neg(self.parse_unary())
        return self.parse_atom()

    def parse_atom(self) -> Expr:
        kind, value, offset = self.peek()
        if kind == "int":
            self.advance()
            return IntLit(int(value))
        if kind == "(":
            self.advance()
            inner = self.parse_expr()
            self.expect(")")
            return inner
        if kind == "ident":
            self.advance()
            if value in ("x", "y"):
                return Var(value)
            if self.peek()[0] == "(":
                self.advance()
                arg = self.parse_expr()
                self.expect(")")
                return FnApp(value, arg)
            return Param(value)
        raise EquationSyntaxError(
            f"expected an expression, found {value or 'end of input'!r}", offset)


def _collect_names(expr: Expr, functions: list[str], params: list[str]):
    if isinstance(expr, FnApp):
        if expr.name not in functions:
            functions.append(expr.name)
        _collect_names(expr.arg, functions, params)
    elif isinstance(expr, Param):
        if expr.name not in params:
            params.append(expr.name)
    elif isinstance(expr, (Add, Sub, Mul)):
        _collect_names(expr.left, functions, params)
        _collect_names(expr.right, functions, params)
    elif isinstance(expr, Neg):
        _collect_names(expr.operand, functions, params)


def parse_equation(text: str) -> EquationAst:
    """Parse equation text into an AST with its free-name inventory."""
    lhs, rhs = _Parser(text).parse_equation()
    functions: list[str] = []
    params: list[str] = []
    _collect_names(lhs, functions, params)
    _collect_names(rhs, functions, params)
    clash = set(functions) & set(params)
    if clash:
        raise ArityError(
            f"{sorted(clash)} used both as function and as parameter")
    return EquationAst(lhs, rhs, tuple(functions), tuple(params))


# ---------------------------------------------------------- pretty printer

def expr_to_text(expr: Expr) -> str:
    """Render an expression so that parsing the text reproduces it exactly."""

    def walk(e: Expr, parent_prec: int) -> str:
        if isinstance(e, (Var, Param)):
            return e.name
        if isinstance(e, IntLit):
            return str(e.value)
        if isinstance(e, FnApp):
            return f"{e.name}({walk(e.arg, 0)})"
        if isinstance(e, Neg):
            if isinstance(e.operand, (Add, Sub, Mul)):
                inner = f"({walk(e.operand, 0)})"
            else:
                inner = walk(e.operand, 3)
            text = f"-{inner}"
            return f"({text})" if parent_prec >= 2 else text
        if isinstance(e, (Add, Sub)):
            op = "+" if isinstance(e, Add) else "-"
            # a right operand that is itself a sum needs explicit grouping
            text = f"{walk(e.left, 1)}{op}{walk(e.right, 2)}"
            return f"({text})" if parent_prec >= 2 else text
        if isinstance(e, Mul):
            text = f"{walk(e.left, 2)}*{walk(e.right, 3)}"
            return f"({text})" if parent_prec >= 3 else text
        raise TypeError(f"not an expression node: {e!r}")

    return walk(expr, 0)


def equation_to_text(ast: EquationAst) -> str:
    return f"{expr_to_text(ast.lhs)}={expr_to_text(ast.rhs)}"


def expr_to_json(expr: Expr) -> dict:
    """Debug dump of an expression tree as plain JSON-ready objects."""
    if isinstance(expr, Var):
        return {"node": "var", "name": expr.name}
    if isinstance(expr, Param):
        return {"node": "param", "name": expr.name}
    if isinstance(expr, IntLit):
        return {"node": "int", "value": expr.value}
    if isinstance(expr, FnApp):
        return {"node": "apply", "name": expr.name,
                "arg": expr_to_json(expr.arg)}
    if isinstance(expr, (Add, Sub, Mul)):
        op = {Add: "add", Sub: "sub", Mul: "mul"}[type(expr)]
        return {"node": op, "left": expr_to_json(expr.left),
                "right": expr_to_json(expr.right)}
    if isinstance(expr, Neg):
        return {"node": "neg", "operand": expr_to_json(expr.operand)}
    raise TypeError(f"not an expression node: {expr!r}")


def ast_to_json(ast: EquationAst) -> dict:
    return {
        "text": equation_to_text(ast),
        "free_functions": list(ast.free_functions),
        "free_params": list(ast.free_params),
        "lhs": expr_to_json(ast.lhs),
        "rhs": expr_to_json(ast.rhs),
    }


# -------------------------------------------------------------- evaluation

def eval_side(side: Expr, binding: Binding, x: int, y: int, ring: Ring) -> int:
    """Evaluate one side at concrete elements, inside out.

    Integer literals are embedded as ``n*1``; parameters evaluate to their
    bound carrier index; all arithmetic happens through the ring tables in
    textual operand order.
    """
    if isinstance(side, Var):
        return x if side.name == "x" else y
    if isinstance(side, IntLit):
        return ring.int_embed(side.value)
    if isinstance(side, Param):
        try:
            return binding.params[side.name]
        except KeyError:
            raise UnboundName(f"parameter {side.name!r} is not bound") from None
    if isinstance(side, FnApp):
        try:
            table = binding.functions[side.name]
        except KeyError:
            raise UnboundName(f"function {side.name!r} is not bound") from None
        arg = eval_side(side.arg, binding, x, y, ring)
        return table(arg)
    if isinstance(side, Add):
        return int(ring.add[eval_side(side.left, binding, x, y, ring),
                            eval_side(side.right, binding, x, y, ring)])
    if isinstance(side, Sub):
        return ring.sub(eval_side(side.left, binding, x, y, ring),
                        eval_side(side.right, binding, x, y, ring))
    if isinstance(side, Mul):
        return int(ring.mul[eval_side(side.left, binding, x, y, ring),
                            eval_side(side.right, binding, x, y, ring)])
    if isinstance(side, Neg):
        return int(ring.neg[eval_side(side.operand, binding, x, y, ring)])
    raise TypeError(f"not an expression node: {side!r}")


# ----------------------------------------------------------- pivot at y=1

@dataclass(frozen=True)
class Definition:
    """The pivot unknown at x equals this expression (evaluated at y=1)."""

    expr: Expr


@dataclass(frozen=True)
class Constraint:
    """Residual identity (expression = 0) left after substituting y=1."""

    expr: Expr


@dataclass(frozen=True)
class NotReducible:
    reason: str


PivotResult = Union[Definition, Constraint, NotReducible]


def substitute(expr: Expr, name: str, replacement: Expr) -> Expr:
    if isinstance(expr, Var):
        return replacement if expr.name == name else expr
    if isinstance(expr, (Param, IntLit)):
        return expr
    if isinstance(expr, FnApp):
        return FnApp(expr.name, substitute(expr.arg, name, replacement))
    if isinstance(expr, Add):
        return Add(substitute(expr.left, name, replacement),
                   substitute(expr.right, name, replacement))
    if isinstance(expr, Sub):
        return Sub(substitute(expr.left, name, replacement),
                   substitute(expr.right, name, replacement))
    if isinstance(expr, Mul):
        return Mul(substitute(expr.left, name, replacement),
                   substitute(expr.right, name, replacement))
    if isinstance(expr, Neg):
        return Neg(substitute(expr.operand, name, replacement))
    raise TypeError(f"not an expression node: {expr!r}")


def _terms(expr: Expr, sign: int = 1) -> list[tuple[int, Expr]]:
    if isinstance(expr, Add):
        return _terms(expr.left, sign) + _terms(expr.right, sign)
    if isinstance(expr, Sub):
        return _terms(expr.left, sign) + _terms(expr.right, -sign)
    if isinstance(expr, Neg):
        return _terms(expr.operand, -sign)
    return [(sign, expr)]


def _strip_ones(expr: Expr) -> Expr:
    """Normal form for term matching: drop multiplications by literal 1."""
    if isinstance(expr, Mul):
        left = _strip_ones(expr.left)
        right = _strip_ones(expr.right)
        if left == IntLit(1):
            return right
        if right == IntLit(1):
            return left
        return Mul(left, right)
    if isinstance(expr, FnApp):
        return FnApp(expr.name, _strip_ones(expr.arg))
    if isinstance(expr, Add):
        return Add(_strip_ones(expr.left), _strip_ones(expr.right))
    if isinstance(expr, Sub):
        return Sub(_strip_ones(expr.left), _strip_ones(expr.right))
    if isinstance(expr, Neg):
        return Neg(_strip_ones(expr.operand))
    return expr


def _contains_fn(expr: Expr, name: str) -> bool:
    if isinstance(expr, FnApp):
        return expr.name == name or _contains_fn(expr.arg, name)
    if isinstance(expr, (Add, Sub, Mul)):
        return _contains_fn(expr.left, name) or _contains_fn(expr.right, name)
    if isinstance(expr, Neg):
        return _contains_fn(expr.operand, name)
    return False


def _rebuild(terms: list[tuple[int, Expr]]) -> Expr:
    if not terms:
        return IntLit(0)
    sign, first = terms[0]
    node: Expr = first if sign > 0 else Neg(first)
    for sign, term in terms[1:]:
        node = Add(node, term) if sign > 0 else Sub(node, term)
    return node


def pivot_reduce(ast: EquationAst, pivot_fn: str) -> PivotResult:
    """Substitute y=1 and try to express the pivot unknown by the others.

    The left side must be exactly ``pivot_fn(x*y)``.  After substitution,
    terms that agree modulo multiplication by the literal 1 are cancelled
    across sides; if the pivot then survives only as the lone left-hand
    term, its definition is the remaining right side, otherwise the
    residual identity is returned as a constraint.  The caller is
    responsible for only using the result over unital rings.
    """
    target = FnApp(pivot_fn, Mul(Var("x"), Var("y")))
    if ast.lhs != target:
        return NotReducible(f"left side is not {pivot_fn}(x*y)")
    one = IntLit(1)
    lhs1 = substitute(ast.lhs, "y", one)
    rhs1 = substitute(ast.rhs, "y", one)
    lhs_terms = [(s, t, _strip_ones(t)) for s, t in _terms(lhs1)]
    rhs_terms = [(s, t, _strip_ones(t)) for s, t in _terms(rhs1)]

    remaining_rhs = list(rhs_terms)
    remaining_lhs = []
    for sign, term, norm in lhs_terms:
        match = next((i for i, (s2, _, n2) in enumerate(remaining_rhs)
                      if s2 == sign and n2 == norm), None)
        if match is not None:
            del remaining_rhs[match]
        else:
            remaining_lhs.append((sign, term, norm))

    rhs_has_pivot = any(_contains_fn(t, pivot_fn) for _, t, _ in remaining_rhs)
    lone_lhs_pivot = (len(remaining_lhs) == 1
                      and remaining_lhs[0][0] == 1
                      and remaining_lhs[0][2] == FnApp(pivot_fn, Var("x")))
    if lone_lhs_pivot and not rhs_has_pivot:
        return Definition(_rebuild([(s, t) for s, t, _ in remaining_rhs]))
    constraint_terms = ([(s, t) for s, t, _ in remaining_rhs]
                        + [(-s, t) for s, t, _ in remaining_lhs])
    return Constraint(_rebuild(constraint_terms))
