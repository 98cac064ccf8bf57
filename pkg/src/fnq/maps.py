"""Function tables between rings and the named structure classes.

A map is always stored as a total value vector over the domain carrier (or
its declared sub-carrier).  Structure classes are defined by which
identities hold at every pair of domain elements:

* additive        f(x+y) = f(x)+f(y)
* multiplicative  f(xy)  = f(x)f(y)
* leibniz         f(xy)  = f(x)y + xf(y)
* logarithmic     f(xy)  = f(x)+f(y) on the unit group, 0 off it
* homomorphism    additive and multiplicative
* derivation      additive and leibniz
* homo-deriv-mp   homomorphism and leibniz
* homo-deriv-sofy(eps)  additive and f(xy) = f(x)y + xf(y) + eps f(x)f(y)

Enumeration yields every table of a class exactly once, in lexicographic
order of the value vector.  Classes containing additivity are enumerated by
assigning images to a greedy additive generating set and extending, which
shrinks the scan from |Q|**|P| to |Q|**g.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Callable, Iterator

import numpy as np

from .algebra import Ring
from .errors import BudgetExceeded, EvalDomainError, NotAField

DEFAULT_ENUM_BUDGET = 10 ** 8
_CHUNK = 1 << 22


@dataclass(frozen=True)
class FunctionClass:
    """A named structure class, optionally parameterized by a shift constant."""

    kind: str
    eps: int | None = None

    def __str__(self) -> str:
        if self.eps is None:
            return self.kind
        return f"{self.kind}:{self.eps}"


ARBITRARY = FunctionClass("arbitrary")
ADDITIVE = FunctionClass("additive")
MULTIPLICATIVE = FunctionClass("multiplicative")
HOMOMORPHISM = FunctionClass("homomorphism")
LEIBNIZ = FunctionClass("leibniz")
DERIVATION = FunctionClass("derivation")
LOGARITHMIC = FunctionClass("logarithmic")
HOMO_DERIV_MP = FunctionClass("homo-deriv-mp")


def homo_deriv_sofy(eps: int) -> FunctionClass:
    return FunctionClass("homo-deriv-sofy", eps)


def class_from_string(text: str) -> FunctionClass:
    if ":" in text:
        kind, _, eps = text.partition(":")
        if kind != "homo-deriv-sofy":
            raise ValueError(f"class {kind!r} takes no parameter")
        return homo_deriv_sofy(int(eps))
    named = {c.kind: c for c in (ARBITRARY, ADDITIVE, MULTIPLICATIVE,
                                 HOMOMORPHISM, LEIBNIZ, DERIVATION,
                                 LOGARITHMIC, HOMO_DERIV_MP)}
    if text not in named:
        raise ValueError(f"unknown function class {text!r}")
    return named[text]


@dataclass(frozen=True)
class FnTable:
    """A total function between ring carriers stored as a value vector.

    ``values[i]`` is the image (a codomain index) of the i-th element of
    ``domain.domain_elements``.
    """

    domain: Ring
    codomain: Ring
    values: tuple[int, ...]

    def __post_init__(self):
        m = len(self.domain.domain_elements)
        if len(self.values) != m:
            raise ValueError(f"expected {m} values, got {len(self.values)}")
        if any(not (0 <= v < self.codomain.size) for v in self.values):
            raise ValueError("value out of codomain range")

    def __call__(self, element: int) -> int:
        pos = int(self.domain.position[element])
        if pos < 0:
            raise EvalDomainError(
                f"element {element} is outside the declared domain")
        return self.values[pos]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.int64)

    def to_json(self) -> dict:
        return {"domain": self.domain.spec.to_json(),
                "codomain": self.codomain.spec.to_json(),
                "values": list(self.values)}

    def is_zero(self) -> bool:
        return all(v == self.codomain.zero for v in self.values)


def identity_map(ring: Ring) -> FnTable:
    return FnTable(ring, ring, tuple(ring.domain_elements))

def zero_map(domain: Ring, codomain: Ring | None = None) -> FnTable:
    codomain = codomain or domain
    return FnTable(domain, codomain,
                   (codomain.zero,) * len(domain.domain_elements))


def same_carrier(a: Ring, b: Ring) -> bool:
    """True when two Ring objects share the underlying operation tables."""
    if a is b:
        return True
    return (a.size == b.size and np.array_equal(a.add, b.add)
            and np.array_equal(a.mul, b.mul))


def _domain_units(ring: Ring) -> tuple[int, ...]:
    """Units of the declared domain (two-sided inverses within it)."""
    if ring.one is None:
        return ()
    elems = ring.domain_elements
    if ring.one not in elems:
        return ()
    member = set(elems)
    out = []
    for u in elems:
        for v in elems:
            if (int(ring.mul[u, v]) == ring.one
                    and int(ring.mul[v, u]) == ring.one and v in member):
                out.append(u)
                break
    return tuple(out)


# ------------------------------------------------------- identity checking
# Each predicate receives the table as a numpy array over domain positions.

def _grids(f: FnTable):
    dom, cod = f.domain, f.codomain
    elems = np.asarray(dom.domain_elements, dtype=np.int64)
    T = f.as_array()
    pos = dom.position
    return dom, cod, elems, T, pos


def holds_additive(f: FnTable) -> bool:
    dom, cod, elems, T, pos = _grids(f)
    sums = pos[dom.add[np.ix_(elems, elems)]]
    return bool(np.array_equal(T[sums], cod.add[T[:, None], T[None, :]]))


def holds_multiplicative(f: FnTable) -> bool:
    dom, cod, elems, T, pos = _grids(f)
    prods = pos[dom.mul[np.ix_(elems, elems)]]
    return bool(np.array_equal(T[prods], cod.mul[T[:, None], T[None, :]]))


def holds_leibniz(f: FnTable) -> bool:
    if not same_carrier(f.domain, f.codomain):
        return False
    dom, cod, elems, T, pos = _grids(f)
    prods = pos[dom.mul[np.ix_(elems, elems)]]
    rhs = cod.add[cod.mul[T[:, None], elems[None, :]],
                  cod.mul[elems[:, None], T[None, :]]]
    return bool(np.array_equal(T[prods], rhs))


def holds_sofy(f: FnTable, eps: int) -> bool:
    if not same_carrier(f.domain, f.codomain):
        return False
    dom, cod, elems, T, pos = _grids(f)
    prods = pos[dom.mul[np.ix_(elems, elems)]]
    rhs = cod.add[cod.add[cod.mul[T[:, None], elems[None, :]],
                          cod.mul[elems[:, None], T[None, :]]],
                  cod.mul[eps, cod.mul[T[:, None], T[None, :]]]]
    return bool(np.array_equal(T[prods], rhs))


def holds_logarithmic(f: FnTable) -> bool:
    """Identity on the domain's unit group plus the zero convention off it."""
    dom, cod, elems, T, pos = _grids(f)
    units = _domain_units(dom)
    unit_set = set(units)
    for i, e in enumerate(dom.domain_elements):
        if e not in unit_set and T[i] != cod.zero:
            return False
    for u in units:
        for v in units:
            prod = int(dom.mul[u, v])
            if T[pos[prod]] != int(cod.add[T[pos[u]], T[pos[v]]]):
                return False
    return True


def satisfies_class(f: FnTable, cls: FunctionClass) -> bool:
    kind = cls.kind
    if kind == "arbitrary":
        return True
    if kind == "additive":
        return holds_additive(f)
    if kind == "multiplicative":
        return holds_multiplicative(f)
    if kind == "homomorphism":
        return holds_additive(f) and holds_multiplicative(f)
    if kind == "leibniz":
        return holds_leibniz(f)
    if kind == "derivation":
        return holds_additive(f) and holds_leibniz(f)
    if kind == "logarithmic":
        return holds_logarithmic(f)
    if kind == "homo-deriv-mp":
        return (holds_additive(f) and holds_multiplicative(f)
                and holds_leibniz(f))
    if kind == "homo-deriv-sofy":
        return holds_additive(f) and holds_sofy(f, cls.eps)
    raise ValueError(f"unknown class {cls}")


def classify_map(f: FnTable) -> set[FunctionClass]:
    """Every class tag whose defining identities hold at all domain pairs.

    The shifted homo-derivation identity is evaluated for each central
    nonzero shift constant of the codomain, and each witnessing constant
    produces its own parameterized tag.
    """
    tags = {ARBITRARY}
    additive = holds_additive(f)
    multiplicative = holds_multiplicative(f)
    leibniz = holds_leibniz(f)
    if additive:
        tags.add(ADDITIVE)
    if multiplicative:
        tags.add(MULTIPLICATIVE)
    if additive and multiplicative:
        tags.add(HOMOMORPHISM)
    if leibniz:
        tags.add(LEIBNIZ)
    if additive and leibniz:
        tags.add(DERIVATION)
    if additive and multiplicative and leibniz:
        tags.add(HOMO_DERIV_MP)
    if holds_logarithmic(f):
        tags.add(LOGARITHMIC)
    if additive and same_carrier(f.domain, f.codomain):
        for eps in f.codomain.center:
            if eps != f.codomain.zero and holds_sofy(f, eps):
                tags.add(homo_deriv_sofy(eps))
    return tags


def inner_derivation(ring: Ring, b: int) -> FnTable:
    """The commutator map x -> x*b - b*x over the declared domain."""
    values = tuple(ring.sub(int(ring.mul[x, b]), int(ring.mul[b, x]))
                   for x in ring.domain_elements)
    return FnTable(ring, ring, values)


# --------------------------------------------------- staged pair filtering
# Exhaustively scans all |codomain|**m value vectors while pruning with one
# domain pair at a time.  Candidate id <-> value vector is the base-q digit
# expansion with the first domain position as the most significant digit,
# so ascending ids are exactly lexicographic value vectors.

PairPredicate = Callable[[int, int, Callable[[int], np.ndarray]], np.ndarray]


def _pair_schedule(elems) -> list[tuple[int, int]]:
    diag = [(d, d) for d in elems]
    rest = [(x, y) for x in elems for y in elems if x != y]
    return diag + rest


def filter_tables(domain: Ring, codomain: Ring,
                  predicates: list[PairPredicate],
                  budget: int = DEFAULT_ENUM_BUDGET,
                  id_range: tuple[int, int] | None = None) -> np.ndarray:
    """Candidate ids of all tables satisfying every predicate at every pair.

    A predicate gets a pair (x, y) of domain elements and a column accessor
    ``col(e)`` returning each surviving candidate's value at element ``e``,
    and returns a boolean keep-mask.
    """
    elems = domain.domain_elements
    m = len(elems)
    q = codomain.size
    total = q ** m
    if total > budget:
        raise BudgetExceeded(
            f"{total} candidate tables exceed the budget {budget}",
            needed=total)
    lo, hi = id_range if id_range is not None else (0, total)
    pos = domain.position
    divisors = [q ** (m - 1 - j) for j in range(m)]
    schedule = _pair_schedule(elems)

    survivors: list[np.ndarray] = []
    for start in range(lo, hi, _CHUNK):
        ids = np.arange(start, min(start + _CHUNK, hi), dtype=np.int64)
        for x, y in schedule:
            if ids.size == 0:
                break

            def col(e: int, ids=ids) -> np.ndarray:
                j = int(pos[e])
                if j < 0:
                    raise EvalDomainError(
                        f"element {e} is outside the declared domain")
                return (ids // divisors[j]) % q

            keep = np.ones(ids.size, dtype=bool)
            for pred in predicates:
                keep &= pred(x, y, col)
            ids = ids[keep]
        if ids.size:
            survivors.append(ids)
    if not survivors:
        return np.empty(0, dtype=np.int64)
    return np.concatenate(survivors)


def _ids_to_tables(ids: np.ndarray, domain: Ring, codomain: Ring) -> Iterator[FnTable]:
    m = len(domain.domain_elements)
    q = codomain.size
    for cid in ids:
        cid = int(cid)
        vals = []
        for j in range(m):
            vals.append((cid // q ** (m - 1 - j)) % q)
        yield FnTable(domain, codomain, tuple(vals))


def multiplicative_predicate(domain: Ring, codomain: Ring) -> PairPredicate:
    mul_d, mul_c = domain.mul, codomain.mul

    def pred(x, y, col):
        return col(int(mul_d[x, y])) == mul_c[col(x), col(y)]
    return pred


def leibniz_predicate(domain: Ring, codomain: Ring) -> PairPredicate:
    if not same_carrier(domain, codomain):
        raise EvalDomainError("Leibniz identity needs the domain inside the codomain")
    mul_d, mul_c, add_c = domain.mul, codomain.mul, codomain.add

    def pred(x, y, col):
        rhs = add_c[mul_c[col(x), y], mul_c[x, col(y)]]
        return col(int(mul_d[x, y])) == rhs
    return pred


def sofy_predicate(domain: Ring, codomain: Ring, eps: int) -> PairPredicate:
    if not same_carrier(domain, codomain):
        raise EvalDomainError("shifted identity needs the domain inside the codomain")
    mul_d, mul_c, add_c = domain.mul, codomain.mul, codomain.add

    def pred(x, y, col):
        fx, fy = col(x), col(y)
        rhs = add_c[add_c[mul_c[fx, y], mul_c[x, fy]], mul_c[eps, mul_c[fx, fy]]]
        return col(int(mul_d[x, y])) == rhs
    return pred


# --------------------------------------------------- generator-based paths

def additive_generators(ring: Ring) -> tuple[list[int], dict[int, tuple[int, ...]]]:
    """Greedy additive generating set with a generator word per element."""
    elems = ring.domain_elements
    add = ring.add
    words: dict[int, tuple[int, ...]] = {ring.zero: ()}
    gens: list[int] = []
    while len(words) < len(elems):
        g = min(e for e in elems if e not in words)
        gens.append(g)
        changed = True
        while changed:
            changed = False
            for e in list(words):
                for gi, gval in enumerate(gens):
                    s = int(add[e, gval])
                    if s not in words:
                        words[s] = words[e] + (gi,)
                        changed = True
    return gens, words


def _unit_generators(ring: Ring) -> tuple[tuple[int, ...], list[int], dict[int, tuple[int, ...]]]:
    units = _domain_units(ring)
    if not units:
        return (), [], {}
    mul = ring.mul
    words: dict[int, tuple[int, ...]] = {ring.one: ()}
    gens: list[int] = []
    while len(words) < len(units):
        g = min(u for u in units if u not in words)
        gens.append(g)
        changed = True
        while changed:
            changed = False
            for e in list(words):
                for gi, gval in enumerate(gens):
                    s = int(mul[e, gval])
                    if s not in words:
                        words[s] = words[e] + (gi,)
                        changed = True
    return units, gens, words


def _enumerate_additive_like(domain: Ring, codomain: Ring,
                             extra: Callable[[FnTable], bool] | None,
                             budget: int) -> list[FnTable]:
    gens, words = additive_generators(domain)
    space = codomain.size ** len(gens)
    if space > budget:
        raise BudgetExceeded(
            f"{space} generator assignments exceed the budget {budget}",
            needed=space)
    elems = domain.domain_elements
    add_c = codomain.add
    out = []
    for images in iproduct(range(codomain.size), repeat=len(gens)):
        vals = []
        for e in elems:
            acc = codomain.zero
            for gi in words[e]:
                acc = int(add_c[acc, images[gi]])
            vals.append(acc)
        table = FnTable(domain, codomain, tuple(vals))
        if not holds_additive(table):
            continue
        if extra is not None and not extra(table):
            continue
        out.append(table)
    out.sort(key=lambda t: t.values)
    return out


def _enumerate_logarithmic(domain: Ring, codomain: Ring, budget: int) -> list[FnTable]:
    units, gens, words = _unit_generators(domain)
    elems = domain.domain_elements
    if not units:
        return [zero_map(domain, codomain)]
    space = codomain.size ** len(gens)
    if space > budget:
        raise BudgetExceeded(
            f"{space} generator assignments exceed the budget {budget}",
            needed=space)
    add_c = codomain.add
    pos = {e: i for i, e in enumerate(elems)}
    out = []
    for images in iproduct(range(codomain.size), repeat=len(gens)):
        vals = [codomain.zero] * len(elems)
        for u in units:
            acc = codomain.zero
            for gi in words[u]:
                acc = int(add_c[acc, images[gi]])
            vals[pos[u]] = acc
        table = FnTable(domain, codomain, tuple(vals))
        if holds_logarithmic(table):
            out.append(table)
    out.sort(key=lambda t: t.values)
    return out


def enumerate_maps(domain: Ring, codomain: Ring, cls: FunctionClass,
                   budget: int = DEFAULT_ENUM_BUDGET) -> Iterator[FnTable]:
    """Yield every table of the class exactly once, in lexicographic order."""
    m = len(domain.domain_elements)
    kind = cls.kind
    if kind == "arbitrary":
        total = codomain.size ** m
        if total > budget:
            raise BudgetExceeded(
                f"{total} candidate tables exceed the budget {budget}",
                needed=total)
        for vals in iproduct(range(codomain.size), repeat=m):
            yield FnTable(domain, codomain, vals)
        return
    if kind == "multiplicative":
        ids = filter_tables(domain, codomain,
                            [multiplicative_predicate(domain, codomain)], budget)
        yield from _ids_to_tables(ids, domain, codomain)
        return
    if kind == "leibniz":
        ids = filter_tables(domain, codomain,
                            [leibniz_predicate(domain, codomain)], budget)
        yield from _ids_to_tables(ids, domain, codomain)
        return
    if kind == "logarithmic":
        yield from _enumerate_logarithmic(domain, codomain, budget)
        return
    extra: Callable[[FnTable], bool] | None
    if kind == "additive":
        extra = None
    elif kind == "homomorphism":
        extra = holds_multiplicative
    elif kind == "derivation":
        extra = holds_leibniz
    elif kind == "homo-deriv-mp":
        extra = lambda t: holds_multiplicative(t) and holds_leibniz(t)
    elif kind == "homo-deriv-sofy":
        eps = cls.eps
        extra = lambda t: holds_sofy(t, eps)
    else:
        raise ValueError(f"unknown class {cls}")
    yield from _enumerate_additive_like(domain, codomain, extra, budget)


def class_space_size(domain: Ring, codomain: Ring, cls: FunctionClass) -> int:
    """Number of candidates an enumeration of the class has to examine."""
    m = len(domain.domain_elements)
    if cls.kind in ("arbitrary", "multiplicative", "leibniz"):
        return codomain.size ** m
    if cls.kind == "logarithmic":
        _, gens, _ = _unit_generators(domain)
        return codomain.size ** len(gens)
    gens, _ = additive_generators(domain)
    return codomain.size ** len(gens)


# ------------------------------------------------------------- linear rank

def _field_inverse(scalars: Ring) -> np.ndarray:
    if not scalars.is_field:
        raise NotAField(f"{scalars.spec.kind} of size {scalars.size} is not a field")
    return scalars.inverse


def lin_rank(tables: list[FnTable], scalars: Ring) -> int:
    """Rank over a scalar field of the matrix whose rows are value vectors.

    Gaussian elimination with exact field arithmetic through the lookup
    tables; all maps must share a domain and take values in ``scalars``.
    """
    inv = _field_inverse(scalars)
    if not tables:
        return 0
    m = len(tables[0].values)
    for t in tables:
        if len(t.values) != m:
            raise ValueError("maps must share a domain")
        if not same_carrier(t.codomain, scalars):
            raise ValueError("maps must take values in the scalar field")
    add, mul, neg, zero = scalars.add, scalars.mul, scalars.neg, scalars.zero
    rows = [list(t.values) for t in tables]
    rank = 0
    for col in range(m):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != zero),
                     None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        scale = int(inv[rows[rank][col]])
        rows[rank] = [int(mul[scale, v]) for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != zero:
                factor = rows[r][col]
                rows[r] = [int(add[rows[r][i], neg[mul[factor, rows[rank][i]]]])
                           for i in range(m)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def linear_combination(target: FnTable, basis: list[FnTable],
                       scalars: Ring) -> tuple[int, ...] | None:
    """Coefficients writing target as a combination of basis maps, if any."""
    inv = _field_inverse(scalars)
    add, mul, neg, zero = scalars.add, scalars.mul, scalars.neg, scalars.zero
    m = len(target.values)
    n = len(basis)
    # augmented system: columns are basis vectors, rhs is the target
    matrix = [[basis[j].values[i] for j in range(n)] + [target.values[i]]
              for i in range(m)]
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(n):
        pivot = next((r for r in range(row, m) if matrix[r][col] != zero), None)
        if pivot is None:
            continue
        matrix[row], matrix[pivot] = matrix[pivot], matrix[row]
        scale = int(inv[matrix[row][col]])
        matrix[row] = [int(mul[scale, v]) for v in matrix[row]]
        for r in range(m):
            if r != row and matrix[r][col] != zero:
                factor = matrix[r][col]
                matrix[r] = [int(add[matrix[r][i], neg[mul[factor, matrix[row][i]]]])
                             for i in range(n + 1)]
        pivots.append((row, col))
        row += 1
    for r in range(row, m):
        if matrix[r][n] != zero:
            return None
    coeffs = [zero] * n
    for r, c in pivots:
        coeffs[c] = matrix[r][n]
    return tuple(coeffs)
