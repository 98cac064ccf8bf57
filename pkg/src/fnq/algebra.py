"""Small finite rings backed by exhaustively verified operation tables.

Every element is a dense index ``0..size-1`` and both operations are total
lookup tables, which makes noncommutative carriers free and keeps all
downstream equation checking away from ad-hoc modular arithmetic.  The
constructors re-verify the ring axioms over the whole carrier before a
:class:`Ring` is handed out; they are the trusted computing base for every
solver and theorem check built on top.

Carrier orderings are fixed so that reports are reproducible:

* ``Zn``: residues ``0..n-1``;
* ``GF``/``PolyQuot``: coefficient vectors (constant term first) in
  lexicographic order, so the vector ``(a_0, .., a_{k-1})`` has index
  ``sum(a_i * p**(k-1-i))``;
* ``Product``: row-major over (left, right);
* ``UT2``: triples ``(a, b, c)`` of the matrix ``[[a, b], [0, c]]`` in
  lexicographic order.
"""
from __future__ import annotations

import dataclasses
import hashlib
import json
from dataclasses import dataclass
from functools import cached_property
from itertools import product as iproduct

import numpy as np

from .errors import (
    AxiomViolation,
    BudgetExceeded,
    InvalidRingSpec,
    LiteralInNonUnitalRing,
    NonPrimeModulus,
    ReducibleModulus,
)

DEFAULT_SIZE_BUDGET = 256

_KINDS = ("Zn", "GF", "PolyQuot", "Product", "UT2")


@dataclass(frozen=True)
class RingSpec:
    """Declarative description of a ring constructor.

    ``modulus`` lists polynomial coefficients constant term first.  An
    optional ``subring`` is a set of carrier indices that must be closed
    under the operations; it marks the sub-carrier that equations will be
    quantified over while arithmetic still happens in the full ring.
    """

    kind: str
    n: int | None = None
    p: int | None = None
    k: int | None = None
    modulus: tuple[int, ...] | None = None
    left: "RingSpec | None" = None
    right: "RingSpec | None" = None
    subring: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        doc: dict = {"kind": self.kind}
        if self.kind == "Zn":
            doc["n"] = self.n
        elif self.kind in ("GF", "PolyQuot"):
            doc["p"] = self.p
            doc["k"] = self.k
            if self.kind == "GF" and self.modulus is not None:
                doc["modulus"] = list(self.modulus)
        elif self.kind == "Product":
            doc["left"] = self.left.to_json()
            doc["right"] = self.right.to_json()
        elif self.kind == "UT2":
            doc["p"] = self.p
        if self.subring is not None:
            doc["subring"] = list(self.subring)
        return doc

    @staticmethod
    def from_json(doc: dict | str) -> "RingSpec":
        if isinstance(doc, str):
            try:
                doc = json.loads(doc)
            except json.JSONDecodeError as exc:
                raise InvalidRingSpec(f"ring spec is not valid JSON: {exc}") from exc
        if not isinstance(doc, dict) or "kind" not in doc:
            raise InvalidRingSpec("ring spec must be an object with a 'kind' field")
        kind = doc["kind"]
        if kind not in _KINDS:
            raise InvalidRingSpec(f"unknown ring kind {kind!r}")
        sub = tuple(sorted(set(doc["subring"]))) if "subring" in doc else None
        if kind == "Zn":
            return RingSpec(kind="Zn", n=int(doc["n"]), subring=sub)
        if kind in ("GF", "PolyQuot"):
            modulus = None
            if kind == "GF" and "modulus" in doc:
                modulus = tuple(int(c) for c in doc["modulus"])
            return RingSpec(kind=kind, p=int(doc["p"]), k=int(doc["k"]),
                            modulus=modulus, subring=sub)
        if kind == "Product":
            return RingSpec(kind="Product",
                            left=RingSpec.from_json(doc["left"]),
                            right=RingSpec.from_json(doc["right"]),
                            subring=sub)
        return RingSpec(kind="UT2", p=int(doc["p"]), subring=sub)


@dataclass(frozen=True, eq=False)
class Ring:
    """A finite ring as verified addition/multiplication tables.

    Instances are immutable after construction and safe to share between
    threads.  ``one`` is ``None`` for non-unital carriers (no built-in
    constructor produces one, but the representation allows it).
    """

    spec: RingSpec
    size: int
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    zero: int
    one: int | None
    center: tuple[int, ...]
    units: tuple[int, ...]
    regular: tuple[int, ...]
    names: tuple[str, ...]
    subring: tuple[int, ...] | None

    @cached_property
    def domain_elements(self) -> tuple[int, ...]:
        """Elements that equations quantify over (the subring, if declared)."""
        return self.subring if self.subring is not None else tuple(range(self.size))

    @cached_property
    def position(self) -> np.ndarray:
        """Carrier index -> position in ``domain_elements`` (-1 outside)."""
        pos = np.full(self.size, -1, dtype=np.int64)
        for i, e in enumerate(self.domain_elements):
            pos[e] = i
        return pos

    @cached_property
    def char(self) -> int | None:
        """Additive order of the unit element, or None without a unit."""
        if self.one is None:
            return None
        n, acc = 1, self.one
        while acc != self.zero:
            acc = int(self.add[acc, self.one])
            n += 1
        return n

    @cached_property
    def _regular_set(self) -> frozenset:
        return frozenset(self.regular)

    @cached_property
    def has_zero_divisors(self) -> bool:
        return len(self.regular) != self.size - 1

    @cached_property
    def is_field(self) -> bool:
        return self.one is not None and len(self.units) == self.size - 1

    @cached_property
    def inverse(self) -> np.ndarray:
        """Two-sided inverse table (-1 where no inverse exists)."""
        inv = np.full(self.size, -1, dtype=np.int64)
        if self.one is not None:
            both = (self.mul == self.one) & (self.mul.T == self.one)
            rows, cols = np.nonzero(both)
            inv[rows] = cols
        return inv

    def sub(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    def int_embed(self, value: int) -> int:
        """Interpret an integer literal as ``value * 1`` in the ring."""
        if value == 0:
            return self.zero
        if self.one is None:
            raise LiteralInNonUnitalRing(
                f"literal {value} needs a unit element in a ring without one")
        value %= self.char
        acc = self.zero
        for _ in range(value):
            acc = int(self.add[acc, self.one])
        return acc

    def element_name(self, e: int) -> str:
        return self.names[e]

    @cached_property
    def table_hash(self) -> str:
        """Content hash of the operation tables, for reproducible reports."""
        h = hashlib.sha256()
        h.update(str(self.size).encode())
        h.update(self.add.astype(np.int16).tobytes())
        h.update(self.mul.astype(np.int16).tobytes())
        h.update(self.neg.astype(np.int16).tobytes())
        if self.subring is not None:
            h.update(str(self.subring).encode())
        return h.hexdigest()

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Ring({self.spec.kind}, size={self.size})"


# ------------------------------------------------------------ primality /
# polynomial helpers over F_p (tuples of coefficients, constant term first)

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_trim(c: tuple[int, ...]) -> tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return c[:i]


def _poly_mod(a: tuple[int, ...], m: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Remainder of a by the monic polynomial m over F_p."""
    a = list(a)
    dm = len(m) - 1
    while len(_poly_trim(tuple(a))) - 1 >= dm:
        a = list(_poly_trim(tuple(a)))
        da = len(a) - 1
        coef = a[da]
        for i, mc in enumerate(m):
            a[da - dm + i] = (a[da - dm + i] - coef * mc) % p
    return _poly_trim(tuple(c % p for c in a))


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(tuple(out))


def _monic_polys(degree: int, p: int):
    for lower in iproduct(range(p), repeat=degree):
        yield tuple(lower) + (1,)


def _is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial up to half the degree."""
    k = len(modulus) - 1
    for d in range(1, k // 2 + 1):
        for g in _monic_polys(d, p):
            if not _poly_mod(modulus, g, p):
                return False
    return True


def _default_modulus(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k over F_p."""
    if k == 1:
        return (0, 1)
    for lower in iproduct(range(p), repeat=k):
        candidate = tuple(lower) + (1,)
        if _is_irreducible(candidate, p):
            return candidate
    raise InvalidRingSpec(f"no irreducible polynomial of degree {k} over F_{p}")


def _poly_name(vec: tuple[int, ...]) -> str:
    parts = []
    for i, c in enumerate(vec):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            base = "x" if i == 1 else f"x^{i}"
            parts.append(base if c == 1 else f"{c}{base}")
    return "+".join(parts) if parts else "0"


# ----------------------------------------------------------- constructors

def _zn_tables(n: int):
    idx = np.arange(n, dtype=np.int64)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    neg = (-idx) % n
    names = tuple(str(i) for i in range(n))
    return n, add, mul, neg, 0, 1, names


def _poly_ring_tables(p: int, k: int, modulus: tuple[int, ...]):
    size = p ** k
    # index <-> coefficient vector, constant term first, lexicographic order
    vecs = [tuple(vec) for vec in iproduct(range(p), repeat=k)]
    index_of = {v: i for i, v in enumerate(vecs)}

    def reduce_to_index(poly: tuple[int, ...]) -> int:
        r = _poly_mod(poly, modulus, p)
        vec = tuple((r[i] if i < len(r) else 0) for i in range(k))
        return index_of[vec]

    add = np.zeros((size, size), dtype=np.int64)
    mul = np.zeros((size, size), dtype=np.int64)
    neg = np.zeros(size, dtype=np.int64)
    for i, a in enumerate(vecs):
        neg[i] = index_of[tuple((-c) % p for c in a)]
        for j, b in enumerate(vecs):
            add[i, j] = index_of[tuple((ac + bc) % p for ac, bc in zip(a, b))]
            mul[i, j] = reduce_to_index(_poly_mul(a, b, p))
    one = index_of[(1,) + (0,) * (k - 1)] if k >= 1 else None
    names = tuple(_poly_name(v) for v in vecs)
    return size, add, mul, neg, 0, one, names


def _product_tables(left: Ring, right: Ring):
    nl, nr = left.size, right.size
    size = nl * nr
    li = np.arange(size) // nr
    ri = np.arange(size) % nr
    ladd = left.add.astype(np.int64)
    radd = right.add.astype(np.int64)
    lmul = left.mul.astype(np.int64)
    rmul = right.mul.astype(np.int64)
    add = ladd[np.ix_(li, li)] * nr + radd[np.ix_(ri, ri)]
    mul = lmul[np.ix_(li, li)] * nr + rmul[np.ix_(ri, ri)]
    neg = left.neg.astype(np.int64)[li] * nr + right.neg.astype(np.int64)[ri]
    one = None
    if left.one is not None and right.one is not None:
        one = left.one * nr + right.one
    names = tuple(f"({left.names[a]}|{right.names[b]})" for a, b in zip(li, ri))
    return size, add, mul, neg, 0, one, names


def _ut2_tables(p: int):
    """Upper triangular 2x2 matrices [[a, b], [0, c]] over F_p."""
    size = p ** 3
    triples = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]
    index_of = {t: i for i, t in enumerate(triples)}
    add = np.zeros((size, size), dtype=np.int64)
    mul = np.zeros((size, size), dtype=np.int64)
    neg = np.zeros(size, dtype=np.int64)
    for i, (a1, b1, c1) in enumerate(triples):
        neg[i] = index_of[((-a1) % p, (-b1) % p, (-c1) % p)]
        for j, (a2, b2, c2) in enumerate(triples):
            add[i, j] = index_of[((a1 + a2) % p, (b1 + b2) % p, (c1 + c2) % p)]
            mul[i, j] = index_of[((a1 * a2) % p,
                                  (a1 * b2 + b1 * c2) % p,
                                  (c1 * c2) % p)]
    one = index_of[(1, 0, 1)]
    names = tuple(f"[{a} {b};0 {c}]" for a, b, c in triples)
    return size, add, mul, neg, 0, one, names


def _spec_size(spec: RingSpec) -> int:
    if spec.kind == "Zn":
        if spec.n is None or spec.n < 2:
            raise InvalidRingSpec("Zn needs n >= 2")
        return spec.n
    if spec.kind in ("GF", "PolyQuot"):
        if spec.p is None or spec.k is None or spec.k < 1:
            raise InvalidRingSpec(f"{spec.kind} needs p and k >= 1")
        return spec.p ** spec.k
    if spec.kind == "Product":
        if spec.left is None or spec.right is None:
            raise InvalidRingSpec("Product needs left and right specs")
        return _spec_size(spec.left) * _spec_size(spec.right)
    if spec.kind == "UT2":
        if spec.p is None:
            raise InvalidRingSpec("UT2 needs p")
        return spec.p ** 3
    raise InvalidRingSpec(f"unknown ring kind {spec.kind!r}")


# --------------------------------------------------------- axiom checking

def _verify_axioms(size, add, mul, neg, zero, one):
    """Exhaustive check of every ring axiom on the full carrier.

    All size**3 triple checks are vectorized; at the default budget of 256
    this stays around 16M index operations per axiom.
    """
    rng = np.arange(size)
    for name, table in (("add", add), ("mul", mul)):
        if table.shape != (size, size) or table.min() < 0 or table.max() >= size:
            raise AxiomViolation(f"{name} table is not total on the carrier")
    if neg.shape != (size,) or neg.min() < 0 or neg.max() >= size:
        raise AxiomViolation("negation table is not total on the carrier")
    if not np.array_equal(add, add.T):
        raise AxiomViolation("addition is not commutative")
    if not (np.array_equal(add[zero], rng) and np.array_equal(add[:, zero], rng)):
        raise AxiomViolation("zero is not an additive identity")
    if not np.array_equal(add[rng, neg], np.full(size, zero)):
        raise AxiomViolation("negation does not give additive inverses")
    if not np.array_equal(add[add, :], add[:, add]):
        raise AxiomViolation("addition is not associative")
    if not np.array_equal(mul[mul, :], mul[:, mul]):
        raise AxiomViolation("multiplication is not associative")
    if not np.array_equal(mul[:, add], add[mul[:, :, None], mul[:, None, :]]):
        raise AxiomViolation("left distributivity fails")
    if not np.array_equal(mul[add, :], add[mul[:, None, :], mul[None, :, :]]):
        raise AxiomViolation("right distributivity fails")
    if one is not None:
        if not (np.array_equal(mul[one], rng) and np.array_equal(mul[:, one], rng)):
            raise AxiomViolation("declared unit is not a two-sided identity")


def _structure_caches(size, add, mul, neg, zero, one):
    rng = np.arange(size)
    center = tuple(int(c) for c in np.nonzero((mul == mul.T).all(axis=1))[0])
    if one is not None:
        has_inv = ((mul == one) & (mul.T == one)).any(axis=1)
        units = tuple(int(u) for u in np.nonzero(has_inv)[0])
    else:
        units = ()
    nonzero = rng != zero
    left_zd = ((mul == zero) & nonzero[None, :]).any(axis=1)
    right_zd = ((mul.T == zero) & nonzero[None, :]).any(axis=1)
    reg_mask = nonzero & ~left_zd & ~right_zd
    regular = tuple(int(r) for r in np.nonzero(reg_mask)[0])
    return center, units, regular


def _validate_subring(sub: tuple[int, ...], size, add, mul, neg, zero):
    members = set(sub)
    if not members:
        raise InvalidRingSpec("declared subring is empty")
    if any(not (0 <= e < size) for e in sub):
        raise InvalidRingSpec("subring indices out of range")
    if zero not in members:
        raise InvalidRingSpec("declared subring does not contain 0")
    for a in sub:
        if int(neg[a]) not in members:
            raise InvalidRingSpec("declared subring not closed under negation")
        for b in sub:
            if int(add[a, b]) not in members:
                raise InvalidRingSpec("declared subring not closed under addition")
            if int(mul[a, b]) not in members:
                raise InvalidRingSpec("declared subring not closed under multiplication")


def build_ring(spec: RingSpec, size_budget: int = DEFAULT_SIZE_BUDGET) -> Ring:
    """Build and exhaustively verify the ring described by ``spec``.

    Raises :class:`BudgetExceeded` before any table is materialized when the
    resulting carrier would be larger than ``size_budget``.
    """
    size = _spec_size(spec)
    if size > size_budget:
        raise BudgetExceeded(
            f"ring of size {size} exceeds the size budget {size_budget}",
            needed=size)

    if spec.kind == "Zn":
        size, add, mul, neg, zero, one, names = _zn_tables(spec.n)
    elif spec.kind in ("GF", "PolyQuot"):
        if not _is_prime(spec.p):
            raise NonPrimeModulus(f"{spec.p} is not prime")
        if spec.kind == "GF":
            modulus = spec.modulus
            if modulus is None:
                modulus = _default_modulus(spec.p, spec.k)
            else:
                modulus = tuple(c % spec.p for c in modulus)
                if len(modulus) != spec.k + 1 or modulus[-1] == 0:
                    raise InvalidRingSpec(
                        f"modulus must have degree exactly {spec.k}")
                if modulus[-1] != 1:
                    # normalize to monic; units of F_p do not change the quotient
                    lead_inv = pow(modulus[-1], -1, spec.p)
                    modulus = tuple((c * lead_inv) % spec.p for c in modulus)
                if not _is_irreducible(modulus, spec.p):
                    raise ReducibleModulus(
                        f"{_poly_name(modulus)} is reducible over F_{spec.p}")
        else:
            modulus = (0,) * spec.k + (1,)  # x^k, deliberately reducible
        size, add, mul, neg, zero, one, names = _poly_ring_tables(
            spec.p, spec.k, modulus)
    elif spec.kind == "Product":
        left = build_ring(dataclasses.replace(spec.left, subring=None), size_budget)
        right = build_ring(dataclasses.replace(spec.right, subring=None), size_budget)
        size, add, mul, neg, zero, one, names = _product_tables(left, right)
    elif spec.kind == "UT2":
        if not _is_prime(spec.p):
            raise NonPrimeModulus(f"{spec.p} is not prime")
        size, add, mul, neg, zero, one, names = _ut2_tables(spec.p)
    else:
        raise InvalidRingSpec(f"unknown ring kind {spec.kind!r}")

    # int16 keeps the size**3 temporaries of the axiom check near 33MB each
    add = np.ascontiguousarray(add, dtype=np.int16)
    mul = np.ascontiguousarray(mul, dtype=np.int16)
    neg = np.ascontiguousarray(neg, dtype=np.int16)
    _verify_axioms(size, add, mul, neg, zero, one)
    if spec.subring is not None:
        _validate_subring(spec.subring, size, add, mul, neg, zero)
    center_, units, regular = _structure_caches(size, add, mul, neg, zero, one)

    add.setflags(write=False)
    mul.setflags(write=False)
    neg.setflags(write=False)
    return Ring(spec=spec, size=size, add=add, mul=mul, neg=neg, zero=zero,
                one=one, center=center_, units=units, regular=regular,
                names=names, subring=spec.subring)


def ring_from_json(doc: dict | str, size_budget: int = DEFAULT_SIZE_BUDGET) -> Ring:
    return build_ring(RingSpec.from_json(doc), size_budget)


def center(ring: Ring) -> tuple[int, ...]:
    """Elements commuting with the whole carrier."""
    return ring.center


def is_regular(ring: Ring, e: int) -> bool:
    """True iff ``e`` is nonzero and annihilates nothing nonzero on either side."""
    if not 0 <= e < ring.size:
        raise InvalidRingSpec(f"element index {e} out of range")
    return e in ring._regular_set


# convenience constructors used throughout tests and demos

def zn(n: int, subring: tuple[int, ...] | None = None) -> Ring:
    return build_ring(RingSpec(kind="Zn", n=n, subring=subring))


def gf(p: int, k: int = 1, modulus: tuple[int, ...] | None = None) -> Ring:
    return build_ring(RingSpec(kind="GF", p=p, k=k, modulus=modulus))


def poly_quot(p: int, k: int) -> Ring:
    return build_ring(RingSpec(kind="PolyQuot", p=p, k=k))


def ut2(p: int) -> Ring:
    return build_ring(RingSpec(kind="UT2", p=p))


def product(left: RingSpec | Ring, right: RingSpec | Ring) -> Ring:
    ls = left.spec if isinstance(left, Ring) else left
    rs = right.spec if isinstance(right, Ring) else right
    return build_ring(RingSpec(kind="Product", left=ls, right=rs))
