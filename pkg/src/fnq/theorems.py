"""Executable verdicts for the characterization statements.

Each check brute-forces the solution set of one equation over a concrete
ring, computes the predicted parametric family, and compares the two sets
direction by direction, returning a structured report with witnesses and
counterexamples instead of a bare boolean.

Check identifiers used across reports and the CLI:

* ``thm4``   the shifted homo-derivation equation
  ``h(xy) = h(x)y + xh(y) + eps h(x)h(y)``; solutions correspond to
  multiplicative maps through ``m = eps*h + id``.
* ``prop1``  the system {multiplicative, Leibniz}; every solution admits a
  nonzero two-sided annihilator.
* ``pexider`` the equation ``f(xy) = h(x)h(y) + xk(y) + k(x)y`` and its
  parametric solution families.
* ``alien``  the weighted combination
  ``lam[f(xy)-f(x)y-xf(y)] + mu[f(xy)-f(x)f(y)] = 0``.
* ``thm5-symbolic`` the coefficient-comparison check of the rank-3 family.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import islice, product as iproduct

import numpy as np

from .algebra import Ring
from .eqdsl import Binding, EquationAst, parse_equation
from .errors import (BothZero, EpsilonZero, NotAField, NotCentral,
                     ResidualNonzero, Unclassifiable)
from .maps import (ARBITRARY, FnTable, LEIBNIZ, LOGARITHMIC, MULTIPLICATIVE,
                   enumerate_maps, filter_tables, holds_leibniz,
                   holds_multiplicative, identity_map, leibniz_predicate,
                   lin_rank, linear_combination, multiplicative_predicate,
                   zero_map)
from .solver import SolveTask, batch_satisfies, residual, solve

_BACKWARD_CAP = 10 ** 6
_WITNESS_LIMIT = 20
# scans a check may run without an explicit override; large carriers fail
# loudly instead of starting day-long enumerations
DEFAULT_CHECK_BUDGET = 2 * 10 ** 9


# ------------------------------------------------------ equations, reports

def homo_derivation_equation() -> EquationAst:
    return parse_equation("h(x*y)=h(x)*y+x*h(y)+e*h(x)*h(y)")


def multiplicative_equation(fn: str = "f") -> EquationAst:
    return parse_equation(f"{fn}(x*y)={fn}(x)*{fn}(y)")


def leibniz_equation(fn: str = "f") -> EquationAst:
    return parse_equation(f"{fn}(x*y)={fn}(x)*y+x*{fn}(y)")


def pexider_equation() -> EquationAst:
    return parse_equation("f(x*y)=h(x)*h(y)+x*k(y)+k(x)*y")


def alien_combination_equation() -> EquationAst:
    return parse_equation(
        "lam*(f(x*y)-f(x)*y-x*f(y))+mu*(f(x*y)-f(x)*f(y))=0")


def alien_pair_equation() -> EquationAst:
    return parse_equation("h(x*y)+k(x*y)=h(x)*h(y)+x*k(y)+k(x)*y")


@dataclass
class TheoremReport:
    """Structured verdict of one check over one concrete instance."""

    theorem: str
    ring: dict
    params: dict
    solutions_found: int
    predicted_count: int | None
    forward_ok: bool
    backward_ok: bool | None
    counterexamples: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def holds(self) -> bool:
        return bool(self.forward_ok and self.backward_ok is not False)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "ring": self.ring,
            "params": self.params,
            "solutions_found": self.solutions_found,
            "predicted_count": self.predicted_count,
            "forward_ok": self.forward_ok,
            "backward_ok": self.backward_ok,
            "counterexamples": self.counterexamples,
            "details": self.details,
        }

    def render_text(self) -> str:
        lines = [f"check {self.theorem}",
                 f"  ring: {json.dumps(self.ring)}",
                 f"  params: {json.dumps(self.params)}",
                 f"  solutions found: {self.solutions_found}"]
        if self.predicted_count is not None:
            lines.append(f"  predicted: {self.predicted_count}")
        lines.append(f"  forward: {'ok' if self.forward_ok else 'FAILED'}")
        if self.backward_ok is None:
            lines.append("  backward: not checked")
        else:
            lines.append(f"  backward: {'ok' if self.backward_ok else 'FAILED'}")
        if self.counterexamples:
            lines.append(f"  counterexamples: {len(self.counterexamples)}")
            for ce in self.counterexamples[:5]:
                lines.append(f"    {json.dumps(ce)}")
        for key in sorted(self.details):
            lines.append(f"  {key}: {json.dumps(self.details[key])}")
        lines.append(f"  verdict: {'holds' if self.holds() else 'does not hold'}")
        return "\n".join(lines) + "\n"


def _ring_doc(ring: Ring) -> dict:
    return {"spec": ring.spec.to_json(), "size": ring.size,
            "hash": ring.table_hash}


@dataclass
class FamilyTag:
    """Which parametric family a solution belongs to, with witnesses.

    Tag names: SofyShift, MPAnnihilated, AllLinear, LinearPlusLeibniz,
    MultiplicativeSquare, LambdaKFamilyA, LambdaKFamilyB, TwoExponential,
    NonDegenerate, AlienA, AlienB, AlienZero, AlienScaled.
    """

    name: str
    params: dict[str, int] = field(default_factory=dict)
    witnesses: dict[str, FnTable] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"family": self.name,
                "params": dict(sorted(self.params.items())),
                "witnesses": {n: list(t.values)
                              for n, t in sorted(self.witnesses.items())}}


# ----------------------------------------------------------- thm4 (shift)

def multiplicative_shift(h: FnTable, eps: int) -> FnTable:
    """The map x -> eps*h(x) + x on h's domain."""
    ring = h.codomain
    elems = np.asarray(h.domain.domain_elements, dtype=np.int64)
    vals = ring.add[ring.mul[eps, h.as_array()], elems]
    return FnTable(h.domain, ring, tuple(int(v) for v in vals))


def verify_sofy(ring: Ring, eps: int, directions: str = "both",
                budget: int = DEFAULT_CHECK_BUDGET) -> TheoremReport:
    """Check the shift characterization of the homo-derivation equation.

    Forward: every brute-force solution h maps to a multiplicative function
    under h -> eps*h + id.  Backward: for every multiplicative m, every
    pointwise solution h of eps*h = m - id satisfies the equation (preimages
    are enumerated when eps is not invertible).  When eps is a unit the two
    directions form a bijection and the counts are compared.
    """
    if eps == ring.zero:
        raise EpsilonZero("the shift constant must be nonzero")
    if eps not in set(ring.center):
        raise NotCentral(f"element {eps} is not central")
    ast = homo_derivation_equation()
    m = len(ring.domain_elements)
    task = SolveTask(ast=ast, ring=ring, classes={"h": ARBITRARY},
                     params={"e": eps}, budget=budget)
    sols = solve(task)

    counterexamples: list = []
    witnesses = []
    for binding in sols.solutions:
        h = binding.functions["h"]
        shifted = multiplicative_shift(h, eps)
        if holds_multiplicative(shifted):
            if len(witnesses) < _WITNESS_LIMIT:
                witnesses.append(
                    FamilyTag("SofyShift", {"eps": eps},
                              {"m": shifted}).to_json() | {"h": list(h.values)})
        else:
            counterexamples.append({"direction": "forward",
                                    "h": list(h.values),
                                    "shift": list(shifted.values)})
    forward_ok = not counterexamples

    eps_is_unit = eps in set(ring.units)
    details: dict = {
        "eps_is_unit": eps_is_unit,
        "eps_is_regular": eps in set(ring.regular),
        "enumerated_count": sols.enumerated_count,
        "witness_sample": witnesses,
    }

    predicted_count = None
    backward_ok: bool | None = None
    if directions == "both":
        mult_maps = list(enumerate_maps(ring, ring, MULTIPLICATIVE,
                                        budget=max(budget // (m * m), 1)))
        predicted_count = len(mult_maps)
        elems = np.asarray(ring.domain_elements, dtype=np.int64)
        preimage = [[w for w in range(ring.size) if int(ring.mul[eps, w]) == t]
                    for t in range(ring.size)]
        backward_ok = True
        capped = False
        backward_violations = 0
        for mt in mult_maps:
            targets = [ring.sub(v, int(e)) for v, e in zip(mt.values, elems)]
            options = [preimage[t] for t in targets]
            count = 1
            for opt in options:
                count *= len(opt)
            if count == 0:
                continue  # this multiplicative map is not a shift of any h
            if count > _BACKWARD_CAP:
                capped = True
                continue
            candidates = np.asarray(list(iproduct(*options)), dtype=np.int64)
            mask = batch_satisfies(ast, ring, {}, {"h": candidates},
                                   {"e": eps})
            for bad in np.nonzero(~mask)[0]:
                backward_ok = False
                backward_violations += 1
                if len(counterexamples) >= _WITNESS_LIMIT:
                    continue
                h_vals = [int(v) for v in candidates[bad]]
                bind = Binding(functions={"h": FnTable(ring, ring, tuple(h_vals))},
                               params={"e": eps})
                counterexamples.append({
                    "direction": "backward",
                    "m": list(mt.values),
                    "h": h_vals,
                    "violations": residual(ast, bind, ring)[:5],
                })
        details["backward_enumeration_capped"] = capped
        details["backward_violation_count"] = backward_violations
        if eps_is_unit:
            shifts = {multiplicative_shift(b.functions["h"], eps).values
                      for b in sols.solutions}
            details["bijection"] = (len(shifts) == len(sols.solutions)
                                    == predicted_count)

    return TheoremReport(theorem="thm4", ring=_ring_doc(ring),
                         params={"eps": eps},
                         solutions_found=len(sols.solutions),
                         predicted_count=predicted_count,
                         forward_ok=forward_ok, backward_ok=backward_ok,
                         counterexamples=counterexamples, details=details)


# --------------------------------------------------- prop1 (annihilators)

def annihilator_witness(f: FnTable, ring: Ring | None = None) -> int | None:
    """Smallest-index nonzero element annihilating every value two-sidedly."""
    ring = ring or f.codomain
    image = sorted(set(f.values))
    for alpha in range(ring.size):
        if alpha == ring.zero:
            continue
        if all(int(ring.mul[alpha, v]) == ring.zero
               and int(ring.mul[v, alpha]) == ring.zero for v in image):
            return alpha
    return None


def _mp_solutions(ring: Ring, budget: int) -> list[FnTable]:
    """Brute-force the system {multiplicative, Leibniz} over the domain."""
    m = len(ring.domain_elements)
    ids = filter_tables(ring, ring,
                        [multiplicative_predicate(ring, ring),
                         leibniz_predicate(ring, ring)],
                        budget=max(budget // (m * m), 1))
    q = ring.size
    out = []
    for cid in ids:
        cid = int(cid)
        vals = tuple((cid // q ** (m - 1 - j)) % q for j in range(m))
        out.append(FnTable(ring, ring, vals))
    return out


def verify_mp(ring: Ring, budget: int = DEFAULT_CHECK_BUDGET) -> TheoremReport:
    """Check that every solution of the system admits an annihilator witness.

    On carriers without zero divisors the solution set must be exactly the
    zero map.  The converse direction (a witness forces a solution) is not
    part of the claim being checked; candidate maps whose image is
    annihilated but which fail the system are counted informationally.
    """
    sols = _mp_solutions(ring, budget)
    witnesses = {s.values: annihilator_witness(s) for s in sols}
    counterexamples = [{"direction": "forward", "f": list(v)}
                       for v, w in witnesses.items() if w is None]
    forward_ok = not counterexamples
    details: dict = {
        "solutions": [list(v) for v in sorted(witnesses)],
        "witnesses": {str(list(v)): w for v, w in sorted(witnesses.items())},
        "family_tags": [FamilyTag("MPAnnihilated", {"alpha": w}).to_json()
                        for _, w in sorted(witnesses.items())
                        if w is not None],
        "no_zero_divisors": not ring.has_zero_divisors,
        "enumerated_count": ring.size ** len(ring.domain_elements),
    }
    predicted_count = None
    if not ring.has_zero_divisors:
        predicted_count = 1
        only_zero = (len(sols) == 1 and sols[0].is_zero())
        details["solution_set_is_zero"] = only_zero
        forward_ok = forward_ok and only_zero

    # informational probe of the converse: annihilated image vs the system
    mult_ast = multiplicative_equation()
    leib_ast = leibniz_equation()
    seen: set[tuple[int, ...]] = set()
    backward_bad = 0
    backward_sample: list = []
    m = len(ring.domain_elements)
    capped = False
    for alpha in range(ring.size):
        if alpha == ring.zero:
            continue
        ann = [t for t in range(ring.size)
               if int(ring.mul[alpha, t]) == ring.zero
               and int(ring.mul[t, alpha]) == ring.zero]
        if len(ann) ** m > _BACKWARD_CAP:
            capped = True
            continue
        for vals in iproduct(ann, repeat=m):
            if vals in seen:
                continue
            seen.add(vals)
            batch = np.asarray([vals], dtype=np.int64)
            ok = (batch_satisfies(mult_ast, ring, {}, {"f": batch}, {})[0]
                  and batch_satisfies(leib_ast, ring, {}, {"f": batch}, {})[0])
            if not ok:
                backward_bad += 1
                if len(backward_sample) < 5:
                    backward_sample.append(list(vals))
    details["backward_informational"] = True
    details["backward_counterexample_count"] = backward_bad
    details["backward_sample"] = backward_sample
    details["backward_enumeration_capped"] = capped

    return TheoremReport(theorem="prop1", ring=_ring_doc(ring), params={},
                         solutions_found=len(sols),
                         predicted_count=predicted_count,
                         forward_ok=forward_ok,
                         backward_ok=None,
                         counterexamples=counterexamples, details=details)


# -------------------------------------------------- pexider classification

@dataclass
class PexiderClassification:
    tag: FamilyTag
    rank: int
    details: dict


def _require_field(scalars: Ring) -> None:
    if not scalars.is_field:
        raise NotAField(
            f"classification needs field scalars, got size {scalars.size}")


def _scaled_identity(ring: Ring, c: int) -> np.ndarray:
    elems = np.asarray(ring.domain_elements, dtype=np.int64)
    return ring.mul[c, elems]


def _table(ring: Ring, vals: np.ndarray) -> FnTable:
    return FnTable(ring, ring, tuple(int(v) for v in vals))


def classify_pexider(f: FnTable, h: FnTable, k: FnTable) -> PexiderClassification:
    """Assign a solution triple of the Pexider equation to its family.

    Dispatches on the rank of {id, h, k} over the scalar field; the family
    parameters and generator witnesses are extracted exactly from the value
    vectors and the reconstruction is compared to the input, never matched
    heuristically.  Ties between families resolve to the lowest rank.
    """
    ring = f.domain
    scalars = f.codomain
    _require_field(scalars)
    binding = Binding(functions={"f": f, "h": h, "k": k}, params={})
    bad = residual(pexider_equation(), binding, ring)
    if bad:
        raise ResidualNonzero("the triple does not solve the equation", bad)

    ident = identity_map(ring)
    elems = np.asarray(ring.domain_elements, dtype=np.int64)
    one_pos = int(ring.position[ring.one])
    add, mul, neg, inv = scalars.add, scalars.mul, scalars.neg, scalars.inverse
    details: dict = {"characteristic": scalars.char}
    if scalars.char == 2:
        details["completeness_caveat"] = (
            "characteristic 2: family fit is exact but the family list is "
            "only known complete away from characteristic 2")

    r = lin_rank([ident, h, k], scalars)
    fv, hv, kv = f.as_array(), h.as_array(), k.as_array()

    def scaled(c):
        return _scaled_identity(ring, c)

    if r == 1:
        lam1 = int(hv[one_pos])
        lam2 = int(kv[one_pos])
        coef = int(add[mul[lam1, lam1], add[lam2, lam2]])
        if (np.array_equal(hv, scaled(lam1)) and np.array_equal(kv, scaled(lam2))
                and np.array_equal(fv, scaled(coef))):
            tag = FamilyTag("AllLinear", {"lam1": lam1, "lam2": lam2})
            return PexiderClassification(tag, r, details)
        raise Unclassifiable("rank-1 triple is not a pair of scalings")

    if r == 2:
        if lin_rank([ident, h], scalars) == 1:
            lam = int(hv[one_pos])
            k1 = int(kv[one_pos])
            delta = _table(ring, add[kv, neg[scaled(k1)]])
            coef = int(add[mul[lam, lam], add[k1, k1]])
            expected_f = add[scaled(coef), delta.as_array()]
            if (np.array_equal(hv, scaled(lam)) and holds_leibniz(delta)
                    and np.array_equal(fv, expected_f)):
                tag = FamilyTag("LinearPlusLeibniz", {"lam": lam, "k1": k1},
                                {"delta": delta})
                return PexiderClassification(tag, r, details)
            raise Unclassifiable("dependent {id,h} but no Leibniz remainder")
        if lin_rank([ident, k], scalars) == 1:
            lam = int(kv[one_pos])
            h1 = int(hv[one_pos])
            if h1 == scalars.zero:
                raise Unclassifiable("vanishing h(1) with nonlinear h")
            mvals = mul[int(inv[h1]), hv]
            mwit = _table(ring, mvals)
            two_lam = int(add[lam, lam])
            expected_f = add[mul[int(mul[h1, h1]), mvals], scaled(two_lam)]
            if (np.array_equal(kv, scaled(lam)) and holds_multiplicative(mwit)
                    and np.array_equal(fv, expected_f)):
                tag = FamilyTag("MultiplicativeSquare", {"h1": h1, "lam": lam},
                                {"m": mwit})
                return PexiderClassification(tag, r, details)
            raise Unclassifiable("dependent {id,k} but no multiplicative core")
        if lin_rank([h, k], scalars) == 1:
            # h = lam * k with both outside span{id}
            pivot_idx = next(i for i in range(len(kv)) if kv[i] != scalars.zero)
            lam = int(mul[int(hv[pivot_idx]), int(inv[kv[pivot_idx]])])
            if lam != scalars.zero and np.array_equal(hv, mul[lam, kv]):
                u = int(inv[mul[lam, lam]])
                gamma = int(add[int(kv[one_pos]), u])
                if gamma == scalars.zero:
                    raise Unclassifiable("degenerate mixed family (gamma = 0)")
                mvals = mul[int(inv[gamma]), add[kv, scaled(u)]]
                mwit = _table(ring, mvals)
                coef = int(mul[int(mul[gamma, gamma]), int(mul[lam, lam])])
                expected_f = add[mul[int(neg[u]), elems], mul[coef, mvals]]
                expected_k = add[mul[int(neg[u]), elems], mul[gamma, mvals]]
                if (holds_multiplicative(mwit) and np.array_equal(kv, expected_k)
                        and np.array_equal(fv, expected_f)):
                    tag = FamilyTag("LambdaKFamilyB",
                                    {"lam": lam, "gamma": gamma}, {"m": mwit})
                    return PexiderClassification(tag, r, details)
            raise Unclassifiable("dependent {h,k} but no multiplicative core")
        # no dependent pair at rank 2: both h and k mix the identity with a
        # single multiplicative generator (the collapsed two-generator shape)
        m_len = len(ring.domain_elements)
        for mwit in enumerate_maps(ring, ring, MULTIPLICATIVE,
                                   budget=ring.size ** m_len):
            basis = [ident, mwit]
            ch = linear_combination(h, basis, scalars)
            ck = linear_combination(k, basis, scalars)
            cf = linear_combination(f, basis, scalars)
            if ch is None or ck is None or cf is None:
                continue
            b1, b2 = ch
            g1, g2 = ck
            a_id, a_m = cf
            if b2 == scalars.zero:
                continue
            if int(add[g2, mul[b1, b2]]) != scalars.zero:
                continue
            if a_id != int(add[mul[b1, b1], add[g1, g1]]):
                continue
            if a_m != int(mul[b2, b2]):
                continue
            tag = FamilyTag("TwoExponential",
                            {"b1": b1, "b2": b2, "g1": g1, "g2": g2},
                            {"m": mwit})
            return PexiderClassification(tag, r, details)
        raise Unclassifiable("rank-2 triple admits no two-generator extraction")

    # rank 3: scan generator pairs for an exact parameter extraction
    m_len = len(ring.domain_elements)
    for mwit in enumerate_maps(ring, ring, MULTIPLICATIVE,
                               budget=ring.size ** m_len):
        basis_h = [ident, mwit]
        coeff_h = linear_combination(h, basis_h, scalars)
        if coeff_h is None:
            continue
        b2, b3 = coeff_h
        if b3 == scalars.zero:
            continue
        for lwit in enumerate_maps(ring, ring, LOGARITHMIC,
                                   budget=ring.size ** m_len):
            lid = _table(ring, mul[lwit.as_array(), elems])
            basis = [ident, lid, mwit]
            ck = linear_combination(k, basis, scalars)
            cf = linear_combination(f, basis, scalars)
            if ck is None or cf is None:
                continue
            g2, g1, g3 = ck
            a_id, a_l, a_m = cf
            if g1 == scalars.zero:
                continue
            if a_l != g1:
                continue
            if a_id != int(add[mul[b2, b2], add[g2, g2]]):
                continue
            if a_m != int(mul[b3, b3]):
                continue
            if int(add[g3, mul[b2, b3]]) != scalars.zero:
                continue
            tag = FamilyTag("NonDegenerate",
                            {"b2": b2, "b3": b3, "g1": g1, "g2": g2, "g3": g3},
                            {"m": mwit, "l": lwit})
            return PexiderClassification(tag, r, details)
    raise Unclassifiable("rank-3 triple admits no consistent extraction")


# --------------------------------------------- pexider family instantiation

_PEXIDER_FAMILIES = ("AllLinear", "LinearPlusLeibniz", "MultiplicativeSquare",
                     "LambdaKFamilyA", "LambdaKFamilyB", "TwoExponential",
                     "NonDegenerate")


def pexider_family_binding(name: str, field_ring: Ring, params: dict[str, int],
                           witnesses: dict[str, FnTable] | None = None) -> Binding:
    """Concrete (f, h, k) tables for one family instance."""
    witnesses = witnesses or {}
    _require_field(field_ring)
    add, mul, neg, inv = (field_ring.add, field_ring.mul, field_ring.neg,
                          field_ring.inverse)
    elems = np.asarray(field_ring.domain_elements, dtype=np.int64)

    def scaled(c):
        return mul[c, elems]

    if name == "AllLinear":
        lam1, lam2 = params["lam1"], params["lam2"]
        hv = scaled(lam1)
        kv = scaled(lam2)
        fv = scaled(int(add[mul[lam1, lam1], add[lam2, lam2]]))
    elif name == "LinearPlusLeibniz":
        lam, k1 = params["lam"], params["k1"]
        delta = witnesses["delta"].as_array()
        hv = scaled(lam)
        kv = add[scaled(k1), delta]
        fv = add[scaled(int(add[mul[lam, lam], add[k1, k1]])), delta]
    elif name == "MultiplicativeSquare":
        h1, lam = params["h1"], params["lam"]
        mv = witnesses["m"].as_array()
        hv = mul[h1, mv]
        kv = scaled(lam)
        fv = add[mul[int(mul[h1, h1]), mv], scaled(int(add[lam, lam]))]
    elif name == "LambdaKFamilyA":
        gamma, lam = params["gamma"], params["lam"]
        kv = scaled(gamma)
        hv = scaled(int(mul[lam, gamma]))
        coef = int(add[mul[int(mul[lam, lam]), int(mul[gamma, gamma])],
                       add[gamma, gamma]])
        fv = scaled(coef)
    elif name == "LambdaKFamilyB":
        gamma, lam = params["gamma"], params["lam"]
        if lam == field_ring.zero:
            raise ValueError("this family needs a nonzero ratio")
        mv = witnesses["m"].as_array()
        u = int(inv[mul[lam, lam]])
        kv = add[mul[int(neg[u]), elems], mul[gamma, mv]]
        hv = mul[lam, kv]
        coef = int(mul[int(mul[gamma, gamma]), int(mul[lam, lam])])
        fv = add[mul[int(neg[u]), elems], mul[coef, mv]]
    elif name == "TwoExponential":
        b1, b2, g1 = params["b1"], params["b2"], params["g1"]
        g2 = int(neg[mul[b1, b2]])
        mv = witnesses["m"].as_array()
        hv = add[scaled(b1), mul[b2, mv]]
        kv = add[scaled(g1), mul[g2, mv]]
        fv = add[scaled(int(add[mul[b1, b1], add[g1, g1]])),
                 mul[int(mul[b2, b2]), mv]]
    elif name == "NonDegenerate":
        b2, b3 = params["b2"], params["b3"]
        g1, g2 = params["g1"], params["g2"]
        g3 = int(neg[mul[b2, b3]])
        mv = witnesses["m"].as_array()
        lv = witnesses["l"].as_array()
        lid = mul[lv, elems]
        hv = add[scaled(b2), mul[b3, mv]]
        kv = add[add[mul[g1, lid], scaled(g2)], mul[g3, mv]]
        fv = add[add[mul[g1, lid],
                     scaled(int(add[mul[b2, b2], add[g2, g2]]))],
                 mul[int(mul[b3, b3]), mv]]
    else:
        raise ValueError(f"unknown family {name!r}")
    return Binding(functions={"f": _table(field_ring, fv),
                              "h": _table(field_ring, hv),
                              "k": _table(field_ring, kv)},
                   params={})


def pexider_closure_samples(field_ring: Ring, per_family_cap: int = 200):
    """Deterministic family instantiations, capped per family.

    Yields (family name, binding) pairs covering every scalar parameter and
    every enumerated Leibniz / multiplicative witness.
    """
    _require_field(field_ring)
    n = field_ring.size
    m = len(field_ring.domain_elements)
    leibniz = list(enumerate_maps(field_ring, field_ring, LEIBNIZ,
                                  budget=n ** m))
    multiplicative = list(enumerate_maps(field_ring, field_ring,
                                         MULTIPLICATIVE, budget=n ** m))

    def all_linear():
        for lam1 in range(n):
            for lam2 in range(n):
                yield pexider_family_binding(
                    "AllLinear", field_ring, {"lam1": lam1, "lam2": lam2})

    def linear_plus_leibniz():
        for lam in range(n):
            for k1 in range(n):
                for delta in leibniz:
                    yield pexider_family_binding(
                        "LinearPlusLeibniz", field_ring,
                        {"lam": lam, "k1": k1}, {"delta": delta})

    def multiplicative_square():
        for h1 in range(n):
            for lam in range(n):
                for mw in multiplicative:
                    yield pexider_family_binding(
                        "MultiplicativeSquare", field_ring,
                        {"h1": h1, "lam": lam}, {"m": mw})

    def lambda_k_a():
        for gamma in range(n):
            for lam in range(n):
                yield pexider_family_binding(
                    "LambdaKFamilyA", field_ring, {"gamma": gamma, "lam": lam})

    def lambda_k_b():
        for lam in range(n):
            if lam == field_ring.zero:
                continue
            for gamma in range(n):
                for mw in multiplicative:
                    yield pexider_family_binding(
                        "LambdaKFamilyB", field_ring,
                        {"gamma": gamma, "lam": lam}, {"m": mw})

    def two_exponential():
        for b1 in range(n):
            for b2 in range(n):
                for g1 in range(n):
                    for mw in multiplicative:
                        yield pexider_family_binding(
                            "TwoExponential", field_ring,
                            {"b1": b1, "b2": b2, "g1": g1}, {"m": mw})

    generators = [("AllLinear", all_linear), ("LinearPlusLeibniz",
                  linear_plus_leibniz), ("MultiplicativeSquare",
                  multiplicative_square), ("LambdaKFamilyA", lambda_k_a),
                  ("LambdaKFamilyB", lambda_k_b),
                  ("TwoExponential", two_exponential)]
    for name, gen in generators:
        for binding in islice(gen(), per_family_cap):
            yield name, binding


def verify_pexider(field_ring: Ring, per_family_cap: int = 200,
                   budget: int = DEFAULT_CHECK_BUDGET) -> TheoremReport:
    """Solve the Pexider equation, classify every solution, check closure."""
    _require_field(field_ring)
    ast = pexider_equation()
    task = SolveTask(ast=ast, ring=field_ring,
                     classes={"f": ARBITRARY, "h": ARBITRARY, "k": ARBITRARY},
                     budget=budget)
    sols = solve(task)

    histogram: dict[str, int] = {}
    unclassifiable = 0
    counterexamples: list = []
    for binding in sols.solutions:
        try:
            cls = classify_pexider(binding.functions["f"],
                                   binding.functions["h"],
                                   binding.functions["k"])
            histogram[cls.tag.name] = histogram.get(cls.tag.name, 0) + 1
        except Unclassifiable as exc:
            unclassifiable += 1
            counterexamples.append({
                "direction": "forward",
                "reason": str(exc),
                "f": list(binding.functions["f"].values),
                "h": list(binding.functions["h"].values),
                "k": list(binding.functions["k"].values)})
    closure_failures = 0
    samples = 0
    for name, binding in pexider_closure_samples(field_ring, per_family_cap):
        samples += 1
        bad = residual(ast, binding, field_ring)
        if bad:
            closure_failures += 1
            counterexamples.append({
                "direction": "backward", "family": name,
                "f": list(binding.functions["f"].values),
                "violations": bad[:5]})
    return TheoremReport(
        theorem="pexider", ring=_ring_doc(field_ring), params={},
        solutions_found=len(sols.solutions), predicted_count=None,
        forward_ok=unclassifiable == 0,
        backward_ok=closure_failures == 0,
        counterexamples=counterexamples,
        details={"families": dict(sorted(histogram.items())),
                 "unclassifiable": unclassifiable,
                 "closure_samples": samples,
                 "closure_failures": closure_failures,
                 "enumerated_count": sols.enumerated_count,
                 "pruned_by_pivot": sols.pruned_by_pivot})


# ----------------------------------------------------------- alien (Eq. 8)

def verify_alien(ring: Ring, lam: int, mu: int,
                 budget: int = DEFAULT_CHECK_BUDGET) -> TheoremReport:
    """Compare the weighted-combination solution set with its prediction.

    Predicted: all multiplicative maps when lam = 0, all Leibniz maps when
    mu = 0, and otherwise exactly the zero map and ((mu-lam)/mu) * id.
    """
    if lam == ring.zero and mu == ring.zero:
        raise BothZero("lam and mu must not vanish simultaneously")
    _require_field(ring)
    ast = alien_combination_equation()
    m = len(ring.domain_elements)
    task = SolveTask(ast=ast, ring=ring, classes={"f": ARBITRARY},
                     params={"lam": lam, "mu": mu}, budget=budget)
    sols = solve(task)
    found = {b.functions["f"].values for b in sols.solutions}

    zero_values = zero_map(ring).values
    if lam == ring.zero:
        predicted = {t.values for t in enumerate_maps(
            ring, ring, MULTIPLICATIVE, budget=max(budget // (m * m), 1))}
        case = "multiplicative"
        tag_of = lambda vals: FamilyTag("AlienA")
    elif mu == ring.zero:
        predicted = {t.values for t in enumerate_maps(
            ring, ring, LEIBNIZ, budget=max(budget // (m * m), 1))}
        case = "leibniz"
        tag_of = lambda vals: FamilyTag("AlienB")
    else:
        c = int(ring.mul[ring.sub(mu, lam), int(ring.inverse[mu])])
        elems = np.asarray(ring.domain_elements, dtype=np.int64)
        scaled = tuple(int(v) for v in ring.mul[c, elems])
        predicted = {zero_values, scaled}
        case = "scaled-identity"
        tag_of = lambda vals: (FamilyTag("AlienZero") if vals == zero_values
                               else FamilyTag("AlienScaled",
                                              {"lam": lam, "mu": mu,
                                               "scale": c}))

    unpredicted = sorted(found - predicted)
    missing = sorted(predicted - found)
    counterexamples = []
    for vals in unpredicted:
        counterexamples.append({"direction": "forward", "f": list(vals)})
    for vals in missing:
        bind = Binding(functions={"f": FnTable(ring, ring, vals)},
                       params={"lam": lam, "mu": mu})
        counterexamples.append({"direction": "backward", "f": list(vals),
                                "violations": residual(ast, bind, ring)[:5]})
    return TheoremReport(
        theorem="alien", ring=_ring_doc(ring),
        params={"lam": lam, "mu": mu},
        solutions_found=len(found), predicted_count=len(predicted),
        forward_ok=not unpredicted, backward_ok=not missing,
        counterexamples=counterexamples,
        details={"case": case,
                 "solutions": [list(v) for v in sorted(found)],
                 "family_tags": [tag_of(v).to_json()
                                 for v in sorted(found & predicted)]})


# ------------------------------------------------- thm5 symbolic interface

def verify_thm5_symbolic() -> TheoremReport:
    """Coefficient comparison for the rank-3 family of the Pexider equation."""
    from . import symbolic

    family = symbolic.thm5_family()
    ast = pexider_equation()
    constraints = symbolic.derive_constraints(family, ast)
    rendered = sorted(c.render() for c in constraints)
    expected = ["g3 + b2*b3"]
    ok_constraints = rendered == expected

    good = {"b2": 1, "b3": 1, "g1": 1, "g2": 0, "g3": -1}
    bad = {"b2": 1, "b3": 1, "g1": 1, "g2": 0, "g3": 0}
    flips = (symbolic.check_identity(family, ast, good)
             and not symbolic.check_identity(family, ast, bad))

    return TheoremReport(
        theorem="thm5-symbolic", ring={"spec": None, "size": None,
                                       "hash": None},
        params={},
        solutions_found=len(rendered), predicted_count=1,
        forward_ok=ok_constraints, backward_ok=flips,
        counterexamples=[] if ok_constraints else [{"constraints": rendered}],
        details={"constraints": rendered,
                 "side_conditions": list(family.side_conditions)})
