from itertools import product as iproduct

import pytest

import fnq
from fnq.errors import (BothZero, EpsilonZero, NotAField, NotCentral,
                        ResidualNonzero)
from fnq.maps import MULTIPLICATIVE, FnTable, enumerate_maps, identity_map, zero_map
from fnq.solver import residual
from fnq.theorems import (annihilator_witness, classify_pexider,
                          multiplicative_shift, pexider_closure_samples,
                          pexider_equation, pexider_family_binding,
                          verify_alien, verify_mp, verify_pexider,
                          verify_sofy, verify_thm5_symbolic)

from conftest import is_homo_deriv_at


def test_thm4_z2_bijection(z2):
    report = verify_sofy(z2, 1)
    assert report.solutions_found == 3
    assert report.predicted_count == 3
    assert report.forward_ok and report.backward_ok
    assert report.details["bijection"] is True
    assert report.holds()


def test_thm4_gf3_eps2(gf3):
    report = verify_sofy(gf3, 2)
    assert report.forward_ok and report.backward_ok
    assert report.solutions_found == report.predicted_count
    assert report.details["bijection"] is True
    # solutions equal 2*(m - id) pointwise, since 2 is its own inverse mod 3
    mult = [t.values for t in enumerate_maps(gf3, gf3, MULTIPLICATIVE)]
    expected = sorted(
        tuple(int(gf3.mul[2, gf3.sub(v, e)]) for v, e in zip(vals, range(3)))
        for vals in mult)
    # recompute the brute-force solutions independently
    oracle = sorted(v for v in iproduct(range(3), repeat=3)
                    if all(is_homo_deriv_at(gf3, v, x, y, 2)
                           for x in range(3) for y in range(3)))
    assert oracle == expected


def test_thm4_zero_divisor_probe_reports(z6):
    # eps = 3 is a central zero divisor: the forward direction must hold,
    # the converse is probed and its outcome reported, whatever it is
    report = verify_sofy(z6, 3)
    assert report.forward_ok
    assert report.backward_ok is not None
    assert not report.details["eps_is_regular"]
    if not report.backward_ok:
        assert report.details["backward_violation_count"] > 0
        ce = report.counterexamples[0]
        assert ce["direction"] == "backward"
        assert ce["violations"]


def test_thm4_argument_guards(z6, ut2_2):
    with pytest.raises(EpsilonZero):
        verify_sofy(z6, 0)
    with pytest.raises(NotCentral):
        verify_sofy(ut2_2, 1)  # [[0,0],[0,1]] is not central


def test_multiplicative_shift_examples(z2, z4):
    ident = identity_map(z4)
    assert multiplicative_shift(zero_map(z4), 1).values == ident.values
    minus_id = FnTable(z4, z4, tuple(int(z4.neg[e]) for e in range(4)))
    assert multiplicative_shift(minus_id, 1).values == (0, 0, 0, 0)
    h = FnTable(z2, z2, (0, 1))
    shifted = multiplicative_shift(h, 1)
    assert shifted.values == (0, 0)  # 1 + 1 = 0 in Z_2


def test_prop1_no_zero_divisors(gf3, gf5, gf4):
    for ring in (gf3, gf5, gf4):
        report = verify_mp(ring)
        assert report.forward_ok
        assert report.details["solution_set_is_zero"]
        assert report.details["solutions"] == [[0] * ring.size]


def test_prop1_zero_divisor_rings(z4, z6, pq22):
    for ring in (z4, z6, pq22):
        report = verify_mp(ring)
        assert report.forward_ok  # every solution carries a witness
        for vals, witness in report.details["witnesses"].items():
            assert witness is not None
    z6_report = verify_mp(z6)
    assert z6_report.details["enumerated_count"] == 6 ** 6


def test_annihilator_witness_examples(z6):
    assert annihilator_witness(zero_map(z6)) == 1
    assert annihilator_witness(identity_map(z6)) is None
    in_three = FnTable(z6, z6, (0, 3, 0, 3, 0, 3))
    assert annihilator_witness(in_three) == 2


def test_classify_all_linear(gf3):
    two_x = FnTable(gf3, gf3, (0, 2, 1))
    ident = identity_map(gf3)
    result = classify_pexider(two_x, ident, two_x)
    assert result.tag.name == "AllLinear"
    assert result.tag.params == {"lam1": 1, "lam2": 2}
    assert result.rank == 1


def test_classify_zero_triple(gf3):
    z = zero_map(gf3)
    result = classify_pexider(z, z, z)
    assert result.tag.name == "AllLinear"
    assert result.tag.params == {"lam1": 0, "lam2": 0}


def test_classify_frobenius_square_on_gf4(gf4):
    frob = FnTable(gf4, gf4, tuple(int(gf4.mul[e, e]) for e in range(4)))
    result = classify_pexider(frob, frob, zero_map(gf4))
    assert result.tag.name == "MultiplicativeSquare"
    assert result.tag.params["h1"] == gf4.one
    assert result.tag.params["lam"] == gf4.zero
    assert result.tag.witnesses["m"].values == frob.values
    assert result.details["characteristic"] == 2
    assert "completeness_caveat" in result.details


def test_classify_rejects_non_solutions(gf3):
    ident = identity_map(gf3)
    with pytest.raises(ResidualNonzero):
        classify_pexider(ident, ident, ident)


def test_classify_two_exponential(gf3):
    # h = x + 2m, k = x + m with m the unit indicator: no dependent pair
    m = FnTable(gf3, gf3, (0, 1, 1))
    binding = pexider_family_binding("TwoExponential", gf3,
                                     {"b1": 1, "b2": 2, "g1": 1}, {"m": m})
    assert residual(pexider_equation(), binding, gf3) == []
    result = classify_pexider(binding.functions["f"], binding.functions["h"],
                              binding.functions["k"])
    assert result.tag.name == "TwoExponential"
    assert result.rank == 2
    assert result.tag.params["b2"] != 0


def test_family_instantiations_solve(gf5):
    count = 0
    for name, binding in pexider_closure_samples(gf5, per_family_cap=40):
        assert residual(pexider_equation(), binding, gf5) == [], name
        count += 1
    assert count > 100


def test_verify_pexider_gf3(gf3):
    report = verify_pexider(gf3)
    assert report.forward_ok and report.backward_ok
    assert report.details["unclassifiable"] == 0
    assert report.solutions_found == sum(report.details["families"].values())
    assert report.details["enumerated_count"] == 729


def test_classify_requires_field(z6):
    z = zero_map(z6)
    with pytest.raises(NotAField):
        classify_pexider(z, z, z)


def test_alien_multiplicative_case(gf5):
    report = verify_alien(gf5, 0, 1)
    assert report.holds()
    assert report.details["case"] == "multiplicative"
    mult = sorted(t.values for t in enumerate_maps(gf5, gf5, MULTIPLICATIVE))
    assert [list(v) for v in mult] == report.details["solutions"]


def test_alien_leibniz_case(gf5):
    report = verify_alien(gf5, 1, 0)
    assert report.holds()
    assert report.details["case"] == "leibniz"


def test_alien_scaled_identity(gf5, gf3):
    report = verify_alien(gf5, 1, 2)
    assert report.holds()
    scaled = [int(gf5.mul[3, e]) for e in range(5)]  # (2-1)/2 = 3 in GF(5)
    assert report.details["solutions"] == [[0] * 5, scaled]
    collapse = verify_alien(gf3, 1, 1)
    assert collapse.holds()
    assert collapse.details["solutions"] == [[0, 0, 0]]


def test_alien_guards(gf5, z6):
    with pytest.raises(BothZero):
        verify_alien(gf5, 0, 0)
    with pytest.raises(NotAField):
        verify_alien(z6, 1, 1)


def test_thm5_symbolic_report():
    report = verify_thm5_symbolic()
    assert report.holds()
    assert report.details["constraints"] == ["g3 + b2*b3"]
    assert "b3 != 0" in report.details["side_conditions"]


def test_report_serialization(z2):
    report = verify_sofy(z2, 1)
    doc = report.to_json()
    assert doc["theorem"] == "thm4"
    assert doc["solutions_found"] == 3
    text = report.render_text()
    assert "verdict: holds" in text


def test_verify_sofy_on_declared_subring():
    ring = fnq.zn(6, subring=(0, 2, 4))
    report = verify_sofy(ring, 3, directions="forward")
    assert report.forward_ok
    assert report.details["enumerated_count"] == 6 ** 3


@pytest.mark.slow
def test_pexider_completeness_on_gf5():
    report = verify_pexider(fnq.gf(5))
    assert report.details["unclassifiable"] == 0
    assert report.forward_ok and report.backward_ok
    assert sum(report.details["families"].values()) == report.solutions_found


def test_checks_fail_loudly_on_oversized_carriers():
    from fnq.errors import BudgetExceeded
    big = fnq.gf(2, 4)  # 16 elements: a 16^16 scan must be refused, not run
    with pytest.raises(BudgetExceeded):
        verify_sofy(big, big.one, directions="forward")
    with pytest.raises(BudgetExceeded):
        verify_mp(big)
    with pytest.raises(BudgetExceeded):
        verify_alien(big, big.one, big.one)


def test_additive_solutions_shift_to_homomorphisms(z4, gf4):
    # additive variant of the shift characterization: with eps = 1, additive
    # solutions correspond exactly to homomorphisms via m = h + id
    from fnq.maps import ADDITIVE, HOMOMORPHISM
    from fnq.solver import SolveTask, solve
    from fnq.theorems import homo_derivation_equation
    for ring in (z4, gf4):
        ss = solve(SolveTask(homo_derivation_equation(), ring,
                             {"h": ADDITIVE}, params={"e": ring.one}))
        shifted = sorted(multiplicative_shift(b.functions["h"], ring.one).values
                         for b in ss.solutions)
        homs = sorted(t.values for t in enumerate_maps(ring, ring,
                                                       HOMOMORPHISM))
        assert shifted == homs


def test_alien_additive_remark(gf5):
    # restricting the weighted combination to additive unknowns turns the
    # multiplicative case into homomorphisms and the Leibniz case into
    # derivations; the scaled-identity case is already additive
    from fnq.maps import ADDITIVE, DERIVATION, HOMOMORPHISM
    from fnq.solver import SolveTask, solve
    from fnq.theorems import alien_combination_equation
    ast = alien_combination_equation()

    def additive_solutions(lam, mu):
        ss = solve(SolveTask(ast, gf5, {"f": ADDITIVE},
                             params={"lam": lam, "mu": mu}))
        return sorted(b.functions["f"].values for b in ss.solutions)

    assert additive_solutions(0, 1) == sorted(
        t.values for t in enumerate_maps(gf5, gf5, HOMOMORPHISM))
    assert additive_solutions(1, 0) == sorted(
        t.values for t in enumerate_maps(gf5, gf5, DERIVATION))
    scaled = tuple(int(gf5.mul[3, e]) for e in range(5))
    assert additive_solutions(1, 2) == [(0, 0, 0, 0, 0), scaled]


def test_pivot_respects_declared_class(gf3):
    from fnq.maps import ADDITIVE
    from fnq.solver import SolveTask, solve
    ast = pexider_equation()
    ss = solve(SolveTask(ast, gf3, {"f": ADDITIVE, "h": fnq.ARBITRARY,
                                    "k": fnq.ARBITRARY}))
    assert ss.pruned_by_pivot
    all_sols = solve(SolveTask(ast, gf3, {"f": fnq.ARBITRARY,
                                          "h": fnq.ARBITRARY,
                                          "k": fnq.ARBITRARY}))
    from fnq.maps import holds_additive
    expected = [b for b in all_sols.solutions
                if holds_additive(b.functions["f"])]
    assert len(ss.solutions) == len(expected)
    assert ({tuple(b.functions[n].values for n in ("f", "h", "k"))
             for b in ss.solutions}
            == {tuple(b.functions[n].values for n in ("f", "h", "k"))
                for b in expected})
