import pytest

import fnq
from fnq.errors import BudgetExceeded, EvalDomainError, NotAField
from fnq.maps import (ADDITIVE, ARBITRARY, DERIVATION, HOMOMORPHISM,
                      HOMO_DERIV_MP, LEIBNIZ, LOGARITHMIC, MULTIPLICATIVE,
                      FnTable, additive_generators, classify_map,
                      enumerate_maps, homo_deriv_sofy, identity_map,
                      inner_derivation, lin_rank, linear_combination,
                      zero_map)

from conftest import (brute_filter, is_additive_at, is_leibniz_at,
                      is_multiplicative_at)


def values_of(stream):
    return [t.values for t in stream]


def test_multiplicative_maps_on_z2(z2):
    got = values_of(enumerate_maps(z2, z2, MULTIPLICATIVE))
    assert got == [(0, 0), (0, 1), (1, 1)]
    # independent oracle: scan all four tables
    assert got == brute_filter(z2, is_multiplicative_at)


def test_derivations_on_gf3_only_zero(gf3):
    got = values_of(enumerate_maps(gf3, gf3, DERIVATION))
    oracle = [v for v in brute_filter(gf3, is_additive_at)
              if all(is_leibniz_at(gf3, v, x, y) for x in range(3)
                     for y in range(3))]
    assert got == oracle == [(0, 0, 0)]


def test_derivations_on_poly_quot_include_formal_derivative(pq22):
    # carrier: 0 -> 0, 1 -> x, 2 -> 1, 3 -> 1+x; the coefficient-extraction
    # map a+bx -> b has values (0, 1, 0, 1) as elements, i.e. image index 2
    d = FnTable(pq22, pq22, (0, 2, 0, 2))
    assert all(is_additive_at(pq22, d.values, x, y)
               and is_leibniz_at(pq22, d.values, x, y)
               for x in range(4) for y in range(4))
    got = values_of(enumerate_maps(pq22, pq22, DERIVATION))
    assert d.values in got
    oracle = [v for v in brute_filter(pq22, is_additive_at)
              if all(is_leibniz_at(pq22, v, x, y) for x in range(4)
                     for y in range(4))]
    assert got == oracle


def test_classify_zero_map(gf3):
    tags = classify_map(zero_map(gf3))
    for cls in (ARBITRARY, ADDITIVE, MULTIPLICATIVE, HOMOMORPHISM, LEIBNIZ,
                DERIVATION, HOMO_DERIV_MP, LOGARITHMIC,
                homo_deriv_sofy(1), homo_deriv_sofy(2)):
        assert cls in tags


def test_classify_identity_on_z4(z4):
    tags = classify_map(identity_map(z4))
    assert HOMOMORPHISM in tags
    assert LEIBNIZ not in tags  # 1*1 = 1 but the rule would give 2


def test_inner_derivation_commutative_is_zero(z6, gf4):
    for ring in (z6, gf4):
        for b in range(ring.size):
            assert inner_derivation(ring, b).is_zero()


def test_inner_derivation_ut2(ut2_2):
    # b = [[0,1],[0,0]] has carrier index 2 under (a,b,c) ordering
    ad = inner_derivation(ut2_2, 2)

    def triple(i):
        return (i // 4, (i // 2) % 2, i % 2)

    def index(t):
        return t[0] * 4 + t[1] * 2 + t[2]

    expected = []
    for i in range(8):
        a, b, c = triple(i)
        # [[a,b],[0,c]]*[[0,1],[0,0]] - [[0,1],[0,0]]*[[a,b],[0,c]]
        expected.append(index((0, (a - c) % 2, 0)))
    assert list(ad.values) == expected
    assert any(v != 0 for v in ad.values)
    assert DERIVATION in classify_map(ad)


def test_inner_derivations_always_derive(ut2_2):
    for b in range(ut2_2.size):
        assert DERIVATION in classify_map(inner_derivation(ut2_2, b))


def test_lin_rank_examples(gf5, gf4):
    ident = identity_map(gf5)
    triple_id = FnTable(gf5, gf5, tuple(int(gf5.mul[3, e]) for e in range(5)))
    assert lin_rank([ident], gf5) == 1
    assert lin_rank([ident, triple_id], gf5) == 1
    frob = FnTable(gf4, gf4, tuple(int(gf4.mul[e, e]) for e in range(4)))
    assert frob.values == (0, 3, 2, 1)
    assert lin_rank([identity_map(gf4), frob], gf4) == 2
    # oracle: no nontrivial combination vanishes
    combos = [(a, b) for a in range(4) for b in range(4) if (a, b) != (0, 0)]
    for a, b in combos:
        vec = [int(gf4.add[gf4.mul[a, e], gf4.mul[b, frob.values[e]]])
               for e in range(4)]
        assert any(v != 0 for v in vec)


def test_lin_rank_requires_field(z6):
    with pytest.raises(NotAField):
        lin_rank([identity_map(z6)], z6)


def test_linear_combination(gf5):
    ident = identity_map(gf5)
    double = FnTable(gf5, gf5, tuple(int(gf5.mul[2, e]) for e in range(5)))
    coeffs = linear_combination(double, [ident], gf5)
    assert coeffs == (2,)
    legendre_like = FnTable(gf5, gf5, (1, 0, 0, 0, 0))
    assert linear_combination(legendre_like, [ident], gf5) is None


@pytest.mark.parametrize("cls", [ADDITIVE, MULTIPLICATIVE, HOMOMORPHISM,
                                 LEIBNIZ, DERIVATION, HOMO_DERIV_MP,
                                 LOGARITHMIC, homo_deriv_sofy(1)])
@pytest.mark.parametrize("ring_name", ["z2", "z4", "gf3"])
def test_enumeration_matches_classification_filter(cls, ring_name, request):
    ring = request.getfixturevalue(ring_name)
    enumerated = values_of(enumerate_maps(ring, ring, cls))
    filtered = [t.values for t in enumerate_maps(ring, ring, ARBITRARY)
                if cls in classify_map(t)]
    assert enumerated == filtered


@pytest.mark.parametrize("q,k", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1),
                                 (2, 3)])
def test_dedekind_independence(q, k):
    ring = fnq.gf(q, k)
    nonzero_mult = [t for t in enumerate_maps(ring, ring, MULTIPLICATIVE)
                    if not t.is_zero()]
    assert lin_rank(nonzero_mult, ring) == len(nonzero_mult)


def test_logarithmic_on_gf5_only_zero(gf5):
    got = values_of(enumerate_maps(gf5, gf5, LOGARITHMIC))
    assert got == [(0, 0, 0, 0, 0)]


def test_additive_generators(z6, gf4):
    gens, words = additive_generators(z6)
    assert gens == [1]
    assert len(words) == 6
    gens4, words4 = additive_generators(gf4)
    assert len(gens4) == 2
    assert len(words4) == 4


def test_additive_maps_between_different_rings(z4):
    z2 = fnq.zn(2)
    got = values_of(enumerate_maps(z2, z4, ADDITIVE))
    oracle = []
    for v0 in range(4):
        for v1 in range(4):
            vals = (v0, v1)
            if all(vals[(x + y) % 2] == int(z4.add[vals[x], vals[y]])
                   for x in range(2) for y in range(2)):
                oracle.append(vals)
    assert got == sorted(oracle)


def test_enumerate_budget(z6):
    with pytest.raises(BudgetExceeded):
        list(enumerate_maps(z6, z6, ARBITRARY, budget=100))


def test_fn_table_domain_guard():
    ring = fnq.zn(6, subring=(0, 2, 4))
    full = fnq.zn(6)
    table = FnTable(ring, full, (0, 2, 4))
    assert table(2) == 2
    with pytest.raises(EvalDomainError):
        table(1)


def test_sofy_class_enumeration(z2):
    got = values_of(enumerate_maps(z2, z2, homo_deriv_sofy(1)))
    from conftest import is_homo_deriv_at
    oracle = [v for v in brute_filter(z2, is_additive_at)
              if all(is_homo_deriv_at(z2, v, x, y, 1)
                     for x in range(2) for y in range(2))]
    assert got == oracle


def test_classify_formal_derivative(pq22):
    d = FnTable(pq22, pq22, (0, 2, 0, 2))
    assert DERIVATION in classify_map(d)


def test_classify_on_declared_subring():
    ring = fnq.zn(6, subring=(0, 2, 4))
    full = fnq.zn(6)
    restricted_id = FnTable(ring, full, (0, 2, 4))
    tags = classify_map(restricted_id)
    assert ADDITIVE in tags and MULTIPLICATIVE in tags
    assert LEIBNIZ not in tags  # 2*4=8=2 but the rule gives 2*4+2*4=4
