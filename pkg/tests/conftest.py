"""Shared fixtures and independent brute-force oracles.

The oracle helpers here deliberately avoid the package's vectorized search
machinery: they loop over plain ``itertools.product`` candidates and check
identities point by point, so expected values in the tests are computed
through a second, independent route.
"""
from itertools import product as iproduct

import pytest

import fnq


@pytest.fixture(scope="session")
def z2():
    return fnq.zn(2)


@pytest.fixture(scope="session")
def z4():
    return fnq.zn(4)


@pytest.fixture(scope="session")
def z6():
    return fnq.zn(6)


@pytest.fixture(scope="session")
def gf3():
    return fnq.gf(3)


@pytest.fixture(scope="session")
def gf4():
    return fnq.gf(2, 2, modulus=(1, 1, 1))


@pytest.fixture(scope="session")
def gf5():
    return fnq.gf(5)


@pytest.fixture(scope="session")
def pq22():
    return fnq.poly_quot(2, 2)


@pytest.fixture(scope="session")
def ut2_2():
    return fnq.ut2(2)


def brute_tables(ring):
    """All value vectors over the ring's domain, lexicographically."""
    m = len(ring.domain_elements)
    yield from iproduct(range(ring.size), repeat=m)


def table_at(ring, values, element):
    return values[ring.domain_elements.index(element)]


def brute_filter(ring, pair_check):
    """Value vectors passing a point check at every domain pair."""
    out = []
    for values in brute_tables(ring):
        if all(pair_check(ring, values, x, y)
               for x in ring.domain_elements for y in ring.domain_elements):
            out.append(values)
    return out


def is_additive_at(ring, values, x, y):
    s = int(ring.add[x, y])
    return (table_at(ring, values, s)
            == int(ring.add[table_at(ring, values, x),
                            table_at(ring, values, y)]))


def is_multiplicative_at(ring, values, x, y):
    p = int(ring.mul[x, y])
    return (table_at(ring, values, p)
            == int(ring.mul[table_at(ring, values, x),
                            table_at(ring, values, y)]))


def is_leibniz_at(ring, values, x, y):
    p = int(ring.mul[x, y])
    fx = table_at(ring, values, x)
    fy = table_at(ring, values, y)
    rhs = int(ring.add[ring.mul[fx, y], ring.mul[x, fy]])
    return table_at(ring, values, p) == rhs


def is_homo_deriv_at(ring, values, x, y, eps):
    p = int(ring.mul[x, y])
    fx = table_at(ring, values, x)
    fy = table_at(ring, values, y)
    rhs = int(ring.add[ring.add[ring.mul[fx, y], ring.mul[x, fy]],
                       ring.mul[eps, ring.mul[fx, fy]]])
    return table_at(ring, values, p) == rhs
