"""Shared fixtures: catalog groups and independent desk models.

The models here are built from scratch (permutations, quaternion symbols,
unitriangular matrices) so they can serve as oracles for the collection
engine rather than restating it.
"""

from __future__ import annotations

import itertools

import pytest

from polycs import EnumeratedGroup, catalog, enumerate_group
from polycs.platform import d4_platform, d4xd4_platform, matrix_platform


# -- catalog groups -----------------------------------------------------------


@pytest.fixture(scope="session")
def d4():
    return catalog("d4")


@pytest.fixture(scope="session")
def q8():
    return catalog("q8")


@pytest.fixture(scope="session")
def heis3():
    return catalog("heis3")


@pytest.fixture(scope="session")
def heisZ():
    return catalog("heisZ")


@pytest.fixture(scope="session")
def dinf():
    return catalog("dihedral_inf")


@pytest.fixture(scope="session")
def d4_enum(d4):
    return enumerate_group(d4)


@pytest.fixture(scope="session")
def spec_d4():
    return d4_platform()


@pytest.fixture(scope="session")
def spec_d4xd4():
    return d4xd4_platform()


@pytest.fixture(scope="session")
def spec_mat():
    return matrix_platform()


# -- independent models -------------------------------------------------------


def close_under_product(gens, mul_fn, identity):
    """Cayley-table closure of a generating set; returns (elements, table)."""
    elements = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul_fn(x, g)
                if y not in seen:
                    seen.add(y)
                    elements.append(y)
                    nxt.append(y)
        frontier = nxt
    index = {x: i for i, x in enumerate(elements)}
    table = [[index[mul_fn(a, b)] for b in elements] for a in elements]
    return elements, table


def perm_mul(p, q):
    """Apply p first, then q."""
    return tuple(q[p[i]] for i in range(len(p)))


@pytest.fixture(scope="session")
def d4_model():
    """Symmetries of a square as corner permutations: an oracle for d4.

    Generators map to the catalog presentation as g1 -> reflection s,
    g2 -> rotation r; the fixture asserts the defining relations before
    anyone relies on it.
    """
    r = (1, 2, 3, 0)
    s = (0, 3, 2, 1)
    identity = (0, 1, 2, 3)
    elements, table = close_under_product([r, s], perm_mul, identity)
    group = EnumeratedGroup(table, [elements.index(s), elements.index(r)], name="d4-perm")
    gs, gr = group.generators()
    assert len(group) == 8
    assert (gs * gs).is_identity and (gr ** 4).is_identity
    assert gr.conj(gs) == gr ** 3  # s^-1 r s = r^3
    return group


QUAT_TABLE = {
    ("1", "1"): "1", ("1", "i"): "i", ("1", "j"): "j", ("1", "k"): "k",
    ("i", "1"): "i", ("i", "i"): "-1", ("i", "j"): "k", ("i", "k"): "-j",
    ("j", "1"): "j", ("j", "i"): "-k", ("j", "j"): "-1", ("j", "k"): "i",
    ("k", "1"): "k", ("k", "i"): "j", ("k", "j"): "-i", ("k", "k"): "-1",
}


def quat_mul(a, b):
    sign = 1
    if a.startswith("-"):
        sign, a = -sign, a[1:]
    if b.startswith("-"):
        sign, b = -sign, b[1:]
    prod = QUAT_TABLE[(a, b)]
    if prod.startswith("-"):
        sign, prod = -sign, prod[1:]
    return prod if sign == 1 else "-" + prod


@pytest.fixture(scope="session")
def q8_model():
    """Quaternion units as an oracle for q8: g1 -> j, g2 -> i, g3 -> -1."""
    elements, table = close_under_product(["i", "j"], quat_mul, "1")
    gens = [elements.index("j"), elements.index("i"), elements.index("-1")]
    group = EnumeratedGroup(table, gens, name="q8-sym")
    gj, gi, gm = group.generators()
    assert len(group) == 8
    assert gj * gj == gm and gi * gi == gm and (gm * gm).is_identity
    assert gi.conj(gj) == gi * gm  # j^-1 i j = i * (-1)
    return group


def heis_mul(a, b):
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(3)) % 3 for j in range(3))
        for i in range(3)
    )


@pytest.fixture(scope="session")
def heis3_model():
    """Unitriangular 3x3 matrices mod 3: g1 -> x, g2 -> y, g3 -> x^-1 y^-1 x y."""
    x = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    y = ((1, 0, 0), (0, 1, 1), (0, 0, 1))
    zeta = ((1, 0, 2), (0, 1, 0), (0, 0, 1))  # inverse of the usual corner matrix
    identity = tuple(tuple(int(i == j) for j in range(3)) for i in range(3))
    elements, table = close_under_product([x, y, zeta], heis_mul, identity)
    gens = [elements.index(x), elements.index(y), elements.index(zeta)]
    group = EnumeratedGroup(table, gens, name="heis3-mat")
    gx, gy, gz = group.generators()
    assert len(group) == 27
    assert gy.comm(gx) == gz and gz.comm(gx).is_identity and gz.comm(gy).is_identity
    assert gy.conj(gx) == gy * gz
    return group


def assert_isomorphic_by_normal_forms(pc_enum, model):
    """Check the generator-respecting map from a pc enumeration onto a model.

    Maps each normal form g1^e1...gn^en to the corresponding model product
    and verifies the map is a bijection and transports the whole table.
    """
    pres = pc_enum.group
    gens = model.generators()
    image = []
    for form in pc_enum.forms:
        acc = model.identity()
        for g, e in enumerate(form):
            acc = acc * gens[g] ** e
        image.append(acc)
    assert len(set(image)) == len(pc_enum.forms)
    for i, j in itertools.product(range(len(pc_enum.forms)), repeat=2):
        assert image[pc_enum.mul(i, j)] == image[i] * image[j]
