"""Shared fixtures: the stock algebras every test module pokes at."""

import json

import pytest

import gpw


@pytest.fixture(scope="session")
def c2():
    return gpw.cyclic(2)


@pytest.fixture(scope="session")
def c2xc2():
    return gpw.product_of_cyclics([2, 2])


@pytest.fixture(scope="session")
def trivial_group():
    return gpw.cyclic(1)


@pytest.fixture(scope="session")
def ut2_g(c2):
    """Upper-triangular 2x2 with the off-diagonal cell in the g component."""
    return gpw.builtin_ut2(c2, c2.element("g"))


@pytest.fixture(scope="session")
def ut2_trivial(trivial_group):
    return gpw.builtin_ut2(trivial_group, trivial_group.identity)


@pytest.fixture(scope="session")
def k_g(c2):
    return gpw.builtin_k(c2, c2.element("g"))


@pytest.fixture(scope="session")
def e2(c2xc2):
    g = c2xc2.element("(1,0)")
    h = c2xc2.element("(0,1)")
    return gpw.builtin_grassmann2(c2xc2, g, h)


def m2_transpose_document() -> str:
    """Full 2x2 matrix algebra, trivial C2-grading, transpose involution."""
    names = [(1, 1), (1, 2), (2, 1), (2, 2)]

    def unit(i):
        return ["1" if j == i else "0" for j in range(4)]

    structure = [
        [i, j, unit(names.index((a, d)))]
        for i, (a, b) in enumerate(names)
        for j, (c, d) in enumerate(names)
        if b == c
    ]
    return json.dumps(
        {
            "format_version": 1,
            "name": "m2-transpose",
            "mode": "star",
            "group": {"kind": "cyclic", "order": 2},
            "basis": ["e11", "e12", "e21", "e22"],
            "grading": ["1", "1", "1", "1"],
            "structure": structure,
            "involution": [unit(0), unit(2), unit(1), unit(3)],
        }
    )


@pytest.fixture(scope="session")
def m2_transpose():
    return gpw.loads_algebra(m2_transpose_document())
